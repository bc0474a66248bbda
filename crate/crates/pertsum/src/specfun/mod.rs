//! Foundation kernels: gamma-family functions, Pochhammer symbols, the
//! dilogarithm, generalized hypergeometric series, Laguerre recurrences and
//! one-dimensional quadrature.
//!
//! Everything here is a pure function of its arguments; callers may evaluate
//! concurrently, and identical inputs give bit-identical outputs.

mod dilog;
mod eval;
mod gamma;
mod kahan;
mod laguerre;
mod pfq;
mod quad;
pub(crate) mod tail;

pub use dilog::dilog;
pub use eval::{EvalResult, Status};
pub use gamma::{digamma, gamma, gamma_ratio, ln_gamma, ln_gamma_signed, pochhammer, POLE_GUARD};
pub use kahan::KahanSum;
pub use laguerre::{kummer_term_peak, kummer_terminating, laguerre};
pub use pfq::{pfq, pfq_eval, PFQSpec, SeriesClass};
pub use quad::{integrate, integrate_half_line};

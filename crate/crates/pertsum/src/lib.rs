//! Closed-form sums for perturbation series of hypergeometric functions,
//! verified against independent brute-force oracles, with applications to
//! the generalized spiked harmonic oscillator.
//!
//! The library is organized around a simple contract: every analytic sum in
//! [`closedform`] and every Laplace-inverse identity in [`laplace`] has a
//! slow, simple ground-truth evaluator in [`oracle`], and the [`cli`]
//! registry can sweep any of them over randomized parameter boxes. The
//! [`oscillator`] module applies the sums to the energy and wavefunction
//! perturbation expansions of H = -d²/dx² + x² + A/x² + λ/x^α.

pub mod cli;
pub mod closedform;
pub mod error;
pub mod laplace;
pub mod oracle;
pub mod oscillator;
pub mod specfun;

pub use error::{Error, Result};
pub use specfun::{EvalResult, PFQSpec, Status};

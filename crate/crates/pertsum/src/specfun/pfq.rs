//! Generalized hypergeometric series ₚF_q by direct compensated summation.
//!
//! Terminating series (a nonpositive-integer upper parameter) are summed
//! exactly over their finite support, largest terms last. For p = q+1 on the
//! unit circle the series is attempted only when the parametric balance
//! Σβ - Σα is positive, with the algebraic tail folded in through the
//! integral-comparison estimate of [`crate::specfun::tail`].

use crate::error::{Error, Result};
use crate::specfun::eval::{EvalResult, Status};
use crate::specfun::kahan::KahanSum;
use crate::specfun::tail::fit_algebraic_tail;

/// A generalized hypergeometric function: upper and lower parameter lists
/// and the argument.
#[derive(Debug, Clone, PartialEq)]
pub struct PFQSpec {
    upper: Vec<f64>,
    lower: Vec<f64>,
    argument: f64,
}

/// Convergence class, decidable from the parameters alone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeriesClass {
    /// finite sum; the index of the last potentially nonzero term
    Terminating(usize),
    /// p ≤ q: entire in z
    AllArguments,
    /// p = q+1 with |z| < 1
    InsideDisk,
    /// p = q+1 with |z| = 1; carries the balance Σβ - Σα of the
    /// unit-circle convergence test
    UnitCircle(f64),
    /// p = q+1 with |z| > 1, or p > q+1: no convergent summation
    Divergent,
}

fn nonpositive_integer(x: f64) -> Option<usize> {
    if x <= 0.0 && x == x.round() && x >= -(2u64.pow(53) as f64) {
        Some((-x) as usize)
    } else {
        None
    }
}

impl PFQSpec {
    /// Validates the parameter lists: a lower parameter may be a nonpositive
    /// integer only when some upper parameter terminates the series strictly
    /// before the pole is reached.
    pub fn new(upper: Vec<f64>, lower: Vec<f64>, argument: f64) -> Result<Self> {
        for &p in upper.iter().chain(lower.iter()) {
            if !p.is_finite() {
                return Err(Error::domain("non-finite hypergeometric parameter".into()));
            }
        }
        if !argument.is_finite() {
            return Err(Error::domain("non-finite hypergeometric argument".into()));
        }
        let termination = upper.iter().filter_map(|&a| nonpositive_integer(a)).min();
        for &b in &lower {
            if let Some(q) = nonpositive_integer(b) {
                // (b)_k first vanishes at k = q+1; every term up to the
                // termination index must come earlier
                match termination {
                    Some(m) if m <= q => {}
                    _ => {
                        return Err(Error::domain(format!(
                            "lower parameter {b} is a nonpositive integer not cancelled \
                             by an earlier-terminating upper parameter"
                        )))
                    }
                }
            }
        }
        Ok(PFQSpec {
            upper,
            lower,
            argument,
        })
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn argument(&self) -> f64 {
        self.argument
    }

    pub fn classify(&self) -> SeriesClass {
        if let Some(m) = self.upper.iter().filter_map(|&a| nonpositive_integer(a)).min() {
            return SeriesClass::Terminating(m);
        }
        let (p, q) = (self.upper.len(), self.lower.len());
        if p <= q {
            return SeriesClass::AllArguments;
        }
        if p == q + 1 {
            let z = self.argument.abs();
            if z < 1.0 {
                return SeriesClass::InsideDisk;
            }
            if z == 1.0 {
                let balance: f64 =
                    self.lower.iter().sum::<f64>() - self.upper.iter().sum::<f64>();
                return SeriesClass::UnitCircle(balance);
            }
        }
        SeriesClass::Divergent
    }
}

/// Ratio t_{k+1}/t_k of consecutive series terms.
#[inline]
fn term_ratio(spec: &PFQSpec, k: usize) -> f64 {
    let kf = k as f64;
    let mut r = spec.argument / (kf + 1.0);
    for &a in &spec.upper {
        r *= a + kf;
    }
    for &b in &spec.lower {
        r /= b + kf;
    }
    r
}

/// Evaluate the series to the requested relative tolerance.
pub fn pfq(spec: &PFQSpec, tolerance: f64, max_terms: usize) -> Result<EvalResult> {
    if !(tolerance > 0.0) {
        return Err(Error::domain("tolerance must be positive".into()));
    }
    match spec.classify() {
        SeriesClass::Terminating(m) => sum_terminating(spec, m, max_terms),
        SeriesClass::AllArguments | SeriesClass::InsideDisk => {
            sum_convergent(spec, tolerance, max_terms)
        }
        SeriesClass::UnitCircle(balance) => {
            if balance <= 0.0 {
                return Err(Error::convergence(format!(
                    "series at |z| = 1 with balance Σβ-Σα = {balance} ≤ 0 does not converge"
                )));
            }
            if spec.argument > 0.0 {
                sum_unit_argument(spec, tolerance, max_terms)
            } else {
                sum_alternating_unit(spec, tolerance, max_terms)
            }
        }
        SeriesClass::Divergent => Err(Error::domain(
            "non-terminating series with p = q+1 outside |z| ≤ 1 (or p > q+1)".into(),
        )),
    }
}

fn sum_terminating(spec: &PFQSpec, m: usize, max_terms: usize) -> Result<EvalResult> {
    if m + 1 > max_terms.max(2) {
        return Err(Error::convergence(format!(
            "terminating series needs {} terms, budget is {max_terms}",
            m + 1
        )));
    }
    // forward ratios, reverse-order accumulation so the largest terms land last
    let mut terms = Vec::with_capacity(m + 1);
    let mut t = 1.0f64;
    terms.push(t);
    for k in 0..m {
        t *= term_ratio(spec, k);
        terms.push(t);
    }
    let mut acc = KahanSum::new();
    for &t in terms.iter().rev() {
        acc.add(t);
    }
    Ok(EvalResult {
        value: acc.value(),
        abs_error_estimate: acc.rounding_bound(),
        terms_used: m + 1,
        status: Status::Terminated,
    })
}

fn sum_convergent(spec: &PFQSpec, tolerance: f64, max_terms: usize) -> Result<EvalResult> {
    let mut acc = KahanSum::new();
    let mut t = 1.0f64;
    acc.add(t);
    let mut small_streak = 0usize;
    for k in 0..max_terms {
        let r = term_ratio(spec, k);
        t *= r;
        acc.add(t);
        let scale = acc.value().abs().max(f64::MIN_POSITIVE);
        if t.abs() <= tolerance * scale {
            small_streak += 1;
        } else {
            small_streak = 0;
        }
        if small_streak >= 3 {
            // geometric-comparison bound from the most recent ratio
            let rr = r.abs();
            let bound = if rr < 0.9 {
                t.abs() * rr / (1.0 - rr)
            } else {
                t.abs() * (k as f64 + 1.0) * 4.0
            };
            if bound <= tolerance * scale {
                return Ok(EvalResult {
                    value: acc.value(),
                    abs_error_estimate: bound + acc.rounding_bound(),
                    terms_used: k + 2,
                    status: Status::Converged,
                });
            }
        }
    }
    Err(Error::convergence(format!(
        "series did not meet tolerance {tolerance:.2e} within {max_terms} terms"
    )))
}

/// z = +1: terms have eventually fixed sign and decay like n^-(1+balance);
/// sum directly with checkpointed tail fitting.
fn sum_unit_argument(spec: &PFQSpec, tolerance: f64, max_terms: usize) -> Result<EvalResult> {
    let mut acc = KahanSum::new();
    let mut t = 1.0f64;
    acc.add(t);
    let mut checkpoints: Vec<(f64, f64)> = Vec::new();
    let mut next_checkpoint = 256usize;
    let mut n = 0usize;
    while n < max_terms {
        t *= term_ratio(spec, n);
        n += 1;
        acc.add(t);
        if n == next_checkpoint {
            checkpoints.push((n as f64, t));
            next_checkpoint *= 2;
            if checkpoints.len() >= 3 {
                let w = &checkpoints[checkpoints.len() - 3..];
                if let Some(fit) = fit_algebraic_tail([w[0], w[1], w[2]]) {
                    let value = acc.value() + fit.tail;
                    let err = fit.residual + acc.rounding_bound();
                    if err <= tolerance * value.abs().max(f64::MIN_POSITIVE) {
                        return Ok(EvalResult {
                            value,
                            abs_error_estimate: err,
                            terms_used: n + 1,
                            status: Status::TailBounded,
                        });
                    }
                }
            }
        }
    }
    Err(Error::convergence(format!(
        "unit-argument series did not meet tolerance {tolerance:.2e} within {max_terms} terms"
    )))
}

/// z = -1: eventually alternating; |tail| ≤ |next term| once the terms
/// alternate and shrink.
fn sum_alternating_unit(spec: &PFQSpec, tolerance: f64, max_terms: usize) -> Result<EvalResult> {
    let mut acc = KahanSum::new();
    let mut t = 1.0f64;
    acc.add(t);
    let mut alternating_streak = 0usize;
    for k in 0..max_terms {
        let r = term_ratio(spec, k);
        let prev = t;
        t *= r;
        acc.add(t);
        if t.signum() != prev.signum() && t.abs() < prev.abs() {
            alternating_streak += 1;
        } else {
            alternating_streak = 0;
        }
        let scale = acc.value().abs().max(f64::MIN_POSITIVE);
        if alternating_streak >= 8 && t.abs() <= tolerance * scale {
            return Ok(EvalResult {
                value: acc.value(),
                abs_error_estimate: t.abs() + acc.rounding_bound(),
                terms_used: k + 2,
                status: Status::Converged,
            });
        }
    }
    Err(Error::convergence(format!(
        "alternating unit-argument series did not meet tolerance {tolerance:.2e} \
         within {max_terms} terms"
    )))
}

/// Convenience wrapper building the spec inline.
pub fn pfq_eval(
    upper: &[f64],
    lower: &[f64],
    z: f64,
    tolerance: f64,
    max_terms: usize,
) -> Result<EvalResult> {
    pfq(&PFQSpec::new(upper.to_vec(), lower.to_vec(), z)?, tolerance, max_terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn val(upper: &[f64], lower: &[f64], z: f64) -> f64 {
        pfq_eval(upper, lower, z, 1e-12, 2_000_000).unwrap().value
    }

    #[test]
    fn binomial_collapse() {
        // 2F1(-n, b; b; y) = (1-y)^n
        let got = val(&[-4.0, 2.5], &[2.5], 0.3);
        assert!((got - 0.7f64.powi(4)).abs() < 1e-15);
    }

    #[test]
    fn chu_vandermonde() {
        // 2F1(-n, b; γ; 1) = (γ-b)ₙ/(γ)ₙ at n=3, b=1.5, γ=4
        let got = val(&[-3.0, 1.5], &[4.0], 1.0);
        let want = (2.5 * 3.5 * 4.5) / (4.0 * 5.0 * 6.0);
        assert!((got - want).abs() < 1e-15, "{got} vs {want}");
    }

    #[test]
    fn geometric_1f0() {
        // 1F0(a+1; -; z) = (1-z)^{-(a+1)} at a=1, z=0.5
        let got = val(&[2.0], &[], 0.5);
        assert!((got - 4.0).abs() < 1e-12);
    }

    #[test]
    fn unit_argument_gate() {
        // 3F2(2.5,1,1;2,2;1) has balance 2+2-(2.5+1+1) = -0.5: refused
        let r = pfq_eval(&[2.5, 1.0, 1.0], &[2.0, 2.0], 1.0, 1e-10, 100_000);
        assert!(matches!(r, Err(Error::Convergence(_))));
        // outside the disk: domain error
        let r = pfq_eval(&[0.5, 1.0], &[2.0], 1.5, 1e-10, 100_000);
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn unit_argument_4f3() {
        // 4F3(1,1,3/2,3/2;5/2,2,2;1), 40-digit reference
        let want = 1.4682102451805843;
        let r = pfq_eval(&[1.0, 1.0, 1.5, 1.5], &[2.5, 2.0, 2.0], 1.0, 1e-11, 2_000_000).unwrap();
        assert!(
            (r.value - want).abs() < 1e-11,
            "got {} err {}",
            r.value,
            r.abs_error_estimate
        );
        assert_eq!(r.status, Status::TailBounded);
    }

    #[test]
    fn lower_parameter_pole_rules() {
        // uncancelled pole
        assert!(PFQSpec::new(vec![0.5], vec![-2.0], 0.3).is_err());
        // cancelled: upper -1 terminates before lower -2 reaches its zero
        assert!(PFQSpec::new(vec![-1.0, 0.5], vec![-2.0], 0.3).is_ok());
        // equal magnitude also fine: (-2)_k nonzero through k = 2
        assert!(PFQSpec::new(vec![-2.0, 0.5], vec![-2.0], 0.3).is_ok());
        assert!(PFQSpec::new(vec![-3.0, 0.5], vec![-2.0], 0.3).is_err());
    }

    #[test]
    fn entire_2f2() {
        // 2F2 at moderate argument converges fast and matches the direct sum
        let r = pfq_eval(&[1.0, 0.5], &[1.5, 2.0], 4.0, 1e-13, 10_000).unwrap();
        let mut direct = 0.0f64;
        let mut t = 1.0f64;
        for k in 0..200 {
            direct += t;
            let kf = k as f64;
            t *= (1.0 + kf) * (0.5 + kf) / ((1.5 + kf) * (2.0 + kf)) * 4.0 / (kf + 1.0);
        }
        assert!((r.value - direct).abs() < 1e-12 * direct.abs());
    }
}

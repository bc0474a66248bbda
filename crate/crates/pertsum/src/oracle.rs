//! Brute-force evaluators for the central perturbation series
//!
//!   S(α,b,γ;y)  = Σ_{n≥1} (α/2)ₙ/(n·n!) · ₂F₁(-n, b; γ; y)
//!   S∞(α,γ;x²) = Σ_{n≥1} (α/2)ₙ/(n·n!) · ₁F₁(-n; γ; x²)
//!
//! together with their boundary cases and the Euler-integral pathway. These
//! are the ground truth every closed form is tested against, so they stay
//! deliberately simple: term-by-term summation with compensated
//! accumulation. Two ingredients make them accurate at desk scale anyway:
//!
//! * the inner ₂F₁/₁F₁ values ride along on their contiguous three-term
//!   recurrence in n (the decaying-algebraic solution is dominant, so the
//!   upward direction is stable), costing O(1) per outer term;
//! * the Gauss-series tail, which decays like n^-(2+b-α/2), is closed with
//!   the integral-comparison estimate, while the confluent series — whose
//!   terms oscillate like n^(α/2-γ/2-7/4) cos(2x√n+φ) — is resolved by
//!   iterated half-period averaging of interpolated partial sums.

use crate::error::{Error, Result};
use crate::specfun::tail::fit_algebraic_tail;
use crate::specfun::{
    digamma, kummer_term_peak, kummer_terminating, pfq_eval, EvalResult, KahanSum, Status,
};

/// Parameters (α, b, γ, y) of the central series; `b = None` selects the
/// confluent variant, in which case `y` plays the role of x².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesParams {
    pub alpha: f64,
    pub b: Option<f64>,
    pub gamma: f64,
    pub y: f64,
}

impl SeriesParams {
    pub fn gauss(alpha: f64, b: f64, gamma: f64, y: f64) -> Self {
        SeriesParams {
            alpha,
            b: Some(b),
            gamma,
            y,
        }
    }

    pub fn confluent(alpha: f64, gamma: f64, x2: f64) -> Self {
        SeriesParams {
            alpha,
            b: None,
            gamma,
            y: x2,
        }
    }

    /// Standing conditions: α > 0, γ > α/2, y > 0 (at y = 0 the series
    /// diverges for α ≥ 2 and is handled by `series_at_y0`).
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0) {
            return Err(Error::domain(format!("alpha must be > 0, got {}", self.alpha)));
        }
        if !(self.gamma > self.alpha / 2.0) {
            return Err(Error::domain(format!(
                "gamma = {} violates gamma > alpha/2 = {}",
                self.gamma,
                self.alpha / 2.0
            )));
        }
        if !(self.y > 0.0) {
            return Err(Error::domain(format!("y must be > 0, got {}", self.y)));
        }
        if let Some(b) = self.b {
            if !b.is_finite() {
                return Err(Error::domain("b must be finite".into()));
            }
        }
        Ok(())
    }
}

/// Shared engine: Σ_{n≥n₀} c(n) · F(n) where F rides the Gauss contiguous
/// recurrence F_{n+1} = [(2n+γ-(b+n)y) F_n - n(1-y) F_{n-1}]/(γ+n) and the
/// caller supplies the outer coefficient as a running update.
///
/// Checkpoints at powers of two feed the algebraic tail fit; the loop stops
/// as soon as the fitted tail's residual (plus rounding) meets tolerance.
pub(crate) fn gauss_engine<C>(
    b: f64,
    gamma: f64,
    y: f64,
    start_n: usize,
    mut coeff: C,
    tolerance: f64,
    max_n: usize,
) -> Result<EvalResult>
where
    C: FnMut(usize) -> f64,
{
    let mut acc = KahanSum::new();
    let mut f_prev = 1.0f64; // F_0
    let mut f_cur = 1.0 - b * y / gamma; // F_1
    if start_n == 0 {
        acc.add(coeff(0) * f_prev);
    }
    let mut checkpoints: Vec<(f64, f64)> = Vec::new();
    let mut next_checkpoint = 512usize;
    let mut last_term = f64::INFINITY;
    for n in 1..=max_n {
        let t = coeff(n) * f_cur;
        acc.add(t);
        last_term = t;
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
                            terms_used: n,
                            status: Status::TailBounded,
                        });
                    }
                }
            }
        }
        let nf = n as f64;
        let f_next =
            ((2.0 * nf + gamma - (b + nf) * y) * f_cur - nf * (1.0 - y) * f_prev) / (gamma + nf);
        f_prev = f_cur;
        f_cur = f_next;
    }
    // budget exhausted; accept only if the raw last term already proves the
    // sum converged to tolerance on its own
    let scale = acc.value().abs().max(f64::MIN_POSITIVE);
    if last_term.abs() * (max_n as f64) <= tolerance * scale {
        return Ok(EvalResult {
            value: acc.value(),
            abs_error_estimate: last_term.abs() * max_n as f64 + acc.rounding_bound(),
            terms_used: max_n,
            status: Status::Converged,
        });
    }
    Err(Error::convergence(format!(
        "outer series did not reach tolerance {tolerance:.2e} within {max_n} terms"
    )))
}

/// The central Gauss series Σ_{n≥1} (α/2)ₙ/(n·n!)·₂F₁(-n,b;γ;y).
///
/// For n ≤ 60 each inner value is also available through the terminating
/// evaluator; past that the recurrence pathway is the only practical one and
/// the two agree to rounding (exercised in the tests).
pub fn series_gauss(p: &SeriesParams, tolerance: f64, max_n: usize) -> Result<EvalResult> {
    p.validate()?;
    let b = p
        .b
        .ok_or_else(|| Error::domain("series_gauss requires the Gauss parameter b".into()))?;
    let half_alpha = p.alpha / 2.0;
    // running (α/2)ₙ/(n·n!): start at n=1 with value α/2
    let mut poch_over_fact = f64::NAN;
    let coeff = move |n: usize| {
        if n == 1 {
            poch_over_fact = half_alpha;
        } else {
            let nf = n as f64;
            poch_over_fact *= (half_alpha + nf - 1.0) / nf;
        }
        poch_over_fact / n as f64
    };
    gauss_engine(b, p.gamma, p.y, 1, coeff, tolerance, max_n)
}

/// Number of averaging stages for the confluent series.
const CONFLUENT_LEVELS: usize = 16;

/// The confluent series Σ_{n≥1} (α/2)ₙ/(n·n!)·₁F₁(-n;γ;x²).
///
/// Terms oscillate with phase 2x√n, so raw partial sums converge only like a
/// damped cosine. Partial sums are sampled at half-period spacing in u = √n
/// (quadratically interpolated between integers to hit the phase exactly)
/// and averaged pairwise CONFLUENT_LEVELS times, which cancels the
/// oscillation to all practical orders. Diagnostics flag inner-term
/// cancellation when the largest inner term exceeds 1e6 × the inner result.
pub fn series_confluent(
    alpha: f64,
    gamma: f64,
    x2: f64,
    tolerance: f64,
    max_n: usize,
) -> Result<EvalResult> {
    SeriesParams::confluent(alpha, gamma, x2).validate()?;
    // conditional convergence of the oscillatory terms needs
    // α/2 - γ/2 - 7/4 < -1/2, i.e. γ > α - 5/2 (trivially true for α ≤ 5/2
    // inside the standing domain γ > α/2)
    if gamma <= alpha - 2.5 {
        return Err(Error::domain(format!(
            "confluent series diverges for gamma = {gamma} ≤ alpha - 5/2 = {}",
            alpha - 2.5
        )));
    }
    let x = x2.sqrt();
    let h = std::f64::consts::FRAC_PI_2 / x; // half oscillation period in u = √n
    let span = CONFLUENT_LEVELS as f64 * h;
    let u0 = (400.0f64).min(((max_n as f64).sqrt() - span - 2.0).max(8.0 * h.max(4.0)));
    let targets: Vec<f64> = (0..=CONFLUENT_LEVELS)
        .map(|j| (u0 + j as f64 * h).powi(2))
        .collect();
    let n_max = targets[CONFLUENT_LEVELS].ceil() as usize + 2;
    if n_max > max_n {
        return Err(Error::convergence(format!(
            "confluent averaging needs {n_max} terms, budget is {max_n}"
        )));
    }

    let half_alpha = alpha / 2.0;
    let mut acc = KahanSum::new();
    let mut g_prev = 1.0f64; // G_0 = 1F1(0)
    let mut g_cur = 1.0 - x2 / gamma; // G_1
    let mut oc = half_alpha; // (α/2)ₙ/n! at n=1
    let mut s_m2 = 0.0f64;
    let mut s_m1 = 0.0f64;
    let mut samples: Vec<f64> = Vec::with_capacity(CONFLUENT_LEVELS + 1);
    let mut ti = 0usize;
    for n in 1..=n_max {
        let t = oc / n as f64 * g_cur;
        acc.add(t);
        let s = acc.value();
        // quadratic interpolation of the partial sum at the real-valued
        // phase target inside [n-1, n]
        while ti < targets.len() && targets[ti] <= n as f64 {
            let xt = targets[ti] - (n as f64 - 1.0);
            let d1 = (s - s_m2) / 2.0;
            let d2 = (s - 2.0 * s_m1 + s_m2) / 2.0;
            samples.push(s_m1 + xt * d1 + xt * xt * d2);
            ti += 1;
        }
        s_m2 = s_m1;
        s_m1 = s;
        let nf = n as f64;
        let g_next = ((2.0 * nf + gamma - x2) * g_cur - nf * g_prev) / (gamma + nf);
        g_prev = g_cur;
        g_cur = g_next;
        oc *= (half_alpha + nf) / (nf + 1.0);
    }
    // iterated pairwise averaging; consecutive samples differ by half an
    // oscillation period, so each stage cancels the leading oscillatory term
    let mut stage = samples;
    let mut last_spread = f64::INFINITY;
    while stage.len() > 1 {
        last_spread = stage[stage.len() - 1] - stage[0];
        for i in 0..stage.len() - 1 {
            stage[i] = 0.5 * (stage[i] + stage[i + 1]);
        }
        stage.pop();
    }
    let value = stage[0];
    let err = last_spread.abs() + acc.rounding_bound();
    if err > tolerance * value.abs().max(f64::MIN_POSITIVE) && err > tolerance {
        return Err(Error::convergence(format!(
            "confluent averaging residual {err:.2e} above tolerance {tolerance:.2e}"
        )));
    }
    Ok(EvalResult {
        value,
        abs_error_estimate: err,
        terms_used: n_max,
        status: Status::TailBounded,
    })
}

/// Cancellation diagnostic for the confluent pathway: ratio of the largest
/// term of the alternating inner ₁F₁ sum to the inner result, probed at the
/// worst small order. Ratios above 1e6 mean the direct inner sum would lose
/// more than six digits; the Laguerre recurrence pathway used here does not,
/// but downstream consumers may want the warning.
pub fn confluent_cancellation_ratio(gamma: f64, x2: f64) -> f64 {
    let probe_n = 64usize;
    let peak = kummer_term_peak(probe_n, gamma, x2);
    let inner = kummer_terminating(probe_n, gamma, x2);
    peak / inner.abs().max(f64::MIN_POSITIVE)
}

/// Boundary case y = 0 (Σ (α/2)ₙ/(n·n!) = ψ(1) - ψ(1-α/2)), convergent only
/// for α < 2.
pub fn series_at_y0(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::domain(format!(
            "the y = 0 series diverges for alpha = {alpha} ≥ 2 (needs 0 < alpha < 2)"
        )));
    }
    Ok(digamma(1.0)? - digamma(1.0 - alpha / 2.0)?)
}

/// Brute-force companion of `series_at_y0`: direct summation of
/// Σ (α/2)ₙ/(n·n!) with its own tail fit, for cross-checking.
pub fn series_at_y0_direct(alpha: f64, tolerance: f64, max_n: usize) -> Result<EvalResult> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::domain(format!(
            "the y = 0 series diverges for alpha = {alpha} ≥ 2"
        )));
    }
    // reuse the Gauss engine with y → 0 through b·y = 0: at y = 0 the inner
    // recurrence gives F_n ≡ 1 exactly
    let half_alpha = alpha / 2.0;
    let mut poch_over_fact = f64::NAN;
    let coeff = move |n: usize| {
        if n == 1 {
            poch_over_fact = half_alpha;
        } else {
            let nf = n as f64;
            poch_over_fact *= (half_alpha + nf - 1.0) / nf;
        }
        poch_over_fact / n as f64
    };
    gauss_engine(0.0, 1.0, 0.0, 1, coeff, tolerance, max_n)
}

/// Boundary case y = 1: α(γ-b)/γ · ₄F₃(1+α/2, γ-b+1, 1, 1; γ+1, 2, 2; 1),
/// absolutely convergent for α/2 < 1 + b.
pub fn series_at_y1(alpha: f64, b: f64, gamma: f64) -> Result<EvalResult> {
    if !(alpha > 0.0) || !(gamma > alpha / 2.0) {
        return Err(Error::domain(
            "series_at_y1 needs alpha > 0 and gamma > alpha/2".into(),
        ));
    }
    if alpha / 2.0 >= 1.0 + b {
        return Err(Error::domain(format!(
            "y = 1 series convergence needs alpha/2 < 1 + b (alpha = {alpha}, b = {b})"
        )));
    }
    let prefactor = alpha * (gamma - b) / gamma;
    if prefactor == 0.0 {
        // b = γ: every inner Chu-Vandermonde factor (γ-b)ₙ vanishes
        return Ok(EvalResult::exact(0.0));
    }
    let f = pfq_eval(
        &[1.0 + alpha / 2.0, gamma - b + 1.0, 1.0, 1.0],
        &[gamma + 1.0, 2.0, 2.0],
        1.0,
        1e-11,
        4_000_000,
    )?;
    Ok(EvalResult {
        value: prefactor * f.value,
        abs_error_estimate: prefactor.abs() * f.abs_error_estimate,
        terms_used: f.terms_used,
        status: f.status,
    })
}

/// Euler-integral pathway for the whole series (valid for γ > b > 0,
/// 0 < y ≤ 2):
///
///   (α/2)·Γ(γ)/(Γ(b)Γ(γ-b)) ∫₀¹ t^(b-1) (1-t)^(γ-b-1) K(α/2, 1-yt) dt
///
/// where K(a,z) = z·₃F₂(a+1,1,1;2,2;z) is the analytic kernel.
pub fn integral_representation(p: &SeriesParams, tolerance: f64) -> Result<EvalResult> {
    p.validate()?;
    let b = p.b.ok_or_else(|| {
        Error::domain("integral representation requires the Gauss parameter b".into())
    })?;
    if !(p.gamma > b && b > 0.0) {
        return Err(Error::domain(format!(
            "integral representation needs gamma > b > 0 (b = {b}, gamma = {})",
            p.gamma
        )));
    }
    if p.y > 2.0 {
        // kernel argument 1 - yt would leave (-1, 1]; the continuation is
        // not supplied by the kernel, so refuse rather than guess
        return Err(Error::domain(format!(
            "kernel argument leaves the unit disk for y = {} > 2",
            p.y
        )));
    }
    let a = p.alpha / 2.0;
    let (gamma, y) = (p.gamma, p.y);
    let ln_pref = crate::specfun::ln_gamma(gamma)?
        - crate::specfun::ln_gamma(b)?
        - crate::specfun::ln_gamma(gamma - b)?;
    let pref = a * ln_pref.exp();
    let inner_tol = tolerance / pref.abs().max(1.0) * 0.1;
    let integrand = move |t: f64| {
        let z = 1.0 - y * t;
        let kernel = match crate::closedform::f3_kernel(a, z) {
            Ok(k) => k.value,
            Err(_) => return f64::NAN, // masked by quadrature node filter
        };
        t.powf(b - 1.0) * (1.0 - t).powf(gamma - b - 1.0) * kernel
    };
    let q = crate::specfun::integrate(integrand, 0.0, 1.0, inner_tol)?;
    Ok(EvalResult {
        value: pref * q.value,
        abs_error_estimate: pref.abs() * q.abs_error_estimate,
        terms_used: q.terms_used,
        status: q.status,
    })
}

/// Euler's integral for the terminating ₂F₁(-n, b; γ; y):
/// Γ(γ)/(Γ(b)Γ(γ-b)) ∫₀¹ t^(b-1)(1-t)^(γ-b-1)(1-yt)ⁿ dt, any y > 0.
pub fn euler_2f1(n: usize, b: f64, gamma: f64, y: f64) -> Result<f64> {
    if !(gamma > b && b > 0.0) {
        return Err(Error::domain("Euler integral needs gamma > b > 0".into()));
    }
    let ln_pref = crate::specfun::ln_gamma(gamma)?
        - crate::specfun::ln_gamma(b)?
        - crate::specfun::ln_gamma(gamma - b)?;
    let pref = ln_pref.exp();
    let q = crate::specfun::integrate(
        move |t| t.powf(b - 1.0) * (1.0 - t).powf(gamma - b - 1.0) * (1.0 - y * t).powi(n as i32),
        0.0,
        1.0,
        1e-13,
    )?;
    Ok(pref * q.value)
}

/// Deviations |₂F₁(-n, b; γ; x²/b) - ₁F₁(-n; γ; x²)| along an increasing b
/// sequence, probing the confluence.
pub fn confluent_limit_probe(
    n: usize,
    gamma: f64,
    x2: f64,
    b_sequence: &[f64],
) -> Result<Vec<f64>> {
    let target = kummer_terminating(n, gamma, x2);
    let mut out = Vec::with_capacity(b_sequence.len());
    for &b in b_sequence {
        if !(b > x2) {
            return Err(Error::domain(format!(
                "confluent probe requires every b > x² (b = {b}, x² = {x2})"
            )));
        }
        let g = pfq_eval(&[-(n as f64), b], &[gamma], x2 / b, 1e-14, 10_000)?;
        out.push((g.value - target).abs());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::digamma;

    #[test]
    fn telescoping_alpha2() {
        // b = γ makes each inner 2F1 collapse to (1-y)^n, so the α = 2 series
        // telescopes to -log y
        let p = SeriesParams::gauss(2.0, 2.7, 2.7, 0.5);
        let r = series_gauss(&p, 1e-11, 400_000).unwrap();
        assert!(
            (r.value - 0.5f64.ln().neg()).abs() < 1e-10,
            "got {} (err {})",
            r.value,
            r.abs_error_estimate
        );
    }

    #[test]
    fn alpha2_closed_form_case() {
        // Σ (1/n) 2F1(-n,2;3;1/2) = ψ(3) - ψ(2) + log 2
        let p = SeriesParams::gauss(2.0, 2.0, 3.0, 0.5);
        let r = series_gauss(&p, 1e-11, 400_000).unwrap();
        let want = digamma(3.0).unwrap() - digamma(2.0).unwrap() + 2.0f64.ln();
        assert!((r.value - want).abs() < 1e-10, "got {} want {want}", r.value);
    }

    #[test]
    fn gauss_frozen_regression() {
        // α=1, b=2, γ=3, y=0.25; frozen from a 40-digit evaluation of the
        // Lemma-7 closed form, which this oracle must reproduce independently
        let p = SeriesParams::gauss(1.0, 2.0, 3.0, 0.25);
        let r = series_gauss(&p, 1e-12, 2_000_000).unwrap();
        assert!(
            (r.value - 0.71691427103148874).abs() < 2e-12,
            "got {}",
            r.value
        );
    }

    #[test]
    fn inner_recurrence_matches_terminating_evaluator() {
        // the engine's recurrence against reverse-order finite sums for n ≤ 60
        let (b, g, y) = (2.3, 3.1, 0.62);
        let mut f_prev = 1.0f64;
        let mut f_cur = 1.0 - b * y / g;
        for n in 1..=60usize {
            if n > 1 {
                let nf = (n - 1) as f64;
                let f_next =
                    ((2.0 * nf + g - (b + nf) * y) * f_cur - nf * (1.0 - y) * f_prev) / (g + nf);
                f_prev = f_cur;
                f_cur = f_next;
            }
            let direct = pfq_eval(&[-(n as f64), b], &[g], y, 1e-15, 1000)
                .unwrap()
                .value;
            assert!(
                (f_cur - direct).abs() <= 1e-12 * direct.abs().max(1e-6),
                "n = {n}: recurrence {f_cur} vs direct {direct}"
            );
        }
    }

    #[test]
    fn confluent_matches_eq15() {
        // α = 2: ψ(γ) - log x²
        let r = series_confluent(2.0, 3.0, 1.0, 1e-9, 2_000_000).unwrap();
        let want = digamma(3.0).unwrap();
        assert!((r.value - want).abs() < 1e-9, "got {} want {want}", r.value);
    }

    #[test]
    fn confluent_alpha4_display() {
        // §4 display: ψ(γ) - log x² + (γ-1)/x² - 1 at γ=3, x²=1
        let r = series_confluent(4.0, 3.0, 1.0, 1e-9, 2_000_000).unwrap();
        let want = digamma(3.0).unwrap() + 1.0;
        assert!((r.value - want).abs() < 2e-9, "got {} want {want}", r.value);
    }

    #[test]
    fn confluent_frozen_regression() {
        let r = series_confluent(1.0, 1.5, 0.81, 1e-9, 2_000_000).unwrap();
        assert!(
            (r.value - 0.17812399301434196).abs() < 1e-9,
            "got {}",
            r.value
        );
    }

    #[test]
    fn confluent_divergence_gate() {
        // α = 10, γ = 5.4 < α - 5/2: oscillatory terms grow, refuse
        assert!(series_confluent(10.0, 5.4, 1.0, 1e-7, 2_000_000).is_err());
    }

    #[test]
    fn y0_cases() {
        // α = 1: ψ(1) - ψ(1/2) = 2 log 2
        let v = series_at_y0(1.0).unwrap();
        assert!((v - 2.0 * 2.0f64.ln()).abs() < 1e-13);
        let direct = series_at_y0_direct(1.0, 1e-11, 4_000_000).unwrap();
        assert!((direct.value - v).abs() < 1e-10);
        // frozen ψ(1) - ψ(1/4)
        let v = series_at_y0(1.5).unwrap();
        assert!((v - 3.6502378684747325).abs() < 1e-12);
        assert!(series_at_y0(2.0).is_err());
        assert!(series_at_y0(2.7).is_err());
    }

    #[test]
    fn y1_matches_series() {
        // α=2, b=2, γ=3 at y=1: ψ(3) - ψ(2)
        let r = series_at_y1(2.0, 2.0, 3.0).unwrap();
        assert!((r.value - 0.5).abs() < 1e-9, "got {}", r.value);
        // b = γ short-circuit
        let r = series_at_y1(1.0, 3.0, 3.0).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(series_at_y1(4.0, 0.5, 4.0).is_err());
    }

    #[test]
    fn euler_integral_matches_terminating_series() {
        let (n, b, g, y) = (6usize, 1.3, 3.7, 0.9);
        let quad = euler_2f1(n, b, g, y).unwrap();
        let series = pfq_eval(&[-(n as f64), b], &[g], y, 1e-14, 1000)
            .unwrap()
            .value;
        assert!((quad - series).abs() < 1e-10, "{quad} vs {series}");
        // n = 0 is the Beta normalization
        assert!((euler_2f1(0, 2.0, 5.0, 0.4).unwrap() - 1.0).abs() < 1e-11);
        // n = 1, b = 1, γ = 2: 1 - y/2
        assert!((euler_2f1(1, 1.0, 2.0, 0.5).unwrap() - 0.75).abs() < 1e-11);
    }

    #[test]
    fn confluent_probe_decreases() {
        let devs = confluent_limit_probe(3, 2.5, 1.0, &[10.0, 100.0, 1000.0]).unwrap();
        assert!(devs[0] > devs[1] && devs[1] > devs[2]);
        // final deviation consistent with a C/b decay fitted from the first
        let c = devs[0] * 10.0;
        assert!(devs[2] <= c / 1000.0 * 4.0);
        // n = 0: both sides are exactly 1
        let devs = confluent_limit_probe(0, 2.5, 1.0, &[10.0, 100.0]).unwrap();
        assert!(devs.iter().all(|&d| d == 0.0));
    }

    #[test]
    fn domain_gates() {
        assert!(SeriesParams::gauss(4.0, 2.0, 1.5, 0.5).validate().is_err());
        assert!(SeriesParams::gauss(2.0, 2.0, 3.0, 0.0).validate().is_err());
        assert!(SeriesParams::gauss(-1.0, 2.0, 3.0, 0.5).validate().is_err());
        let p = SeriesParams::gauss(2.0, 2.0, 4.0, 2.5);
        assert!(integral_representation(&p, 1e-9).is_err());
    }
}

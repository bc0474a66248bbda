//! Gamma-family kernels: log-gamma, signed gamma ratios, digamma and the
//! Pochhammer symbol.
//!
//! Accuracy targets: `ln_gamma` reproduces Γ to ~1e-13 relative after
//! exponentiation over [1e-3, ~1e2] (and to a few ulps of the returned
//! log-value beyond, which is the double-precision representation floor);
//! `digamma` is accurate to 1e-12 absolute over [1e-3, 1e4].

use crate::error::{Error, Result};
use crate::specfun::kahan::KahanSum;

/// Arguments this close to a nonpositive integer are treated as sitting on
/// the pole; identity checks are expected to fail loudly near validity-domain
/// boundaries instead of returning huge finite values.
pub const POLE_GUARD: f64 = 1e-8;

const LN_PI: f64 = 1.1447298858494001741;
const LN_2_SQRT_E_OVER_PI: f64 = 0.6207822376352452223;
const GAMMA_R: f64 = 10.900511;

// Lanczos coefficients from Pugh's analysis (as used by statrs); good for
// ~1e-14 relative accuracy on Γ across the positive axis.
const GAMMA_DK: [f64; 11] = [
    2.48574089138753565546e-5,
    1.05142378581721974210,
    -3.45687097222016235469,
    4.51227709466894823700,
    -2.98285225323576655721,
    1.05639711577126713077,
    -1.95428773191645869583e-1,
    1.70970543404441224307e-2,
    -5.71926117404305781283e-4,
    4.63399473359905636708e-6,
    -2.71994908488607703910e-9,
];

fn near_nonpositive_integer(x: f64) -> bool {
    x < 0.5 && (x - x.round()).abs() <= POLE_GUARD && x.round() <= 0.0
}

fn lanczos_sum(x: f64) -> f64 {
    // Σ d_k / (x + k - 1), valid for x >= 0.5
    let mut s = GAMMA_DK[0];
    for (k, dk) in GAMMA_DK.iter().enumerate().skip(1) {
        s += dk / (x + k as f64 - 1.0);
    }
    s
}

/// log Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    if near_nonpositive_integer(x) {
        return Err(Error::pole(format!("ln_gamma argument {x} within pole guard")));
    }
    if x < 0.5 {
        // reflection through Γ(x)Γ(1-x) = π / sin(πx); x in (0, 0.5) so sin > 0
        let s = lanczos_sum(1.0 - x);
        Ok(LN_PI
            - (std::f64::consts::PI * x).sin().ln()
            - s.ln()
            - LN_2_SQRT_E_OVER_PI
            - (0.5 - x) * ((0.5 - x + GAMMA_R) / std::f64::consts::E).ln())
    } else {
        let s = lanczos_sum(x);
        Ok(s.ln()
            + LN_2_SQRT_E_OVER_PI
            + (x - 0.5) * ((x - 0.5 + GAMMA_R) / std::f64::consts::E).ln())
    }
}

/// log |Γ(x)| together with the sign of Γ(x); handles negative non-integer
/// arguments through the reflection formula.
pub fn ln_gamma_signed(x: f64) -> Result<(f64, f64)> {
    if near_nonpositive_integer(x) {
        return Err(Error::pole(format!(
            "gamma argument {x} within {POLE_GUARD} of a nonpositive integer"
        )));
    }
    if x > 0.0 {
        return Ok((ln_gamma(x)?, 1.0));
    }
    // Γ(x) = π / (sin(πx) Γ(1-x)) for non-integer x < 0
    let sin_pi_x = sin_pi(x);
    let ln = LN_PI - sin_pi_x.abs().ln() - ln_gamma(1.0 - x)?;
    Ok((ln, sin_pi_x.signum()))
}

/// sin(πx) evaluated via range reduction on x, so the sign is exact even for
/// large |x|.
fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (0.5 * x).round(); // r in [-1, 1], x = 2k + r
    (std::f64::consts::PI * r).sin()
}

/// Γ(x) for any non-pole real x.
pub fn gamma(x: f64) -> Result<f64> {
    let (ln, sign) = ln_gamma_signed(x)?;
    Ok(sign * ln.exp())
}

/// Γ(a)/Γ(b), computed through log-space subtraction with sign tracking, so
/// ratios like Γ(γ-α/2)/Γ(γ) stay accurate when both values are huge.
pub fn gamma_ratio(a: f64, b: f64) -> Result<f64> {
    let (la, sa) = ln_gamma_signed(a)?;
    let (lb, sb) = ln_gamma_signed(b)?;
    Ok(sa * sb * (la - lb).exp())
}

// B_{2k}/(2k) for the digamma asymptotic tail.
const DIGAMMA_ASYMP: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
];

/// Digamma ψ(x) for non-pole real x.
///
/// Satisfies the recurrence ψ(x+1) = ψ(x) + 1/x to machine accuracy; the
/// shift terms are accumulated with compensation so that ψ near the origin
/// (dominated by -1/x) keeps its absolute error near the representation
/// floor.
pub fn digamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain(format!("digamma requires finite x, got {x}")));
    }
    if (x - x.round()).abs() <= POLE_GUARD && x.round() <= 0.0 {
        return Err(Error::pole(format!(
            "digamma argument {x} within {POLE_GUARD} of a nonpositive integer"
        )));
    }
    if x < 0.0 {
        // ψ(x) = ψ(1-x) - π cot(πx)
        let r = x - x.round(); // distance to nearest integer, |r| <= 0.5
        let cot = (std::f64::consts::PI * r).cos() / (std::f64::consts::PI * r).sin();
        return Ok(digamma(1.0 - x)? - std::f64::consts::PI * cot);
    }
    let mut acc = KahanSum::new();
    let mut xx = x;
    while xx < 10.0 {
        acc.add(-1.0 / xx);
        xx += 1.0;
    }
    acc.add(xx.ln());
    acc.add(-0.5 / xx);
    let inv2 = 1.0 / (xx * xx);
    let mut p = inv2;
    for c in DIGAMMA_ASYMP {
        acc.add(-c * p);
        p *= inv2;
    }
    Ok(acc.value())
}

/// Pochhammer symbol (a)ₙ = a(a+1)···(a+n-1), with (a)₀ = 1.
///
/// Exactly zero when a is a nonpositive integer and n exceeds |a|, matching
/// the (-n)ₖ truncation convention used by terminating hypergeometric series.
pub fn pochhammer(a: f64, n: usize) -> f64 {
    if n == 0 {
        return 1.0;
    }
    if a <= 0.0 && a == a.round() && (n as f64) > -a {
        return 0.0;
    }
    let mut p = 1.0;
    for k in 0..n {
        p *= a + k as f64;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    // reference values computed with 40-digit arithmetic from the defining
    // integrals / series
    const LN_GAMMA_REFS: [(f64, f64); 10] = [
        (0.001, 6.9071788853838537),
        (0.1, 2.2527126517342060),
        (0.5, 0.57236494292470009),
        (1.5, -0.12078223763524522),
        (3.7, 1.4280723266653879),
        (10.0, 12.801827480081470),
        (42.5, 115.90007047041453),
        (170.0, 701.43726380873709),
        (1000.0, 5905.2204232091812),
        (10000.0, 82099.717496442377),
    ];

    const DIGAMMA_REFS: [(f64, f64); 11] = [
        (0.001, -1000.5755719318103),
        (0.1, -10.423754940411077),
        (0.5, -1.9635100260214235),
        (1.0, -0.57721566490153286),
        (2.0, 0.42278433509846714),
        (7.3, 1.9178203356379861),
        (100.0, 4.6001618527380874),
        (10000.0, 9.2102903711428494),
        (-0.5, 0.036489973978576521),
        (-2.5, 1.1031566406452432),
        (-9.3, 4.5653161149413210),
    ];

    #[test]
    fn ln_gamma_trivial_points() {
        assert_eq!(ln_gamma(1.0).unwrap(), 0.0);
        assert_eq!(ln_gamma(2.0).unwrap(), 0.0);
    }

    #[test]
    fn ln_gamma_reference_values() {
        for (x, want) in LN_GAMMA_REFS {
            let got = ln_gamma(x).unwrap();
            // relative error of exp(result) vs Γ equals the absolute error in
            // the log; beyond lnΓ ~ 1e2 the result's own ulp dominates
            let tol = (1e-13_f64).max(4.0 * f64::EPSILON * want.abs());
            assert!(
                (got - want).abs() <= tol,
                "ln_gamma({x}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn ln_gamma_rejects_nonpositive() {
        assert!(ln_gamma(0.0).is_err());
        assert!(ln_gamma(-1.5).is_err());
    }

    #[test]
    fn digamma_reference_values() {
        for (x, want) in DIGAMMA_REFS {
            let got = digamma(x).unwrap();
            assert!(
                (got - want).abs() <= 1e-12_f64.max(2.0 * f64::EPSILON * want.abs()),
                "digamma({x}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn digamma_pole_guard() {
        assert!(digamma(0.0).is_err());
        assert!(digamma(-3.0).is_err());
        assert!(digamma(-3.0 + 0.9e-8).is_err());
        assert!(digamma(-3.0 + 1.0e-6).is_ok());
    }

    #[test]
    fn gamma_ratio_values() {
        // Γ(3)/Γ(2) = 2
        assert!((gamma_ratio(3.0, 2.0).unwrap() - 2.0).abs() < 1e-14);
        // Γ(γ-1/2)/Γ(γ) at γ = 3/2 is 2/√π
        let want = 2.0 / std::f64::consts::PI.sqrt();
        assert!((gamma_ratio(1.0, 1.5).unwrap() - want).abs() < 1e-14);
        // Γ(-1/2)/Γ(1/2) = -2 via reflection
        assert!((gamma_ratio(-0.5, 0.5).unwrap() + 2.0).abs() < 1e-13);
        assert!(gamma_ratio(-1.0, 0.5).is_err());
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(2.5, 0), 1.0);
        assert_eq!(pochhammer(-3.0, 5), 0.0);
        assert_eq!(pochhammer(-3.0, 2), 6.0);
        assert_eq!(pochhammer(-3.0, 3), -6.0);
        assert!((pochhammer(0.5, 3) - 0.5 * 1.5 * 2.5).abs() < 1e-15);
    }
}

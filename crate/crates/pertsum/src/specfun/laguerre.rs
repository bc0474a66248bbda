//! Associated Laguerre polynomials and the terminating Kummer function.

use crate::specfun::gamma::pochhammer;

/// Lₙ^(a)(y) by the upward three-term recurrence
/// (k+1) L_{k+1} = (2k+1+a-y) L_k - (k+a) L_{k-1}.
///
/// Stable for the polynomial (dominant) solution, which is the one wanted
/// here; defined for every real a.
pub fn laguerre(n: usize, a: f64, y: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut lm1 = 1.0;
    let mut l = 1.0 + a - y;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + a - y) * l - (kf + a) * lm1) / (kf + 1.0);
        lm1 = l;
        l = next;
    }
    l
}

/// Terminating Kummer function ₁F₁(-n; γ; y) = n!/(γ)ₙ · Lₙ^(γ-1)(y).
///
/// Going through the Laguerre recurrence keeps the heavy cancellation of the
/// alternating finite sum under control for moderate n and y.
pub fn kummer_terminating(n: usize, gamma: f64, y: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    // n!/(γ)ₙ accumulated as a running ratio to avoid overflow
    let mut ratio = 1.0;
    for k in 0..n {
        ratio *= (k as f64 + 1.0) / (gamma + k as f64);
    }
    ratio * laguerre(n, gamma - 1.0, y)
}

/// Largest |term| of the alternating finite sum for ₁F₁(-n; γ; y), used to
/// diagnose cancellation severity.
pub fn kummer_term_peak(n: usize, gamma: f64, y: f64) -> f64 {
    let mut t = 1.0f64;
    let mut peak = 1.0f64;
    for k in 0..n {
        let kf = k as f64;
        t *= (-(n as f64) + kf) / (gamma + kf) * y / (kf + 1.0);
        peak = peak.max(t.abs());
    }
    peak
}

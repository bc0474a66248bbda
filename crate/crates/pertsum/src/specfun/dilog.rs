//! Dilogarithm Li₂(z) = -∫₀^z log(1-t)/t dt for real z ≤ 1.

use crate::error::{Error, Result};

const PI2_OVER_6: f64 = 1.6449340668482264365;

/// Li₂(z) for z ≤ 1.
///
/// The power series Σ zⁿ/n² is used on |z| ≤ 1/2; arguments in (1/2, 1] go
/// through the Euler reflection Li₂(z) + Li₂(1-z) = π²/6 - log z log(1-z),
/// and z < -1/2 through the Landen transform
/// Li₂(z) = -Li₂(z/(z-1)) - log²(1-z)/2.
pub fn dilog(z: f64) -> Result<f64> {
    if !z.is_finite() || z > 1.0 {
        return Err(Error::domain(format!("dilog requires z <= 1, got {z}")));
    }
    Ok(dilog_inner(z))
}

fn dilog_inner(z: f64) -> f64 {
    if z == 1.0 {
        return PI2_OVER_6;
    }
    if z == 0.0 {
        return 0.0;
    }
    if z > 0.5 {
        return PI2_OVER_6 - z.ln() * (-z).ln_1p() - dilog_inner(1.0 - z);
    }
    if z < -0.5 {
        // maps z < -1/2 into (1/3, 1); one more reflection may follow
        let w = z / (z - 1.0);
        let l = (-z).ln_1p(); // log(1-z)
        return -dilog_inner(w) - 0.5 * l * l;
    }
    series(z)
}

fn series(z: f64) -> f64 {
    let mut sum = 0.0;
    let mut zn = z;
    let mut n = 1u32;
    loop {
        let t = zn / (n as f64 * n as f64);
        sum += t;
        if t.abs() <= f64::EPSILON * sum.abs() || n > 200 {
            break;
        }
        zn *= z;
        n += 1;
    }
    sum
}

//! Integral-comparison tail estimation for series with algebraic term decay.
//!
//! Sums whose terms behave like A·n^(-s) (the unit-argument p = q+1 case and
//! the outer perturbation series) cannot be truncated at desk scale without
//! an explicit tail. The three recorded terms at n = N/4, N/2, N pin the
//! local model  log t = log A - s log n + c/n,  whose tail
//! Σ_{n>N} A n^(-s) (1 + c/n) is then summed by Euler-Maclaurin. The c/n
//! term is what makes the estimate usable: it absorbs the first correction
//! to pure power-law decay, leaving a residual that shrinks like 1/N².

/// Σ_{n>N} n^(-s) by Euler-Maclaurin at x = N (four terms).
pub fn zeta_tail(s: f64, n: f64) -> f64 {
    let inv = 1.0 / n;
    let f0 = n.powf(-s);
    f0 * (n / (s - 1.0) - 0.5 + s * inv / 12.0 - s * (s + 1.0) * (s + 2.0) * inv * inv * inv / 720.0)
}

#[derive(Debug, Clone, Copy)]
pub struct TailFit {
    /// fitted decay exponent s
    pub exponent: f64,
    /// signed estimate of Σ_{n>N} t_n
    pub tail: f64,
    /// bound on the model error of `tail`
    pub residual: f64,
}

/// Fit the three-parameter decay model through (n₁,t₁), (n₂,t₂), (n₃,t₃)
/// with n₁ < n₂ < n₃ and same-sign, shrinking |t|; returns None when the
/// window does not look like a convergent power law.
pub fn fit_algebraic_tail(points: [(f64, f64); 3]) -> Option<TailFit> {
    let [(n1, t1), (n2, t2), (n3, t3)] = points;
    let sign = t3.signum();
    if t1 == 0.0 || t2 == 0.0 || t3 == 0.0 {
        // exact zero terms: series terminated on its own, nothing left
        return Some(TailFit {
            exponent: f64::INFINITY,
            tail: 0.0,
            residual: 0.0,
        });
    }
    if t1.signum() != sign || t2.signum() != sign {
        return None;
    }
    let (a1, a2, a3) = (t1.abs(), t2.abs(), t3.abs());
    if !(a1 > a2 && a2 > a3) {
        return None;
    }
    // solve for (log A, s, c) in  log t_i = log A - s log n_i + c / n_i
    let sol = solve3(
        [
            [1.0, -n1.ln(), 1.0 / n1],
            [1.0, -n2.ln(), 1.0 / n2],
            [1.0, -n3.ln(), 1.0 / n3],
        ],
        [a1.ln(), a2.ln(), a3.ln()],
    )?;
    let (ln_a, s, c) = (sol[0], sol[1], sol[2]);
    if !(s > 1.02) || !s.is_finite() {
        return None; // too close to (or past) the divergence boundary
    }
    let amp = ln_a.exp();
    let tail3 = amp * (zeta_tail(s, n3) + c * zeta_tail(s + 1.0, n3));
    // two-parameter comparison fit through the outer points gauges how much
    // the c/n correction mattered; the next correction is ~c/N of that again
    let s2 = (a1.ln() - a3.ln()) / (n3.ln() - n1.ln());
    let tail2 = if s2 > 1.02 {
        a3 * n3.powf(s2) * zeta_tail(s2, n3)
    } else {
        tail3 * 2.0
    };
    let correction_scale = (tail3 - tail2).abs();
    let residual = correction_scale * 16.0 * c.abs().max(1.0) / n3 + 4.0 * f64::EPSILON * tail3.abs();
    Some(TailFit {
        exponent: s,
        tail: sign * tail3,
        residual,
    })
}

fn solve3(mut m: [[f64; 3]; 3], mut r: [f64; 3]) -> Option<[f64; 3]> {
    for col in 0..3 {
        let mut piv = col;
        for row in col + 1..3 {
            if m[row][col].abs() > m[piv][col].abs() {
                piv = row;
            }
        }
        if m[piv][col].abs() < 1e-300 {
            return None;
        }
        m.swap(col, piv);
        r.swap(col, piv);
        for row in col + 1..3 {
            let f = m[row][col] / m[col][col];
            for k in col..3 {
                m[row][k] -= f * m[col][k];
            }
            r[row] -= f * r[col];
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let mut v = r[row];
        for k in row + 1..3 {
            v -= m[row][k] * x[k];
        }
        x[row] = v / m[row][row];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_pure_power_law() {
        let t = |n: f64| 3.0 * n.powf(-2.5);
        let fit = fit_algebraic_tail([(1000.0, t(1000.0)), (2000.0, t(2000.0)), (4000.0, t(4000.0))])
            .unwrap();
        assert!((fit.exponent - 2.5).abs() < 1e-9);
        // exact tail = 3 ζ(2.5, 4001)
        let exact: f64 = (4001..200_000).map(|n| t(n as f64)).sum::<f64>()
            + 3.0 * zeta_tail(2.5, 199_999.0);
        assert!((fit.tail - exact).abs() < 1e-12 * exact);
    }

    #[test]
    fn recovers_corrected_power_law() {
        let t = |n: f64| 3.0 * n.powf(-2.1) * (1.0 + 18.0 / n + 150.0 / (n * n));
        let fit = fit_algebraic_tail([
            (50_000.0, t(50_000.0)),
            (100_000.0, t(100_000.0)),
            (200_000.0, t(200_000.0)),
        ])
        .unwrap();
        let exact: f64 = (200_001..2_000_000).map(|n| t(n as f64)).sum::<f64>()
            + 3.0
                * (zeta_tail(2.1, 1_999_999.0)
                    + 18.0 * zeta_tail(3.1, 1_999_999.0)
                    + 150.0 * zeta_tail(4.1, 1_999_999.0));
        assert!(
            (fit.tail - exact).abs() <= fit.residual.max(1e-14 * exact),
            "tail {} vs exact {} residual {}",
            fit.tail,
            exact,
            fit.residual
        );
    }

    #[test]
    fn rejects_divergent_window() {
        let t = |n: f64| n.powf(-0.8);
        assert!(
            fit_algebraic_tail([(1000.0, t(1000.0)), (2000.0, t(2000.0)), (4000.0, t(4000.0))])
                .is_none()
        );
    }

    #[test]
    fn rejects_sign_flips() {
        assert!(fit_algebraic_tail([(100.0, 1.0), (200.0, -0.5), (400.0, 0.25)]).is_none());
    }
}

/// Kahan compensated accumulator.
///
/// Every series loop in this crate sums through one of these, so the
/// accumulated rounding error stays at a few ulps of the running total
/// regardless of term count.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    err: f64,
    abs: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, term: f64) {
        let y = term - self.err;
        let t = self.sum + y;
        self.err = (t - self.sum) - y;
        self.sum = t;
        self.abs += term.abs();
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }

    /// Sum of |terms|, used to bound the residual rounding error.
    #[inline]
    pub fn abs_sum(&self) -> f64 {
        self.abs
    }

    /// Rounding-error bound for the current total: a few ulps of Σ|t|.
    #[inline]
    pub fn rounding_bound(&self) -> f64 {
        4.0 * f64::EPSILON * self.abs
    }
}

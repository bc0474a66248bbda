/// How an iterative evaluation ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Stopping rule met; truncation bounded below tolerance.
    Converged,
    /// Finite series summed exactly over its support.
    Terminated,
    /// Slowly-decaying tail replaced by an integral-comparison estimate that
    /// is folded into the error bound.
    TailBounded,
    /// Budget exhausted; the value must not feed downstream identity checks.
    FailedToConverge,
}

/// A computed value with an error estimate and diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct EvalResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub terms_used: usize,
    pub status: Status,
}

impl EvalResult {
    pub fn exact(value: f64) -> Self {
        EvalResult {
            value,
            abs_error_estimate: 0.0,
            terms_used: 0,
            status: Status::Terminated,
        }
    }

    pub fn is_usable(&self) -> bool {
        self.status != Status::FailedToConverge
    }
}

use thiserror::Error;

/// Errors shared by every evaluator in the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Argument outside the validity domain of a formula.
    #[error("domain error: {0}")]
    Domain(String),

    /// A gamma-family function was evaluated at (or within the guard band of)
    /// a nonpositive-integer pole.
    #[error("pole error: {0}")]
    Pole(String),

    /// A series or quadrature refinement hit its budget before reaching the
    /// requested tolerance.
    #[error("convergence error: {0}")]
    Convergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn pole(msg: impl Into<String>) -> Self {
        Error::Pole(msg.into())
    }

    pub fn convergence(msg: impl Into<String>) -> Self {
        Error::Convergence(msg.into())
    }
}

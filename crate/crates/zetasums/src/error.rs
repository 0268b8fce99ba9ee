use thiserror::Error;

/// Errors shared by every evaluator in the crate.
///
/// Non-convergence of a series is not an error: it is reported through the
/// `converged` flag of [`crate::SeriesValue`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    /// The argument sits on a pole of the requested function.
    #[error("pole: {0}")]
    Pole(String),

    /// The argument lies outside the validity domain of the formula.
    #[error("domain: {0}")]
    Domain(String),

    /// Parameters hit a removable degeneracy; the message names the
    /// evaluator to use instead.
    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    /// A table-backed quantity was requested beyond the table size.
    #[error("table overflow: {0}")]
    TableOverflow(String),
}

pub type Result<T> = std::result::Result<T, EvalError>;

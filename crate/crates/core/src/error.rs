//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An input lies outside the mathematical domain of an operation. The
    /// message names the offending field or argument.
    #[error("domain error: {0}")]
    Domain(String),

    /// An input is representable but too large for the evaluation scheme.
    #[error("range error: {0}")]
    Range(String),

    /// A truncated sum or series failed its tail-convergence check. The
    /// partial value accumulated so far is carried for diagnostics.
    #[error("accuracy error: {message} (partial value {partial:e})")]
    Accuracy { message: String, partial: f64 },

    /// Doubling the quadrature order changed the result by more than the
    /// convergence budget; both estimates are carried.
    #[error("quadrature did not converge: {coarse:e} (order n) vs {refined:e} (order 2n)")]
    QuadratureNotConverged { coarse: f64, refined: f64 },

    /// A least-squares fit could not be performed (degenerate design matrix
    /// or invalid samples).
    #[error("fit error: {0}")]
    Fit(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }
}

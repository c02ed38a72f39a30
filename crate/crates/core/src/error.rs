use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the numerical routines and the file readers.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A product or series was requested where it does not converge.
    #[error("divergent domain: {0}")]
    Divergence(String),

    /// Not enough samples for a statistic.
    #[error("insufficient data: need at least {needed}, got {got}")]
    InsufficientData { needed: usize, got: usize },

    /// The requested physical regime does not support the operation.
    #[error("regime error: {0}")]
    Regime(String),

    /// An adaptive routine stopped before reaching its tolerance.
    #[error("accuracy error: achieved estimate {estimate} with error {error_estimate:e} above tolerance {tolerance:e}")]
    Accuracy {
        estimate: f64,
        error_estimate: f64,
        tolerance: f64,
    },

    /// The integrator step is too coarse to resolve the fast mode.
    #[error("stability error: dt = {dt} exceeds limit {limit}")]
    Stability { dt: f64, limit: f64 },

    /// A data file does not follow its declared format.
    #[error("{path}:{line}: {message}")]
    Format {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Attach the offending path to an I/O error.
pub(crate) fn io_at(path: &std::path::Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

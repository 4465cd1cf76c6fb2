use thiserror::Error;

/// Errors produced by bound construction, evaluation and verification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside an operation's domain of validity.
    #[error("domain error: {0}")]
    Domain(String),

    /// An accuracy target could not be met within the iteration cap.
    #[error("accuracy error: {0}")]
    Accuracy(String),

    /// A coefficient-only certificate was used where a prefactor is required.
    #[error("certificate is coefficient-only: it fixes an exponent but carries no prefactor")]
    CoefficientOnly,

    /// A bisection bracket does not straddle a sign change.
    #[error("no sign change on [{lo:e}, {hi:e}]")]
    NoSignChange { lo: f64, hi: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn accuracy(msg: impl Into<String>) -> Self {
        Error::Accuracy(msg.into())
    }
}

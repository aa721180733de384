use thiserror::Error;

/// Failures raised by the exact and numerical routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arguments outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Two routes that must agree did not, or an identity produced a
    /// non-integer where an integer is required.
    #[error("verification failure: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn verification<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Verification(msg.into()))
}

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A parameter lies outside the range where the object is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quantity that must be positive by construction was not.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    /// The zero oracle could not certify a computed zero.
    #[error("certification failed: {0}")]
    Certification(String),

    /// A polynomial identity had a nonzero residual.
    #[error("identity violated: {0}")]
    IdentityViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

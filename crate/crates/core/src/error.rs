use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown identifier `{name}` at position {pos}")]
    UnknownIdentifier { name: String, pos: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ring mismatch: {0}")]
    SpecMismatch(String),

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("cap too small: {0}")]
    CapTooSmall(String),

    #[error("no superficial element found after {trials} trials")]
    SearchExhausted { trials: usize },

    #[error("consistency check failed: {0}")]
    Assertion(String),

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn cap(msg: impl Into<String>) -> Self {
        Error::CapTooSmall(msg.into())
    }

    pub(crate) fn assertion(msg: impl Into<String>) -> Self {
        Error::Assertion(msg.into())
    }

    /// Errors that a larger truncation might cure.
    pub fn is_cap_related(&self) -> bool {
        matches!(self, Error::CapTooSmall(_) | Error::Assertion(_))
    }
}

use thiserror::Error;

/// Errors raised by the algebra engine and the text front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("defining ideal contains a unit; the quotient is the zero ring")]
    TrivialRing,

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("resource limit exceeded: {what} reached {value} (limit {limit})")]
    ResourceLimit {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}

use thiserror::Error;

/// Errors produced by graph construction, parsing, and analysis.
#[derive(Debug, Error)]
pub enum Error {
    /// A line of an input file could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An argument or input violated a documented precondition.
    #[error("invalid input: {0}")]
    Validation(String),

    /// A hard resource cap was exceeded (simplex counts, retry caps, oracle size).
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// An iterative numerical routine failed to converge.
    #[error("numerical failure: {0}")]
    Numeric(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}

use thiserror::Error;

/// Errors raised by the checkers, deciders and file loaders.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A documented precondition of an operation was violated by the caller.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The game lies outside the class an algorithm supports
    /// (asymmetric, not friend-oriented, ...).
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// A partition, X3C instance or file is malformed.
    #[error("invalid structure: {0}")]
    Structural(String),

    /// An exhaustive search would exceed its configured budget.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Deviation dynamics did not settle within the configured step budget.
    #[error("step budget of {0} exhausted before the dynamics converged")]
    StepBudget(u64),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

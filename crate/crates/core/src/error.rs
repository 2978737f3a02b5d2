use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// `Falsification` is reserved for checks whose failure would contradict a
/// proven statement about these polytopes; the CLI maps it to exit code 1.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("capacity limit exceeded: {what} (limit {limit})")]
    Capacity { what: String, limit: u64 },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parity error: {0}")]
    Parity(String),

    #[error("regularity violated at vertex {vertex}: degree {degree}, expected {expected}")]
    Regularity {
        vertex: usize,
        degree: u64,
        expected: u64,
    },

    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("falsification: {0}")]
    Falsification(String),

    #[error("resource limit reached: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn falsified(msg: impl Into<String>) -> Self {
        Error::Falsification(msg.into())
    }
}

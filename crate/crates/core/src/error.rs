use thiserror::Error;

/// Errors produced by graph construction, enumeration and the path pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("graph has {active} active vertices, at least 3 are required")]
    Underflow { active: usize },

    #[error("pendant tree attached at cycle vertex {attachment} is not reducible to it")]
    NotReducible { attachment: usize },

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

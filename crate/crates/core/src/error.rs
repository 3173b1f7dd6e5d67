use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("invalid generator order: {0}")]
    InvalidOrder(String),

    #[error("invalid cell: {0}")]
    InvalidCell(String),

    #[error("unsupported: {0}")]
    Capability(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("data integrity failure: {0}")]
    DataIntegrity(String),

    #[error("parse error: {0}")]
    Parse(String),
}

use thiserror::Error;

use crate::exactla::LinalgError;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{what} failed validation: {failed}")]
    Validation { what: String, failed: String },
    #[error("internal consistency violated: {0}")]
    InternalConsistency(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cocycle condition violated: {0}")]
    CocycleCondition(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("no translation map attached to this entwining structure")]
    MissingTranslationMap,
    #[error("{0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

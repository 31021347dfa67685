use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifierError {
    #[error("invalid construction for {name}: {reason}")]
    ConstructionInvalid { name: String, reason: String },
    #[error("line {line}, field `{field}`: {message}")]
    Parse {
        line: usize,
        field: String,
        message: String,
    },
    #[error("line {line}: {name} declares order {declared} but generates order {actual}")]
    OrderMismatch {
        line: usize,
        name: String,
        declared: u64,
        actual: u64,
    },
    #[error("duplicate group name {0:?}")]
    DuplicateName(String),
    #[error("unrecognised group spec {0:?}")]
    UnknownSpec(String),
    #[error(transparent)]
    Core(#[from] hallcheck_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, VerifierError>;

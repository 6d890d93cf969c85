use std::path::PathBuf;

use verlinde_core::Error;

pub type KitResult<T> = Result<T, KitError>;

#[derive(Debug, thiserror::Error)]
pub enum KitError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed JSON in {path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("malformed config {path}: {source}")]
    Config { path: PathBuf, source: toml::de::Error },
    #[error("{0}")]
    Usage(String),
}

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const OTHER: i32 = 1;
    pub const VALIDATION: i32 = 2;
    pub const CAP: i32 = 3;
    pub const INPUT: i32 = 4;
}

impl KitError {
    pub fn exit_code(&self) -> i32 {
        match self {
            KitError::Core(e) => match e {
                Error::GroupTooLarge { .. } | Error::TorusTooLarge { .. } | Error::CapExceeded { .. } => exit::CAP,
                Error::InvalidType { .. }
                | Error::DimensionMismatch { .. }
                | Error::Schema(_)
                | Error::GradeMismatch(_)
                | Error::InvalidConfig(_)
                | Error::NotGraded
                | Error::NotAde(_)
                | Error::NotDominant
                | Error::NotInAlcove => exit::INPUT,
                Error::NonIntegerEntry { .. } | Error::Unreachable { .. } | Error::RoundingFailure { .. } => {
                    exit::VALIDATION
                }
                _ => exit::OTHER,
            },
            KitError::Io { .. } | KitError::Json { .. } | KitError::Config { .. } | KitError::Usage(_) => exit::INPUT,
        }
    }
}

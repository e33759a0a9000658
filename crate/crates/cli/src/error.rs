use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid parameter: {0}")]
    Param(String),

    #[error(transparent)]
    Compute(#[from] catwva::Error),

    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("inline check failed: {0}")]
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Param(_) | CliError::Compute(_) => 2,
            CliError::Io { .. } => 3,
            CliError::Check(_) => 4,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

use std::path::PathBuf;

use bqo_core::Error as CoreError;
use thiserror::Error;

pub const EXIT_IO: i32 = 1;
pub const EXIT_SCHEMA: i32 = 3;
pub const EXIT_INSUFFICIENT_PREFIX: i32 = 4;
pub const EXIT_WINDOW_EXHAUSTION: i32 = 5;
pub const EXIT_COUNTEREXAMPLE: i32 = 6;
pub const EXIT_BOUNDARY: i32 = 7;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{path}: {message}")]
    Schema { path: PathBuf, message: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("verification failed: {0}")]
    Counterexample(String),

    #[error("indeterminate block verdict under strict boundary policy: {0}")]
    Boundary(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => EXIT_IO,
            CliError::Schema { .. } | CliError::Config(_) => EXIT_SCHEMA,
            CliError::Core(e) => match e {
                CoreError::InsufficientPrefix { .. } => EXIT_INSUFFICIENT_PREFIX,
                CoreError::WindowExhaustion { .. } => EXIT_WINDOW_EXHAUSTION,
                _ => EXIT_SCHEMA,
            },
            CliError::Counterexample(_) => EXIT_COUNTEREXAMPLE,
            CliError::Boundary(_) => EXIT_BOUNDARY,
        }
    }
}

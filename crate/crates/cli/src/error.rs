use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("config error: {0}")]
    Config(String),

    #[error("evaluation failed at {point}: {source}")]
    Evaluation {
        point: String,
        #[source]
        source: qtsteer_core::Error,
    },

    #[error("non-finite {quantity} at {point}")]
    NonFinite { quantity: String, point: String },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl SweepError {
    /// Process exit code: 1 config, 2 verification, 3 I/O.
    pub fn exit_code(&self) -> u8 {
        match self {
            SweepError::Config(_) => 1,
            SweepError::Evaluation { .. } | SweepError::NonFinite { .. } | SweepError::Verification(_) => 2,
            SweepError::Io { .. } => 3,
        }
    }
}

impl From<qtsteer_core::Error> for SweepError {
    fn from(e: qtsteer_core::Error) -> Self {
        SweepError::Config(e.to_string())
    }
}

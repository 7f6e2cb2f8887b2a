// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] boolobs::Error),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("serialization: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn io(path: impl AsRef<std::path::Path>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.as_ref().display().to_string(),
            source,
        }
    }

    /// 1 = usage, 2 = cap exceeded, 3 = internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Core(e) if e.is_cap_exceeded() => 2,
            CliError::Core(
                boolobs::Error::InvalidArgument(_)
                | boolobs::Error::UnknownFamily(_)
                | boolobs::Error::InvalidHex(_)
                | boolobs::Error::PointOutOfRange { .. }
                | boolobs::Error::ArityMismatch { .. },
            ) => 1,
            _ => 3,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

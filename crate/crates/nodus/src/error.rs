use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

/// Failures of the front end, split by exit code: bad input is 2, a model or
/// numerical failure is 1.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {msg}")]
    Parse { path: PathBuf, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Model(#[from] nodus_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Model(_) => 1,
            _ => 2,
        }
    }

    pub(crate) fn io(path: &Path, source: io::Error) -> Self {
        CliError::Io { path: path.to_path_buf(), source }
    }

    pub(crate) fn parse(path: &Path, msg: impl ToString) -> Self {
        CliError::Parse { path: path.to_path_buf(), msg: msg.to_string() }
    }

    pub(crate) fn model(e: impl Into<nodus_core::Error>) -> Self {
        CliError::Model(e.into())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

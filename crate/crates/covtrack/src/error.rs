use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    /// Malformed line in a text input.
    #[error("{source_name}:{line}: {msg}")]
    Parse { source_name: String, line: u64, msg: String },
    /// JSON that does not match the expected schema; `path` locates the value.
    #[error("{source_name}: at `{path}`: {msg}")]
    Schema { source_name: String, path: String, msg: String },
    #[error("precondition failed: {0}")]
    Precondition(#[from] covtrack_core::Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    pub(crate) fn parse(source_name: &str, line: u64, msg: impl Into<String>) -> Self {
        CliError::Parse { source_name: source_name.to_owned(), line, msg: msg.into() }
    }

    pub(crate) fn schema(source_name: &str, path: impl Into<String>, msg: impl Into<String>) -> Self {
        CliError::Schema { source_name: source_name.to_owned(), path: path.into(), msg: msg.into() }
    }

    /// Process exit code: 2 usage, 3 input format, 4 precondition, 1 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse { .. } | CliError::Schema { .. } => 3,
            CliError::Precondition(_) => 4,
            CliError::Io { .. } => 1,
        }
    }
}

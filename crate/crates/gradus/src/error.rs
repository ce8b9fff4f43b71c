//! Crate-wide error type.
//!
//! Variants are grouped by how the CLI maps them to exit codes: config
//! errors (2), input errors (3), and stage failures (4).

use std::path::PathBuf;

/// Alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid configuration (bad weights, unreachable vocab size, ...).
    #[error("config error: {0}")]
    Config(String),

    /// Input bytes are not valid UTF-8. Offset is from the start of the stream.
    #[error("invalid UTF-8 at byte offset {offset}")]
    Decode { offset: u64 },

    /// A JSONL record could not be used. Line numbers are 1-based.
    #[error("bad record at line {line}: {message}")]
    Record { line: u64, message: String },

    /// Token id outside the model's vocabulary.
    #[error("token id {id} out of range at position {position}")]
    IdOutOfRange { position: usize, id: u32 },

    /// A pipeline stage failed; wraps the underlying error with the stage name.
    #[error("stage `{stage}` failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    /// Another run holds the output directory.
    #[error("output directory {0} is locked by another run")]
    Locked(PathBuf),

    /// A report or stage file required by a subcommand is missing.
    #[error("missing file: {0}")]
    MissingFile(PathBuf),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Wrap an error with the name of the pipeline stage that produced it.
    pub fn in_stage(self, stage: &'static str) -> Self {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }

    /// Exit code for the CLI: 2 config, 3 input, 4 stage failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::Decode { .. }
            | Error::Record { .. }
            | Error::MissingFile(_)
            | Error::Io { .. }
            | Error::Json(_) => 3,
            Error::Stage { .. } | Error::Locked(_) | Error::IdOutOfRange { .. } => 4,
        }
    }
}

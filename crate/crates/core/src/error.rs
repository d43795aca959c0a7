use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by loaders, generators and the evaluation harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: missing field `{field}`")]
    MissingField { line: usize, field: String },

    #[error("duplicate id `{id}` on lines {first} and {second}")]
    DuplicateId { id: String, first: usize, second: usize },

    #[error("line {line}: invalid example `{id}`: {}", violations.join("; "))]
    Invalid {
        line: usize,
        id: String,
        violations: Vec<String>,
    },

    #[error("field `{field}` of `{id}` contains a tab or newline and cannot be written as TSV")]
    TsvUnsafe { id: String, field: &'static str },

    #[error("subsampling requires a single phenomenon, found `{0}` and `{1}`")]
    MixedPhenomena(String, String),

    #[error("unknown phenomenon `{0}`")]
    UnknownPhenomenon(String),

    #[error("missing category `{0}`")]
    MissingCategory(String),

    #[error("no scores for example ids: {}", .0.join(", "))]
    MissingScores(Vec<String>),

    #[error("empty input: {0}")]
    Empty(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("partition size must be at least 1, got {0}")]
    InvalidSize(i64),

    #[error("cannot parse partition {text:?}: {reason} (at token {token:?})")]
    Parse {
        text: String,
        token: String,
        reason: &'static str,
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition {partition} is not a vertex of the graph for n = {n}")]
    NotInGraph { partition: String, n: usize },

    #[error("inputs disagree on n: expected {expected}, found {found}")]
    MismatchedSize { expected: usize, found: usize },

    #[error("unknown atlas mode {0:?} (expected \"thickness\" or \"zones\")")]
    UnknownMode(String),

    #[error("vertex index {index} is out of range for n = {n} ({count} vertices)")]
    VertexOutOfRange { index: usize, n: usize, count: usize },

    #[error("vertex set must not be empty")]
    EmptySet,

    #[error("profiles must cover a contiguous range starting at n = 1: {0}")]
    IncompleteRange(String),

    #[error("malformed artifact {path}: {reason}")]
    Artifact { path: String, reason: String },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex id `{0}`")]
    UnknownVertex(String),
    #[error("vertex sets overlap on `{0}`")]
    OverlappingSides(String),
    #[error("self-loop on `{0}` is not allowed")]
    SelfLoop(String),
    #[error("duplicate vertex id `{0}` in expression")]
    DuplicateVertex(String),
    #[error("invalid expression node handle {0}")]
    InvalidHandle(usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("label bound violated: {0}")]
    BoundViolation(String),
    #[error("insufficient rows: {0}")]
    InsufficientRows(String),
    #[error("target unreachable: {0}")]
    TargetUnreachable(String),
    #[error("empty graph has no defining expression")]
    EmptyGraph,
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

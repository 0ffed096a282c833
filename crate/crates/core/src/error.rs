//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not dominant: ({0},{1},{2})")]
    NotDominant(i64, i64, i64),
    #[error("component absent: {0}")]
    ComponentAbsent(String),
    #[error("empty sigma-subset: {0}")]
    EmptySigmaSubset(String),
    #[error("parity mismatch: {0}")]
    ParityMismatch(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("n*d must be even (n = {n}, d = {d})")]
    OddPointCount { n: usize, d: usize },

    #[error("no simple graph after {attempts} pairing-model attempts (d too large for rejection sampling)")]
    AttemptsExhausted { attempts: usize },

    #[error("coloring covers {got} edges but the graph has {expected}")]
    NonTotalColoring { expected: usize, got: usize },

    #[error("edge {edge} has color {color}, outside 1..={r}")]
    ColorOutOfRange { edge: usize, color: u32, r: u32 },

    #[error("vertex {vertex} has odd degree {degree}")]
    OddDegree { vertex: usize, degree: usize },

    #[error("search budget of {budget} steps exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("graph has {n} vertices; exact search is limited to {max}")]
    TooLarge { n: usize, max: usize },

    /// A structural guarantee of one of the constructions did not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}

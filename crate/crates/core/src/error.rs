use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected} qubits, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("generators {a} and {b} do not commute")]
    NonCommuting { a: usize, b: usize },

    #[error("code has no logical qubits (k = 0); distance is undefined")]
    NoLogicalQubits,

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid embedding: points {a} and {b} are {distance} apart (minimum is 1)")]
    InvalidEmbedding { a: usize, b: usize, distance: f64 },

    #[error("too few points for a separator: {0} (need at least 10)")]
    TooFewPoints(usize),

    #[error("{message}; minimum feasible ell is {min_ell}")]
    Sizing { message: String, min_ell: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

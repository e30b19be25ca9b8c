use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("not a subalgebra: bracket of basis vectors {0} and {1} leaves the span")]
    NotClosed(usize, usize),
    #[error("representation homomorphism fails on basis pair ({0}, {1})")]
    NotHomomorphism(usize, usize),
    #[error("partition {0:?} violates the type-{1} parity constraint")]
    BadPartition(Vec<u32>, char),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

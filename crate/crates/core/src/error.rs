use thiserror::Error;

/// Errors surfaced by the algebraic layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: row {row} has {got} entries, expected {expected}")]
    NonSquareMatrix {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("matrix has {n} columns, beyond the {limit}-column cofactor cache")]
    MatrixTooLarge { n: usize, limit: usize },
    #[error("invalid range: {0}")]
    Range(String),
    #[error("generator outside the expected alphabet: {0}")]
    Domain(String),
    #[error("identity violation: {0}")]
    IdentityViolation(String),
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid partition data: {0}")]
    InvalidPartition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

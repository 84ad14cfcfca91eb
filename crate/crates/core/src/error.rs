use thiserror::Error;

use crate::algebra::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("subspaces live in different ambient spaces ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },

    #[error("subspace is not closed under the bracket")]
    NotClosed,

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("bracket [e{i},e{j}] defined more than once")]
    DuplicateBracket { i: usize, j: usize },

    #[error("invalid basis labels: {0}")]
    InvalidLabels(String),

    #[error("not a Lie algebra: {0}")]
    InvalidAlgebra(Violation),

    #[error("unknown algebra '{name}'; available: {}", available.join(", "))]
    UnknownAlgebra {
        name: String,
        available: Vec<String>,
    },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

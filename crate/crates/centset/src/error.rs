//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group order {required} exceeds the order cap {cap}")]
    OrderCapExceeded { required: usize, cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("subgroup is not normal in the parent group")]
    NotNormal,
    #[error("invalid semidirect action: {0}")]
    InvalidAction(String),
    #[error("search budget exhausted")]
    SearchBudgetExceeded,
    #[error("subgroup lattice budget exhausted")]
    LatticeBudgetExceeded,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unsupported extension degree {0} (supported: 1..=4, p^k <= 81)")]
    UnsupportedDegree(u32),
    #[error("no Frobenius complement found")]
    ComplementNotFound,
    #[error("invalid group file: {0}")]
    InvalidGroupFile(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

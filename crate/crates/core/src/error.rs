use thiserror::Error;

/// Counters carried out of an aborted Gröbner computation.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct BudgetStats {
    pub pairs_processed: usize,
    pub pairs_pending: usize,
    pub basis_len: usize,
    pub max_terms: usize,
    pub elapsed_ms: u128,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("argument error: {0}")]
    Argument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("budget exceeded ({what}) after {} pairs, basis size {}", .stats.pairs_processed, .stats.basis_len)]
    Budget { what: String, stats: BudgetStats },
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

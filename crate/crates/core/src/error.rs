use thiserror::Error;

/// Errors raised by the computational modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank: n = {n} (need n >= {min})")]
    InvalidRank { n: i64, min: i64 },

    #[error("weight {weight:?} is not dominant: {detail}")]
    NotDominant { weight: Vec<i64>, detail: String },

    #[error("rank mismatch: classes over Gr(2,{left}) and Gr(2,{right})")]
    RankMismatch { left: usize, right: usize },

    #[error("parity error: {0}")]
    Parity(String),

    /// A model parameter violates a named bound, e.g. `k <= (n choose 2)`.
    #[error("unsupported parameters: {bound} violated ({detail})")]
    InvalidParams { bound: String, detail: String },

    #[error("degenerate family: coefficient matrix has rank {rank} < k = {k}")]
    DegenerateFamily { rank: usize, k: usize },

    #[error("dimension error: {0}")]
    Dimension(String),

    /// An internal consistency check failed; indicates a bug upstream.
    #[error("integrity violation: {0}")]
    Integrity(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

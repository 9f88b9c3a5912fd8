use thiserror::Error;

/// Errors produced by the classification engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported field order {0} (q must be prime, 2 <= q <= 7)")]
    BadField(u8),

    #[error("vector length {0} exceeds the supported maximum of {max}", max = crate::gf::MAX_LEN)]
    LengthLimit(usize),

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("field mismatch: F_{0} vs F_{1}")]
    FieldMismatch(u8, u8),

    #[error("matrix is rank deficient: rank {rank} < k = {k}")]
    RankDeficient { rank: usize, k: usize },

    #[error("coordinate {0} out of range 1..={1}")]
    BadCoordinate(usize, usize),

    #[error("operation requires minimum weight >= 2, code has d = {0}")]
    MinWeightTooSmall(u32),

    #[error("resource budget exceeded: {what} needs {needed}, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u128,
    },

    #[error("proof invariant violated: {0}")]
    InvariantViolation(String),

    #[error("bounds facts contradict: {0}")]
    Contradiction(String),

    #[error("bad input: {0}")]
    BadInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

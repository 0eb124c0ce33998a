use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("vertex {vertex} is outside 1..={n}")]
    OutOfRange { vertex: usize, n: usize },

    #[error("triple vertices must be distinct, got ({0}, {1}, {2})")]
    NonDistinct(usize, usize, usize),

    #[error("Tr(A^{order}) overflows 64-bit closed-walk counts for n = {n}")]
    OrderTooLarge { order: u32, n: usize },

    #[error("matrix entry ({row}, {col}) = {value} is not a non-negative integer")]
    NonIntegerMatrix { row: usize, col: usize, value: f64 },

    #[error(
        "Jacobi sweeps did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("n = {n} exceeds the enumeration cap of {cap}; use the closed-form counts instead")]
    SizeLimit { n: usize, cap: usize },

    #[error("no successes at n = {n} after {trials} trials; raise trials or shrink n")]
    ZeroHits { n: usize, trials: u64 },

    #[error("malformed edge list at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}

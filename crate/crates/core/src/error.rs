use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("non-total delta: missing transition ({state}, {symbol})")]
    NonTotal { state: usize, symbol: String },
    #[error("duplicate transition ({state}, {symbol})")]
    DuplicateTransition { state: usize, symbol: String },
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("unknown state {state} (machine has {count} states)")]
    UnknownState { state: usize, count: usize },
    #[error("symbol \"^\" is reserved for the endmarker")]
    ReservedSymbol,
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("alphabet mismatch: {0:?} vs {1:?}")]
    AlphabetMismatch(Vec<String>, Vec<String>),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("state cap exceeded: {required} states requested, cap is {cap}")]
    StateCap { required: u128, cap: usize },
    #[error("iteration cap {0} reached")]
    IterationCap(usize),
    #[error("search-space guard exceeded: {candidates} candidates > {limit}")]
    GuardExceeded { candidates: u128, limit: u128 },
    #[error("branch count {0} exceeds cap")]
    BranchCap(usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("completeness violated for symbol {symbol:?}: residual {residual:e}")]
    Completeness { symbol: String, residual: f64 },
    #[error("distribution is not stationary: residual {0:e}")]
    NotStationary(f64),
    #[error("not zero-error: {0}")]
    NotZeroError(String),
    #[error("numerical tolerance: {0}")]
    Numerical(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid base {0}: must be at least 2")]
    InvalidBase(u64),

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("unknown sequence `{0}`")]
    UnknownSequence(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("index f({n}) = {value} is negative")]
    NegativeIndex { n: u64, value: String },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("symbol {symbol} at position {position} does not embed in F_{p}")]
    SymbolOutOfField { symbol: u8, position: usize, p: u32 },

    #[error("non-binary symbol {symbol} at position {position}")]
    NonBinary { symbol: u8, position: usize },

    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("polynomial is reducible")]
    Reducible,

    #[error("enumeration of {size} elements exceeds the cap of {cap}")]
    CapExceeded { size: u128, cap: u128 },

    #[error("field context mismatch")]
    ContextMismatch,

    #[error("the zero polynomial has no degree bounds")]
    ZeroPolynomial,

    #[error("all-zero prefix")]
    AllZeroPrefix,

    #[error("N = {n} is below the threshold {threshold}")]
    BelowThreshold { n: usize, threshold: usize },

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

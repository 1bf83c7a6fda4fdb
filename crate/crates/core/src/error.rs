use thiserror::Error;

/// Errors raised by the library. Verdict-style failures (purity, freeness,
/// dimension mismatches) carry the failing identity as text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity {got} is below the minimum {min}")]
    Arity { got: usize, min: usize },
    #[error("arity {got} is outside the supported range {min}..={max}")]
    ArityRange { got: usize, min: usize, max: usize },
    #[error("slot {slot} out of range 1..={arity}")]
    SlotOutOfRange { slot: usize, arity: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("unknown stratum {0}")]
    UnknownStratum(String),
    #[error("base mismatch: {0} vs {1}")]
    BaseMismatch(String, String),
    #[error("map shape mismatch: {0}")]
    Shape(String),
    #[error("exponent {value} at ({row}, {col}) violates positivity")]
    Positivity { row: usize, col: usize, value: u32 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field size {0} is too small (need q >= 5)")]
    FieldTooSmall(u64),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("purity violation: {0}")]
    PurityViolation(String),
    #[error("freeness violation: {0}")]
    FreenessViolation(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("malformed term: {0}")]
    MalformedTerm(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

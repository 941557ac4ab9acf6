use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("{0} is not a unit modulo {1}")]
    NotAUnit(u32, u32),
    #[error("condition {0} does not hold for {1}")]
    ConditionFailed(&'static str, String),
    #[error("generator index {0} out of range (presentation has {1} generators)")]
    GeneratorOutOfRange(usize, usize),
    #[error("coset {0} out of range (table has {1} cosets)")]
    CosetOutOfRange(u32, u32),
    #[error("coset table is incomplete")]
    IncompleteTable,
    #[error("retraction condition violated: {0}")]
    NotARetraction(String),
    #[error("malformed presentation for rewriting: {0}")]
    BadShape(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("coset enumeration overflowed at {0} cosets")]
    Overflow(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dyadic level {0} outside supported range 3..=20")]
    LevelOutOfRange(u32),
    #[error("sample count {got} does not match grid size {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("integrability exponent p = {0} must satisfy p >= 1")]
    BadExponent(f64),
    #[error("spectrum reaches frequency {k_max} but the grid only resolves |k| < {limit}")]
    AliasError { k_max: i64, limit: i64 },
    #[error("step {t} admits no grid shift (smallest shift is {min_step})")]
    StepTooSmall { t: f64, min_step: f64 },
    #[error("difference order k = {k} must exceed smoothness s = {s}")]
    OrderTooLow { k: u32, s: f64 },
    #[error("spectrum support {k_max} exceeds the partition ceiling 2^{j_max}")]
    SupportOverflow { k_max: i64, j_max: u32 },
    #[error("parameters make the space trivial: {0}")]
    TrivialSpace(String),
    #[error("order parameter out of range: {0}")]
    BadOrder(String),
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("sequence vanishes at n = {0} inside the tested range")]
    ZeroValue(usize),
    #[error("homogeneous multiplier undefined at k = 0: spectrum must have zero mean")]
    ZeroModeError,
    #[error("space specification invalid: {0}")]
    BadSpec(String),
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error("claim parameters outside the declared domain: {0}")]
    DomainError(String),
    #[error("claim `{0}` is predicate-only; no in-scope witness family")]
    NoWitness(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error("parse: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

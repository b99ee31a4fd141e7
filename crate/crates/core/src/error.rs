use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("coefficient {index} requested beyond truncation order {precision}")]
    PrecisionExceeded { index: usize, precision: usize },
    #[error("series must have constant term {expected}")]
    ConstantTerm { expected: &'static str },
    #[error("parts sum to {sum} but {n} was expected")]
    PartsSum { n: usize, sum: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("unknown seed `{0}`")]
    UnknownSeed(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("not a down-up alternating permutation")]
    NotAlternating,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

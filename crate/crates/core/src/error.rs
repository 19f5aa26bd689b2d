use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{name} = {value} is out of range (expected {expected})")]
    Domain {
        name: &'static str,
        value: i64,
        expected: &'static str,
    },
    #[error("coordinate {index} is out of range for a string of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("string contains a run of {p} consecutive ones")]
    ForbiddenRun { p: usize },
    #[error("part {part} is outside [1, {p}]")]
    PartOutOfRange { part: usize, p: usize },
    #[error("invalid character {ch:?} at position {pos} in binary string")]
    InvalidBit { ch: char, pos: usize },
    #[error("dimension {n} exceeds the cap of {cap}")]
    DimensionCap { n: usize, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("denominator constant term must be 1")]
    NonUnitDenominator,
    #[error("unknown generating function `{0}`")]
    UnknownGf(String),
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: usize, expected: &'static str) -> Self {
        Error::Domain {
            name,
            value: value as i64,
            expected,
        }
    }
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Precondition violations. Every library operation that can reject its input
/// reports one of these; nothing panics on bad user input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{a} and {b} are not coprime (gcd is {gcd})")]
    NotCoprime { a: u64, b: u64, gcd: u64 },

    #[error("{name} = {value} must be odd")]
    NotOdd { name: &'static str, value: u64 },

    #[error("{value} is not an odd prime")]
    NotOddPrime { value: u64 },

    #[error("{name} = {value} is out of range: expected {expected}")]
    OutOfRange {
        name: &'static str,
        value: i128,
        expected: String,
    },

    #[error("{0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn out_of_range(
        name: &'static str,
        value: impl Into<i128>,
        expected: impl Into<String>,
    ) -> Self {
        Error::OutOfRange {
            name,
            value: value.into(),
            expected: expected.into(),
        }
    }
}

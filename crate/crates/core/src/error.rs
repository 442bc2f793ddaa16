use thiserror::Error;

use crate::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} = {value} is outside the allowed range [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("size mismatch: expected n = {expected}, got n = {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("class function does not depend only on cycle count (classes {first} and {second} differ)")]
    NotLengthDependent { first: Partition, second: Partition },

    #[error("not a character: multiplicity of chi_{partition} is {multiplicity}")]
    NotACharacter {
        partition: Partition,
        multiplicity: String,
    },

    #[error("parameter entry a_{index} = {value} is negative")]
    NegativeParameter { index: usize, value: i64 },

    #[error("expected coordinates in the {expected} basis, got {found}")]
    WrongBasis {
        expected: &'static str,
        found: &'static str,
    },

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(what: &'static str, value: i64, lo: i64, hi: i64) -> Result<()> {
    if value < lo || value > hi {
        Err(Error::OutOfRange { what, value, lo, hi })
    } else {
        Ok(())
    }
}

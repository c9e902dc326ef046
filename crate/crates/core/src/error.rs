use alloc::string::String;

use thiserror::Error;

/// Errors raised by the exact kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("partition {0} is not odd")]
    NotOdd(String),

    #[error("entries must be positive integers")]
    NonPositiveEntry,

    #[error("not a parking function: {0}")]
    NotParking(String),

    #[error("invalid sign vector: {0}")]
    InvalidSigns(String),

    #[error("malformed matching: {0}")]
    MalformedMatching(String),

    #[error("not an odd shifted parking function: {0}")]
    NotOddShifted(String),

    #[error("not a garage: {0}")]
    NotGarage(String),

    #[error("input is not in SymP (found even part in {0})")]
    NotSymP(String),

    #[error("singular linear system in the V-basis change")]
    Singular,

    #[error("coefficient at {0} is irrational")]
    Irrational(String),

    #[error("class function kind mismatch: expected {expected}")]
    KindMismatch { expected: &'static str },

    #[error("member list is not closed under the action: {0}")]
    NotClosed(String),

    #[error("Clifford algebras differ: {left} vs {right} generators")]
    GeneratorMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = core::result::Result<T, Error>;

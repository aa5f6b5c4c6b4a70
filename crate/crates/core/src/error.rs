use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("pattern must have at least one entry")]
    EmptyPattern,

    #[error("malformed pattern token {token:?} at position {position}")]
    MalformedPattern { position: usize, token: String },

    #[error("bound set must be strictly increasing positive integers (offending element at index {index})")]
    InvalidBoundSet { index: usize },

    #[error("entry {value} at index {index} violates bound {bound}")]
    EntryOutOfBounds { index: usize, value: u32, bound: u32 },

    #[error("sequence and bound set lengths differ ({entries} vs {bounds})")]
    LengthMismatch { entries: usize, bounds: usize },

    #[error("not a permutation of 1..={0}")]
    InvalidPermutation(usize),

    #[error("pattern hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("input contains pattern {0}; the map is undefined there")]
    ContainsPattern(String),

    #[error("greedy extraction found no admissible value at index {index}")]
    NoCandidate { index: usize },

    #[error("parent of label {label} is {parent}, but parents must be smaller labels")]
    InvalidParent { label: usize, parent: u32 },

    #[error("{0}")]
    Series(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("b-file line {line}: {message}")]
    BFile { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

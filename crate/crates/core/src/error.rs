use thiserror::Error;

/// Errors raised by the poset, restriction and expansion routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation has a directed cycle through element {0}")]
    Cycle(usize),
    #[error("label {label} is outside 1..={p}")]
    OutOfRange { label: usize, p: usize },
    #[error("elements {0} and {1} are already comparable")]
    Comparable(usize, usize),
    #[error("element {0} is not below element {1}")]
    NotComparable(usize, usize),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("restriction is not a flag for this poset")]
    NotAFlag,
    #[error("components of the ascending covers are not partially ordered")]
    CyclicComponents,
    #[error("restriction admits no partitions (maximal restriction has an entry below 1)")]
    Infeasible,
    #[error("value {value} exceeds the number of variables {nvars}")]
    ValueOutOfRange { value: u32, nvars: usize },
    #[error("composition of length {len} does not fit in {nvars} variables")]
    LengthError { len: usize, nvars: usize },
    #[error("partition {witness:?} appears {count} times across linear extensions")]
    DecompositionFailure { witness: Vec<u32>, count: usize },
    #[error("bump of shuffle {word:?} has {candidates} dominance-minimal placements")]
    BumpNotUnique { word: Vec<u32>, candidates: usize },
    #[error("invalid partition shape {0:?}")]
    InvalidShape(Vec<u32>),
    #[error("strong composition has a zero part: {0:?}")]
    InvalidComposition(Vec<u32>),
    #[error("invalid flag {0:?}")]
    InvalidFlag(Vec<i64>),
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

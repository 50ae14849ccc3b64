use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "invalid type {0:?}: expected <family><rank> such as A3 or E8 \
         (A1+, B2+, C2+, D4+, E6-E8, F4, G2)"
    )]
    InvalidType(String),
    #[error("rank {rank} is not valid for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("generator index {index} out of range 0..={max}")]
    InvalidGenerator { index: usize, max: usize },
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("the zero vector has no coroot")]
    ZeroRoot,
    #[error("{0:?} is not a positive root")]
    NotPositive(Vec<i64>),
    #[error("{0:?} is not a long root")]
    NotLong(Vec<i64>),
    #[error("{0:?} is not perpendicular to the highest root")]
    NotPerpendicularToTheta(Vec<i64>),
    #[error("word is not reduced: letter {position} repeats or negates root {root}")]
    NonReducedWord { position: usize, root: String },
    #[error("operation needs type {expected}, got {found}")]
    WrongFamily { expected: char, found: String },
    #[error("the zero ideal has no associated long root")]
    ZeroIdeal,
    #[error("not a partition: {0:?}")]
    InvalidDiagram(Vec<usize>),
    #[error("largest hook {hook} exceeds {max} for this lattice")]
    HookTooLarge { hook: usize, max: usize },
    #[error("code {code} out of range for {bits} bits")]
    CodeOutOfRange { code: u64, bits: usize },
    #[error("invalid ideal parameter: {0}")]
    InvalidParameter(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

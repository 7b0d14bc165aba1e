use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible vectors: lengths {left} and {right} differ")]
    LengthMismatch { left: usize, right: usize },

    #[error("a binary vector needs at least one component")]
    EmptyVector,

    #[error("invalid character {found:?} at position {position}; expected '0' or '1'")]
    InvalidBit { position: usize, found: char },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParam { name: &'static str, reason: String },

    #[error("run size {s} outside 1..={n}")]
    RunSizeOutOfRange { s: usize, n: usize },

    #[error("shift needs a run size of at least 2, got {s}")]
    ShiftTooSmall { s: usize },

    #[error("gap {g} outside 1..={max} for n = {n}")]
    GapOutOfRange { g: usize, n: usize, max: usize },

    #[error("degenerate identity mapping: no diversification possible")]
    DegenerateMapping,

    #[error("not a permutation of 1..={n}: index {index} appears more than once")]
    DuplicateIndex { index: usize, n: usize },

    #[error("not a permutation of 1..={n}: index {index} out of range")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("need at least 2 vectors, got {count}")]
    TooFewVectors { count: usize },

    #[error("mean gap is undefined: the collection has fewer than two distinct vectors")]
    UndefinedGap,

    #[error("strongly balanced level {level} would materialize {count} vectors (max level {max})")]
    LevelTooLarge {
        level: u32,
        count: String,
        max: u32,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParam {
            name,
            reason: reason.into(),
        }
    }
}

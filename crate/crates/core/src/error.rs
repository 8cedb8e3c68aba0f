use thiserror::Error;

use crate::word::Letter;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count must be at least 1")]
    ZeroStrands,

    #[error("letter {letter} at position {position} is out of range for n={n}, genus={genus}")]
    IndexOutOfRange {
        position: usize,
        letter: Letter,
        n: usize,
        genus: usize,
    },

    #[error("{name}={value} is outside the admissible range {min}..={max}")]
    ArgumentOutOfRange {
        name: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("singular generator at position {position} has a negative exponent")]
    NegativeTauExponent { position: usize },

    #[error("word contains a singular generator at position {position} and has no inverse")]
    NotInvertible { position: usize },

    #[error("rewrite step is not applicable: {0}")]
    NotApplicable(String),

    #[error("profiles belong to different surfaces ({0} vs {1})")]
    DimensionMismatch(String, String),

    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
}

use thiserror::Error;

use crate::word::Alphabet;

/// Errors raised by the algebra, signature and invariant routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: Alphabet, right: Alphabet },

    #[error("letter {letter} outside alphabet {alphabet}")]
    LetterOutOfRange { letter: u8, alphabet: Alphabet },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("truncation level mismatch: {left} vs {right}")]
    LevelMismatch { left: usize, right: usize },

    #[error("polynomial degree {degree} exceeds signature truncation level {level}")]
    DegreeExceedsTruncation { degree: usize, level: usize },

    #[error("word of length {len} is shorter than insertion position {position}")]
    WordTooShort { len: usize, position: usize },

    #[error("polynomial is not homogeneous of degree {expected}")]
    NotHomogeneous { expected: usize },

    #[error("empty word has no set partition")]
    EmptyWord,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

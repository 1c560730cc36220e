//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandCountMismatch { left: usize, right: usize },

    #[error("letter {letter} out of range for {strand_count} strands")]
    LetterOutOfRange { letter: i32, strand_count: usize },

    #[error("cannot parse braid token `{token}`")]
    Parse { token: String },

    #[error("free word budget of {budget} letters exceeded")]
    LetterBudget { budget: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LayoutError {
    #[error("parameters must satisfy a,b,c,d >= 3, got ({a},{b},{c},{d})")]
    InvalidParams { a: i64, b: i64, c: i64, d: i64 },

    #[error(transparent)]
    Braid(#[from] BraidError),

    #[error("arc {arc} is not valid for b={b}, d={d}")]
    InvalidArc { arc: String, b: i64, d: i64 },

    #[error("cannot parse arc `{text}`")]
    ParseArc { text: String },

    #[error("exceptional case {case}: the monodromy-group generator list does not apply")]
    ExceptionalCase { case: &'static str },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("move position {position} out of range for {len} factors")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("cancel at position {position}: factors are not mutually inverse")]
    CancelNotInverse { position: usize },

    #[error(transparent)]
    Braid(#[from] BraidError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("arc {arc} lifts to a single arc on the triple cover and carries no cycle class")]
    CaseIArc { arc: String },

    #[error("letter {arc}^{power} is not liftable to the triple cover")]
    NotLiftable { arc: String, power: i32 },

    #[error(transparent)]
    Layout(#[from] LayoutError),
}

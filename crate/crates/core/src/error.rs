use std::fmt;

use thiserror::Error;

/// Syntax error in polynomial, form or rational text, with its position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    /// Byte offset into the input.
    pub offset: usize,
    pub line: usize,
    pub column: usize,
}

impl ParseError {
    pub fn new(message: impl Into<String>, offset: usize) -> Self {
        ParseError {
            message: message.into(),
            offset,
            line: 1,
            column: offset + 1,
        }
    }

    /// Recomputes line/column from the byte offset within `src`.
    pub fn located(mut self, src: &str) -> Self {
        let upto = &src[..self.offset.min(src.len())];
        self.line = upto.matches('\n').count() + 1;
        let line_start = upto.rfind('\n').map(|i| i + 1).unwrap_or(0);
        self.column = upto[line_start..].chars().count() + 1;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at line {}, column {}", self.message, self.line, self.column)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("interior product of a 0-form")]
    InteriorOfFunction,
    #[error("group closure exceeds bound of {0} elements")]
    ClosureExceedsBound(usize),
    #[error("no positive-definite invariant form exists")]
    NoInvariantForm,
    #[error("matrix is not invertible")]
    Singular,
    #[error("unsupported group family or rank: {0}")]
    UnsupportedFamily(String),
    #[error("degree cap {0} exceeded before a fundamental system was found")]
    DegreeCapExceeded(u32),
    #[error("not a reflection group: {0}")]
    NotReflectionGroup(String),
    #[error("Jacobian factorization failed: {0}")]
    FactorizationFailed(String),
    #[error("polynomial is not anti-invariant under the group")]
    NotAntiInvariant,
    #[error("invariant has no representation in the generators")]
    NoRepresentation,
    #[error("form is not invariant under the group")]
    NotInvariant,
    #[error("form is not basic")]
    NotBasic,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

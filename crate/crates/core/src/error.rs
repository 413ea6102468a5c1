use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible radicands {left} and {right}")]
    RadicandMismatch { left: String, right: String },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix size parameter N must be at least {min}, got {got}")]
    SizeTooSmall { min: usize, got: usize },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: i64, max: usize },
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("vanishing denominator 2i+2alpha+1 at i = {index}")]
    VanishingDenominator { index: usize },
    #[error("zero weight at position {index}")]
    ZeroWeight { index: usize },
    #[error("zero off-diagonal entry at position {index}")]
    ZeroOffDiagonal { index: usize },
    #[error("polynomial degree {degree} exceeds N = {n}")]
    DegreeTooHigh { degree: usize, n: usize },
    #[error("evaluation at a pole of the eigenfunction")]
    Pole,
    #[error("trivial operator: {0}")]
    TrivialOperator(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// An identity that must hold exactly failed.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Consistency(_))
    }
}

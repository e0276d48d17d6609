use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order {order} exceeds 2^{depth}")]
    OutOfTable { depth: String, order: String },
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("operation is undefined on a terminal design")]
    TerminalDesign,
    #[error("malformed run lengths: {0}")]
    MalformedRuns(String),
    #[error("inputs are not coprime")]
    NotCoprime,
    #[error("input must be positive")]
    ZeroInput,
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(String),
    #[error("matrix has a negative entry")]
    NegativeEntry,
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("need {needed} bits, got {got}")]
    InsufficientBits { needed: usize, got: usize },
    #[error("invalid period: {0}")]
    InvalidPeriod(String),
    #[error("{0} is a perfect square")]
    PerfectSquare(String),
    #[error("value must be positive")]
    NonPositive,
    #[error("length must be at least 1")]
    ZeroLength,
    #[error("0/0 is not a value")]
    Indeterminate,
}

pub type Result<T> = std::result::Result<T, Error>;

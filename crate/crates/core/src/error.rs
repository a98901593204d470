use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a unit of Z[t^±1]: {0}")]
    NotAUnit(String),
    #[error("evaluation at t0 = 0 is undefined (negative exponents)")]
    EvalAtZero,
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("alphabet violation: {0}")]
    Alphabet(String),
    #[error("mode violation: {0}")]
    Mode(String),
    #[error("unknown presentation: {0}")]
    UnknownPresentation(String),
    #[error("unknown relation label: {0}")]
    UnknownLabel(String),
    #[error("rewrite step does not match at position {pos}: {msg}")]
    StepMismatch { pos: usize, msg: String },
    #[error("trace step {index} failed: {msg}")]
    TraceStep { index: usize, msg: String },
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("generator missing from representation domain: {0}")]
    MissingGenerator(String),
    #[error("singular matrix: {0}")]
    Singular(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("field error: {0}")]
    Field(String),
    #[error("invalid basis: {0}")]
    Basis(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("degree violation: {0}")]
    Degree(String),
    #[error("axiom failure: {0}")]
    Axiom(String),
    #[error("window error: {0}")]
    Window(String),
    #[error("not supported: {0}")]
    Unsupported(String),
    #[error("no solution: {0}")]
    NoSolution(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

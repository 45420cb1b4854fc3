//! Errors surfaced to callers, each with a stable machine-readable code.

use crate::arith::ArithError;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("curve is not squarefree; repeated factor {witness}")]
    NotSquarefree { witness: String },
    #[error("denominator vanishes on the component {component}")]
    ZeroDivisor { component: String },
    #[error("missing value at {0}")]
    MissingAssignment(String),
    #[error("assignment does not match a real bad point: {0}")]
    ExtraAssignment(String),
    #[error("invalid assignment: {0}")]
    InvalidAssignment(String),
    #[error("morphism is not finite")]
    NotFinite,
    #[error("morphism is not birational onto its image (generic fibre size {0})")]
    NotBirational(usize),
    #[error("morphism does not land in the target curve")]
    NotOnCurve,
    #[error("function is not integral over the coordinate ring")]
    NotIntegral,
    #[error("elimination needs a lex order with the eliminated variables highest")]
    OrderMismatch,
    #[error("arithmetic failure: {0}")]
    Arith(String),
}

impl Error {
    /// Stable identifier used in machine output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "E_PARSE",
            Error::Degenerate(_) => "E_DEGENERATE",
            Error::Precondition(_) => "E_PRECONDITION",
            Error::NotSquarefree { .. } => "E_NOT_SQUAREFREE",
            Error::ZeroDivisor { .. } => "E_ZERO_DIVISOR",
            Error::MissingAssignment(_) => "E_MISSING_ASSIGNMENT",
            Error::ExtraAssignment(_) => "E_EXTRA_ASSIGNMENT",
            Error::InvalidAssignment(_) => "E_INVALID_ASSIGNMENT",
            Error::NotFinite => "E_NOT_FINITE",
            Error::NotBirational(_) => "E_NOT_BIRATIONAL",
            Error::NotOnCurve => "E_NOT_ON_CURVE",
            Error::NotIntegral => "E_NOT_INTEGRAL",
            Error::OrderMismatch => "E_ORDER_MISMATCH",
            Error::Arith(_) => "E_ARITH",
        }
    }
}

impl From<ArithError> for Error {
    fn from(e: ArithError) -> Self {
        match e {
            ArithError::Degenerate(m) => Error::Degenerate(m.to_string()),
            other => Error::Arith(other.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

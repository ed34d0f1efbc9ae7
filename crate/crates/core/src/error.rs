use thiserror::Error;

use crate::expr::ParseError;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error("the zero polynomial has no finite root set")]
    ZeroPolynomial,
    #[error("capacity exceeded: {what} ({value} > {limit})")]
    CapacityExceeded { what: &'static str, value: u64, limit: u64 },
    #[error("degenerate algebra: {0}")]
    DegenerateAlgebra(&'static str),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),
    #[error("wrong degree: {0}")]
    WrongDegree(String),
    #[error("f(h) - h has no root in the ground field")]
    NoFixedPointInField,
    #[error("h^2 - alpha*h - beta does not split over the ground field")]
    NonSplitQuadratic,
    #[error("invalid scalar literal {0:?}")]
    InvalidScalar(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn capacity(what: &'static str, value: u64, limit: u64) -> Error {
    Error::CapacityExceeded { what, value, limit }
}

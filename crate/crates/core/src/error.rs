use thiserror::Error;

/// Errors raised by polynomial arithmetic, geometry and the decomposition drivers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor does not divide the dividend exactly")]
    NotDivisible,
    #[error("polynomials live in different variable spaces ({0} vs {1} variables)")]
    DimensionMismatch(usize, usize),
    #[error("{0:?} is not a valid q-integer linear type for this operation")]
    InvalidType(Vec<i64>),
    #[error("exponent {exponent} is not a multiple of {step}")]
    NotDivisibleExponent { exponent: i64, step: i64 },
    #[error("the zero vector has no direction")]
    ZeroVector,
    #[error("empty point set")]
    EmptyInput,
    #[error("the zero polynomial has no q-integer linear decomposition")]
    ZeroPolynomial,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A product produced a power of λ below λ^{-1}.
    #[error("exponent underflow: result contains λ^{exponent}, minimum supported is λ^-1")]
    ExponentUnderflow { exponent: i64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("series order {order} too small: {what}")]
    OrderTooSmall { order: usize, what: &'static str },

    #[error("falling factorial with subscript -1 needs base+1 to be a nonzero monomial, got {0}")]
    NonMonomialBase(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

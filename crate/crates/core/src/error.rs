use thiserror::Error;

/// Errors raised by the algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    /// A denominator evaluates to zero at the chosen root of unity, so the
    /// specialization is undefined there.
    #[error("denominator vanishes at a primitive {order}-th root of unity: {what}")]
    DenominatorVanishes { order: u32, what: String },
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("Laurent polynomial is not symmetric under l1 <-> l2")]
    NotSymmetric,
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: i64, max: i64 },
    #[error("element has no a^i*c^j term")]
    NoACTerm,
    #[error("order {m} does not divide 2n = {two_n}")]
    InvalidOrder { m: u32, two_n: u64 },
    #[error("mismatched cyclotomic orders {0} and {1}")]
    OrderMismatch(u32, u32),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A malformed textual expression.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error: {message}")]
pub struct ParseError {
    pub message: String,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division leaves a nonzero remainder")]
    NotDivisible,
    #[error("series has zero constant term and is not invertible")]
    NotInvertible,
    #[error("bad partition of {n}: {parts:?}")]
    BadPartition { n: u32, parts: Vec<i64> },
    #[error("expected at least 3 colors, got {0}")]
    BadArity(usize),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("polynomial has an odd power of q^(1/2)")]
    OddHalfPower,
}

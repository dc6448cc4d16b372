//! Error type shared by the series and triangle layers.

use thiserror::Error;

/// Errors raised by fallible series and triangle operations.
///
/// Ring element values are carried as rendered strings so the enum stays
/// independent of the coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Series division by a series whose constant term is not a unit.
    #[error("series is not invertible: constant term {0} is not a unit")]
    NotInvertible(String),

    /// Composition `f(g)` with `g(0) != 0` is undefined for truncated series.
    #[error("composition is undefined: inner series has nonzero constant term {0}")]
    CompositionUndefined(String),

    /// Reversion needs order exactly 1 and a unit coefficient of `z`.
    #[error("series is not revertible: order must be 1 with a unit linear coefficient")]
    NotRevertible,

    /// Square root needs constant term 1 and an invertible 2 in the ring.
    #[error("series square root is undefined: {0}")]
    SqrtUndefined(String),

    /// Riordan pair validation failed.
    #[error("malformed Riordan pair: {0}")]
    MalformedArray(String),

    /// Exact triangular inversion hit a non-unit diagonal entry.
    #[error("triangle inversion requires unit diagonal entries; entry ({n},{n}) = {value} is not a unit")]
    NonUnitDiagonal { n: usize, value: String },

    /// A matrix-vector product was requested with too few vector entries.
    #[error("vector of length {got} is too short: need at least {need} entries")]
    VectorTooShort { need: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

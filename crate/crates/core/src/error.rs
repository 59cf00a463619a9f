use crate::path::Direction;
use crate::series::Var;
use thiserror::Error;

/// Errors produced by the library's fallible operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series variable mismatch: {0:?} vs {1:?}")]
    VarMismatch(Var, Var),

    #[error("series division requires a divisor with a unit constant term")]
    NonUnitDivisor,

    #[error("x-to-z conversion produced negative exponent z^{0}")]
    NegativeExponent(i64),

    #[error("binomial upper index must be non-negative, got {0}")]
    NegativeBinomial(i64),

    #[error("oracle bound {requested} exceeds the hard limit {limit}")]
    OracleBound { requested: usize, limit: usize },

    #[error("path is not a valid partial path in direction {0:?}")]
    InvalidPath(Direction),

    #[error("border index {index} out of range for matrix size {size}")]
    BorderIndex { index: usize, size: usize },

    #[error("parameter t must lie in the open interval (0, 1/3), got {0}")]
    TOutOfRange(f64),

    #[error("polynomial substitution expects exponents divisible by 3, found z^{0}")]
    NonTernaryExponent(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

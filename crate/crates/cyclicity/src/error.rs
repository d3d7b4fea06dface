//! Crate-wide error type.

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,

    #[error("points are affinely dependent")]
    DegenerateSimplex,

    #[error("group order {order} exceeds order cap {cap}")]
    OrderCapExceeded { order: BigInt, cap: u64 },

    #[error("quotient group is not an elementary abelian p-group")]
    NotPPower,

    #[error("permutation search space of size {needed} exceeds perm cap {cap}")]
    PermCapExceeded { needed: u128, cap: u64 },

    #[error("enumeration of {size} candidates exceeds enumeration cap {cap}")]
    EnumerationCapExceeded { size: u128, cap: u64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{p} does not divide every nontrivial elementary divisor")]
    InvalidPrime { p: u64 },

    #[error("facet index {index} out of range {lo}..={hi}")]
    IndexError { index: usize, lo: usize, hi: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by a configured cap, as opposed to bad input.
    pub fn is_cap_violation(&self) -> bool {
        matches!(
            self,
            Error::OrderCapExceeded { .. }
                | Error::PermCapExceeded { .. }
                | Error::EnumerationCapExceeded { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

//! Exact rational arithmetic, fraction-free determinants, and the closed-form
//! counting formulas (determinant and product evaluations).

mod formulas;
mod matrix;
mod scalar;

pub use formulas::{
    andrews_a, andrews_d, andrews_product, binomial, delta, dpp_count_product, dpp_det, factorial,
    general_binomial, rising,
};
pub use matrix::ExactMatrix;
pub use scalar::ExactScalar;

use thiserror::Error;

/// Errors raised by exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("cannot parse {input:?} as an exact rational")]
    Parse { input: String },

    /// A rising-factorial factor in the denominator of `delta(k, x)`
    /// evaluates to zero at the given `x`.
    #[error("denominator of delta({k}, {x}) vanishes: factor {factor} is zero")]
    DeltaDenominatorZero { k: usize, x: String, factor: String },

    #[error("row {row} has length {len}, expected a square matrix of order {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
}

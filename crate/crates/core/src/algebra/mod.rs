//! Exact arithmetic: the scalar ring `Q(i)[√2]` and multi-pair polynomials.

pub mod poly;
pub mod scalar;

pub use poly::{Coeff, Monomial, MultiPoly, VarId};
pub use scalar::{QSqrt2, RingScalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("polynomial arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("variable pair {pair} out of range for arity {arity}")]
    VariableOutOfRange { pair: usize, arity: usize },
    #[error("division by zero")]
    DivisionByZero,
}

use std::fmt;

use num_complex::Complex64;

use crate::algebra::{MultiPoly, RingScalar};

/// A scalar produced by a classifier, exact or floating with the zero
/// tolerance appropriate to its computation.
#[derive(Clone, Debug, PartialEq)]
// Exact is the common variant; boxing it would only add indirection.
#[allow(clippy::large_enum_variant)]
pub enum Value {
    Exact(RingScalar),
    Float { value: Complex64, tolerance: f64 },
}

impl Value {
    /// Tolerance `10⁻⁹ · max(1, bound)` where `bound` estimates the largest
    /// intermediate magnitude.
    pub fn float(value: Complex64, bound: f64) -> Self {
        Value::Float { value, tolerance: 1e-9 * bound.max(1.0) }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Exact(v) => v.is_zero(),
            Value::Float { value, tolerance } => value.norm() <= *tolerance,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Value::Exact(v) => v.to_complex64(),
            Value::Float { value, .. } => *value,
        }
    }

    pub fn as_exact(&self) -> Option<&RingScalar> {
        match self {
            Value::Exact(v) => Some(v),
            Value::Float { .. } => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(v) => write!(f, "{v}"),
            Value::Float { value, .. } => write!(f, "{:.12e} + {:.12e}i", value.re, value.im),
        }
    }
}

/// A polynomial-valued classifier result.
#[derive(Clone, Debug, PartialEq)]
pub enum PolyValue {
    Exact(MultiPoly<RingScalar>),
    Float { poly: MultiPoly<Complex64>, tolerance: f64 },
}

impl PolyValue {
    /// True when every coefficient vanishes (within tolerance for floats).
    pub fn is_zero(&self) -> bool {
        match self {
            PolyValue::Exact(p) => p.is_zero(),
            PolyValue::Float { poly, tolerance } => poly.terms().all(|(_, c)| c.norm() <= *tolerance),
        }
    }

    pub fn num_terms(&self) -> usize {
        match self {
            PolyValue::Exact(p) => p.num_terms(),
            PolyValue::Float { poly, .. } => poly.num_terms(),
        }
    }
}

/// `(Σ|aᵢ|)^degree`, a crude bound on any degree-`degree` expression in the amplitudes.
pub(crate) fn magnitude_bound(amps: &[Complex64], degree: i32) -> f64 {
    amps.iter().map(|a| a.norm()).sum::<f64>().powi(degree)
}

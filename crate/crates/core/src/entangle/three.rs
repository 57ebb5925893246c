//! Three qubits: GHZ and W classes from `Δ` and the catalecticant.

use std::fmt;

use crate::algebra::{Coeff, MultiPoly, VarId};

use super::forms::ket_ground_form;
use super::state::{PureState, View};
use super::value::{magnitude_bound, PolyValue, Value};
use super::EntangleError;

fn alpha<C: Coeff>(a: &[C], i: usize, j: usize, k: usize) -> &C {
    &a[4 * i + 2 * j + k]
}

/// Cayley's hyperdeterminant
/// `(α₀₀₀α₁₁₁ − α₀₀₁α₁₁₀ − α₀₁₀α₁₀₁ + α₀₁₁α₁₀₀)² − 4(α₀₀₀α₀₁₁ − α₀₀₁α₀₁₀)(α₁₀₀α₁₁₁ − α₁₀₁α₁₁₀)`.
pub fn delta3_generic<C: Coeff>(a: &[C]) -> C {
    let p = |i, j, k, l, m, n| alpha(a, i, j, k).mul_ref(alpha(a, l, m, n));
    let s =
        p(0, 0, 0, 1, 1, 1).sub_ref(&p(0, 0, 1, 1, 1, 0)).sub_ref(&p(0, 1, 0, 1, 0, 1)).add_ref(&p(0, 1, 1, 1, 0, 0));
    let u = p(0, 0, 0, 0, 1, 1).sub_ref(&p(0, 0, 1, 0, 1, 0));
    let v = p(1, 0, 0, 1, 1, 1).sub_ref(&p(1, 0, 1, 1, 1, 0));
    s.mul_ref(&s).sub_ref(&u.mul_ref(&v).scale_ratio(4, 1))
}

/// The catalecticant
/// `det [[∂A/∂x₀, ∂A/∂x₁], [∂B_x/∂x₀, ∂B_x/∂x₁]]` with
/// `B_x = det(∂²A/∂y_i∂z_j)` and `A = Σ α_{ijk} x_i y_j z_k`.
///
/// The result is trilinear in `x, y, z` (pairs 0, 1, 2).
pub fn catalecticant3_generic<C: Coeff>(a: &[C]) -> MultiPoly<C> {
    let form = ket_ground_form(a, 3);
    let d = |p: &MultiPoly<C>, pair, comp| p.differentiate(VarId::new(pair, comp)).expect("pair < 3");
    let dyz = |i, j| d(&d(&form, 1, i), 2, j);
    let bx = dyz(0, 0).mul(&dyz(1, 1)).and_then(|t| t.sub(&dyz(0, 1).mul(&dyz(1, 0))?)).expect("arity 3");
    let lhs = d(&form, 0, 0).mul(&d(&bx, 0, 1)).expect("arity 3");
    let rhs = d(&form, 0, 1).mul(&d(&bx, 0, 0)).expect("arity 3");
    lhs.sub(&rhs).expect("arity 3")
}

/// `Δ` of a three-qubit state.
pub fn delta3(s: &PureState) -> Result<Value, EntangleError> {
    s.expect_qubits(3)?;
    Ok(match s.view() {
        View::Exact(a) => Value::Exact(delta3_generic(a)),
        View::Float(a) => Value::float(delta3_generic(a), magnitude_bound(a, 4)),
    })
}

/// The catalecticant of a three-qubit state as a polynomial in `x, y, z`.
pub fn catalecticant3(s: &PureState) -> Result<PolyValue, EntangleError> {
    s.expect_qubits(3)?;
    Ok(match s.view() {
        View::Exact(a) => PolyValue::Exact(catalecticant3_generic(a)),
        View::Float(a) => {
            PolyValue::Float { poly: catalecticant3_generic(a), tolerance: 1e-9 * magnitude_bound(a, 4).max(1.0) }
        }
    })
}

/// SLOCC classes of three qubits, distinguished by `Δ` and `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Class3 {
    /// `Δ ≠ 0`.
    GhzClass,
    /// `Δ = 0`, `C ≠ 0`.
    WClass,
    /// `Δ = C = 0`.
    Degenerate,
}

impl fmt::Display for Class3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class3::GhzClass => "GHZ",
            Class3::WClass => "W",
            Class3::Degenerate => "degenerate",
        })
    }
}

pub fn classify3(s: &PureState) -> Result<Class3, EntangleError> {
    if !delta3(s)?.is_zero() {
        return Ok(Class3::GhzClass);
    }
    Ok(if catalecticant3(s)?.is_zero() { Class3::Degenerate } else { Class3::WClass })
}

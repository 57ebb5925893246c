//! Nullity of the hyperdeterminant via its defining system: `Δ(φ) = 0`
//! exactly when the ground form `A` and all its first partial derivatives
//! have a common zero with no pair equal to `(0, 0)`.

use std::fmt;

use crate::algebra::{Coeff, RingScalar, VarId};

use super::forms::qubit_ground_form;
use super::state::PureState;
use super::EntangleError;

/// A candidate common zero: pair `q` holds `(X_q0, X_q1)` for qubit `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct SystemSolution {
    pub pairs: Vec<[RingScalar; 2]>,
}

impl SystemSolution {
    pub fn new(pairs: Vec<[RingScalar; 2]>) -> Self {
        Self { pairs }
    }

    /// No pair is `(0, 0)`.
    pub fn is_nontrivial(&self) -> bool {
        self.pairs.iter().all(|[a, b]| !(a.is_zero() && b.is_zero()))
    }

    fn flat(&self) -> Vec<RingScalar> {
        self.pairs.iter().flat_map(|p| p.iter().cloned()).collect()
    }
}

impl fmt::Display for SystemSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|[a, b]| format!("({a}, {b})")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `[A, ∂A/∂X₀₀, ∂A/∂X₀₁, …, ∂A/∂X_{k−1,1}]` at `sol`.
pub fn hyperdet_residuals(s: &PureState, sol: &SystemSolution) -> Result<Vec<RingScalar>, EntangleError> {
    let k = s.k();
    if sol.pairs.len() != k {
        return Err(EntangleError::SolutionArity { expected: k, got: sol.pairs.len() });
    }
    let amps = s.projective_exact().ok_or(EntangleError::NeedsExactBackend { what: "hyperdeterminant system" })?;
    let form = qubit_ground_form(amps, k);
    let at = sol.flat();
    let mut out = vec![form.eval(&at)?];
    for q in 0..k {
        for c in 0..2 {
            out.push(form.differentiate(VarId::new(q, c))?.eval(&at)?);
        }
    }
    Ok(out)
}

/// True when `sol` is non-trivial and solves `A = ∂A = 0` for `s`.
pub fn hyperdet_system_check(s: &PureState, sol: &SystemSolution) -> Result<bool, EntangleError> {
    Ok(sol.is_nontrivial() && hyperdet_residuals(s, sol)?.iter().all(Coeff::is_zero))
}

/// Whether `|GHZ_k⟩` is generic, i.e. has `Δ ≠ 0`, for `2 ≤ k ≤ 8`.
///
/// `A = (x₀⋯x_{k−1} + y₀⋯y_{k−1})/√2` and every partial is a monomial, so
/// whether a point solves the system depends only on which coordinates
/// vanish; trying the `2^k` patterns built from `(1,0)` and `(0,1)` decides
/// it (a pair with both coordinates nonzero only makes more monomials
/// nonzero).
pub fn ghz_generic(k: usize) -> Result<bool, EntangleError> {
    const MIN: usize = 2;
    const MAX: usize = 8;
    if !(MIN..=MAX).contains(&k) {
        return Err(EntangleError::QubitsOutOfRange { k, min: MIN, max: MAX });
    }
    let ghz = super::state::named_state(super::state::NamedState::Ghz, k)?;
    let (one, zero) = (RingScalar::one(), RingScalar::zero());
    for pattern in 0..1usize << k {
        let pairs = (0..k)
            .map(|q| if pattern >> q & 1 == 0 { [one.clone(), zero.clone()] } else { [zero.clone(), one.clone()] })
            .collect();
        if hyperdet_system_check(&ghz, &SystemSolution::new(pairs))? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ghz_is_generic_only_for_two_and_three_qubits() {
        assert!(ghz_generic(2).unwrap());
        assert!(ghz_generic(3).unwrap());
        for k in 4..=8 {
            assert!(!ghz_generic(k).unwrap(), "k = {k}");
        }
        assert!(matches!(ghz_generic(9), Err(EntangleError::QubitsOutOfRange { .. })));
    }

    #[test]
    fn trivial_points_are_rejected() {
        let s = PureState::basis(2, 0);
        let z = RingScalar::zero();
        let sol = SystemSolution::new(vec![[z.clone(), z.clone()], [z.clone(), z]]);
        assert!(!hyperdet_system_check(&s, &sol).unwrap());
    }

    #[test]
    fn product_state_is_degenerate() {
        // A = x₀y₀ vanishes with its partials at ((0,1),(0,1)).
        let s = PureState::basis(2, 0);
        let (o, z) = (RingScalar::one(), RingScalar::zero());
        let sol = SystemSolution::new(vec![[z.clone(), o.clone()], [z, o]]);
        assert!(hyperdet_system_check(&s, &sol).unwrap());
    }
}

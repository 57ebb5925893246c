use std::fmt;

use super::{conjugate_pairs, GroupError, PairSet, Permutation};

/// The unique factorization `Z_E · S_σ` of an element of the c-Z/SWAP group.
///
/// As an operator, `S_σ` acts first and moves bit `q` of a basis index to
/// position `σ(q)`; `Z_E` then applies `(−1)` for every pair of `E` whose two
/// bits are both set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    phase: PairSet,
    perm: Permutation,
}

impl NormalForm {
    pub fn new(phase: PairSet, perm: Permutation) -> Result<Self, GroupError> {
        if phase.k() != perm.k() {
            return Err(GroupError::QubitMismatch { left: phase.k(), right: perm.k() });
        }
        Ok(Self { phase, perm })
    }

    pub fn identity(k: usize) -> Result<Self, GroupError> {
        Ok(Self { phase: PairSet::empty(k)?, perm: Permutation::identity(k) })
    }

    /// `Z_{ij}`.
    pub fn cz(k: usize, i: usize, j: usize) -> Result<Self, GroupError> {
        Self::new(PairSet::from_pairs(k, [(i, j)])?, Permutation::identity(k))
    }

    /// `S_{(i j)}`.
    pub fn swap(k: usize, i: usize, j: usize) -> Result<Self, GroupError> {
        if i == j {
            return Err(GroupError::DegeneratePair(i));
        }
        Self::new(PairSet::empty(k)?, Permutation::transposition(k, i, j)?)
    }

    pub fn k(&self) -> usize {
        self.perm.k()
    }

    pub fn phase(&self) -> &PairSet {
        &self.phase
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.phase.is_empty() && self.perm.is_identity()
    }

    /// `(E, σ)(E′, σ′) = (E ⊕ σ(E′), σσ′)`.
    pub fn product(&self, other: &Self) -> Result<Self, GroupError> {
        if self.k() != other.k() {
            return Err(GroupError::QubitMismatch { left: self.k(), right: other.k() });
        }
        let moved = conjugate_pairs(&self.perm, &other.phase)?;
        Ok(Self { phase: self.phase.symmetric_difference(&moved)?, perm: self.perm.compose(&other.perm)? })
    }

    /// `(σ⁻¹(E), σ⁻¹)`.
    pub fn inverse(&self) -> Self {
        let inv = self.perm.inverse();
        let phase = conjugate_pairs(&inv, &self.phase).expect("same k");
        Self { phase, perm: inv }
    }

    /// Smallest `n ≥ 1` with `selfⁿ = 1`.
    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut n = 1;
        while !acc.is_identity() {
            acc = acc.product(self).expect("same k");
            n += 1;
        }
        n
    }
}

/// Free-function form of [`NormalForm::product`].
pub fn nf_product(a: &NormalForm, b: &NormalForm) -> Result<NormalForm, GroupError> {
    a.product(b)
}

/// Free-function form of [`NormalForm::inverse`].
pub fn nf_inverse(a: &NormalForm) -> NormalForm {
    a.inverse()
}

impl fmt::Display for NormalForm {
    /// E.g. `Z{02,12} S(0,1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{} S{}", self.phase, self.perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(k: usize, pairs: &[(usize, usize)], cycles: &str) -> NormalForm {
        NormalForm::new(
            PairSet::from_pairs(k, pairs.iter().copied()).unwrap(),
            Permutation::parse_cycles(k, cycles).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn worked_product_from_resynthesis_example() {
        let a = nf(3, &[], "(0,1)");
        let b = nf(3, &[(0, 1), (1, 2)], "(1,2)");
        let c = nf(3, &[(0, 1), (0, 2)], "(1,2)");
        let abc = a.product(&b).unwrap().product(&c).unwrap();
        assert_eq!(abc, nf(3, &[(0, 2), (1, 2)], "(0,1)"));
    }

    #[test]
    fn inverse_cancels() {
        let a = nf(3, &[(0, 1)], "(0,1,2)");
        assert!(a.product(&a.inverse()).unwrap().is_identity());
        assert!(a.inverse().product(&a).unwrap().is_identity());
    }

    #[test]
    fn pure_permutation_inverse() {
        let a = nf(4, &[], "(0,1,3)");
        assert_eq!(a.inverse(), nf(4, &[], "(0,3,1)"));
    }

    #[test]
    fn mismatched_k_is_error() {
        assert!(NormalForm::identity(3).unwrap().product(&NormalForm::identity(4).unwrap()).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(nf(3, &[(0, 2), (1, 2)], "(0,1)").to_string(), "Z{02,12} S(0,1)");
    }
}

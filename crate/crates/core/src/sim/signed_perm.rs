use crate::algebra::RingScalar;
use crate::circuit::{Circuit, Gate};
use crate::group::NormalForm;

use super::{RingMatrix, SimError};

/// A signed permutation matrix acting as `|x⟩ ↦ sign[x] |dest[x]⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    k: usize,
    dest: Vec<usize>,
    sign: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(k: usize) -> Self {
        let dim = 1usize << k;
        Self { k, dest: (0..dim).collect(), sign: vec![1; dim] }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.dest.len()
    }

    pub fn dest(&self) -> &[usize] {
        &self.dest
    }

    pub fn sign(&self) -> &[i8] {
        &self.sign
    }

    pub fn is_identity(&self) -> bool {
        self.sign.iter().all(|&s| s == 1) && self.dest.iter().enumerate().all(|(i, &d)| i == d)
    }

    /// The diagonal entries when the matrix is diagonal.
    pub fn diagonal(&self) -> Option<Vec<i8>> {
        self.dest.iter().enumerate().all(|(i, &d)| i == d).then(|| self.sign.clone())
    }

    /// `self · other` (`other` acts first).
    pub fn compose(&self, other: &Self) -> Result<Self, SimError> {
        if self.k != other.k {
            return Err(SimError::QubitMismatch { left: self.k, right: other.k });
        }
        let dest = other.dest.iter().map(|&y| self.dest[y]).collect();
        let sign = other.dest.iter().zip(&other.sign).map(|(&y, &s)| s * self.sign[y]).collect();
        Ok(Self { k: self.k, dest, sign })
    }

    /// The matrix of a CZ or SWAP gate.
    pub fn of_gate(k: usize, g: Gate) -> Result<Self, SimError> {
        let dim = 1usize << k;
        match g {
            Gate::Cz(i, j) => {
                let mask = (1 << i) | (1 << j);
                let sign = (0..dim).map(|x| if x & mask == mask { -1 } else { 1 }).collect();
                Ok(Self { k, dest: (0..dim).collect(), sign })
            }
            Gate::Swap(i, j) => {
                let dest = (0..dim)
                    .map(|x| {
                        let (bi, bj) = ((x >> i) & 1, (x >> j) & 1);
                        (x & !((1 << i) | (1 << j))) | (bi << j) | (bj << i)
                    })
                    .collect();
                Ok(Self { k, dest, sign: vec![1; dim] })
            }
            other => Err(SimError::NotSignedPermutation(other)),
        }
    }

    /// Gate-by-gate product for a CZ/SWAP circuit.
    pub fn of_circuit(c: &Circuit) -> Result<Self, SimError> {
        c.gates().iter().try_fold(Self::identity(c.k()), |acc, &g| Self::of_gate(c.k(), g)?.compose(&acc))
    }

    pub fn to_matrix(&self) -> RingMatrix {
        let mut m = RingMatrix::zeros(self.dim());
        for (x, (&y, &s)) in self.dest.iter().zip(&self.sign).enumerate() {
            m.set(y, x, RingScalar::from_int(s as i64));
        }
        m
    }
}

/// `Z_E S_σ` as a signed permutation: bit `q` of `x` moves to bit `σ(q)` of
/// `y`, then the sign is `(−1)^{#{ {i,j} ∈ E : y_i = y_j = 1 }}`.
pub fn signed_perm_of(nf: &NormalForm) -> SignedPerm {
    let k = nf.k();
    let dim = 1usize << k;
    let sigma = nf.perm().images();
    let masks: Vec<usize> = nf.phase().pairs().map(|(i, j)| (1 << i) | (1 << j)).collect();
    let mut dest = Vec::with_capacity(dim);
    let mut sign = Vec::with_capacity(dim);
    for x in 0..dim {
        let y = (0..k).filter(|&q| x >> q & 1 == 1).fold(0usize, |y, q| y | 1 << sigma[q]);
        let flips = masks.iter().filter(|&&m| y & m == m).count();
        dest.push(y);
        sign.push(if flips % 2 == 0 { 1 } else { -1 });
    }
    SignedPerm { k, dest, sign }
}

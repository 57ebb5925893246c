use std::fmt;

use crate::algebra::RingScalar;
use crate::circuit::{Circuit, Gate};

use super::{SignedPerm, SimError};

/// A dense square matrix over `Q(i)[√2]`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix {
    dim: usize,
    entries: Vec<RingScalar>,
}

impl RingMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, entries: vec![RingScalar::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, RingScalar::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &RingScalar {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: RingScalar) {
        self.entries[row * self.dim + col] = v;
    }

    pub fn column(&self, col: usize) -> Vec<RingScalar> {
        (0..self.dim).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SimError> {
        if self.dim != other.dim {
            return Err(SimError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn is_unitary(&self) -> bool {
        self.mul(&self.adjoint()).map(|p| p.is_identity()).unwrap_or(false)
    }

    pub fn apply(&self, v: &[RingScalar]) -> Result<Vec<RingScalar>, SimError> {
        if v.len() != self.dim {
            return Err(SimError::DimensionMismatch { left: self.dim, right: v.len() });
        }
        Ok((0..self.dim)
            .map(|i| (0..self.dim).fold(RingScalar::zero(), |acc, j| acc + &(self.get(i, j) * &v[j])))
            .collect())
    }
}

impl From<&SignedPerm> for RingMatrix {
    fn from(sp: &SignedPerm) -> Self {
        sp.to_matrix()
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Applies one gate to a state vector in place (qubit 0 is the lowest bit).
pub fn apply_gate(g: Gate, state: &mut [RingScalar]) {
    let dim = state.len();
    match g {
        Gate::Cz(i, j) => {
            let mask = (1 << i) | (1 << j);
            for (x, amp) in state.iter_mut().enumerate() {
                if x & mask == mask {
                    *amp = -&*amp;
                }
            }
        }
        Gate::Swap(i, j) => {
            for x in 0..dim {
                if (x >> i) & 1 == 1 && (x >> j) & 1 == 0 {
                    state.swap(x, x ^ (1 << i) ^ (1 << j));
                }
            }
        }
        Gate::X(i) => {
            for x in (0..dim).filter(|x| x >> i & 1 == 0) {
                state.swap(x, x | 1 << i);
            }
        }
        Gate::H(i) => {
            let h = RingScalar::inv_sqrt2();
            for x in (0..dim).filter(|x| x >> i & 1 == 0) {
                let y = x | 1 << i;
                let (a, b) = (state[x].clone(), state[y].clone());
                state[x] = &(&a + &b) * &h;
                state[y] = &(&a - &b) * &h;
            }
        }
    }
}

/// Runs a circuit on a state vector.
pub fn apply_circuit(c: &Circuit, state: &[RingScalar]) -> Result<Vec<RingScalar>, SimError> {
    let dim = 1usize << c.k();
    if state.len() != dim {
        return Err(SimError::DimensionMismatch { left: dim, right: state.len() });
    }
    let mut s = state.to_vec();
    for &g in c.gates() {
        apply_gate(g, &mut s);
    }
    Ok(s)
}

/// The exact unitary `G_{n−1} ⋯ G_0` of a circuit.
pub fn circuit_unitary(c: &Circuit) -> RingMatrix {
    let dim = 1usize << c.k();
    let mut m = RingMatrix::zeros(dim);
    for col in 0..dim {
        let mut basis = vec![RingScalar::zero(); dim];
        basis[col] = RingScalar::one();
        for &g in c.gates() {
            apply_gate(g, &mut basis);
        }
        for (row, v) in basis.into_iter().enumerate() {
            m.set(row, col, v);
        }
    }
    m
}

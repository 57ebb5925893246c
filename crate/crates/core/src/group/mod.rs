//! The c-Z/SWAP group as exact normal forms `(E, σ)`.

mod normal_form;
mod pairset;
mod perm;

pub use normal_form::{nf_inverse, nf_product, NormalForm};
pub use pairset::{conjugate_pairs, PairSet, MAX_QUBITS};
pub use perm::Permutation;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("qubit count mismatch: {left} vs {right}")]
    QubitMismatch { left: usize, right: usize },
    #[error("index {index} out of range for {k} qubits")]
    IndexOutOfRange { index: usize, k: usize },
    #[error("pair {{{0},{0}}} is not a pair of distinct qubits")]
    DegeneratePair(usize),
    #[error("{k} qubits exceeds the supported maximum of {max}")]
    TooManyQubits { k: usize, max: usize },
    #[error("image list {0:?} is not a bijection")]
    NotABijection(Vec<usize>),
    #[error("cycles are not disjoint (element {0} repeats)")]
    CyclesNotDisjoint(usize),
    #[error("cannot parse permutation {0:?}")]
    BadCycleNotation(String),
    #[error("cannot parse pair list {0:?} (expected e.g. \"01,12\")")]
    BadPairList(String),
}

/// Order of the group on `k` qubits: `k! · 2^(k choose 2)`.
pub fn group_order(k: usize) -> u128 {
    let fact: u128 = (1..=k as u128).product();
    fact << (k * k.saturating_sub(1) / 2)
}

//! Exact matrix semantics used as the correctness oracle.

mod enumerate;
mod presentation;
mod ring_matrix;
mod signed_perm;

pub use enumerate::{enumerate_group, generators, GroupTable, MAX_ENUM_QUBITS};
pub use presentation::{verify_presentation, verify_relators, word_matrix};
pub use ring_matrix::{apply_circuit, apply_gate, circuit_unitary, RingMatrix};
pub use signed_perm::{signed_perm_of, SignedPerm};

use thiserror::Error;

use crate::circuit::{Circuit, Gate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("qubit count mismatch: {left} vs {right}")]
    QubitMismatch { left: usize, right: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("gate {0} is not a signed permutation")]
    NotSignedPermutation(Gate),
    #[error("group enumeration supports 1..={max} qubits; k = {k} would need k!·2^(k(k-1)/2) elements")]
    EnumerationTooLarge { k: usize, max: usize },
}

/// Exact unitary equality (no global phase allowance).
///
/// CZ/SWAP-only circuits are compared as signed permutations; anything with
/// H or X goes through the dense exact unitary.
pub fn equivalent(c1: &Circuit, c2: &Circuit) -> Result<bool, SimError> {
    if c1.k() != c2.k() {
        return Err(SimError::QubitMismatch { left: c1.k(), right: c2.k() });
    }
    if c1.is_czs() && c2.is_czs() {
        return Ok(SignedPerm::of_circuit(c1)? == SignedPerm::of_circuit(c2)?);
    }
    Ok(circuit_unitary(c1) == circuit_unitary(c2))
}

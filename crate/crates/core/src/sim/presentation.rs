//! Checks that presentation relators hold in the matrix representation.

use crate::optimizer::{base_relators, GeneratorWord, Presentation};

use super::SignedPerm;

/// The signed-permutation matrix of a word (operator order).
pub fn word_matrix(w: &GeneratorWord) -> SignedPerm {
    w.letters().iter().fold(SignedPerm::identity(w.k()), |acc, l| {
        acc.compose(&SignedPerm::of_gate(w.k(), l.gate()).expect("line letters are CZ/SWAP")).expect("same k")
    })
}

/// True iff every relator is the identity matrix.
pub fn verify_relators(relators: &[GeneratorWord]) -> bool {
    relators.iter().all(|w| word_matrix(w).is_identity())
}

/// Checks every defining relator of the chosen presentation for `k` qubits.
pub fn verify_presentation(k: usize, which: Presentation) -> bool {
    verify_relators(&base_relators(k, which))
}

//! Provably shortest circuits by breadth-first search of the Cayley graph.

use crate::circuit::{Circuit, Topology};
use crate::group::NormalForm;
use crate::sim::{enumerate_group, MAX_ENUM_QUBITS};

use super::word::{GeneratorWord, Letter};
use super::OptimizeError;

/// A minimal-length circuit over the topology's generators realizing `nf`.
///
/// The Cayley graph has `k!·2^(k(k−1)/2)` vertices, so this is limited to
/// `k ≤ 5`.
pub fn bfs_minimize(nf: &NormalForm, t: Topology) -> Result<Circuit, OptimizeError> {
    let k = nf.k();
    if k > MAX_ENUM_QUBITS {
        return Err(OptimizeError::TooLargeForSearch { k, max: MAX_ENUM_QUBITS });
    }
    let table = enumerate_group(k, t)?;
    let word = table.word_to(nf).expect("every element is reachable");
    Ok(Circuit::from_gates(k, word.into_iter().rev()).expect("generators are valid gates"))
}

/// [`bfs_minimize`] on the line topology, returned as a word.
pub fn bfs_minimize_word(nf: &NormalForm) -> Result<GeneratorWord, OptimizeError> {
    let c = bfs_minimize(nf, Topology::Line)?;
    let letters = c.gates().iter().rev().map(|&g| Letter::from_gate(g).expect("line generator")).collect();
    GeneratorWord::new(nf.k(), letters)
}

//! Reduction of a CZ/SWAP circuit to `Z_E S_σ` and resynthesis on the
//! complete graph.

use crate::circuit::{Circuit, Gate};
use crate::group::{conjugate_pairs, NormalForm};

use super::OptimizeError;

/// The normal form of a CZ/SWAP circuit.
///
/// Gates are folded in application order, each new gate multiplying the
/// accumulated element from the left.
pub fn normalize(c: &Circuit) -> Result<NormalForm, OptimizeError> {
    let k = c.k();
    let mut acc = NormalForm::identity(k)?;
    for (position, &g) in c.gates().iter().enumerate() {
        let nf = match g {
            Gate::Cz(i, j) => NormalForm::cz(k, i, j)?,
            Gate::Swap(i, j) => NormalForm::swap(k, i, j)?,
            Gate::H(_) | Gate::X(_) => return Err(OptimizeError::NonCzsGate { position, gate: g }),
        };
        acc = nf.product(&acc)?;
    }
    Ok(acc)
}

/// A circuit with `|E|` CZ gates followed by one SWAP chain per cycle of `σ`.
///
/// The CZ layer acts on `σ⁻¹(E)` because it is applied before the swaps:
/// `S_σ Z_{σ⁻¹(E)} = Z_E S_σ`. A cycle `(i₁ … i_ℓ)` is the product
/// `(i₁ i₂)(i₂ i₃)⋯(i_{ℓ−1} i_ℓ)`, whose rightmost factor is applied first.
pub fn synthesize_complete(nf: &NormalForm) -> Circuit {
    let k = nf.k();
    let pre_phase = conjugate_pairs(&nf.perm().inverse(), nf.phase()).expect("same k");
    let mut gates: Vec<Gate> = pre_phase.pairs().map(|(i, j)| Gate::cz(i, j)).collect();
    for cycle in nf.perm().cycles() {
        gates.extend(cycle.windows(2).rev().map(|w| Gate::swap(w[0], w[1])));
    }
    Circuit::from_gates(k, gates).expect("indices come from a valid normal form")
}

/// Normalizes and resynthesizes, keeping the input when it is already no longer.
pub fn optimize_complete(c: &Circuit) -> Result<Circuit, OptimizeError> {
    let out = synthesize_complete(&normalize(c)?);
    Ok(if out.len() <= c.len() { out } else { c.clone() })
}

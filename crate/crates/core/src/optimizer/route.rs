//! Line-topology rewriting for circuits that use arbitrary qubit pairs.

use crate::circuit::{Circuit, Gate, Topology};

use super::bfs::bfs_minimize;
use super::ctozs::{normalize, optimize_complete, synthesize_complete};
use super::dehn::dehn_reduce;
use super::heuristic::heuristic_line_reduce;
use super::relations::RelationSet;
use super::word::GeneratorWord;
use super::OptimizeError;

/// Replaces every two-qubit gate on `(i, j)` with `j > i + 1` by walking
/// qubit `j` down to `i + 1` with adjacent swaps, applying the gate there
/// and walking it back. The result only touches neighbouring qubits.
pub fn route_to_line(c: &Circuit) -> Result<GeneratorWord, OptimizeError> {
    let mut gates = Vec::with_capacity(c.len());
    for (position, &g) in c.gates().iter().enumerate() {
        let (i, j, make): (usize, usize, fn(usize, usize) -> Gate) = match g {
            Gate::Cz(i, j) => (i, j, Gate::cz),
            Gate::Swap(i, j) => (i, j, Gate::swap),
            _ => return Err(OptimizeError::NonCzsGate { position, gate: g }),
        };
        let walk: Vec<Gate> = (i + 1..j).rev().map(|m| Gate::swap(m, m + 1)).collect();
        gates.extend(walk.iter().copied());
        gates.push(make(i, i + 1));
        gates.extend(walk.iter().rev().copied());
    }
    let routed = Circuit::from_gates(c.k(), gates).expect("indices stay below k");
    GeneratorWord::from_circuit(&routed)
}

/// Shortest line circuit found for `c`: the input itself and the
/// resynthesized normal form are both routed, Dehn-reduced and then searched
/// with at most `budget` expansions.
pub fn optimize_line(c: &Circuit, budget: usize) -> Result<Circuit, OptimizeError> {
    let relations = RelationSet::line(c.k())?;
    let resynthesized = synthesize_complete(&normalize(c)?);
    let mut best: Option<GeneratorWord> = None;
    for candidate in [c, &resynthesized] {
        let word = dehn_reduce(&route_to_line(candidate)?, &relations)?;
        let word = heuristic_line_reduce(&word, &relations, budget)?;
        if best.as_ref().is_none_or(|b| word.len() < b.len()) {
            best = Some(word);
        }
    }
    Ok(best.expect("two candidates").to_circuit())
}

/// The optimization pipeline behind the command line: breadth-first search
/// when `exact`, otherwise resynthesis (complete) or routed rewriting
/// search (line).
pub fn optimize(c: &Circuit, topology: Topology, budget: usize, exact: bool) -> Result<Circuit, OptimizeError> {
    match (exact, topology) {
        (true, t) => bfs_minimize(&normalize(c)?, t),
        (false, Topology::Complete) => optimize_complete(c),
        (false, Topology::Line) => optimize_line(c, budget),
    }
}

//! Circuit simplification: normal-form resynthesis, reduced words for
//! permutations, Dehn reduction, bounded rewriting search, and exact BFS.

mod bfs;
mod ctozs;
mod dehn;
mod heuristic;
mod relations;
mod rothe;
mod route;
mod word;

pub use bfs::{bfs_minimize, bfs_minimize_word};
pub use ctozs::{normalize, optimize_complete, synthesize_complete};
pub use dehn::{coxeter_cancel, dehn_reduce, dehn_step, free_reduce};
pub use heuristic::{heuristic_line_reduce, DEFAULT_BUDGET};
pub use relations::{base_relators, coxeter_exponent, Presentation, RelationSet};
pub use rothe::{rothe_diagram, rothe_reduced_word};
pub use route::{optimize, optimize_line, route_to_line};
pub use word::{GeneratorWord, Letter, LetterKind};

use thiserror::Error;

use crate::circuit::Gate;
use crate::group::GroupError;
use crate::sim::SimError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OptimizeError {
    #[error("gate {position} ({gate}) is not a CZ or SWAP gate")]
    NonCzsGate { position: usize, gate: Gate },
    #[error("gate {0} is not an adjacent-qubit CZ or SWAP")]
    NotALineGate(Gate),
    #[error("letter {letter} is out of range for {k} qubits")]
    LetterOutOfRange { letter: String, k: usize },
    #[error("cannot parse letter {0:?} (expected s<i> or z<i>)")]
    BadLetter(String),
    #[error("qubit count mismatch: {left} vs {right}")]
    QubitMismatch { left: usize, right: usize },
    #[error("word {0} does not evaluate to the identity")]
    NotARelator(String),
    #[error("exact search supports at most {max} qubits (got {k}); the Cayley graph grows as k!·2^(k(k-1)/2)")]
    TooLargeForSearch { k: usize, max: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Sim(#[from] SimError),
}

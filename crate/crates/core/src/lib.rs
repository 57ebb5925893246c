//! Exact optimization of c-Z/SWAP circuits and entanglement analysis of the
//! states they prepare.
//!
//! * [`algebra`]: the scalar ring `Q(i)[√2]` and multi-pair polynomials with
//!   transvectants.
//! * [`group`]: normal forms `Z_E S_σ` and their product.
//! * [`circuit`]: gate-level IR and text format.
//! * [`optimizer`]: resynthesis, reduced words, Dehn reduction, search.
//! * [`sim`]: exact matrix semantics used as the correctness oracle.
//! * [`entangle`]: invariants and covariants for 3, 4 and 5 qubits.
//! * [`cli`]: the `czs` command line.

pub mod algebra;
pub mod circuit;
pub mod cli;
pub mod entangle;
pub mod group;
pub mod optimizer;
pub mod sim;

//! Entanglement analysis of states `Z_E (a₀|0⟩+a₁|1⟩) ⊗ ⋯` reachable with
//! c-Z gates from product states.
//!
//! * 3 qubits: the Cayley hyperdeterminant `Δ` and the catalecticant.
//! * 4 qubits: the invariants `B, L, M, N, D_xy`, the three quartics and
//!   their root configurations, and a ladder of covariants built by
//!   transvection.
//! * 5 qubits: nullity of the hyperdeterminant witnessed by non-trivial
//!   solutions of the system `A = ∂A = 0`.
//!
//! Amplitude conventions: basis index `x` has qubit `q` at bit `q`. Formulas
//! written with ket strings `α_{i₁⋯i_k}` read `i₁` as the most significant
//! qubit (`k−1`).

mod classify4;
mod covariants;
mod five;
mod forms;
mod four;
mod hyperdet;
mod report;
mod state;
mod three;
mod value;

pub use classify4::{classify_phi4, graph_case, Case4, Case4Report, CovariantCheck};
pub use covariants::{covariant_ladder, covariants4, ladder_covariant, name_degree, Covariants4, Step, LADDER};
pub use five::{
    canonical_class, class_table, fallback_graph_solution, tabulated_solution_5q, ClassRow, Solution5, SolutionSource,
};
pub use four::{
    invariants4, invariants4_generic, quartics, quartics_generic, root_config, root_config_with, Invariants4, Quartic,
    RootConfig,
};
pub use hyperdet::{ghz_generic, hyperdet_residuals, hyperdet_system_check, SystemSolution};
pub use report::Report;
pub use state::{
    g_abcd, ghz_circuit, named_state, phi1_example, phi_state, phi_state_symbolic, Backend, NamedState, ParamSpec,
    PureState,
};
pub use three::{catalecticant3, catalecticant3_generic, classify3, delta3, delta3_generic, Class3};
pub use value::{PolyValue, Value};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::group::GroupError;
use crate::sim::SimError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EntangleError {
    #[error("expected a {expected}-qubit state, got {got} qubits")]
    WrongQubitCount { expected: usize, got: usize },
    #[error("parameter pair for qubit {qubit} is (0, 0)")]
    ZeroParameterPair { qubit: usize },
    #[error("pair set has {pairs} qubits but {params} parameter pairs were given")]
    ParamCountMismatch { pairs: usize, params: usize },
    #[error("state needs {expected} amplitudes, got {got}")]
    AmplitudeCount { expected: usize, got: usize },
    #[error("{what} needs exact amplitudes; this state only has floating-point ones")]
    NeedsExactBackend { what: &'static str },
    #[error("the zero quartic has no root configuration")]
    ZeroQuartic,
    #[error("solution has {got} pairs for a {expected}-qubit state")]
    SolutionArity { expected: usize, got: usize },
    #[error("{name} is only defined for k ≥ {min}, got {k}")]
    QubitsTooFew { name: &'static str, k: usize, min: usize },
    #[error("k = {k} is outside the supported range {min}..={max}")]
    QubitsOutOfRange { k: usize, min: usize, max: usize },
    #[error("table row for class {class} divides by zero in {denominator}")]
    TableDivisionByZero { class: usize, denominator: &'static str },
    #[error("no representative found for the pair set {0}")]
    RepresentativeNotFound(String),
    #[error("class {class}: the table row fails and the fallback search found no non-trivial solution")]
    NoNontrivialSolution { class: usize },
    #[error("bad parameter file at line {line}: {message}")]
    ParamSyntax { line: usize, message: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Sim(#[from] SimError),
}

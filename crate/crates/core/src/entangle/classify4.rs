//! Four-qubit states `Z_E |product⟩`: the eleven graph types on four
//! vertices, the quartic root configurations and covariant vanishings each
//! one is expected to show, and a report comparing expectation to computation.

use std::fmt;

use crate::group::PairSet;

use super::covariants::covariants4;
use super::four::{quartics, root_config, RootConfig};
use super::state::{phi_state, ParamSpec};
use super::EntangleError;

/// One of the eleven isomorphism types of graphs on four vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Case4 {
    pub number: u8,
    pub graph: &'static str,
    /// The SLOCC family the states of this type fall into.
    pub family: &'static str,
    /// Expected root configurations of `Q₁, Q₂, Q₃`, sorted.
    pub roots: &'static [RootConfig],
    /// Summary covariants expected to vanish (see [`super::Covariants4::named`]).
    pub vanishing: &'static [&'static str],
}

use RootConfig::{OneDouble as O, Quadruple as Q, Triple as T, TwoDoubles as W};

const CASES: [Case4; 11] = [
    Case4 {
        number: 1,
        graph: "empty",
        family: "fully factorized",
        roots: &[Q, Q, Q],
        vanishing: &["C", "D", "Gbar", "G", "H", "K3", "L"],
    },
    Case4 { number: 2, graph: "one edge", family: "EPR pair ⊗ two qubits", roots: &[Q, Q, Q], vanishing: &[] },
    Case4 { number: 3, graph: "path P3", family: "GHZ₃ ⊗ qubit", roots: &[Q, Q, Q], vanishing: &[] },
    Case4 {
        number: 4,
        graph: "two disjoint edges",
        family: "G_a000 (EPR ⊗ EPR)",
        roots: &[T, Q, Q],
        vanishing: &["D", "L"],
    },
    Case4 { number: 5, graph: "triangle", family: "GHZ₃ ⊗ qubit", roots: &[Q, Q, Q], vanishing: &[] },
    Case4 { number: 6, graph: "path P4", family: "G_ab00", roots: &[O, W, W], vanishing: &["K3", "L"] },
    Case4 {
        number: 7,
        graph: "star K1,3",
        family: "G_aa00 (B = L = M = 0)",
        roots: &[W, W, W],
        vanishing: &["K3", "L"],
    },
    Case4 { number: 8, graph: "paw", family: "G_ab00 (L = 0)", roots: &[O, W, W], vanishing: &["K3", "L"] },
    Case4 { number: 9, graph: "cycle C4", family: "G_ab00 (L = 0)", roots: &[O, W, W], vanishing: &["K3", "L"] },
    Case4 { number: 10, graph: "K4 minus an edge", family: "G_ab00", roots: &[O, W, W], vanishing: &["K3", "L"] },
    Case4 {
        number: 11,
        graph: "complete K4",
        family: "G_aa00",
        roots: &[W, W, W],
        vanishing: &["Gbar", "G", "H", "L"],
    },
];

impl Case4 {
    pub fn all() -> &'static [Case4; 11] {
        &CASES
    }

    pub fn get(number: u8) -> Option<&'static Case4> {
        CASES.iter().find(|c| c.number == number)
    }
}

impl fmt::Display for Case4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {} ({}): {}", self.number, self.graph, self.family)
    }
}

/// The graph type of a pair set on four qubits.
pub fn graph_case(e: &PairSet) -> Result<&'static Case4, EntangleError> {
    if e.k() != 4 {
        return Err(EntangleError::WrongQubitCount { expected: 4, got: e.k() });
    }
    let mut degrees: Vec<usize> = (0..4).map(|v| e.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let number = match (e.len(), degrees.as_slice()) {
        (0, _) => 1,
        (1, _) => 2,
        (2, [2, ..]) => 3,
        (2, _) => 4,
        (3, [2, 2, 2, 0]) => 5,
        (3, [3, ..]) => 7,
        (3, _) => 6,
        (4, [3, ..]) => 8,
        (4, _) => 9,
        (5, _) => 10,
        _ => 11,
    };
    Ok(Case4::get(number).expect("numbers 1..=11 exist"))
}

/// Expected vs. computed vanishing of one summary covariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CovariantCheck {
    pub name: &'static str,
    pub expected_zero: bool,
    pub is_zero: bool,
}

impl CovariantCheck {
    /// A covariant is only claimed to vanish; nonvanishing is not asserted.
    pub fn ok(&self) -> bool {
        !self.expected_zero || self.is_zero
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Case4Report {
    pub case: &'static Case4,
    pub pairs: PairSet,
    pub params: ParamSpec,
    /// Root configurations of `Q₁, Q₂, Q₃` in that order.
    pub roots: [RootConfig; 3],
    pub covariants: Vec<CovariantCheck>,
}

impl Case4Report {
    pub fn roots_match(&self) -> bool {
        let mut got = self.roots.to_vec();
        got.sort_unstable();
        let mut want = self.case.roots.to_vec();
        want.sort_unstable();
        got == want
    }

    pub fn covariants_match(&self) -> bool {
        self.covariants.iter().all(CovariantCheck::ok)
    }

    pub fn matches(&self) -> bool {
        self.roots_match() && self.covariants_match()
    }
}

impl fmt::Display for Case4Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "E = {}", self.pairs)?;
        writeln!(f, "{}", self.case)?;
        for (i, r) in self.roots.iter().enumerate() {
            writeln!(f, "Q{}: {r}", i + 1)?;
        }
        let zero: Vec<&str> = self.covariants.iter().filter(|c| c.is_zero).map(|c| c.name).collect();
        writeln!(f, "vanishing covariants: {}", if zero.is_empty() { "none".into() } else { zero.join(", ") })?;
        write!(f, "matches expectation: {}", if self.matches() { "yes" } else { "no" })
    }
}

/// Classifies `Z_E ⊗_q (p_q0|0⟩ + p_q1|1⟩)` on four qubits.
pub fn classify_phi4(e: &PairSet, params: &ParamSpec) -> Result<Case4Report, EntangleError> {
    let case = graph_case(e)?;
    let state = phi_state(e, params)?;
    let roots =
        quartics(&state)?.iter().map(root_config).collect::<Result<Vec<_>, _>>()?.try_into().expect("three quartics");
    let cov = covariants4(&state)?;
    let covariants = cov
        .named()
        .into_iter()
        .map(|(name, p)| CovariantCheck { name, expected_zero: case.vanishing.contains(&name), is_zero: p.is_zero() })
        .collect();
    Ok(Case4Report { case, pairs: *e, params: params.clone(), roots, covariants })
}

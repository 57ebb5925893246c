//! Gate-level circuits, their text format, and topology checks.
//!
//! Gates are stored in application order: `gates[0]` acts first on the ket,
//! so the circuit's operator is `G_{n−1} ⋯ G_1 G_0`. Qubit 0 is the least
//! significant bit of a basis index.
//!
//! Text format:
//!
//! ```text
//! qubits 3
//! # comment
//! swap 1 2
//! cz 0 1
//! h 0
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: qubit index {index} out of range for {k} qubits")]
    IndexOutOfRange { line: usize, index: usize, k: usize },
    #[error("line {line}: two-qubit gate acts twice on qubit {qubit}")]
    SameQubit { line: usize, qubit: usize },
    #[error("missing \"qubits <k>\" header")]
    MissingHeader,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gate {
    Cz(usize, usize),
    Swap(usize, usize),
    H(usize),
    X(usize),
}

impl Gate {
    /// Canonical two-qubit gates (`i < j`); single-qubit gates are unchanged.
    pub fn cz(i: usize, j: usize) -> Self {
        Gate::Cz(i.min(j), i.max(j))
    }

    pub fn swap(i: usize, j: usize) -> Self {
        Gate::Swap(i.min(j), i.max(j))
    }

    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::Cz(i, j) | Gate::Swap(i, j) => vec![i, j],
            Gate::H(i) | Gate::X(i) => vec![i],
        }
    }

    pub fn is_two_qubit(&self) -> bool {
        matches!(self, Gate::Cz(..) | Gate::Swap(..))
    }

    fn canonical(self) -> Self {
        match self {
            Gate::Cz(i, j) => Gate::cz(i, j),
            Gate::Swap(i, j) => Gate::swap(i, j),
            g => g,
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.canonical() {
            Gate::Cz(i, j) => write!(f, "cz {i} {j}"),
            Gate::Swap(i, j) => write!(f, "swap {i} {j}"),
            Gate::H(i) => write!(f, "h {i}"),
            Gate::X(i) => write!(f, "x {i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circuit {
    k: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(k: usize) -> Self {
        Self { k, gates: Vec::new() }
    }

    /// Builds a circuit, validating and canonicalizing every gate.
    pub fn from_gates(k: usize, gates: impl IntoIterator<Item = Gate>) -> Result<Self, CircuitError> {
        let mut c = Self::new(k);
        for (n, g) in gates.into_iter().enumerate() {
            c.push_checked(g, n + 1)?;
        }
        Ok(c)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, g: Gate) -> Result<(), CircuitError> {
        self.push_checked(g, self.gates.len() + 1)
    }

    fn push_checked(&mut self, g: Gate, line: usize) -> Result<(), CircuitError> {
        let qs = g.qubits();
        if let Some(&index) = qs.iter().find(|&&q| q >= self.k) {
            return Err(CircuitError::IndexOutOfRange { line, index, k: self.k });
        }
        if qs.len() == 2 && qs[0] == qs[1] {
            return Err(CircuitError::SameQubit { line, qubit: qs[0] });
        }
        self.gates.push(g.canonical());
        Ok(())
    }

    /// True when only CZ and SWAP gates occur.
    pub fn is_czs(&self) -> bool {
        self.gates.iter().all(Gate::is_two_qubit)
    }

    pub fn count_cz(&self) -> usize {
        self.gates.iter().filter(|g| matches!(g, Gate::Cz(..))).count()
    }

    pub fn count_swap(&self) -> usize {
        self.gates.iter().filter(|g| matches!(g, Gate::Swap(..))).count()
    }
}

/// Parses the circuit text format.
pub fn parse_circuit(text: &str) -> Result<Circuit, CircuitError> {
    let mut circuit: Option<Circuit> = None;
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        let syntax = |message: String| CircuitError::Syntax { line, message };
        let index = |t: &str| t.parse::<usize>().map_err(|_| syntax(format!("expected a qubit index, found {t:?}")));
        let Some(c) = circuit.as_mut() else {
            match toks[..] {
                ["qubits", k] => {
                    let k = k.parse::<usize>().map_err(|_| syntax(format!("bad qubit count {k:?}")))?;
                    if k == 0 {
                        return Err(syntax("qubit count must be positive".into()));
                    }
                    circuit = Some(Circuit::new(k));
                    continue;
                }
                _ => return Err(CircuitError::MissingHeader),
            }
        };
        let gate = match (toks[0].to_ascii_lowercase().as_str(), &toks[1..]) {
            ("cz", [a, b]) => Gate::Cz(index(a)?, index(b)?),
            ("swap", [a, b]) => Gate::Swap(index(a)?, index(b)?),
            ("h", [a]) => Gate::H(index(a)?),
            ("x", [a]) => Gate::X(index(a)?),
            ("cz" | "swap", args) => {
                return Err(syntax(format!("{} expects 2 qubit indices, got {}", toks[0], args.len())))
            }
            ("h" | "x", args) => return Err(syntax(format!("{} expects 1 qubit index, got {}", toks[0], args.len()))),
            ("qubits", _) => return Err(syntax("duplicate qubits header".into())),
            (other, _) => return Err(syntax(format!("unknown gate {other:?}"))),
        };
        c.push_checked(gate, line)?;
    }
    circuit.ok_or(CircuitError::MissingHeader)
}

/// Canonical text: header, one lower-case gate per line, `i < j`, trailing newline.
pub fn serialize_circuit(c: &Circuit) -> String {
    let mut out = format!("qubits {}\n", c.k);
    for g in &c.gates {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

impl FromStr for Circuit {
    type Err = CircuitError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_circuit(s)
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_circuit(self))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Topology {
    Complete,
    Line,
}

impl FromStr for Topology {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "complete" => Ok(Topology::Complete),
            "line" => Ok(Topology::Line),
            other => Err(format!("unknown topology {other:?} (expected complete or line)")),
        }
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Topology::Complete => "complete",
            Topology::Line => "line",
        })
    }
}

/// A two-qubit gate that acts on non-adjacent qubits under [`Topology::Line`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Position of the gate in the circuit.
    pub position: usize,
    pub gate: Gate,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gate {} ({}) acts on non-adjacent qubits", self.position, self.gate)
    }
}

pub fn check_topology(c: &Circuit, t: Topology) -> Vec<Violation> {
    match t {
        Topology::Complete => Vec::new(),
        Topology::Line => c
            .gates
            .iter()
            .enumerate()
            .filter(|(_, g)| matches!(g, Gate::Cz(i, j) | Gate::Swap(i, j) if j - i != 1))
            .map(|(position, &gate)| Violation { position, gate })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_simple_circuits() {
        let c = parse_circuit("qubits 2\ncz 0 1").unwrap();
        assert_eq!(c.k(), 2);
        assert_eq!(c.gates(), &[Gate::Cz(0, 1)]);
        let c = parse_circuit("qubits 3\nswap 1 2\nh 0").unwrap();
        assert_eq!(c.gates(), &[Gate::Swap(1, 2), Gate::H(0)]);
    }

    #[test]
    fn reports_errors_with_lines() {
        assert!(matches!(
            parse_circuit("qubits 2\ncz 0 2"),
            Err(CircuitError::IndexOutOfRange { line: 2, index: 2, k: 2 })
        ));
        assert!(matches!(parse_circuit("qubits 2\nswap 1 1"), Err(CircuitError::SameQubit { line: 2, .. })));
        assert!(matches!(parse_circuit("qubits 2\n\nfoo 1"), Err(CircuitError::Syntax { line: 3, .. })));
        assert!(matches!(parse_circuit("cz 0 1"), Err(CircuitError::MissingHeader)));
        assert!(matches!(parse_circuit(""), Err(CircuitError::MissingHeader)));
    }

    #[test]
    fn comments_and_blank_lines() {
        let c = parse_circuit("# header comment\nqubits 2 # two\n\ncz 1 0 # flipped\n").unwrap();
        assert_eq!(serialize_circuit(&c), "qubits 2\ncz 0 1\n");
    }

    #[test]
    fn serialize_empty() {
        assert_eq!(serialize_circuit(&Circuit::new(3)), "qubits 3\n");
    }

    #[test]
    fn topology_checks() {
        let c = parse_circuit("qubits 3\ncz 0 2").unwrap();
        assert_eq!(check_topology(&c, Topology::Line).len(), 1);
        assert!(check_topology(&c, Topology::Complete).is_empty());
        let c = parse_circuit("qubits 3\nswap 1 2\ncz 0 1").unwrap();
        assert!(check_topology(&c, Topology::Line).is_empty());
    }
}

use std::fmt;

use crate::circuit::{Circuit, Gate};
use crate::group::NormalForm;

use super::OptimizeError;

/// Kind of a line generator. `S` sorts before `Z`, which fixes the
/// lexicographic order used for tie-breaking.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterKind {
    S,
    Z,
}

/// A line generator: `s_i` is SWAP(i, i+1) and `z_i` is CZ(i, i+1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub kind: LetterKind,
    pub index: usize,
}

impl Letter {
    pub const fn s(index: usize) -> Self {
        Self { kind: LetterKind::S, index }
    }

    pub const fn z(index: usize) -> Self {
        Self { kind: LetterKind::Z, index }
    }

    pub fn gate(self) -> Gate {
        match self.kind {
            LetterKind::S => Gate::Swap(self.index, self.index + 1),
            LetterKind::Z => Gate::Cz(self.index, self.index + 1),
        }
    }

    /// The letter for a gate on adjacent qubits.
    pub fn from_gate(g: Gate) -> Option<Self> {
        match g {
            Gate::Swap(i, j) if j == i + 1 => Some(Self::s(i)),
            Gate::Cz(i, j) if j == i + 1 => Some(Self::z(i)),
            _ => None,
        }
    }

    pub fn normal_form(self, k: usize) -> NormalForm {
        let i = self.index;
        match self.kind {
            LetterKind::S => NormalForm::swap(k, i, i + 1),
            LetterKind::Z => NormalForm::cz(k, i, i + 1),
        }
        .expect("letter index validated against k")
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LetterKind::S => write!(f, "s{}", self.index),
            LetterKind::Z => write!(f, "z{}", self.index),
        }
    }
}

/// A word over the line alphabet, read as an operator product: the word
/// `a b c` denotes `A·B·C`, so `c` acts first on a ket.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorWord {
    k: usize,
    letters: Vec<Letter>,
}

impl GeneratorWord {
    pub fn new(k: usize, letters: Vec<Letter>) -> Result<Self, OptimizeError> {
        if let Some(l) = letters.iter().find(|l| l.index + 1 >= k) {
            return Err(OptimizeError::LetterOutOfRange { letter: l.to_string(), k });
        }
        Ok(Self { k, letters })
    }

    pub fn empty(k: usize) -> Self {
        Self { k, letters: Vec::new() }
    }

    /// Parses whitespace-separated tokens such as `s0 z1 s2`.
    pub fn parse(k: usize, text: &str) -> Result<Self, OptimizeError> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                let bad = || OptimizeError::BadLetter(tok.to_string());
                let mut chars = tok.chars();
                let head = chars.next().ok_or_else(bad)?;
                let index = chars.as_str().parse::<usize>().map_err(|_| bad())?;
                match head {
                    's' | 'S' => Ok(Letter::s(index)),
                    'z' | 'Z' => Ok(Letter::z(index)),
                    _ => Err(bad()),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(k, letters)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The group element `L₀·L₁⋯L_{n−1}`.
    pub fn evaluate(&self) -> NormalForm {
        evaluate_letters(self.k, &self.letters)
    }

    /// Every generator is an involution, so the inverse is the reversal.
    pub fn inverse(&self) -> Self {
        Self { k: self.k, letters: self.letters.iter().rev().copied().collect() }
    }

    /// The circuit in application order (the last letter becomes the first gate).
    pub fn to_circuit(&self) -> Circuit {
        Circuit::from_gates(self.k, self.letters.iter().rev().map(|l| l.gate())).expect("letters validated against k")
    }

    /// Reads a line-topology CZ/SWAP circuit as a word.
    pub fn from_circuit(c: &Circuit) -> Result<Self, OptimizeError> {
        let letters = c
            .gates()
            .iter()
            .rev()
            .map(|&g| Letter::from_gate(g).ok_or(OptimizeError::NotALineGate(g)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { k: c.k(), letters })
    }
}

pub(crate) fn evaluate_letters(k: usize, letters: &[Letter]) -> NormalForm {
    letters
        .iter()
        .fold(NormalForm::identity(k).expect("valid k"), |acc, l| acc.product(&l.normal_form(k)).expect("same k"))
}

impl fmt::Display for GeneratorWord {
    /// Space-separated letters; the empty word prints as nothing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        f.write_str(&toks.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display_round_trip() {
        let w = GeneratorWord::parse(5, "z0 z3 s1 s0 z1 z3 s0").unwrap();
        assert_eq!(w.len(), 7);
        assert_eq!(w.to_string(), "z0 z3 s1 s0 z1 z3 s0");
        assert!(GeneratorWord::parse(3, "s2").is_err());
        assert!(GeneratorWord::parse(3, "q0").is_err());
        assert!(GeneratorWord::parse(3, "s").is_err());
    }

    #[test]
    fn circuit_conversion_reverses_order() {
        let w = GeneratorWord::parse(3, "s0 z1").unwrap();
        let c = w.to_circuit();
        assert_eq!(c.gates(), &[Gate::Cz(1, 2), Gate::Swap(0, 1)]);
        assert_eq!(GeneratorWord::from_circuit(&c).unwrap(), w);
    }

    #[test]
    fn letters_are_involutions() {
        let w = GeneratorWord::parse(4, "s1 s1 z2 z2").unwrap();
        assert!(w.evaluate().is_identity());
    }
}

use std::collections::BTreeSet;

use super::word::{evaluate_letters, GeneratorWord, Letter, LetterKind};
use super::OptimizeError;

/// Which presentation of the group a relator list comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Presentation {
    /// Line generators `z_i`, `s_i` with the Coxeter relations plus the
    /// exchange relation `s_i s_{i+1} z_i s_{i+1} s_i z_{i+1}`.
    Line,
    /// `k` generators `g_0 = z_0`, `g_{i+1} = s_i`, Coxeter relations plus
    /// `(g_0 g_2 g_3 g_1 g_2)^4` when `k ≥ 4`.
    Compact,
}

fn power(base: &[Letter], e: usize) -> Vec<Letter> {
    base.iter().copied().cycle().take(base.len() * e).collect()
}

/// Coxeter exponent `m(a, b)` of the line generators: 4 for `z_i` against
/// `s_{i±1}`, 3 for neighbouring `s`, 1 on the diagonal, 2 otherwise.
pub fn coxeter_exponent(a: Letter, b: Letter) -> usize {
    use LetterKind::{S, Z};
    if a == b {
        return 1;
    }
    let adjacent = a.index.abs_diff(b.index) == 1;
    match (a.kind, b.kind) {
        (S, S) if adjacent => 3,
        (Z, S) | (S, Z) if adjacent => 4,
        _ => 2,
    }
}

/// The defining relators (before cyclic closure) of a presentation for `k` qubits.
pub fn base_relators(k: usize, which: Presentation) -> Vec<GeneratorWord> {
    let n = k.saturating_sub(1);
    let mut out: Vec<Vec<Letter>> = Vec::new();
    match which {
        Presentation::Line => {
            let letters: Vec<Letter> = (0..n).map(Letter::s).chain((0..n).map(Letter::z)).collect();
            for (x, &a) in letters.iter().enumerate() {
                for &b in &letters[x..] {
                    out.push(power(&[a, b], coxeter_exponent(a, b)));
                }
            }
            for i in 0..n.saturating_sub(1) {
                out.push(vec![
                    Letter::s(i),
                    Letter::s(i + 1),
                    Letter::z(i),
                    Letter::s(i + 1),
                    Letter::s(i),
                    Letter::z(i + 1),
                ]);
            }
        }
        Presentation::Compact => {
            let g = |i: usize| if i == 0 { Letter::z(0) } else { Letter::s(i - 1) };
            for i in 0..k {
                out.push(vec![g(i), g(i)]);
            }
            for i in 1..k {
                for j in i + 2..k {
                    out.push(power(&[g(i), g(j)], 2));
                }
            }
            for i in 1..k.saturating_sub(1) {
                out.push(power(&[g(i), g(i + 1)], 3));
            }
            for i in (1..k).filter(|&i| i != 2) {
                out.push(power(&[g(0), g(i)], 2));
            }
            if k >= 3 {
                out.push(power(&[g(0), g(2)], 4));
            }
            if k >= 4 {
                out.push(power(&[g(0), g(2), g(3), g(1), g(2)], 4));
            }
        }
    }
    out.into_iter().map(|w| GeneratorWord::new(k, w).expect("indices below k-1")).collect()
}

/// Relators closed under cyclic shift and inversion, sorted lexicographically.
#[derive(Clone, Debug)]
pub struct RelationSet {
    k: usize,
    relators: Vec<Vec<Letter>>,
}

impl RelationSet {
    /// The reduction relator set for the line alphabet.
    pub fn line(k: usize) -> Result<Self, OptimizeError> {
        Self::from_relators(k, &base_relators(k, Presentation::Line))
    }

    /// Closes `base` under cyclic shifts and inverses, checking that every
    /// relator evaluates to the identity.
    pub fn from_relators(k: usize, base: &[GeneratorWord]) -> Result<Self, OptimizeError> {
        let mut set = BTreeSet::new();
        for w in base {
            if w.k() != k {
                return Err(OptimizeError::QubitMismatch { left: k, right: w.k() });
            }
            if !w.evaluate().is_identity() {
                return Err(OptimizeError::NotARelator(w.to_string()));
            }
            for word in [w.letters().to_vec(), w.inverse().letters().to_vec()] {
                for shift in 0..word.len() {
                    let mut r = word.clone();
                    r.rotate_left(shift);
                    set.insert(r);
                }
            }
        }
        let relators: Vec<Vec<Letter>> = set.into_iter().collect();
        debug_assert!(relators.iter().all(|r| evaluate_letters(k, r).is_identity()));
        Ok(Self { k, relators })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.relators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relators.is_empty()
    }

    /// Relators in lexicographic order.
    pub fn relators(&self) -> &[Vec<Letter>] {
        &self.relators
    }
}

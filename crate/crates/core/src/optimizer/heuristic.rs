//! Bounded best-first search over relator rewrites for line-topology words.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use super::relations::RelationSet;
use super::word::{GeneratorWord, Letter};
use super::OptimizeError;

/// Default number of node expansions.
pub const DEFAULT_BUDGET: usize = 10_000;

/// All words reachable from `w` by one move: cancelling an adjacent pair, a
/// Dehn step at any position, or a length-preserving half-relator rewrite
/// (commutations, braid moves, and the `s_i z_{i+1} s_i = s_{i+1} z_i s_{i+1}`
/// exchange family).
fn neighbours(w: &[Letter], r: &RelationSet) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    for p in 0..w.len().saturating_sub(1) {
        if w[p] == w[p + 1] {
            let mut n = w[..p].to_vec();
            n.extend_from_slice(&w[p + 2..]);
            out.push(n);
        }
    }
    for p in 0..w.len() {
        for rel in r.relators() {
            let n = rel.len();
            let matched = w[p..].iter().zip(rel).take_while(|(a, b)| a == b).count();
            let u = if 2 * matched > n {
                matched
            } else if n % 2 == 0 && n > 2 && matched == n / 2 {
                n / 2
            } else {
                continue;
            };
            let mut next = w[..p].to_vec();
            next.extend(rel[u..].iter().rev());
            next.extend_from_slice(&w[p + u..]);
            if next != w {
                out.push(next);
            }
        }
    }
    out
}

/// Best-first search on `(length, letters)` with a visited set, expanding at
/// most `budget` words. Returns the shortest word found (ties broken
/// lexicographically), or `w` itself when nothing shorter turns up.
pub fn heuristic_line_reduce(
    w: &GeneratorWord,
    r: &RelationSet,
    budget: usize,
) -> Result<GeneratorWord, OptimizeError> {
    if w.k() != r.k() {
        return Err(OptimizeError::QubitMismatch { left: w.k(), right: r.k() });
    }
    let start = w.letters().to_vec();
    let mut best = start.clone();
    let mut seen: HashSet<Vec<Letter>> = HashSet::from([start.clone()]);
    let mut heap = BinaryHeap::from([Reverse((start.len(), start))]);
    let mut expansions = 0;
    while let Some(Reverse((len, cur))) = heap.pop() {
        if (len, &cur) < (best.len(), &best) {
            best = cur.clone();
        }
        if best.is_empty() || expansions >= budget {
            break;
        }
        expansions += 1;
        for next in neighbours(&cur, r) {
            if seen.insert(next.clone()) {
                heap.push(Reverse((next.len(), next)));
            }
        }
    }
    if best.len() < w.len() {
        GeneratorWord::new(w.k(), best)
    } else {
        Ok(w.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_budget_returns_input() {
        let r = RelationSet::line(4).unwrap();
        let w = GeneratorWord::parse(4, "s0 s1 s0").unwrap();
        assert_eq!(heuristic_line_reduce(&w, &r, 0).unwrap(), w);
    }

    #[test]
    fn finds_hidden_cancellation() {
        let r = RelationSet::line(4).unwrap();
        let w = GeneratorWord::parse(4, "z2 s0 z2").unwrap();
        assert_eq!(heuristic_line_reduce(&w, &r, 100).unwrap().to_string(), "s0");
    }
}

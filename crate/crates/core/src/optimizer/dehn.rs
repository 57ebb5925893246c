//! Dehn's algorithm over the full relator set, interleaved with free
//! reduction and Coxeter-style cancellation.

use std::collections::{HashSet, VecDeque};

use super::relations::{coxeter_exponent, RelationSet};
use super::word::{GeneratorWord, Letter};
use super::OptimizeError;

/// Cap on the number of words explored when searching a braid class.
const BRAID_CLASS_CAP: usize = 20_000;

/// Cancels adjacent equal letters until none remain.
pub fn free_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn common_prefix(a: &[Letter], b: &[Letter]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// One Dehn step: at the leftmost position where some relator `uv` has its
/// prefix `u` (`|u| > |v|`) as a factor, replace `u` by `v⁻¹`. Among relators
/// matching at that position the longest match wins, then the
/// lexicographically smallest relator.
pub fn dehn_step(w: &[Letter], r: &RelationSet) -> Option<Vec<Letter>> {
    for p in 0..w.len() {
        let mut best: Option<(usize, &[Letter])> = None;
        for rel in r.relators() {
            let l = common_prefix(&w[p..], rel);
            if 2 * l > rel.len() && best.is_none_or(|(bl, _)| l > bl) {
                best = Some((l, rel));
            }
        }
        if let Some((l, rel)) = best {
            let mut out = w[..p].to_vec();
            out.extend(rel[l..].iter().rev());
            out.extend_from_slice(&w[p + l..]);
            return Some(out);
        }
    }
    None
}

/// Applies one braid move `aba… → bab…` (of length `m(a, b)`) at `p`, if possible.
fn braid_at(w: &[Letter], p: usize) -> Option<Vec<Letter>> {
    let (a, b) = (*w.get(p)?, *w.get(p + 1)?);
    if a == b {
        return None;
    }
    let m = coxeter_exponent(a, b);
    if p + m > w.len() {
        return None;
    }
    let alternates = (0..m).all(|t| w[p + t] == if t % 2 == 0 { a } else { b });
    if !alternates {
        return None;
    }
    let mut out = w.to_vec();
    for t in 0..m {
        out[p + t] = if t % 2 == 0 { b } else { a };
    }
    Some(out)
}

/// Searches the braid class of `w` (commutations and braid relations of the
/// underlying Coxeter group) for a word containing `gg`, and returns that
/// word with the pair cancelled.
pub fn coxeter_cancel(w: &[Letter]) -> Option<Vec<Letter>> {
    let mut seen: HashSet<Vec<Letter>> = HashSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(cur) = queue.pop_front() {
        if let Some(p) = cur.windows(2).position(|x| x[0] == x[1]) {
            let mut out = cur[..p].to_vec();
            out.extend_from_slice(&cur[p + 2..]);
            return Some(out);
        }
        for p in 0..cur.len().saturating_sub(1) {
            if let Some(next) = braid_at(&cur, p) {
                if seen.len() >= BRAID_CLASS_CAP {
                    return None;
                }
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    None
}

/// Reduces `w` by Dehn steps with free reduction in between; when no Dehn
/// step applies, tries a Coxeter cancellation and resumes.
///
/// The result is a Dehn fixpoint, never longer than the input, and denotes
/// the same group element.
pub fn dehn_reduce(w: &GeneratorWord, r: &RelationSet) -> Result<GeneratorWord, OptimizeError> {
    if w.k() != r.k() {
        return Err(OptimizeError::QubitMismatch { left: w.k(), right: r.k() });
    }
    let mut cur = free_reduce(w.letters());
    loop {
        if let Some(next) = dehn_step(&cur, r) {
            cur = free_reduce(&next);
        } else if let Some(next) = coxeter_cancel(&cur) {
            cur = free_reduce(&next);
        } else {
            break;
        }
    }
    GeneratorWord::new(w.k(), cur)
}

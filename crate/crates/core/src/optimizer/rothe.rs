//! Reduced words for permutations read off the Rothe diagram.

use crate::group::Permutation;

use super::word::{GeneratorWord, Letter};

/// Cells `(r, c)` of the Rothe diagram of `σ`: those with `(r, σ⁻¹(c))` an
/// inversion of `σ`, i.e. `r < σ⁻¹(c)` and `σ(r) > c`.
pub fn rothe_diagram(sigma: &Permutation) -> Vec<(usize, usize)> {
    let inv = sigma.inverse();
    let k = sigma.k();
    (0..k).flat_map(|r| (0..k).map(move |c| (r, c))).filter(|&(r, c)| r < inv.apply(c) && sigma.apply(r) > c).collect()
}

/// A reduced word for `σ` over `{s_i}`.
///
/// The top cell of each column is labelled with the column index and the
/// labels increase by one going down; the labels are then read right to
/// left, top to bottom.
pub fn rothe_reduced_word(sigma: &Permutation) -> GeneratorWord {
    let k = sigma.k();
    let cells = rothe_diagram(sigma);
    let label = |r: usize, c: usize| c + cells.iter().filter(|&&(r2, c2)| c2 == c && r2 < r).count();
    let mut letters = Vec::with_capacity(cells.len());
    for r in 0..k {
        for c in (0..k).rev() {
            if cells.contains(&(r, c)) {
                letters.push(Letter::s(label(r, c)));
            }
        }
    }
    GeneratorWord::new(k, letters).expect("labels stay below k-1")
}

use std::fmt;

use super::{GroupError, Permutation};

/// Largest qubit count supported by [`PairSet`]'s 128-bit storage.
pub const MAX_QUBITS: usize = 16;

/// Bit position of the unordered pair `{i, j}`, `i < j`.
///
/// The index does not depend on `k`, so sets embed naturally into larger
/// qubit counts.
fn pair_bit(i: usize, j: usize) -> u32 {
    debug_assert!(i < j);
    (j * (j - 1) / 2 + i) as u32
}

fn bit_pair(bit: u32) -> (usize, usize) {
    let mut j = 1usize;
    while j * (j + 1) / 2 <= bit as usize {
        j += 1;
    }
    (bit as usize - j * (j - 1) / 2, j)
}

/// A set `E` of unordered qubit pairs; the group law is symmetric difference.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairSet {
    k: usize,
    bits: u128,
}

impl PairSet {
    pub fn empty(k: usize) -> Result<Self, GroupError> {
        if k > MAX_QUBITS {
            return Err(GroupError::TooManyQubits { k, max: MAX_QUBITS });
        }
        Ok(Self { k, bits: 0 })
    }

    /// Builds a set from pairs in either order; duplicates cancel (they are
    /// read as a product of `Z_{ij}` factors).
    pub fn from_pairs(k: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GroupError> {
        let mut s = Self::empty(k)?;
        for (i, j) in pairs {
            s.toggle(i, j)?;
        }
        Ok(s)
    }

    /// All `k(k−1)/2` pairs.
    pub fn complete(k: usize) -> Result<Self, GroupError> {
        Self::from_pairs(k, (0..k).flat_map(|j| (0..j).map(move |i| (i, j))))
    }

    /// Decodes a bit mask over pairs ordered as in [`PairSet::pairs`] of the complete set.
    pub fn from_mask(k: usize, mask: u128) -> Result<Self, GroupError> {
        let mut s = Self::empty(k)?;
        for (b, (i, j)) in Self::complete(k)?.pairs().enumerate() {
            if mask >> b & 1 == 1 {
                s.toggle(i, j)?;
            }
        }
        Ok(s)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        if i == j || i >= self.k || j >= self.k {
            return false;
        }
        let (a, b) = (i.min(j), i.max(j));
        self.bits >> pair_bit(a, b) & 1 == 1
    }

    pub fn toggle(&mut self, i: usize, j: usize) -> Result<(), GroupError> {
        if i == j {
            return Err(GroupError::DegeneratePair(i));
        }
        if i >= self.k || j >= self.k {
            return Err(GroupError::IndexOutOfRange { index: i.max(j), k: self.k });
        }
        self.bits ^= 1u128 << pair_bit(i.min(j), i.max(j));
        Ok(())
    }

    /// Pairs `(i, j)` with `i < j`, sorted by `(i, j)`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let mut v: Vec<(usize, usize)> = self.raw_pairs().collect();
        v.sort_unstable();
        v.into_iter()
    }

    /// Pairs in storage order (sorted by larger element).
    fn raw_pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let b = bits.trailing_zeros();
            bits &= bits - 1;
            Some(bit_pair(b))
        })
    }

    /// `E ⊕ E′`.
    pub fn symmetric_difference(&self, other: &Self) -> Result<Self, GroupError> {
        if self.k != other.k {
            return Err(GroupError::QubitMismatch { left: self.k, right: other.k });
        }
        Ok(Self { k: self.k, bits: self.bits ^ other.bits })
    }

    /// Degree of vertex `v` in the graph `E`.
    pub fn degree(&self, v: usize) -> usize {
        self.pairs().filter(|&(i, j)| i == v || j == v).count()
    }

    /// Complement with respect to the complete graph on `k` vertices.
    pub fn complement(&self) -> Self {
        let full = Self::complete(self.k).expect("k already validated");
        Self { k: self.k, bits: self.bits ^ full.bits }
    }

    /// Parses `"01,12"` style lists (also accepts `0-1` tokens); empty text or
    /// `none` is the empty set.
    pub fn parse(k: usize, text: &str) -> Result<Self, GroupError> {
        let t = text.trim();
        if t.is_empty() || t == "none" || t == "{}" {
            return Self::empty(k);
        }
        let bad = || GroupError::BadPairList(text.to_string());
        let mut pairs = Vec::new();
        for tok in t.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (a, b) = if let Some((a, b)) = tok.split_once('-') {
                (a.parse::<usize>().map_err(|_| bad())?, b.parse::<usize>().map_err(|_| bad())?)
            } else {
                let digits: Vec<usize> =
                    tok.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>().ok_or_else(bad)?;
                match digits[..] {
                    [a, b] => (a, b),
                    _ => return Err(bad()),
                }
            };
            pairs.push((a, b));
        }
        Self::from_pairs(k, pairs)
    }
}

/// `σ(E) = { {σ(i), σ(j)} : {i, j} ∈ E }`.
pub fn conjugate_pairs(sigma: &Permutation, e: &PairSet) -> Result<PairSet, GroupError> {
    if sigma.k() != e.k() {
        return Err(GroupError::QubitMismatch { left: sigma.k(), right: e.k() });
    }
    let mut bits = 0u128;
    for (i, j) in e.raw_pairs() {
        let (a, b) = (sigma.apply(i), sigma.apply(j));
        bits |= 1u128 << pair_bit(a.min(b), a.max(b));
    }
    Ok(PairSet { k: e.k(), bits })
}

impl fmt::Display for PairSet {
    /// `{}` or `{01,12}` style (labels joined with commas when any exceeds 9).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.k > 10;
        let items: Vec<String> =
            self.pairs().map(|(i, j)| if wide { format!("{i}-{j}") } else { format!("{i}{j}") }).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

use std::fmt;
use std::str::FromStr;

use super::GroupError;

/// A permutation of `{0, …, k−1}` stored by images: `images[i] = σ(i)`.
///
/// Composition follows `(σ∘τ)(i) = σ(τ(i))`; this convention is used
/// consistently by normal forms, words, and the matrix oracle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Self { images: (0..k).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &x in &images {
            if x >= k || seen[x] {
                return Err(GroupError::NotABijection(images.clone()));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation from disjoint cycles, e.g. `[[0, 3], [2, 4]]`.
    pub fn from_cycles(k: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..k).collect();
        let mut touched = vec![false; k];
        for cycle in cycles {
            for (pos, &x) in cycle.iter().enumerate() {
                if x >= k {
                    return Err(GroupError::IndexOutOfRange { index: x, k });
                }
                if touched[x] {
                    return Err(GroupError::CyclesNotDisjoint(x));
                }
                touched[x] = true;
                images[x] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    pub fn transposition(k: usize, i: usize, j: usize) -> Result<Self, GroupError> {
        if i >= k || j >= k {
            return Err(GroupError::IndexOutOfRange { index: i.max(j), k });
        }
        let mut images: Vec<usize> = (0..k).collect();
        images.swap(i, j);
        Ok(Self { images })
    }

    pub fn k(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`, i.e. `other` acts first.
    pub fn compose(&self, other: &Self) -> Result<Self, GroupError> {
        if self.k() != other.k() {
            return Err(GroupError::QubitMismatch { left: self.k(), right: other.k() });
        }
        Ok(Self { images: other.images.iter().map(|&x| self.images[x]).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.k()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Self { images }
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest element,
    /// ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.k()];
        let mut out = Vec::new();
        for start in 0..self.k() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Number of pairs `i < j` with `σ(i) > σ(j)`.
    pub fn inversions(&self) -> usize {
        let n = self.k();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.images[i] > self.images[j]).count()
    }

    /// Order of the permutation (lcm of cycle lengths).
    pub fn order(&self) -> usize {
        self.cycles().iter().map(Vec::len).fold(1, num_integer::lcm)
    }

    /// Parses cycle notation such as `(0,3)(2,4)` or `()` for the identity.
    pub fn parse_cycles(k: usize, text: &str) -> Result<Self, GroupError> {
        let bad = || GroupError::BadCycleNotation(text.to_string());
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() || t == "()" || t == "id" {
            return Ok(Self::identity(k));
        }
        let mut cycles = Vec::new();
        for chunk in t.split(')') {
            if chunk.is_empty() {
                continue;
            }
            let body = chunk.strip_prefix('(').ok_or_else(bad)?;
            let cycle =
                body.split(',').map(|x| x.parse::<usize>().map_err(|_| bad())).collect::<Result<Vec<_>, _>>()?;
            cycles.push(cycle);
        }
        Self::from_cycles(k, &cycles)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = GroupError;

    /// Parses a whitespace- or comma-separated image list, e.g. `1 0 2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let images = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| GroupError::BadCycleNotation(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_images(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_applies_right_factor_first() {
        let a = Permutation::transposition(3, 0, 1).unwrap();
        let b = Permutation::transposition(3, 1, 2).unwrap();
        let ab = a.compose(&b).unwrap();
        // b sends 2 -> 1, then a sends 1 -> 0
        assert_eq!(ab.apply(2), 0);
    }

    #[test]
    fn cycles_round_trip() {
        let p = Permutation::parse_cycles(5, "(0,3)(2,4)").unwrap();
        assert_eq!(p.images(), &[3, 1, 4, 0, 2]);
        assert_eq!(p.to_string(), "(0,3)(2,4)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn inverse_and_inversions() {
        let p = Permutation::from_images(vec![2, 0, 1]).unwrap();
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert_eq!(p.inversions(), 2);
        assert_eq!(p.order(), 3);
    }
}

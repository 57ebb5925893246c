//! Breadth-first enumeration of the group's Cayley graph for `k ≤ 5`.

use std::collections::{HashMap, VecDeque};

use crate::circuit::{Gate, Topology};
use crate::group::{NormalForm, PairSet, Permutation};

use super::SimError;

/// Largest qubit count for which the full group is enumerated (122880 elements).
pub const MAX_ENUM_QUBITS: usize = 5;

const fn pair_bit(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// Compact element used during the search: pair bits plus image array.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Packed {
    phase: u16,
    perm: [u8; MAX_ENUM_QUBITS],
}

impl Packed {
    fn identity() -> Self {
        Self { phase: 0, perm: [0, 1, 2, 3, 4] }
    }

    fn key(&self) -> u32 {
        self.perm.iter().enumerate().fold(self.phase as u32, |acc, (i, &p)| acc | (p as u32) << (10 + 3 * i))
    }

    fn from_key(key: u32) -> Self {
        let mut perm = [0u8; MAX_ENUM_QUBITS];
        for (i, p) in perm.iter_mut().enumerate() {
            *p = (key >> (10 + 3 * i) & 7) as u8;
        }
        Self { phase: (key & 0x3ff) as u16, perm }
    }

    fn conj(perm: &[u8; MAX_ENUM_QUBITS], phase: u16) -> u16 {
        let mut out = 0u16;
        for j in 1..MAX_ENUM_QUBITS {
            for i in 0..j {
                if phase >> pair_bit(i, j) & 1 == 1 {
                    let (a, b) = (perm[i] as usize, perm[j] as usize);
                    out |= 1 << pair_bit(a.min(b), a.max(b));
                }
            }
        }
        out
    }

    fn product(&self, other: &Self) -> Self {
        let mut perm = [0u8; MAX_ENUM_QUBITS];
        for (i, p) in perm.iter_mut().enumerate() {
            *p = self.perm[other.perm[i] as usize];
        }
        Self { phase: self.phase ^ Self::conj(&self.perm, other.phase), perm }
    }

    fn from_nf(nf: &NormalForm) -> Self {
        let mut p = Self::identity();
        for (i, &x) in nf.perm().images().iter().enumerate() {
            p.perm[i] = x as u8;
        }
        p.phase = nf.phase().pairs().fold(0, |acc, (i, j)| acc | 1 << pair_bit(i, j));
        p
    }

    fn to_nf(self, k: usize) -> NormalForm {
        let pairs = (1..k).flat_map(|j| (0..j).map(move |i| (i, j)));
        let phase =
            PairSet::from_pairs(k, pairs.filter(|&(i, j)| self.phase >> pair_bit(i, j) & 1 == 1)).expect("k ≤ 5");
        let perm = Permutation::from_images(self.perm[..k].iter().map(|&x| x as usize).collect())
            .expect("stored images form a bijection");
        NormalForm::new(phase, perm).expect("same k")
    }

    fn of_gate(g: Gate) -> Self {
        let mut p = Self::identity();
        match g {
            Gate::Cz(i, j) => p.phase = 1 << pair_bit(i, j),
            Gate::Swap(i, j) => p.perm.swap(i, j),
            Gate::H(_) | Gate::X(_) => unreachable!("generators are CZ/SWAP"),
        }
        p
    }
}

/// The generating gates of a topology: all CZ then all SWAP (complete), or
/// adjacent SWAPs then adjacent CZs (line), each in increasing order.
pub fn generators(k: usize, t: Topology) -> Vec<Gate> {
    let pairs: Vec<(usize, usize)> = match t {
        Topology::Complete => (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect(),
        Topology::Line => (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
    };
    match t {
        Topology::Complete => {
            pairs.iter().map(|&(i, j)| Gate::Cz(i, j)).chain(pairs.iter().map(|&(i, j)| Gate::Swap(i, j))).collect()
        }
        Topology::Line => {
            pairs.iter().map(|&(i, j)| Gate::Swap(i, j)).chain(pairs.iter().map(|&(i, j)| Gate::Cz(i, j))).collect()
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Node {
    distance: u32,
    parent: u32,
    generator: u8,
}

/// The Cayley graph of the group explored from the identity, with a shortest
/// path to every element.
#[derive(Clone, Debug)]
pub struct GroupTable {
    k: usize,
    topology: Topology,
    generators: Vec<Gate>,
    nodes: HashMap<u32, Node>,
    diameter: u32,
}

impl GroupTable {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Largest distance from the identity (the Cayley-graph diameter, since the graph is vertex-transitive).
    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// Number of elements at each distance `0, 1, …, diameter`.
    pub fn distance_histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.diameter as usize + 1];
        for n in self.nodes.values() {
            h[n.distance as usize] += 1;
        }
        h
    }

    pub fn distance(&self, nf: &NormalForm) -> Option<u32> {
        if nf.k() != self.k {
            return None;
        }
        self.nodes.get(&Packed::from_nf(nf).key()).map(|n| n.distance)
    }

    /// A shortest generator sequence `g₁, …, g_n` with `nf = g₁ ⋯ g_n` (operator order).
    pub fn word_to(&self, nf: &NormalForm) -> Option<Vec<Gate>> {
        if nf.k() != self.k {
            return None;
        }
        let mut key = Packed::from_nf(nf).key();
        let mut out = Vec::new();
        loop {
            let node = self.nodes.get(&key)?;
            if node.distance == 0 {
                break;
            }
            out.push(self.generators[node.generator as usize]);
            key = node.parent;
        }
        out.reverse();
        Some(out)
    }

    /// Every element of the group as a normal form, in no particular order.
    pub fn elements(&self) -> impl Iterator<Item = NormalForm> + '_ {
        self.nodes.keys().map(|&key| Packed::from_key(key).to_nf(self.k))
    }
}

/// Explores the Cayley graph over the topology's generators.
pub fn enumerate_group(k: usize, t: Topology) -> Result<GroupTable, SimError> {
    if k == 0 || k > MAX_ENUM_QUBITS {
        return Err(SimError::EnumerationTooLarge { k, max: MAX_ENUM_QUBITS });
    }
    let generators = generators(k, t);
    let packed: Vec<Packed> = generators.iter().map(|&g| Packed::of_gate(g)).collect();
    let start = Packed::identity().key();
    let mut nodes = HashMap::from([(start, Node { distance: 0, parent: start, generator: 0 })]);
    let mut queue = VecDeque::from([start]);
    let mut diameter = 0;
    while let Some(key) = queue.pop_front() {
        let here = Packed::from_key(key);
        let d = nodes[&key].distance;
        for (gi, g) in packed.iter().enumerate() {
            let next = here.product(g).key();
            if let std::collections::hash_map::Entry::Vacant(e) = nodes.entry(next) {
                e.insert(Node { distance: d + 1, parent: key, generator: gi as u8 });
                diameter = diameter.max(d + 1);
                queue.push_back(next);
            }
        }
    }
    Ok(GroupTable { k, topology: t, generators, nodes, diameter })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packed_round_trip() {
        let nf = NormalForm::new(
            PairSet::from_pairs(4, [(0, 3), (1, 2)]).unwrap(),
            Permutation::parse_cycles(4, "(0,2,3)").unwrap(),
        )
        .unwrap();
        let p = Packed::from_nf(&nf);
        assert_eq!(Packed::from_key(p.key()), p);
        assert_eq!(p.to_nf(4), nf);
    }

    #[test]
    fn packed_product_matches_normal_form() {
        let a = NormalForm::new(
            PairSet::from_pairs(3, [(0, 1)]).unwrap(),
            Permutation::parse_cycles(3, "(0,1,2)").unwrap(),
        )
        .unwrap();
        let b =
            NormalForm::new(PairSet::from_pairs(3, [(1, 2)]).unwrap(), Permutation::parse_cycles(3, "(0,1)").unwrap())
                .unwrap();
        let packed = Packed::from_nf(&a).product(&Packed::from_nf(&b));
        assert_eq!(packed.to_nf(3), a.product(&b).unwrap());
    }

    #[test]
    fn small_orders() {
        assert_eq!(enumerate_group(1, Topology::Complete).unwrap().order(), 1);
        assert_eq!(enumerate_group(2, Topology::Line).unwrap().order(), 4);
        assert!(enumerate_group(6, Topology::Line).is_err());
    }
}

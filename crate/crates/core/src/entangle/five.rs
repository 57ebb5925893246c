//! Five qubits: one tabulated candidate solution of the hyperdeterminant
//! system per graph class, with an exact search as fallback.
//!
//! Every table entry is checked exactly before it is used. Entries give the
//! first components `X_q0` of a solution whose second components are all 1,
//! as rational functions of the parameters `a, b, c, d, e` of qubits 0..4.
//! When an entry does not solve the system (or is undefined at the given
//! parameters), a grid search over the parameter-free graph form
//! `f_E(w) = Σ_x (−1)^{e_E(x)} Π_q w_q[x_q]` supplies a point `w`, which
//! transports to `Φ_E(p)` via `X_qc = w_qc / p_qc`.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::algebra::RingScalar;
use crate::group::{conjugate_pairs, PairSet, Permutation};

use super::hyperdet::{hyperdet_system_check, SystemSolution};
use super::state::{phase_sign, phi_state, ParamSpec};
use super::EntangleError;

const K: usize = 5;

/// One isomorphism class of graphs on five vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassRow {
    /// 1-based position in [`class_table`].
    pub index: usize,
    /// Pair list of the defining graph.
    pub pairs: &'static str,
    /// The representative is the complement of `pairs` rather than `pairs` itself.
    pub complemented: bool,
    /// Number of pair sets `E` in the class.
    pub cardinality: usize,
}

impl ClassRow {
    pub fn representative(&self) -> PairSet {
        let e = PairSet::parse(K, self.pairs).expect("static pair list");
        if self.complemented {
            e.complement()
        } else {
            e
        }
    }
}

impl fmt::Display for ClassRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "class {} (representative {}, {} sets)", self.index, self.representative(), self.cardinality)
    }
}

const fn row(index: usize, pairs: &'static str, complemented: bool, cardinality: usize) -> ClassRow {
    ClassRow { index, pairs, complemented, cardinality }
}

const TABLE: [ClassRow; 34] = [
    row(1, "", false, 1),
    row(2, "01", false, 10),
    row(3, "01,02", false, 30),
    row(4, "01,23", false, 15),
    row(5, "01,02,03", false, 20),
    row(6, "01,12,02", false, 10),
    row(7, "01,02,13", false, 60),
    row(8, "01,02,34", false, 30),
    row(9, "01,02,03,04", false, 5),
    row(10, "01,02,03,14", false, 60),
    row(11, "01,12,02,03", false, 60),
    row(12, "01,12,23,03", false, 15),
    row(13, "01,23,34,24", false, 10),
    row(14, "01,12,23,34", false, 60),
    row(15, "01,12,23,34,04", false, 12),
    row(16, "01,02,03,04,12", false, 30),
    row(17, "01,02,03,14,12", false, 60),
    row(18, "01,02,03,12,13", false, 30),
    row(19, "01,12,23,03,14", false, 60),
    row(20, "01,12,02,03,34", false, 60),
    row(21, "", true, 1),
    row(22, "01", true, 10),
    row(23, "01,02", true, 30),
    row(24, "01,23", true, 15),
    row(25, "01,02,03", true, 20),
    row(26, "01,12,02", true, 10),
    row(27, "01,02,13", true, 60),
    row(28, "01,02,34", true, 30),
    row(29, "01,02,03,04", true, 5),
    row(30, "01,02,03,14", true, 60),
    row(31, "01,12,02,03", true, 60),
    row(32, "01,12,23,03", true, 15),
    row(33, "01,23,34,24", true, 10),
    row(34, "01,12,23,34", true, 60),
];

/// The 34 graph classes on five vertices.
pub fn class_table() -> &'static [ClassRow; 34] {
    &TABLE
}

/// Parameters of the representative, with the operations table entries use.
struct Params<'a>(&'a [[RingScalar; 2]]);

type Entry = Result<RingScalar, &'static str>;

impl Params<'_> {
    fn get(&self, q: usize, c: usize) -> RingScalar {
        self.0[q][c].clone()
    }

    fn div(num: RingScalar, den: RingScalar, name: &'static str) -> Entry {
        num.checked_div(&den).map_err(|_| name)
    }

    /// `p_q1 / p_q0`.
    fn r(&self, q: usize) -> Entry {
        const NAMES: [&str; K] = ["a0", "b0", "c0", "d0", "e0"];
        Self::div(self.get(q, 1), self.get(q, 0), NAMES[q])
    }

    /// `num1 · (den0 − den1) / (num0 · (den0 + den1))`.
    fn ratio_diff(&self, num: usize, den: usize, name: &'static str) -> Entry {
        let (d0, d1) = (self.get(den, 0), self.get(den, 1));
        Self::div(self.get(num, 1) * &(&d0 - &d1), self.get(num, 0) * &(&d0 + &d1), name)
    }

    /// `Σ_{ijk} (−1)^{f(i,j,k)} a_i b_j c_k`.
    fn triple(&self, f: fn(usize, usize, usize) -> usize) -> RingScalar {
        let mut acc = RingScalar::zero();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let t = self.get(0, i) * &self.get(1, j) * &self.get(2, k);
                    acc = if f(i, j, k).is_multiple_of(2) { acc + &t } else { acc - &t };
                }
            }
        }
        acc
    }

    /// `−d₁ △_num / (d₀ △_den)`.
    fn d_triple(
        &self,
        num: fn(usize, usize, usize) -> usize,
        den: fn(usize, usize, usize) -> usize,
        name: &'static str,
    ) -> Entry {
        Ok(-Self::div(self.get(3, 1) * &self.triple(num), self.get(3, 0) * &self.triple(den), name)?)
    }
}

fn one() -> Entry {
    Ok(RingScalar::one())
}

fn neg(x: Entry) -> Entry {
    x.map(|v| -v)
}

fn times(c: RingScalar, x: Entry) -> Entry {
    x.map(|v| c * &v)
}

/// `(i − 1)/(i + 1)`.
fn big_i() -> RingScalar {
    let i = RingScalar::i();
    (&i - &RingScalar::one()).checked_div(&(&i + &RingScalar::one())).expect("i + 1 ≠ 0")
}

/// First components of the tabulated solution for class `index`.
fn table_entry(index: usize, p: &Params) -> Result<Vec<RingScalar>, &'static str> {
    let i = RingScalar::i;
    let i_plus_1 = || &RingScalar::i() + &RingScalar::one();
    let f1 = |i: usize, j: usize, k: usize| j * (i + 1) + i * k;
    let f2 = |i: usize, j: usize, k: usize| i * (j + k);
    let f3 = |i: usize, j: usize, k: usize| k * (1 + j) + i * j;
    let f4 = |i: usize, j: usize, k: usize| j * (i + k);
    let f5 = |i: usize, j: usize, k: usize| k + j * (k + i);
    let f6 = |i: usize, j: usize, k: usize| j * (i + k);
    let v: Vec<Entry> = match index {
        1 => vec![one(), neg(p.r(1)), neg(p.r(2)), one(), one()],
        2 | 3 | 6 | 8 => vec![one(), one(), one(), neg(p.r(3)), neg(p.r(4))],
        4 => vec![one(), one(), one(), neg(p.ratio_diff(3, 2, "d0(c0+c1)")), neg(p.r(4))],
        5 | 9 | 10 => vec![one(), p.r(1), neg(p.r(2)), one(), neg(p.r(4))],
        7 => vec![one(), one(), one(), p.d_triple(f1, f2, "d0△2"), neg(p.r(4))],
        11 | 16 | 17 => vec![one(), neg(times(big_i(), p.r(1))), times(i_plus_1(), p.r(2)), one(), neg(p.r(4))],
        12 => vec![p.r(0), p.r(1), neg(p.r(2)), p.r(3), one()],
        13 => {
            let (c0, c1, d1) = (p.get(2, 0), p.get(2, 1), p.get(3, 1));
            let x = Params::div(d1.clone() * &(&c0 - &c1), d1 * &(&c0 + &c1), "d1(c0+c1)");
            vec![one(), one(), one(), neg(x), neg(p.r(4))]
        }
        14 => vec![one(), one(), one(), p.d_triple(f3, f4, "d0△4"), p.r(4)],
        15 => vec![one(), one(), one(), p.d_triple(f5, f6, "d0△6"), neg(p.r(4))],
        18 => vec![times(-i(), p.r(0)), times(i() * &big_i(), p.r(1)), p.r(2), p.r(3), one()],
        19 => vec![times(big_i(), p.ratio_diff(0, 1, "a0(b0+b1)")), one(), times(i(), p.r(2)), one(), one()],
        20 | 23 | 28 => vec![one(), neg(times(big_i(), p.r(1))), times(i(), p.r(2)), one(), neg(p.r(4))],
        21 | 22 => vec![p.r(0), neg(p.r(1)), neg(p.r(2)), p.r(3), one()],
        24 => vec![p.r(0), neg(times(big_i(), p.r(1))), times(i(), p.r(2)), one(), neg(p.r(4))],
        25 | 29 | 30 => vec![neg(p.r(0)), neg(times(big_i(), p.r(1))), times(i(), p.r(2)), one(), one()],
        26 => vec![one(), p.r(1), neg(Params::div(p.get(2, 0), p.get(2, 1), "c1")), one(), neg(p.r(4))],
        27 => vec![p.r(0), one(), neg(p.ratio_diff(1, 2, "b0(c0+c1)")), one(), one(), neg(p.r(4))],
        31 => vec![neg(p.r(0)), p.r(1), neg(p.r(2)), one(), one()],
        32 => vec![neg(p.ratio_diff(0, 2, "a0(c0+c1)")), one(), one(), neg(p.ratio_diff(3, 1, "d0(b0+b1)")), one()],
        // Printed with `d1/d1` in the fourth slot; `d1/d0`, as in classes 21
        // and 22, is the reading that solves the system.
        33 => vec![p.r(0), neg(p.r(1)), neg(p.r(2)), p.r(3), one()],
        34 => {
            let (a0, a1, c0, c1) = (p.get(0, 0), p.get(0, 1), p.get(2, 0), p.get(2, 1));
            let x = Params::div(a0 * &(&c0 - &c1), a1 * &(&c0 + &c1), "a1(c0+c1)");
            vec![x, neg(p.r(1)), one(), one(), neg(p.r(4))]
        }
        _ => unreachable!("class index in 1..=34"),
    };
    v.into_iter().collect()
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn permutations5() -> &'static [Permutation] {
    static PERMS: OnceLock<Vec<Permutation>> = OnceLock::new();
    PERMS.get_or_init(|| all_permutations(K).into_iter().map(|v| Permutation::from_images(v).expect("valid")).collect())
}

type Key = Vec<(usize, usize)>;

fn canonical_key(e: &PairSet) -> Key {
    permutations5()
        .iter()
        .map(|s| conjugate_pairs(s, e).expect("five qubits").pairs().collect::<Key>())
        .min()
        .expect("non-empty")
}

/// The class of `e` and a permutation `σ` with `σ(e)` equal to the class representative.
pub fn canonical_class(e: &PairSet) -> Result<(&'static ClassRow, Permutation), EntangleError> {
    if e.k() != K {
        return Err(EntangleError::WrongQubitCount { expected: K, got: e.k() });
    }
    static INDEX: OnceLock<HashMap<Key, usize>> = OnceLock::new();
    let index = INDEX.get_or_init(|| TABLE.iter().map(|r| (canonical_key(&r.representative()), r.index - 1)).collect());
    let not_found = || EntangleError::RepresentativeNotFound(e.to_string());
    let row = &TABLE[*index.get(&canonical_key(e)).ok_or_else(not_found)?];
    let rep = row.representative();
    let sigma =
        permutations5().iter().find(|s| conjugate_pairs(s, e).expect("five qubits") == rep).ok_or_else(not_found)?;
    Ok((row, sigma.clone()))
}

/// Where a verified solution came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolutionSource {
    Table,
    Fallback,
}

impl fmt::Display for SolutionSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolutionSource::Table => "table",
            SolutionSource::Fallback => "fallback search",
        })
    }
}

/// A verified non-trivial solution of the system for `Φ_E(p)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution5 {
    pub class: &'static ClassRow,
    /// `σ` with `σ(E)` equal to the class representative.
    pub sigma: Permutation,
    pub solution: SystemSolution,
    pub source: SolutionSource,
    /// Why the table entry was not used, if it was not.
    pub table_issue: Option<String>,
}

type Gauss = Complex<i64>;
type GridPoint = [[Gauss; 2]; K];

fn grid_candidates() -> Vec<[Gauss; 2]> {
    let g = Gauss::new;
    let mut out = vec![[g(1, 0), g(0, 0)], [g(0, 0), g(1, 0)]];
    let cs = [
        g(1, 0),
        g(-1, 0),
        g(0, 1),
        g(0, -1),
        g(1, 1),
        g(1, -1),
        g(-1, 1),
        g(-1, -1),
        g(2, 0),
        g(-2, 0),
        g(0, 2),
        g(0, -2),
    ];
    out.extend(cs.iter().map(|&c| [g(1, 0), c]));
    out
}

fn graph_form(signs: &[bool], w: &GridPoint) -> Gauss {
    signs
        .iter()
        .enumerate()
        .map(|(x, &neg)| {
            let prod = (0..K).fold(Gauss::new(1, 0), |acc, q| acc * w[q][x >> q & 1]);
            if neg {
                -prod
            } else {
                prod
            }
        })
        .sum()
}

/// `∂f/∂w_qc` is `f` with `w_q` replaced by the unit vector `e_c`.
fn solves_graph_system(signs: &[bool], w: &GridPoint) -> bool {
    if graph_form(signs, w) != Gauss::new(0, 0) {
        return false;
    }
    (0..K).all(|q| {
        (0..2).all(|c| {
            let mut v = *w;
            v[q] = [Gauss::new(1 - c as i64, 0), Gauss::new(c as i64, 0)];
            graph_form(signs, &v) == Gauss::new(0, 0)
        })
    })
}

/// All grid solutions of the graph-form system for a class representative, in scan order.
fn grid_solutions(row: &ClassRow) -> &'static [GridPoint] {
    static CACHE: [OnceLock<Vec<GridPoint>>; 34] = [const { OnceLock::new() }; 34];
    CACHE[row.index - 1].get_or_init(|| {
        let rep = row.representative();
        let pairs: Vec<(usize, usize)> = rep.pairs().collect();
        let signs: Vec<bool> = (0..1usize << K).map(|x| phase_sign(&pairs, x)).collect();
        let cands = grid_candidates();
        let n = cands.len();
        (0..n.pow(K as u32))
            .into_par_iter()
            .filter_map(|mut idx| {
                let w: GridPoint = std::array::from_fn(|_| {
                    let c = cands[idx % n];
                    idx /= n;
                    c
                });
                solves_graph_system(&signs, &w).then_some(w)
            })
            .collect()
    })
}

fn gauss_scalar(z: Gauss) -> RingScalar {
    RingScalar::gaussian(BigRational::from_integer(BigInt::from(z.re)), BigRational::from_integer(BigInt::from(z.im)))
}

/// Maps a solution for `σ(E)` back to `E`: `X_q = X'_{σ(q)}`.
fn pull_back(sigma: &Permutation, rep_solution: &[[RingScalar; 2]]) -> SystemSolution {
    SystemSolution::new((0..K).map(|q| rep_solution[sigma.apply(q)].clone()).collect())
}

/// A non-trivial grid solution of the parameter-free system for `f_E`, if any.
pub fn fallback_graph_solution(e: &PairSet) -> Result<Option<SystemSolution>, EntangleError> {
    let (row, sigma) = canonical_class(e)?;
    Ok(grid_solutions(row).first().map(|w| {
        let rep: Vec<[RingScalar; 2]> = w.iter().map(|p| p.map(gauss_scalar)).collect();
        pull_back(&sigma, &rep)
    }))
}

/// `X_qc = w_qc / p_qc`, or `None` when some `p_qc = 0` meets `w_qc ≠ 0`.
fn transport(w: &GridPoint, p: &ParamSpec) -> Option<Vec<[RingScalar; 2]>> {
    (0..K)
        .map(|q| {
            let mut out = [RingScalar::zero(), RingScalar::zero()];
            for c in 0..2 {
                let wq = gauss_scalar(w[q][c]);
                let pq = &p.pair(q)[c];
                if pq.is_zero() {
                    if !wq.is_zero() {
                        return None;
                    }
                } else {
                    out[c] = wq.checked_div(pq).ok()?;
                }
            }
            Some(out)
        })
        .collect()
}

/// A verified non-trivial solution of the hyperdeterminant system of
/// `Φ_E(p)`, from the class table when its entry checks out, otherwise from
/// the fallback search.
pub fn tabulated_solution_5q(e: &PairSet, params: &ParamSpec) -> Result<Solution5, EntangleError> {
    if params.k() != K {
        return Err(EntangleError::ParamCountMismatch { pairs: e.k(), params: params.k() });
    }
    let (row, sigma) = canonical_class(e)?;
    let state = phi_state(e, params)?;
    let rep_params = params.relabel(&sigma);

    let table_issue = match table_entry(row.index, &Params(rep_params.pairs())) {
        Err(denominator) => EntangleError::TableDivisionByZero { class: row.index, denominator }.to_string(),
        Ok(firsts) if firsts.len() != K => EntangleError::SolutionArity { expected: K, got: firsts.len() }.to_string(),
        Ok(firsts) => {
            let rep: Vec<[RingScalar; 2]> = firsts.into_iter().map(|x| [x, RingScalar::one()]).collect();
            let sol = pull_back(&sigma, &rep);
            if hyperdet_system_check(&state, &sol)? {
                return Ok(Solution5 {
                    class: row,
                    sigma,
                    solution: sol,
                    source: SolutionSource::Table,
                    table_issue: None,
                });
            }
            "the table entry does not solve the system".to_string()
        }
    };

    for w in grid_solutions(row) {
        let Some(rep) = transport(w, &rep_params) else { continue };
        let sol = pull_back(&sigma, &rep);
        if hyperdet_system_check(&state, &sol)? {
            return Ok(Solution5 {
                class: row,
                sigma,
                solution: sol,
                source: SolutionSource::Fallback,
                table_issue: Some(table_issue),
            });
        }
    }
    Err(EntangleError::NoNontrivialSolution { class: row.index })
}

//! The four-qubit covariant ladder: each covariant is a rational multiple of
//! a signed sum of transvectants `(A, X)^{o}` of the ground form `A` with an
//! earlier covariant `X`.
//!
//! Names end in the multidegree in the pairs `x, y, z, t` (ket positions
//! 1..4); an optional prefix before `_` distinguishes covariants of equal
//! multidegree.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::algebra::{Coeff, MultiPoly, RingScalar};

use super::forms::ket_ground_form;
use super::state::PureState;
use super::EntangleError;

/// One rung: `name = scale · Σ sign · (A, operand)^{orders}`.
#[derive(Clone, Copy, Debug)]
pub struct Step {
    pub name: &'static str,
    pub scale: (i64, i64),
    pub terms: &'static [(i64, &'static str, &'static str)],
}

const fn step(name: &'static str, terms: &'static [(i64, &'static str, &'static str)]) -> Step {
    Step { name, scale: (1, 1), terms }
}

const fn scaled(name: &'static str, scale: (i64, i64), terms: &'static [(i64, &'static str, &'static str)]) -> Step {
    Step { name, scale, terms }
}

/// The ladder in evaluation order. `"A"` denotes the ground form.
pub const LADDER: &[Step] = &[
    scaled("B2200", (1, 2), &[(1, "A", "0011")]),
    scaled("B2020", (1, 2), &[(1, "A", "0101")]),
    scaled("B2002", (1, 2), &[(1, "A", "0110")]),
    scaled("B0220", (1, 2), &[(1, "A", "1001")]),
    scaled("B0202", (1, 2), &[(1, "A", "1010")]),
    scaled("B0022", (1, 2), &[(1, "A", "1100")]),
    step("C1_1111", &[(1, "B2200", "1100"), (1, "B0022", "0011")]),
    step("Ccal_1111", &[(1, "B0220", "0110"), (1, "B2002", "1001")]),
    scaled("C3111", (1, 3), &[(1, "B2200", "0100"), (1, "B2020", "0010"), (1, "B2002", "0001")]),
    scaled("C1311", (1, 3), &[(1, "B2200", "1000"), (1, "B0220", "0010"), (1, "B0202", "0001")]),
    scaled("C1131", (1, 3), &[(1, "B2020", "1000"), (1, "B0220", "0100"), (1, "B0022", "0001")]),
    scaled("C1113", (1, 3), &[(1, "B2002", "1000"), (1, "B0202", "0100"), (1, "B0022", "0010")]),
    step("D2200", &[(1, "C1_1111", "0011")]),
    step("D2020", &[(1, "C1_1111", "0101")]),
    step("D2002", &[(1, "C1_1111", "0110")]),
    step("D0220", &[(1, "C1_1111", "1001")]),
    step("D0202", &[(1, "C1_1111", "1010")]),
    step("D0022", &[(1, "C1_1111", "1100")]),
    step("D4000", &[(1, "C3111", "0111")]),
    step("D0400", &[(1, "C1311", "1011")]),
    step("D0040", &[(1, "C1131", "1101")]),
    step("D0004", &[(1, "C1113", "1110")]),
    step("E3111", &[(1, "D2200", "0100"), (1, "D2020", "0010"), (1, "D2002", "0001")]),
    step("E1311", &[(1, "D2200", "1000"), (1, "D0220", "0010"), (1, "D0202", "0001")]),
    step("E1131", &[(1, "D2020", "1000"), (1, "D0220", "0100"), (1, "D0022", "0001")]),
    step("E1113", &[(1, "D2002", "1000"), (1, "D0202", "0100"), (1, "D0022", "0010")]),
    step("F4200", &[(1, "E3111", "0011")]),
    step("F4020", &[(1, "E3111", "0101")]),
    step("F4002", &[(1, "E3111", "0110")]),
    step("F0420", &[(1, "E1311", "1001")]),
    step("F0402", &[(1, "E1311", "1010")]),
    step("F0042", &[(1, "E1131", "1100")]),
    step("F2400", &[(1, "E1311", "0011")]),
    step("F2040", &[(1, "E1131", "0101")]),
    step("F2004", &[(1, "E1113", "0110")]),
    step("F0240", &[(1, "E1131", "1001")]),
    step("F0204", &[(1, "E1113", "1010")]),
    step("F0024", &[(1, "E1113", "1100")]),
    step("G1_3111", &[(1, "F4200", "1100")]),
    step("G2_3111", &[(1, "F4020", "1010")]),
    step("G1_1311", &[(1, "F2400", "1100")]),
    step("G2_1311", &[(1, "F0420", "0110")]),
    step("G1_1131", &[(1, "F2040", "1010")]),
    step("G2_1131", &[(1, "F0240", "0110")]),
    step("G1_1113", &[(1, "F2004", "1001")]),
    step("G2_1113", &[(1, "F0204", "0101")]),
    step("G5111", &[(1, "F4002", "0001"), (1, "F4020", "0010"), (1, "F4200", "0100")]),
    step("G1511", &[(1, "F0402", "0001"), (1, "F0420", "0010"), (1, "F2400", "1000")]),
    step("G1151", &[(1, "F0042", "0001"), (1, "F0240", "0100"), (1, "F2040", "1000")]),
    step("G1115", &[(1, "F0204", "0100"), (1, "F0024", "0010"), (1, "F2004", "1000")]),
    step("H4200", &[(1, "G5111", "1011")]),
    step("H4020", &[(1, "G5111", "1101")]),
    step("H4002", &[(1, "G5111", "1110")]),
    step("H0420", &[(1, "G1511", "1101")]),
    step("H0402", &[(1, "G1511", "1110")]),
    step("H0042", &[(1, "G1151", "1110")]),
    step("H2400", &[(1, "G1511", "0111")]),
    step("H2040", &[(1, "G1151", "0111")]),
    step("H2004", &[(1, "G1115", "0111")]),
    step("H0240", &[(1, "G1151", "1011")]),
    step("H0204", &[(1, "G1115", "1011")]),
    step("H0024", &[(1, "G1115", "1101")]),
    step("H1_2220", &[(1, "G1_1311", "0101"), (1, "G1_3111", "1001"), (1, "G1_1131", "0011")]),
    step("H2_2220", &[(1, "G2_1311", "0101"), (1, "G2_3111", "1001"), (1, "G2_1131", "0011")]),
    step("H1_2202", &[(1, "G1_1311", "0110"), (1, "G1_3111", "1010"), (1, "G1_1113", "0011")]),
    step("H1_2022", &[(1, "G1_3111", "1100"), (1, "G1_1131", "0110"), (1, "G1_1113", "0101")]),
    step("H1_0222", &[(1, "G1_1311", "1100"), (1, "G1_1131", "1010"), (1, "G1_1113", "1001")]),
    step("I5111", &[(1, "H4020", "0010"), (1, "H4200", "0100"), (1, "H4002", "0001")]),
    step("I1511", &[(1, "H0420", "0010"), (1, "H2400", "1000"), (1, "H0402", "0001")]),
    step("I1151", &[(1, "H0240", "0100"), (1, "H2040", "1000"), (1, "H0042", "0001")]),
    step("I1115", &[(1, "H0204", "0100"), (1, "H2004", "1000"), (1, "H0024", "0010")]),
    step("J4200", &[(1, "I5111", "1011")]),
    step("J4020", &[(1, "I5111", "1101")]),
    step("J4002", &[(1, "I5111", "1110")]),
    step("J0420", &[(1, "I1511", "1101")]),
    step("J0402", &[(1, "I1511", "1110")]),
    step("J0042", &[(1, "I1151", "1110")]),
    step("J2400", &[(1, "I1511", "0111")]),
    step("J2040", &[(1, "I1151", "0111")]),
    step("J2004", &[(1, "I1115", "0111")]),
    step("J0240", &[(1, "I1151", "1011")]),
    step("J0204", &[(1, "I1115", "1011")]),
    step("J0024", &[(1, "I1115", "1101")]),
    step("K3311", &[(1, "J4200", "1000"), (-1, "J2400", "0100")]),
    step("K3131", &[(1, "J4020", "1000"), (-1, "J2040", "0010")]),
    step("K3113", &[(1, "J4002", "1000"), (-1, "J2004", "0001")]),
    step("K1331", &[(1, "J0420", "0100"), (-1, "J0240", "0010")]),
    step("K1313", &[(1, "J0402", "0100"), (-1, "J0204", "0001")]),
    step("K1133", &[(1, "J0042", "0010"), (-1, "J0024", "0001")]),
    step("K5111", &[(1, "J4200", "0100"), (-1, "J4020", "0010"), (1, "J4002", "0001")]),
    step("K1511", &[(1, "J2400", "1000"), (-1, "J0420", "0010"), (1, "J0402", "0001")]),
    step("K1151", &[(1, "J2040", "1000"), (-1, "J0240", "0100"), (1, "J0042", "0001")]),
    step("K1115", &[(1, "J2004", "1000"), (-1, "J0204", "0100"), (1, "J0024", "0010")]),
    step("L6000", &[(1, "K5111", "0111")]),
    step("L0600", &[(1, "K1511", "1011")]),
    step("L0060", &[(1, "K1151", "1101")]),
    step("L0006", &[(1, "K1115", "1110")]),
];

fn orders(s: &str) -> Vec<u32> {
    s.bytes().map(|b| u32::from(b - b'0')).collect()
}

/// The multidegree encoded in the last four characters of a ladder name.
pub fn name_degree(name: &str) -> [u32; 4] {
    let digits = &name.as_bytes()[name.len() - 4..];
    std::array::from_fn(|i| u32::from(digits[i] - b'0'))
}

/// Evaluates every rung of [`LADDER`] for the four-qubit amplitudes `amps`.
pub fn covariant_ladder<C: Coeff>(amps: &[C]) -> BTreeMap<&'static str, MultiPoly<C>> {
    ladder(amps, true)
}

/// With `scaled = false` the rational factors `½`, `⅓` are skipped, which
/// keeps integral coefficients integral. Every summary covariant combines
/// rungs carrying the same factor, so it only changes by a constant.
fn ladder<C: Coeff>(amps: &[C], scaled: bool) -> BTreeMap<&'static str, MultiPoly<C>> {
    run_steps(amps, scaled, LADDER.iter())
}

/// One rung of [`LADDER`] (scaled), computing only the rungs it depends on.
/// `None` when `name` is not a rung.
pub fn ladder_covariant<C: Coeff>(amps: &[C], name: &str) -> Option<MultiPoly<C>> {
    let mut needed: BTreeSet<&str> = BTreeSet::from([LADDER.iter().find(|st| st.name == name)?.name]);
    for st in LADDER.iter().rev() {
        if needed.contains(st.name) {
            needed.extend(st.terms.iter().map(|&(_, operand, _)| operand));
        }
    }
    let mut out = run_steps(amps, true, LADDER.iter().filter(|st| needed.contains(st.name)));
    out.remove(name)
}

fn run_steps<'a, C: Coeff>(
    amps: &[C],
    scaled: bool,
    steps: impl Iterator<Item = &'a Step>,
) -> BTreeMap<&'static str, MultiPoly<C>> {
    let a = ket_ground_form(amps, 4);
    let mut out: BTreeMap<&'static str, MultiPoly<C>> = BTreeMap::new();
    for st in steps {
        let mut acc = MultiPoly::zero(4);
        for &(sign, operand, ord) in st.terms {
            let x = if operand == "A" { &a } else { &out[operand] };
            let t = a.transvect(x, &orders(ord)).expect("arity 4");
            acc = if sign > 0 { acc.add(&t) } else { acc.sub(&t) }.expect("arity 4");
        }
        if scaled {
            acc = acc.scale_ratio(st.scale.0, st.scale.1);
        }
        out.insert(st.name, acc);
    }
    out
}

/// The summary covariants used to separate four-qubit families.
#[derive(Clone, Debug, PartialEq)]
pub struct Covariants4 {
    /// `(A, B0220)^{0110} + (A, B2002)^{1001}`.
    pub c: MultiPoly<RingScalar>,
    /// `D4000 + D0400 + D0040 + D0004`.
    pub d: MultiPoly<RingScalar>,
    /// Product of the four `G¹`.
    pub gbar: MultiPoly<RingScalar>,
    /// Sum of the four `G²`.
    pub g: MultiPoly<RingScalar>,
    /// Sum of the four `H¹`.
    pub h: MultiPoly<RingScalar>,
    /// Sum of the six `K` of multidegree type `3311`.
    pub k3: MultiPoly<RingScalar>,
    /// Sum of the four `L`.
    pub l: MultiPoly<RingScalar>,
}

impl Covariants4 {
    /// `(name, polynomial)` in a fixed display order.
    pub fn named(&self) -> [(&'static str, &MultiPoly<RingScalar>); 7] {
        [
            ("C", &self.c),
            ("D", &self.d),
            ("Gbar", &self.gbar),
            ("G", &self.g),
            ("H", &self.h),
            ("K3", &self.k3),
            ("L", &self.l),
        ]
    }
}

/// Per summary covariant: its degree in the amplitudes and the product of
/// the ladder factors it inherits, in the order of [`Covariants4::named`].
const SUMMARY_DEGREE_AND_FACTOR: [(u32, (i64, i64)); 7] =
    [(3, (1, 2)), (4, (1, 6)), (28, (1, 16)), (7, (1, 2)), (8, (1, 2)), (11, (1, 2)), (12, (1, 2))];

fn summaries<C: Coeff>(lad: &BTreeMap<&'static str, MultiPoly<C>>) -> [MultiPoly<C>; 7] {
    let sum = |names: &[&str]| names.iter().fold(MultiPoly::zero(4), |acc, n| acc.add(&lad[n]).expect("arity 4"));
    let gbar = ["G1_3111", "G1_1311", "G1_1131", "G1_1113"]
        .iter()
        .fold(MultiPoly::constant(4, C::one()), |acc, n| acc.mul(&lad[n]).expect("arity 4"));
    [
        lad["Ccal_1111"].clone(),
        sum(&["D4000", "D0400", "D0040", "D0004"]),
        gbar,
        sum(&["G2_3111", "G2_1311", "G2_1131", "G2_1113"]),
        sum(&["H1_2220", "H1_2202", "H1_2022", "H1_0222"]),
        sum(&["K3311", "K3131", "K3113", "K1331", "K1313", "K1133"]),
        sum(&["L6000", "L0600", "L0060", "L0006"]),
    ]
}

/// Summary covariants of a four-qubit state (exact amplitudes required).
///
/// Gaussian-rational amplitudes (every state built from rational
/// parameters) take a fast path: they are scaled by a common integer `λ`,
/// the unscaled ladder runs over Gaussian integers, and the results are
/// mapped back by the known factors and `λ^{-degree}`.
pub fn covariants4(s: &PureState) -> Result<Covariants4, EntangleError> {
    s.expect_qubits(4)?;
    let amps = s.projective_exact().ok_or(EntangleError::NeedsExactBackend { what: "covariants4" })?;
    let gaussian = amps.iter().all(|a| a.re().surd.is_zero() && a.im().surd.is_zero());
    let [c, d, gbar, g, h, k3, l] = if gaussian {
        let lcm = amps.iter().fold(BigInt::one(), |acc, a| acc.lcm(&a.denominator_lcm()));
        let integral = |q: &BigRational| (q * &lcm).to_integer();
        let ints: Vec<Complex<BigInt>> =
            amps.iter().map(|a| Complex::new(integral(&a.re().rational), integral(&a.im().rational))).collect();
        let raw = summaries(&ladder(&ints, false));
        let mut out = raw.map(|p| {
            p.map_into(|z| RingScalar::gaussian(BigRational::from(z.re.clone()), BigRational::from(z.im.clone())))
        });
        for (p, &(degree, (num, den))) in out.iter_mut().zip(&SUMMARY_DEGREE_AND_FACTOR) {
            let factor = BigRational::new(BigInt::from(num), BigInt::from(den) * Pow::pow(&lcm, degree));
            *p = p.scale(&RingScalar::from_rational(factor));
        }
        out
    } else {
        summaries(&ladder(amps, true))
    };
    Ok(Covariants4 { c, d, gbar, g, h, k3, l })
}

//! Four qubits: the invariants `B, L, M, N, D_xy`, the three quartics built
//! from them, and root configurations of binary quartics.

use std::fmt;

use crate::algebra::{Coeff, MultiPoly, RingScalar, VarId};

use super::forms::det;
use super::state::PureState;
use super::EntangleError;

/// The four-qubit invariants. `N = −L − M` holds identically.
#[derive(Clone, Debug, PartialEq)]
pub struct Invariants4<C> {
    pub b: C,
    pub l: C,
    pub m: C,
    pub n: C,
    pub dxy: C,
}

fn alpha<C: Coeff>(a: &[C], i: usize, j: usize, k: usize, l: usize) -> C {
    a[8 * i + 4 * j + 2 * k + l].clone()
}

/// Rows of a 4×4 matrix given as ket strings like `"0010"`.
fn matrix<C: Coeff>(a: &[C], rows: [[&str; 4]; 4]) -> Vec<Vec<C>> {
    rows.iter()
        .map(|r| r.iter().map(|s| a[usize::from_str_radix(s, 2).expect("binary literal")].clone()).collect())
        .collect()
}

pub fn invariants4_generic<C: Coeff>(a: &[C]) -> Invariants4<C> {
    let mut b = C::zero();
    for i1 in 0..2 {
        for i2 in 0..2 {
            for i3 in 0..2 {
                let t = alpha(a, 0, i1, i2, i3).mul_ref(&alpha(a, 1, 1 - i1, 1 - i2, 1 - i3));
                b = if (i1 + i2 + i3) % 2 == 0 { b.add_ref(&t) } else { b.sub_ref(&t) };
            }
        }
    }
    let l = det(&matrix(
        a,
        [
            ["0000", "0010", "0001", "0011"],
            ["1000", "1010", "1001", "1011"],
            ["0100", "0110", "0101", "0111"],
            ["1100", "1110", "1101", "1111"],
        ],
    ));
    let m = det(&matrix(
        a,
        [
            ["0000", "0001", "0100", "0101"],
            ["1000", "1001", "1100", "1101"],
            ["0010", "0011", "0110", "0111"],
            ["1010", "1011", "1110", "1111"],
        ],
    ));
    let n = det(&matrix(
        a,
        [
            ["0000", "1000", "0001", "1001"],
            ["0100", "1100", "0101", "1101"],
            ["0010", "1010", "0011", "1011"],
            ["0110", "1110", "0111", "1111"],
        ],
    ));
    // det(∂²A/∂z_i∂t_j) = P₀₀P₁₁ − P₀₁P₁₀ with P_kl = Σ α_{ijkl} x_i y_j; B_xy
    // collects its coefficients against (x₀², x₀x₁, x₁²) × (y₀², y₀y₁, y₁²).
    let mut bxy = vec![vec![C::zero(); 3]; 3];
    for (k1, l1, k2, l2, positive) in [(0, 0, 1, 1, true), (0, 1, 1, 0, false)] {
        for i in 0..2 {
            for ii in 0..2 {
                for j in 0..2 {
                    for jj in 0..2 {
                        let t = alpha(a, i, j, k1, l1).mul_ref(&alpha(a, ii, jj, k2, l2));
                        let cell = &mut bxy[i + ii][j + jj];
                        *cell = if positive { cell.add_ref(&t) } else { cell.sub_ref(&t) };
                    }
                }
            }
        }
    }
    let dxy = det(&bxy).neg_ref();
    Invariants4 { b, l, m, n, dxy }
}

/// Invariants of a four-qubit state (exact amplitudes required).
pub fn invariants4(s: &PureState) -> Result<Invariants4<RingScalar>, EntangleError> {
    s.expect_qubits(4)?;
    let a = s.projective_exact().ok_or(EntangleError::NeedsExactBackend { what: "invariants4" })?;
    Ok(invariants4_generic(a))
}

/// A binary quartic `αx⁴ − 4βx³y + 6γx²y² − 4δxy³ + ωy⁴`.
#[derive(Clone, Debug, PartialEq)]
pub struct Quartic<C> {
    pub alpha: C,
    pub beta: C,
    pub gamma: C,
    pub delta: C,
    pub omega: C,
}

impl<C: Coeff> Quartic<C> {
    /// From the plain coefficients of `x⁴, x³y, x²y², xy³, y⁴`.
    pub fn from_raw(raw: [C; 5]) -> Self {
        let [c4, c3, c2, c1, c0] = raw;
        Self {
            alpha: c4,
            beta: c3.scale_ratio(-1, 4),
            gamma: c2.scale_ratio(1, 6),
            delta: c1.scale_ratio(-1, 4),
            omega: c0,
        }
    }

    /// The plain coefficients of `x⁴, x³y, x²y², xy³, y⁴`.
    pub fn raw(&self) -> [C; 5] {
        [
            self.alpha.clone(),
            self.beta.scale_ratio(-4, 1),
            self.gamma.scale_ratio(6, 1),
            self.delta.scale_ratio(-4, 1),
            self.omega.clone(),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.raw().iter().all(Coeff::is_zero)
    }

    /// `I₂ = αω − 4βδ + 3γ²`.
    pub fn i2(&self) -> C {
        self.alpha
            .mul_ref(&self.omega)
            .sub_ref(&self.beta.mul_ref(&self.delta).scale_ratio(4, 1))
            .add_ref(&self.gamma.mul_ref(&self.gamma).scale_ratio(3, 1))
    }

    /// `I₃ = αγω − αδ² − ωβ² − γ³ + 2βγδ`.
    pub fn i3(&self) -> C {
        let (a, b, g, d, w) = (&self.alpha, &self.beta, &self.gamma, &self.delta, &self.omega);
        a.mul_ref(g)
            .mul_ref(w)
            .sub_ref(&a.mul_ref(d).mul_ref(d))
            .sub_ref(&w.mul_ref(b).mul_ref(b))
            .sub_ref(&g.mul_ref(g).mul_ref(g))
            .add_ref(&b.mul_ref(g).mul_ref(d).scale_ratio(2, 1))
    }

    /// `Δ = I₂³ − 27 I₃²`.
    pub fn discriminant(&self) -> C {
        let i2 = self.i2();
        let i3 = self.i3();
        i2.mul_ref(&i2).mul_ref(&i2).sub_ref(&i3.mul_ref(&i3).scale_ratio(27, 1))
    }

    /// `Q` as a polynomial in the single pair `(x, y)`.
    pub fn poly(&self) -> MultiPoly<C> {
        let terms = self
            .raw()
            .into_iter()
            .enumerate()
            .map(|(i, c)| (vec![(VarId::new(0, 0), 4 - i as u32), (VarId::new(0, 1), i as u32)], c));
        MultiPoly::from_terms(1, terms.collect::<Vec<_>>()).expect("one pair")
    }

    pub fn eval(&self, x: &C, y: &C) -> C {
        self.poly().eval(&[x.clone(), y.clone()]).expect("one pair")
    }

    /// `Hess = Q_xx Q_yy − Q_xy²`.
    pub fn hessian(&self) -> MultiPoly<C> {
        let q = self.poly();
        let (qx, qy) = (dx(&q), dy(&q));
        dx(&qx).mul(&dy(&qy)).and_then(|a| a.sub(&dx(&qy).mul(&dx(&qy))?)).expect("one pair")
    }

    /// `T = Q_x Hess_y − Q_y Hess_x`.
    pub fn t_covariant(&self) -> MultiPoly<C> {
        let q = self.poly();
        let h = self.hessian();
        dx(&q).mul(&dy(&h)).and_then(|a| a.sub(&dy(&q).mul(&dx(&h))?)).expect("one pair")
    }
}

fn dx<C: Coeff>(p: &MultiPoly<C>) -> MultiPoly<C> {
    p.differentiate(VarId::new(0, 0)).expect("one pair")
}

fn dy<C: Coeff>(p: &MultiPoly<C>) -> MultiPoly<C> {
    p.differentiate(VarId::new(0, 1)).expect("one pair")
}

impl<C: Coeff + fmt::Display> fmt::Display for Quartic<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x⁴", "x³y", "x²y²", "xy³", "y⁴"];
        let parts: Vec<String> =
            self.raw().iter().zip(names).filter(|(c, _)| !c.is_zero()).map(|(c, n)| format!("({c}){n}")).collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Multiplicity pattern of the roots of a binary quartic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootConfig {
    FourDistinct,
    OneDouble,
    TwoDoubles,
    Triple,
    Quadruple,
}

impl fmt::Display for RootConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootConfig::FourDistinct => "four distinct roots",
            RootConfig::OneDouble => "exactly one double root",
            RootConfig::TwoDoubles => "two distinct double roots",
            RootConfig::Triple => "a triple root",
            RootConfig::Quadruple => "a quadruple root",
        })
    }
}

/// Root configuration with a caller-supplied zero test (useful for floats).
pub fn root_config_with<C: Coeff>(q: &Quartic<C>, zero: impl Fn(&C) -> bool) -> Result<RootConfig, EntangleError> {
    if q.raw().iter().all(&zero) {
        return Err(EntangleError::ZeroQuartic);
    }
    let poly_zero = |p: &MultiPoly<C>| p.terms().all(|(_, c)| zero(c));
    if !zero(&q.discriminant()) {
        return Ok(RootConfig::FourDistinct);
    }
    // `Δ = 0 ∧ T ≠ 0` also holds at a triple root, so the degenerate rows are
    // tested from the most special one up.
    if poly_zero(&q.hessian()) {
        return Ok(RootConfig::Quadruple);
    }
    if zero(&q.i2()) && zero(&q.i3()) {
        return Ok(RootConfig::Triple);
    }
    if poly_zero(&q.t_covariant()) {
        return Ok(RootConfig::TwoDoubles);
    }
    Ok(RootConfig::OneDouble)
}

/// Root configuration by exact vanishing of `Δ`, `Hess`, `I₂, I₃` and `T`.
pub fn root_config<C: Coeff>(q: &Quartic<C>) -> Result<RootConfig, EntangleError> {
    root_config_with(q, Coeff::is_zero)
}

/// `Q₁, Q₂, Q₃` assembled from the invariants.
pub fn quartics_generic<C: Coeff>(inv: &Invariants4<C>) -> [Quartic<C>; 3] {
    let Invariants4 { b, l, m, n, dxy } = inv;
    let b2 = b.mul_ref(b);
    let minus_2b = b.scale_ratio(-2, 1);
    let q1 = [
        C::one(),
        minus_2b.clone(),
        b2.add_ref(&l.scale_ratio(2, 1)).add_ref(&m.scale_ratio(4, 1)),
        dxy.sub_ref(&b.mul_ref(&m.add_ref(&l.scale_ratio(1, 2)))).scale_ratio(4, 1),
        l.mul_ref(l),
    ];
    let q2 = [
        C::one(),
        minus_2b.clone(),
        b2.sub_ref(&l.scale_ratio(4, 1)).sub_ref(&m.scale_ratio(2, 1)),
        dxy.scale_ratio(4, 1).sub_ref(&m.mul_ref(b).scale_ratio(2, 1)),
        m.mul_ref(m),
    ];
    let q3 = [
        C::one(),
        minus_2b,
        b2.add_ref(&l.scale_ratio(2, 1)).sub_ref(&m.scale_ratio(2, 1)),
        dxy.scale_ratio(4, 1).sub_ref(&l.add_ref(m).mul_ref(b).scale_ratio(2, 1)),
        n.mul_ref(n),
    ];
    [Quartic::from_raw(q1), Quartic::from_raw(q2), Quartic::from_raw(q3)]
}

/// The three quartics of a four-qubit state.
pub fn quartics(s: &PureState) -> Result<[Quartic<RingScalar>; 3], EntangleError> {
    Ok(quartics_generic(&invariants4(s)?))
}

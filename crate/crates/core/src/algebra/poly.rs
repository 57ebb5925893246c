//! Sparse polynomials in `p` pairs of variables `(x⁽ʲ⁾₀, x⁽ʲ⁾₁)`, with
//! differentiation and Cayley-Ω transvectants.
//!
//! The coefficient type is generic so the same code serves the exact ring,
//! floating point, and polynomials-with-polynomial-coefficients (used for
//! symbolic parameters).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::scalar::RingScalar;
use super::AlgebraError;

/// Operations a coefficient ring must provide.
pub trait Coeff: Clone + fmt::Debug + PartialEq + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiplies by the rational `num/den`.
    fn scale_ratio(&self, num: i64, den: i64) -> Self;
}

impl Coeff for RingScalar {
    fn zero() -> Self {
        RingScalar::zero()
    }
    fn one() -> Self {
        RingScalar::one()
    }
    fn from_i64(n: i64) -> Self {
        RingScalar::from_int(n)
    }
    fn is_zero(&self) -> bool {
        RingScalar::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale_ratio(&self, num: i64, den: i64) -> Self {
        RingScalar::scale_ratio(self, num, den)
    }
}

impl Coeff for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale_ratio(&self, num: i64, den: i64) -> Self {
        self * (num as f64 / den as f64)
    }
}

/// Gaussian integers. Only integral arithmetic is exact here:
/// [`Coeff::scale_ratio`] panics unless `den` divides the scaled value.
impl Coeff for Complex<BigInt> {
    fn zero() -> Self {
        Complex::new(BigInt::zero(), BigInt::zero())
    }
    fn one() -> Self {
        Complex::new(BigInt::one(), BigInt::zero())
    }
    fn from_i64(n: i64) -> Self {
        Complex::new(BigInt::from(n), BigInt::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale_ratio(&self, num: i64, den: i64) -> Self {
        let (num, den) = (BigInt::from(num), BigInt::from(den));
        let exact = |x: &BigInt| {
            let (q, r) = (x * &num).div_rem(&den);
            assert!(r.is_zero(), "inexact Gaussian-integer scaling by 1/{den}");
            q
        };
        Complex::new(exact(&self.re), exact(&self.im))
    }
}

/// Identifies one variable: component `0` or `1` of pair `pair`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    pub pair: usize,
    pub component: u8,
}

impl VarId {
    pub fn new(pair: usize, component: u8) -> Self {
        Self { pair, component }
    }

    fn index(self) -> u32 {
        (2 * self.pair + self.component as usize) as u32
    }
}

/// Sorted `(variable index, exponent)` list with positive exponents.
pub type Monomial = Vec<(u32, u32)>;

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// A polynomial in `arity` pairs of variables with coefficients in `C`.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<C> {
    arity: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero(arity: usize) -> Self {
        Self { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: C) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(Monomial::new(), c);
        p
    }

    pub fn var(arity: usize, v: VarId) -> Result<Self, AlgebraError> {
        if v.pair >= arity || v.component > 1 {
            return Err(AlgebraError::VariableOutOfRange { pair: v.pair, arity });
        }
        let mut p = Self::zero(arity);
        p.add_term(vec![(v.index(), 1)], C::one());
        Ok(p)
    }

    /// Builds a polynomial from `(monomial as [(var, exp)], coefficient)` pairs.
    pub fn from_terms(
        arity: usize,
        terms: impl IntoIterator<Item = (Vec<(VarId, u32)>, C)>,
    ) -> Result<Self, AlgebraError> {
        let mut p = Self::zero(arity);
        for (mono, c) in terms {
            let mut m: Monomial = Vec::new();
            for (v, e) in mono {
                if v.pair >= arity || v.component > 1 {
                    return Err(AlgebraError::VariableOutOfRange { pair: v.pair, arity });
                }
                if e > 0 {
                    m = mono_mul(&m, &vec![(v.index(), e)]);
                }
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates over `(monomial, coefficient)`; monomials use `2·pair + component` indices.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// Coefficient of the monomial given as `(var, exp)` pairs.
    pub fn coefficient(&self, mono: &[(VarId, u32)]) -> C {
        let mut m: Monomial = Vec::new();
        for &(v, e) in mono {
            if e > 0 {
                m = mono_mul(&m, &vec![(v.index(), e)]);
            }
        }
        self.terms.get(&m).cloned().unwrap_or_else(C::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> C {
        self.terms.get(&Monomial::new()).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add_ref(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_arity(&self, o: &Self) -> Result<(), AlgebraError> {
        if self.arity != o.arity {
            return Err(AlgebraError::ArityMismatch { left: self.arity, right: o.arity });
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.check_arity(o)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.check_arity(o)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.neg_ref());
        }
        Ok(out)
    }

    pub fn mul(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.check_arity(o)?;
        let mut out = Self::zero(self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term(mono_mul(ma, mb), ca.mul_ref(cb));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg_ref())
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map_coeffs(|x| x.mul_ref(c))
    }

    pub fn scale_ratio(&self, num: i64, den: i64) -> Self {
        self.map_coeffs(|x| x.scale_ratio(num, den))
    }

    /// Applies `f` to every coefficient, changing the coefficient ring.
    pub fn map_into<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        let mut out = MultiPoly::zero(self.arity);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    fn map_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        let mut out = Self::zero(self.arity);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.arity, C::one());
        for _ in 0..e {
            acc = acc.mul(self).expect("same arity");
        }
        acc
    }

    /// Partial derivative with respect to `v`.
    pub fn differentiate(&self, v: VarId) -> Result<Self, AlgebraError> {
        if v.pair >= self.arity || v.component > 1 {
            return Err(AlgebraError::VariableOutOfRange { pair: v.pair, arity: self.arity });
        }
        let idx = v.index();
        let mut out = Self::zero(self.arity);
        for (m, c) in &self.terms {
            if let Some(pos) = m.iter().position(|&(var, _)| var == idx) {
                let e = m[pos].1;
                let mut nm = m.clone();
                if e == 1 {
                    nm.remove(pos);
                } else {
                    nm[pos].1 = e - 1;
                }
                out.add_term(nm, c.mul_ref(&C::from_i64(e as i64)));
            }
        }
        Ok(out)
    }

    /// Total degree in the variables of `pair`, or `None` for the zero polynomial.
    pub fn degree_in_pair(&self, pair: usize) -> Option<u32> {
        let (a, b) = ((2 * pair) as u32, (2 * pair + 1) as u32);
        self.terms.keys().map(|m| m.iter().filter(|(v, _)| *v == a || *v == b).map(|(_, e)| e).sum()).max()
    }

    /// Evaluates at `values[2·pair + component]`.
    pub fn eval(&self, values: &[C]) -> Result<C, AlgebraError> {
        if values.len() != 2 * self.arity {
            return Err(AlgebraError::ArityMismatch { left: self.arity, right: values.len() / 2 });
        }
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m {
                for _ in 0..e {
                    t = t.mul_ref(&values[v as usize]);
                }
            }
            acc = acc.add_ref(&t);
        }
        Ok(acc)
    }

    /// Applies `∂^{n0}/∂x⁽ᵖ⁾₀ ∂^{n1}/∂x⁽ᵖ⁾₁` for each pair `p`, with `orders[p] = (n0, n1)`.
    fn derive_many(&self, orders: &[(u32, u32)]) -> Self {
        let mut out = self.clone();
        for (pair, &(n0, n1)) in orders.iter().enumerate() {
            for (comp, n) in [(0u8, n0), (1u8, n1)] {
                for _ in 0..n {
                    if out.is_zero() {
                        return out;
                    }
                    out = out.differentiate(VarId::new(pair, comp)).expect("pair < arity");
                }
            }
        }
        out
    }

    /// Transvectant `(f, g)^{orders}`: apply `Ω_j^{orders[j]}` to `f(x')g(x'')` and
    /// identify `x' = x'' = x`, where `Ω_j = ∂x'ⱼ₀∂x''ⱼ₁ − ∂x''ⱼ₀∂x'ⱼ₁`.
    ///
    /// The two halves of `Ω_j` commute, so `Ω_j^o` expands binomially into
    /// `Σᵢ (−1)ⁱ C(o,i) ∂ⱼ₀^{o−i}∂ⱼ₁^{i} f · ∂ⱼ₀^{i}∂ⱼ₁^{o−i} g`, which avoids
    /// ever forming the doubled-variable product.
    pub fn transvect(&self, g: &Self, orders: &[u32]) -> Result<Self, AlgebraError> {
        self.check_arity(g)?;
        let p = self.arity;
        if orders.len() != p {
            return Err(AlgebraError::ArityMismatch { left: p, right: orders.len() });
        }
        let mut out = Self::zero(p);
        let mut split = vec![0u32; p];
        loop {
            let f_orders: Vec<(u32, u32)> = orders.iter().zip(&split).map(|(&o, &i)| (o - i, i)).collect();
            let g_orders: Vec<(u32, u32)> = orders.iter().zip(&split).map(|(&o, &i)| (i, o - i)).collect();
            let df = self.derive_many(&f_orders);
            if !df.is_zero() {
                let dg = g.derive_many(&g_orders);
                if !dg.is_zero() {
                    let weight: i64 = orders.iter().zip(&split).map(|(&o, &i)| binomial(o, i)).product();
                    let odd = split.iter().sum::<u32>() % 2 == 1;
                    let term = df.mul(&dg)?.scale(&C::from_i64(if odd { -weight } else { weight }));
                    out = out.add(&term)?;
                }
            }
            // Advance the mixed-radix counter `split[j] ∈ 0..=orders[j]`.
            let mut j = 0;
            loop {
                if j == p {
                    return Ok(out);
                }
                if split[j] < orders[j] {
                    split[j] += 1;
                    break;
                }
                split[j] = 0;
                j += 1;
            }
        }
    }

    /// Writes the polynomial using variable names `names[pair]` with subscripts `0`/`1`.
    pub fn display_with(&self, names: &[&str]) -> String
    where
        C: fmt::Display,
    {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let vars: Vec<String> = m
                    .iter()
                    .map(|&(v, e)| {
                        let pair = v as usize / 2;
                        let name = names.get(pair).copied().unwrap_or("v");
                        let base = format!("{}{}", name, v % 2);
                        if e == 1 {
                            base
                        } else {
                            format!("{base}^{e}")
                        }
                    })
                    .collect();
                if vars.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})·{}", vars.join("·"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl<C: Coeff> Coeff for MultiPoly<C> {
    /// Arity-0 zero; arithmetic with it adopts the other operand's arity.
    fn zero() -> Self {
        MultiPoly::zero(0)
    }
    fn one() -> Self {
        MultiPoly::constant(0, C::one())
    }
    fn from_i64(n: i64) -> Self {
        MultiPoly::constant(0, C::from_i64(n))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, o: &Self) -> Self {
        let (a, b) = unify(self, o);
        a.add(&b).expect("unified arity")
    }
    fn sub_ref(&self, o: &Self) -> Self {
        let (a, b) = unify(self, o);
        a.sub(&b).expect("unified arity")
    }
    fn mul_ref(&self, o: &Self) -> Self {
        let (a, b) = unify(self, o);
        a.mul(&b).expect("unified arity")
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn scale_ratio(&self, num: i64, den: i64) -> Self {
        MultiPoly::scale_ratio(self, num, den)
    }
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Lifts constants of arity 0 to the arity of the other operand.
fn unify<C: Coeff>(a: &MultiPoly<C>, b: &MultiPoly<C>) -> (MultiPoly<C>, MultiPoly<C>) {
    let lift = |p: &MultiPoly<C>, arity: usize| MultiPoly { arity, terms: p.terms.clone() };
    match (a.arity, b.arity) {
        (x, y) if x == y => (a.clone(), b.clone()),
        (0, y) => (lift(a, y), b.clone()),
        (x, 0) => (a.clone(), lift(b, x)),
        (x, y) => panic!("polynomial arity mismatch: {x} vs {y}"),
    }
}

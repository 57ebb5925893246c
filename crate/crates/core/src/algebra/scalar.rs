//! Exact scalars in the field `Q(i)[√2]`.
//!
//! Every value is stored as `(a + b√2) + i(c + d√2)` with rational `a, b, c, d`.
//! That is enough to represent all amplitudes produced by circuits over
//! `{CZ, SWAP, H, X}` with no rounding at all.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// An element `a + b√2` of the real quadratic field `Q(√2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QSqrt2 {
    pub rational: BigRational,
    pub surd: BigRational,
}

impl QSqrt2 {
    pub fn new(rational: BigRational, surd: BigRational) -> Self {
        Self { rational, surd }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self { rational: r, surd: BigRational::zero() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    /// Galois conjugate `a - b√2`.
    pub fn conjugate(&self) -> Self {
        Self { rational: self.rational.clone(), surd: -self.surd.clone() }
    }

    /// Field norm `a² - 2b²`, which vanishes only at zero because √2 is irrational.
    pub fn norm(&self) -> BigRational {
        let two = BigRational::from_integer(2.into());
        &self.rational * &self.rational - two * &self.surd * &self.surd
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conjugate();
        Some(Self { rational: c.rational / &n, surd: c.surd / n })
    }

    pub fn to_f64(&self) -> f64 {
        ratio_to_f64(&self.rational) + std::f64::consts::SQRT_2 * ratio_to_f64(&self.surd)
    }

    fn add_ref(&self, o: &Self) -> Self {
        Self { rational: &self.rational + &o.rational, surd: &self.surd + &o.surd }
    }

    fn sub_ref(&self, o: &Self) -> Self {
        Self { rational: &self.rational - &o.rational, surd: &self.surd - &o.surd }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if self.surd.is_zero() && o.surd.is_zero() {
            return Self::from_rational(&self.rational * &o.rational);
        }
        let two = BigRational::from_integer(2.into());
        Self {
            rational: &self.rational * &o.rational + two * &self.surd * &o.surd,
            surd: &self.rational * &o.surd + &self.surd * &o.rational,
        }
    }
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// An exact element of `Q(i)[√2]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RingScalar {
    re: QSqrt2,
    im: QSqrt2,
}

impl RingScalar {
    pub fn new(re: QSqrt2, im: QSqrt2) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Self { re: QSqrt2::zero(), im: QSqrt2::from_rational(BigRational::one()) }
    }

    pub fn sqrt2() -> Self {
        Self::from_parts(BigRational::zero(), BigRational::one(), BigRational::zero(), BigRational::zero())
    }

    /// `1/√2 = √2/2`.
    pub fn inv_sqrt2() -> Self {
        Self::from_parts(
            BigRational::zero(),
            BigRational::new(1.into(), 2.into()),
            BigRational::zero(),
            BigRational::zero(),
        )
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self { re: QSqrt2::from_rational(r), im: QSqrt2::zero() }
    }

    /// Gaussian rational `re + i·im`.
    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        Self { re: QSqrt2::from_rational(re), im: QSqrt2::from_rational(im) }
    }

    /// Builds `(a + b√2) + i(c + d√2)`.
    pub fn from_parts(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Self { re: QSqrt2::new(a, b), im: QSqrt2::new(c, d) }
    }

    /// Least common multiple of the denominators of the four rational parts.
    pub fn denominator_lcm(&self) -> BigInt {
        [&self.re.rational, &self.re.surd, &self.im.rational, &self.im.surd]
            .iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
    }

    pub fn re(&self) -> &QSqrt2 {
        &self.re
    }

    pub fn im(&self) -> &QSqrt2 {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Complex conjugate (the `√2` component is left alone).
    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: QSqrt2::zero().sub_ref(&self.im) }
    }

    /// `|z|² = re² + im²`, an element of `Q(√2)`.
    pub fn abs_sq(&self) -> QSqrt2 {
        self.re.mul_ref(&self.re).add_ref(&self.im.mul_ref(&self.im))
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let inv_norm = self.abs_sq().inverse().ok_or(AlgebraError::DivisionByZero)?;
        let c = self.conj();
        Ok(Self { re: c.re.mul_ref(&inv_norm), im: c.im.mul_ref(&inv_norm) })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale_ratio(&self, num: i64, den: i64) -> Self {
        let r = BigRational::new(BigInt::from(num), BigInt::from(den));
        Self {
            re: QSqrt2::new(&self.re.rational * &r, &self.re.surd * &r),
            im: QSqrt2::new(&self.im.rational * &r, &self.im.surd * &r),
        }
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl From<i64> for RingScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Add<&RingScalar> for &RingScalar {
    type Output = RingScalar;
    fn add(self, o: &RingScalar) -> RingScalar {
        RingScalar { re: self.re.add_ref(&o.re), im: self.im.add_ref(&o.im) }
    }
}

impl Sub<&RingScalar> for &RingScalar {
    type Output = RingScalar;
    fn sub(self, o: &RingScalar) -> RingScalar {
        RingScalar { re: self.re.sub_ref(&o.re), im: self.im.sub_ref(&o.im) }
    }
}

impl Mul<&RingScalar> for &RingScalar {
    type Output = RingScalar;
    fn mul(self, o: &RingScalar) -> RingScalar {
        if self.is_zero() || o.is_zero() {
            return RingScalar::zero();
        }
        if self.im.is_zero() && o.im.is_zero() {
            return RingScalar { re: self.re.mul_ref(&o.re), im: QSqrt2::zero() };
        }
        RingScalar {
            re: self.re.mul_ref(&o.re).sub_ref(&self.im.mul_ref(&o.im)),
            im: self.re.mul_ref(&o.im).add_ref(&self.im.mul_ref(&o.re)),
        }
    }
}

impl Neg for &RingScalar {
    type Output = RingScalar;
    fn neg(self) -> RingScalar {
        RingScalar::zero().sub(self)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RingScalar> for RingScalar {
            type Output = RingScalar;
            fn $m(self, o: RingScalar) -> RingScalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&RingScalar> for RingScalar {
            type Output = RingScalar;
            fn $m(self, o: &RingScalar) -> RingScalar {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RingScalar {
    type Output = RingScalar;
    fn neg(self) -> RingScalar {
        -&self
    }
}

/// Panicking division, for call sites that have already ruled out zero.
impl Div<&RingScalar> for &RingScalar {
    type Output = RingScalar;
    fn div(self, o: &RingScalar) -> RingScalar {
        self.checked_div(o).expect("division by an exact zero")
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_qsqrt2(q: &QSqrt2) -> String {
    let surd = |s: &BigRational| -> String {
        if s.is_one() {
            "√2".to_string()
        } else if (-s).is_one() {
            "-√2".to_string()
        } else {
            format!("{}√2", fmt_rational(s))
        }
    };
    match (q.rational.is_zero(), q.surd.is_zero()) {
        (true, true) => "0".to_string(),
        (false, true) => fmt_rational(&q.rational),
        (true, false) => surd(&q.surd),
        (false, false) => {
            let sign = if q.surd.is_negative() { "-" } else { "+" };
            format!("{} {} {}", fmt_rational(&q.rational), sign, surd(&q.surd.abs()))
        }
    }
}

impl fmt::Display for RingScalar {
    /// Formats as `p/q (+ r/s√2)(+ i(…))`, e.g. `1/2 + √2 + i(3/4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_qsqrt2(&self.re));
        }
        let im = if self.im == QSqrt2::from_rational(BigRational::one()) {
            "i".to_string()
        } else {
            format!("i({})", fmt_qsqrt2(&self.im))
        };
        if self.re.is_zero() {
            write!(f, "{im}")
        } else {
            write!(f, "{} + {}", fmt_qsqrt2(&self.re), im)
        }
    }
}

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{MultiPoly, RingScalar, VarId};
use crate::circuit::{Circuit, Gate};
use crate::group::{PairSet, Permutation};
use crate::sim;

use super::value::Value;
use super::EntangleError;

/// Which arithmetic a state's amplitudes live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Amplitudes {
    Exact(Vec<RingScalar>),
    /// Floating amplitudes, optionally with an exact scalar multiple kept for
    /// homogeneous polynomial tests.
    Float {
        values: Vec<Complex64>,
        exact_unnormalized: Option<Vec<RingScalar>>,
    },
}

/// A `k`-qubit state vector; basis index `x` carries qubit `q` in bit `q`.
///
/// States are not forced to unit norm: every classifier here is a
/// homogeneous polynomial test, and parameterized families are easier to
/// keep exact unnormalized.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    k: usize,
    amps: Amplitudes,
}

/// Borrowed amplitudes in whichever arithmetic the classifiers should use.
pub(crate) enum View<'a> {
    Exact(&'a [RingScalar]),
    Float(&'a [Complex64]),
}

impl PureState {
    pub fn exact(k: usize, amps: Vec<RingScalar>) -> Result<Self, EntangleError> {
        check_len(k, amps.len())?;
        Ok(Self { k, amps: Amplitudes::Exact(amps) })
    }

    pub fn float(k: usize, amps: Vec<Complex64>) -> Result<Self, EntangleError> {
        check_len(k, amps.len())?;
        Ok(Self { k, amps: Amplitudes::Float { values: amps, exact_unnormalized: None } })
    }

    /// A float state that also records exact amplitudes proportional to it.
    pub fn float_with_exact(k: usize, values: Vec<Complex64>, exact: Vec<RingScalar>) -> Result<Self, EntangleError> {
        check_len(k, values.len())?;
        check_len(k, exact.len())?;
        Ok(Self { k, amps: Amplitudes::Float { values, exact_unnormalized: Some(exact) } })
    }

    /// The computational basis state `|x⟩`.
    pub fn basis(k: usize, x: usize) -> Self {
        let mut amps = vec![RingScalar::zero(); 1 << k];
        amps[x] = RingScalar::one();
        Self { k, amps: Amplitudes::Exact(amps) }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn backend(&self) -> Backend {
        match self.amps {
            Amplitudes::Exact(_) => Backend::Exact,
            Amplitudes::Float { .. } => Backend::Float,
        }
    }

    /// Amplitudes of an exact-backend state.
    pub fn exact_amplitudes(&self) -> Option<&[RingScalar]> {
        match &self.amps {
            Amplitudes::Exact(a) => Some(a),
            Amplitudes::Float { .. } => None,
        }
    }

    /// Exact amplitudes up to a nonzero scalar: the exact backend, or the
    /// unnormalized copy kept by some float states.
    pub fn projective_exact(&self) -> Option<&[RingScalar]> {
        match &self.amps {
            Amplitudes::Exact(a) => Some(a),
            Amplitudes::Float { exact_unnormalized, .. } => exact_unnormalized.as_deref(),
        }
    }

    pub fn float_amplitudes(&self) -> Vec<Complex64> {
        match &self.amps {
            Amplitudes::Exact(a) => a.iter().map(RingScalar::to_complex64).collect(),
            Amplitudes::Float { values, .. } => values.clone(),
        }
    }

    pub(crate) fn view(&self) -> View<'_> {
        match &self.amps {
            Amplitudes::Exact(a) => View::Exact(a),
            Amplitudes::Float { exact_unnormalized: Some(a), .. } => View::Exact(a),
            Amplitudes::Float { values, .. } => View::Float(values),
        }
    }

    pub(crate) fn expect_qubits(&self, expected: usize) -> Result<(), EntangleError> {
        if self.k != expected {
            return Err(EntangleError::WrongQubitCount { expected, got: self.k });
        }
        Ok(())
    }

    /// `⟨ψ|ψ⟩`.
    pub fn norm_sq(&self) -> Value {
        match &self.amps {
            Amplitudes::Exact(a) => Value::Exact(a.iter().fold(RingScalar::zero(), |acc, z| acc + &(z * &z.conj()))),
            Amplitudes::Float { values, .. } => {
                Value::float(Complex64::new(values.iter().map(|z| z.norm_sqr()).sum(), 0.0), 1.0)
            }
        }
    }

    /// Runs a circuit on the state.
    pub fn apply_circuit(&self, c: &Circuit) -> Result<Self, EntangleError> {
        if c.k() != self.k {
            return Err(EntangleError::WrongQubitCount { expected: c.k(), got: self.k });
        }
        Ok(match &self.amps {
            Amplitudes::Exact(a) => Self { k: self.k, amps: Amplitudes::Exact(sim::apply_circuit(c, a)?) },
            Amplitudes::Float { values, exact_unnormalized } => {
                let mut v = values.clone();
                for &g in c.gates() {
                    apply_gate_float(g, &mut v);
                }
                let exact = match exact_unnormalized {
                    Some(e) => Some(sim::apply_circuit(c, e)?),
                    None => None,
                };
                Self { k: self.k, amps: Amplitudes::Float { values: v, exact_unnormalized: exact } }
            }
        })
    }

    /// Applies a single-qubit matrix `m` (row-major) to qubit `q`; the result
    /// is always on the float backend.
    pub fn apply_local(&self, q: usize, m: [[Complex64; 2]; 2]) -> Self {
        let mut v = self.float_amplitudes();
        for x in (0..v.len()).filter(|x| x >> q & 1 == 0) {
            let y = x | 1 << q;
            let (a, b) = (v[x], v[y]);
            v[x] = m[0][0] * a + m[0][1] * b;
            v[y] = m[1][0] * a + m[1][1] * b;
        }
        Self { k: self.k, amps: Amplitudes::Float { values: v, exact_unnormalized: None } }
    }

    /// Moves qubit `q` to position `perm(q)`.
    pub fn relabel(&self, perm: &Permutation) -> Result<Self, EntangleError> {
        if perm.k() != self.k {
            return Err(EntangleError::WrongQubitCount { expected: perm.k(), got: self.k });
        }
        let target = |x: usize| (0..self.k).filter(|&q| x >> q & 1 == 1).fold(0, |y, q| y | 1 << perm.apply(q));
        fn permute<T: Clone>(src: &[T], target: impl Fn(usize) -> usize) -> Vec<T> {
            let mut out = src.to_vec();
            for (x, v) in src.iter().enumerate() {
                out[target(x)] = v.clone();
            }
            out
        }
        let amps = match &self.amps {
            Amplitudes::Exact(a) => Amplitudes::Exact(permute(a, target)),
            Amplitudes::Float { values, exact_unnormalized } => Amplitudes::Float {
                values: permute(values, target),
                exact_unnormalized: exact_unnormalized.as_ref().map(|e| permute(e, target)),
            },
        };
        Ok(Self { k: self.k, amps })
    }
}

fn check_len(k: usize, got: usize) -> Result<(), EntangleError> {
    if got != 1 << k {
        return Err(EntangleError::AmplitudeCount { expected: 1 << k, got });
    }
    Ok(())
}

fn apply_gate_float(g: Gate, v: &mut [Complex64]) {
    let dim = v.len();
    match g {
        Gate::Cz(i, j) => {
            let mask = (1 << i) | (1 << j);
            for (x, a) in v.iter_mut().enumerate() {
                if x & mask == mask {
                    *a = -*a;
                }
            }
        }
        Gate::Swap(i, j) => {
            for x in 0..dim {
                if x >> i & 1 == 1 && x >> j & 1 == 0 {
                    v.swap(x, x ^ (1 << i) ^ (1 << j));
                }
            }
        }
        Gate::X(i) => {
            for x in (0..dim).filter(|x| x >> i & 1 == 0) {
                v.swap(x, x | 1 << i);
            }
        }
        Gate::H(i) => {
            let h = std::f64::consts::FRAC_1_SQRT_2;
            for x in (0..dim).filter(|x| x >> i & 1 == 0) {
                let y = x | 1 << i;
                let (a, b) = (v[x], v[y]);
                v[x] = (a + b) * h;
                v[y] = (a - b) * h;
            }
        }
    }
}

/// Per-qubit coefficient pairs `(a₀, a₁)` of a product state
/// `⊗_q (p_q0|0⟩ + p_q1|1⟩)`; entry `q` belongs to qubit `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamSpec {
    pairs: Vec<[RingScalar; 2]>,
}

impl ParamSpec {
    pub fn new(pairs: Vec<[RingScalar; 2]>) -> Result<Self, EntangleError> {
        if let Some(q) = pairs.iter().position(|[a, b]| a.is_zero() && b.is_zero()) {
            return Err(EntangleError::ZeroParameterPair { qubit: q });
        }
        Ok(Self { pairs })
    }

    /// Every qubit gets the same pair.
    pub fn uniform(k: usize, pair: [RingScalar; 2]) -> Result<Self, EntangleError> {
        Self::new(vec![pair; k])
    }

    /// Random Gaussian rationals `p/q + i·r/s` with `p, q, r, s ∈ [1, 97]`.
    pub fn random<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Self {
        let mut draw = || {
            let mut part = || {
                let n: i64 = rng.gen_range(1..=97);
                let d: i64 = rng.gen_range(1..=97);
                BigRational::new(BigInt::from(n), BigInt::from(d))
            };
            let re = part();
            RingScalar::gaussian(re, part())
        };
        let pairs = (0..k).map(|_| [draw(), draw()]).collect();
        Self { pairs }
    }

    /// [`ParamSpec::random`] driven by a ChaCha8 generator seeded with `seed`.
    pub fn seeded(k: usize, seed: u64) -> Self {
        Self::random(k, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    /// Parses one line per qubit holding two scalars. A scalar is `re` or
    /// `re,im` with rational parts such as `-3/4`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, EntangleError> {
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| EntangleError::ParamSyntax { line: idx + 1, message };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(err(format!("expected two scalars, found {}", fields.len())));
            }
            let a = parse_gaussian(fields[0]).map_err(err)?;
            let b = parse_gaussian(fields[1]).map_err(err)?;
            pairs.push([a, b]);
        }
        Self::new(pairs)
    }

    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[[RingScalar; 2]] {
        &self.pairs
    }

    pub fn pair(&self, q: usize) -> &[RingScalar; 2] {
        &self.pairs[q]
    }

    /// The same parameters with qubit `q` moved to `perm(q)`.
    pub fn relabel(&self, perm: &Permutation) -> Self {
        let mut pairs = self.pairs.clone();
        for (q, p) in self.pairs.iter().enumerate() {
            pairs[perm.apply(q)] = p.clone();
        }
        Self { pairs }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let bad = || format!("bad rational {s:?}");
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

fn parse_gaussian(s: &str) -> Result<RingScalar, String> {
    match s.split_once(',') {
        Some((re, im)) => Ok(RingScalar::gaussian(parse_rational(re)?, parse_rational(im)?)),
        None => Ok(RingScalar::from_rational(parse_rational(s)?)),
    }
}

impl fmt::Display for ParamSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|[a, b]| format!("({a}; {b})")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `(−1)^{#{ {i,j} ∈ E : x_i = x_j = 1 }}` as a boolean "is negative".
pub(crate) fn phase_sign(pairs: &[(usize, usize)], x: usize) -> bool {
    pairs.iter().filter(|&&(i, j)| x >> i & 1 == 1 && x >> j & 1 == 1).count() % 2 == 1
}

/// `|Φ_E⟩ = Z_E ⊗_q (p_q0|0⟩ + p_q1|1⟩)`, exact and unnormalized.
pub fn phi_state(e: &PairSet, p: &ParamSpec) -> Result<PureState, EntangleError> {
    if e.k() != p.k() {
        return Err(EntangleError::ParamCountMismatch { pairs: e.k(), params: p.k() });
    }
    let k = e.k();
    let pairs: Vec<(usize, usize)> = e.pairs().collect();
    let amps = (0..1usize << k)
        .map(|x| {
            let prod = (0..k).fold(RingScalar::one(), |acc, q| acc * &p.pairs[q][x >> q & 1]);
            if phase_sign(&pairs, x) {
                -prod
            } else {
                prod
            }
        })
        .collect();
    PureState::exact(k, amps)
}

/// Amplitudes of `|Φ_E⟩` as polynomials in the parameters: pair `q` of the
/// polynomial ring holds `(p_q0, p_q1)`.
pub fn phi_state_symbolic(e: &PairSet) -> Vec<MultiPoly<RingScalar>> {
    let k = e.k();
    let pairs: Vec<(usize, usize)> = e.pairs().collect();
    (0..1usize << k)
        .map(|x| {
            let mono: Vec<(VarId, u32)> = (0..k).map(|q| (VarId::new(q, (x >> q & 1) as u8), 1)).collect();
            let sign = if phase_sign(&pairs, x) { -1 } else { 1 };
            MultiPoly::from_terms(k, [(mono, RingScalar::from_int(sign))]).expect("variables in range")
        })
        .collect()
}

/// The named states of the classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedState {
    Ghz,
    W,
}

/// `|GHZ_k⟩ = (|0⋯0⟩ + |1⋯1⟩)/√2` or `|W_k⟩ = Σ_q |2^q⟩ / √k`.
///
/// `1/√k` lies in `Q(i)[√2]` only when `k` is a power of two; other `W_k`
/// use the float backend and keep the all-ones exact vector alongside.
pub fn named_state(name: NamedState, k: usize) -> Result<PureState, EntangleError> {
    if k < 2 {
        return Err(EntangleError::QubitsTooFew { name: "named states", k, min: 2 });
    }
    let dim = 1usize << k;
    match name {
        NamedState::Ghz => {
            let mut amps = vec![RingScalar::zero(); dim];
            amps[0] = RingScalar::inv_sqrt2();
            amps[dim - 1] = RingScalar::inv_sqrt2();
            PureState::exact(k, amps)
        }
        NamedState::W => {
            let ones: Vec<RingScalar> =
                (0..dim).map(|x| if x.count_ones() == 1 { RingScalar::one() } else { RingScalar::zero() }).collect();
            if k.is_power_of_two() {
                // 1/√(2^m) = 2^{-m/2}, or √2 · 2^{-(m+1)/2} for odd m.
                let m = k.trailing_zeros();
                let scale = if m.is_multiple_of(2) {
                    RingScalar::from_ratio(1, 1 << (m / 2))
                } else {
                    RingScalar::sqrt2().scale_ratio(1, 1 << m.div_ceil(2))
                };
                PureState::exact(k, ones.iter().map(|a| a * &scale).collect())
            } else {
                let s = 1.0 / (k as f64).sqrt();
                let values =
                    ones.iter().map(|a| if a.is_zero() { Complex64::new(0.0, 0.0) } else { Complex64::new(s, 0.0) });
                PureState::float_with_exact(k, values.collect(), ones)
            }
        }
    }
}

/// The four-qubit family
/// `G_abcd = ((a+d)/2)(|0000⟩+|1111⟩) + ((a−d)/2)(|0011⟩+|1100⟩)
///         + ((b+c)/2)(|0101⟩+|1010⟩) + ((b−c)/2)(|0110⟩+|1001⟩)`, unnormalized.
pub fn g_abcd(a: &RingScalar, b: &RingScalar, c: &RingScalar, d: &RingScalar) -> PureState {
    let half = |x: RingScalar| x.scale_ratio(1, 2);
    let mut amps = vec![RingScalar::zero(); 16];
    for (value, (x, y)) in [
        (half(a + d), (0b0000, 0b1111)),
        (half(a - d), (0b0011, 0b1100)),
        (half(b + c), (0b0101, 0b1010)),
        (half(b - c), (0b0110, 0b1001)),
    ] {
        amps[x] = value.clone();
        amps[y] = value;
    }
    PureState::exact(4, amps).expect("16 amplitudes")
}

/// H on every qubit, `CZ(0, j)` for `j = 1..k−1`, then H on qubits `1..k−1`;
/// maps `|0⋯0⟩` to `|GHZ_k⟩`.
pub fn ghz_circuit(k: usize) -> Result<Circuit, EntangleError> {
    if k < 2 {
        return Err(EntangleError::QubitsTooFew { name: "ghz_circuit", k, min: 2 });
    }
    let gates = (0..k).map(Gate::H).chain((1..k).map(|j| Gate::Cz(0, j))).chain((1..k).map(Gate::H));
    Ok(Circuit::from_gates(k, gates).expect("indices below k"))
}

/// `R_y(θ) = [[cos θ/2, −sin θ/2], [sin θ/2, cos θ/2]]`.
pub fn ry(theta: f64) -> [[Complex64; 2]; 2] {
    let (s, c) = (theta / 2.0).sin_cos();
    [[Complex64::new(c, 0.0), Complex64::new(-s, 0.0)], [Complex64::new(s, 0.0), Complex64::new(c, 0.0)]]
}

/// `|φ₁⟩ = (R_y(π/4)HX ⊗ R_y(π/4) ⊗ HX) Z₀₁Z₁₂ (|0⟩+|1⟩)^{⊗3}`, where the
/// leftmost tensor factor acts on qubit 2. Float backend, unnormalized.
pub fn phi1_example() -> PureState {
    let plus = PureState::exact(3, vec![RingScalar::one(); 8]).expect("8 amplitudes");
    let entangled =
        Circuit::from_gates(3, [Gate::Cz(1, 2), Gate::Cz(0, 1), Gate::X(0), Gate::H(0), Gate::X(2), Gate::H(2)])
            .expect("valid gates");
    let s = plus.apply_circuit(&entangled).expect("3 qubits");
    s.apply_local(2, ry(std::f64::consts::FRAC_PI_4)).apply_local(1, ry(std::f64::consts::FRAC_PI_4))
}

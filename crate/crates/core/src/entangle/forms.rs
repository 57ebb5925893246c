use crate::algebra::{Coeff, MultiPoly, VarId};

/// The ground form `A = Σ α_{i₁⋯i_k} x⁽¹⁾_{i₁} ⋯ x⁽ᵏ⁾_{i_k}` in ket order:
/// polynomial pair `j` carries ket position `j`, i.e. qubit `k−1−j`.
pub(crate) fn ket_ground_form<C: Coeff>(amps: &[C], k: usize) -> MultiPoly<C> {
    ground_form(amps, k, |j| k - 1 - j)
}

/// The ground form with polynomial pair `j` attached to qubit `j`.
pub(crate) fn qubit_ground_form<C: Coeff>(amps: &[C], k: usize) -> MultiPoly<C> {
    ground_form(amps, k, |j| j)
}

fn ground_form<C: Coeff>(amps: &[C], k: usize, qubit_of_pair: impl Fn(usize) -> usize) -> MultiPoly<C> {
    let terms = amps.iter().enumerate().filter(|(_, a)| !a.is_zero()).map(|(x, a)| {
        let mono = (0..k).map(|j| (VarId::new(j, (x >> qubit_of_pair(j) & 1) as u8), 1)).collect();
        (mono, a.clone())
    });
    MultiPoly::from_terms(k, terms.collect::<Vec<_>>()).expect("pairs below k")
}

/// Determinant by cofactor expansion along the first row (sizes here are ≤ 4).
pub(crate) fn det<C: Coeff>(m: &[Vec<C>]) -> C {
    let n = m.len();
    match n {
        0 => C::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].mul_ref(&m[1][1]).sub_ref(&m[0][1].mul_ref(&m[1][0])),
        _ => {
            let mut acc = C::zero();
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<C>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != col).map(|(_, v)| v.clone()).collect())
                    .collect();
                let t = m[0][col].mul_ref(&det(&minor));
                acc = if col % 2 == 0 { acc.add_ref(&t) } else { acc.sub_ref(&t) };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RingScalar;

    #[test]
    fn determinant_of_permutation_matrix() {
        let one = RingScalar::one;
        let z = RingScalar::zero;
        let m = vec![vec![z(), one(), z()], vec![one(), z(), z()], vec![z(), z(), one()]];
        assert_eq!(det(&m), RingScalar::from_int(-1));
    }

    #[test]
    fn ket_form_puts_top_qubit_first() {
        // |100⟩ in ket order: qubit 2 set, so the monomial is x1·y0·z0.
        let mut amps = vec![RingScalar::zero(); 8];
        amps[0b100] = RingScalar::one();
        let a = ket_ground_form(&amps, 3);
        assert!(a.coefficient(&[(VarId::new(0, 1), 1), (VarId::new(1, 0), 1), (VarId::new(2, 0), 1)]).is_one());
        let q = qubit_ground_form(&amps, 3);
        assert!(q.coefficient(&[(VarId::new(0, 0), 1), (VarId::new(1, 0), 1), (VarId::new(2, 1), 1)]).is_one());
    }
}

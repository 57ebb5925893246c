//! Ring and polynomial laws checked on random exact data.

use czs_core::algebra::{MultiPoly, RingScalar, VarId};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = BigRational> {
    (-30i64..30, 1i64..12).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn arb_scalar() -> impl Strategy<Value = RingScalar> {
    (arb_rational(), arb_rational(), arb_rational(), arb_rational())
        .prop_map(|(a, b, c, d)| RingScalar::from_parts(a, b, c, d))
}

/// Polynomials in two pairs with total degree at most 3 per pair.
fn arb_poly() -> impl Strategy<Value = MultiPoly<RingScalar>> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3, 0u32..3), arb_scalar()), 0..5).prop_map(|terms| {
        let terms = terms.into_iter().map(|((a, b, c, d), coeff)| {
            let mono = [(VarId::new(0, 0), a), (VarId::new(0, 1), b), (VarId::new(1, 0), c), (VarId::new(1, 1), d)]
                .into_iter()
                .filter(|&(_, e)| e > 0)
                .collect();
            (mono, coeff)
        });
        MultiPoly::from_terms(2, terms).unwrap()
    })
}

/// Binary forms of degree `deg` in a single pair.
fn arb_binary_form(deg: u32) -> impl Strategy<Value = MultiPoly<RingScalar>> {
    prop::collection::vec(arb_scalar(), (deg + 1) as usize).prop_map(move |cs| {
        let terms = cs.into_iter().enumerate().map(|(i, c)| {
            let i = i as u32;
            let mono =
                [(VarId::new(0, 0), deg - i), (VarId::new(0, 1), i)].into_iter().filter(|&(_, e)| e > 0).collect();
            (mono, c)
        });
        MultiPoly::from_terms(1, terms).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalar_field_laws(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
        } else {
            prop_assert!(a.checked_div(&b).is_err());
        }
    }

    #[test]
    fn float_image_is_a_homomorphism(a in arb_scalar(), b in arb_scalar()) {
        let exact = (&a * &b).to_complex64();
        let float = a.to_complex64() * b.to_complex64();
        prop_assert!((exact - float).norm() <= 1e-9 * (1.0 + float.norm()));
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(f in arb_poly(), g in arb_poly(), at in prop::collection::vec(arb_scalar(), 4)) {
        let (fv, gv) = (f.eval(&at).unwrap(), g.eval(&at).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap().eval(&at).unwrap(), &fv * &gv);
        prop_assert_eq!(f.add(&g).unwrap().eval(&at).unwrap(), &fv + &gv);
    }

    #[test]
    fn leibniz_rule(f in arb_poly(), g in arb_poly(), pair in 0usize..2, comp in 0u8..2) {
        let v = VarId::new(pair, comp);
        let lhs = f.mul(&g).unwrap().differentiate(v).unwrap();
        let rhs = f.differentiate(v).unwrap().mul(&g).unwrap().add(&f.mul(&g.differentiate(v).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transvectant_symmetry(f in arb_binary_form(3), g in arb_binary_form(3), order in 0u32..4) {
        let fg = f.transvect(&g, &[order]).unwrap();
        let gf = g.transvect(&f, &[order]).unwrap();
        let expected = if order % 2 == 0 { gf } else { gf.neg() };
        prop_assert_eq!(fg, expected);
    }

    #[test]
    fn odd_transvectant_of_a_form_with_itself_vanishes(f in arb_binary_form(4), order in prop::sample::select(vec![1u32, 3])) {
        prop_assert!(f.transvect(&f, &[order]).unwrap().is_zero());
    }
}

#[test]
fn second_transvectant_of_a_quadratic_is_its_discriminant() {
    // f = a x² + 2b xy + c y²  ⇒  (f, f)² = 2·(2a)(2c) − 2·(2b)² = 8(ac − b²).
    let x = |e0, e1| {
        [(VarId::new(0, 0), e0), (VarId::new(0, 1), e1)].into_iter().filter(|&(_, e)| e > 0).collect::<Vec<_>>()
    };
    for (a, b, c) in [(1, 2, 7), (3, 1, 5), (-2, 0, 4)] {
        let f = MultiPoly::from_terms(
            1,
            [
                (x(2, 0), RingScalar::from_int(a)),
                (x(1, 1), RingScalar::from_int(2 * b)),
                (x(0, 2), RingScalar::from_int(c)),
            ],
        )
        .unwrap();
        let h = f.transvect(&f, &[2]).unwrap();
        assert_eq!(h, MultiPoly::constant(1, RingScalar::from_int(8 * (a * c - b * b))));
    }
}

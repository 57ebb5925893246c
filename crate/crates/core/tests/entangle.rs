use czs_core::algebra::{Coeff, RingScalar};
use czs_core::entangle::{
    canonical_class, catalecticant3, class_table, classify3, classify_phi4, delta3, fallback_graph_solution, g_abcd,
    hyperdet_system_check, invariants4, phi_state, quartics, root_config, tabulated_solution_5q, Class3, ParamSpec,
    RootConfig, SolutionSource, Value,
};
use czs_core::group::{conjugate_pairs, PairSet, Permutation};
use proptest::prelude::*;

fn sign(e: &PairSet, i: usize, j: usize) -> i64 {
    if e.contains(i, j) {
        -1
    } else {
        1
    }
}

/// `4 (a₀a₁b₀b₁c₀c₁)² ε₀₁ε₀₂ε₁₂ (2 − ε₀₁ − ε₀₂ − ε₁₂ + ε₀₁ε₀₂ε₁₂)`.
fn delta3_closed_form(e: &PairSet, p: &ParamSpec) -> RingScalar {
    let (e01, e02, e12) = (sign(e, 0, 1), sign(e, 0, 2), sign(e, 1, 2));
    let prod = p.pairs().iter().fold(RingScalar::one(), |acc, [x, y]| acc * x * y);
    let factor = 4 * e01 * e02 * e12 * (2 - e01 - e02 - e12 + e01 * e02 * e12);
    &prod * &prod * &RingScalar::from_int(factor)
}

#[test]
fn three_qubit_delta_matches_the_closed_form() {
    for mask in 0..8u128 {
        let e = PairSet::from_mask(3, mask).unwrap();
        for seed in 0..3 {
            let p = ParamSpec::seeded(3, seed);
            let s = phi_state(&e, &p).unwrap();
            assert_eq!(delta3(&s).unwrap(), Value::Exact(delta3_closed_form(&e, &p)), "E = {e}");
        }
    }
}

#[test]
fn three_qubit_catalecticant_vanishes_with_delta() {
    for mask in 0..8u128 {
        let e = PairSet::from_mask(3, mask).unwrap();
        let s = phi_state(&e, &ParamSpec::seeded(3, 9)).unwrap();
        let delta_zero = delta3(&s).unwrap().is_zero();
        assert_eq!(catalecticant3(&s).unwrap().is_zero(), delta_zero, "E = {e}");
        let want = if delta_zero { Class3::Degenerate } else { Class3::GhzClass };
        assert_eq!(classify3(&s).unwrap(), want);
    }
}

#[test]
fn four_qubit_reports_match_their_case() {
    for mask in 0..64u128 {
        let e = PairSet::from_mask(4, mask).unwrap();
        let report = classify_phi4(&e, &ParamSpec::seeded(4, 21)).unwrap();
        assert!(report.roots_match(), "E = {e}: {:?}", report.roots);
        assert!(report.covariants_match(), "E = {e}\n{report}");
    }
}

#[test]
fn g_abcd_quartic_roots_are_the_squares() {
    let r = RingScalar::from_int;
    for (a, b, c, d) in [(1, 2, 3, 4), (2, 5, 7, 11), (-1, 3, 6, 10)] {
        let s = g_abcd(&r(a), &r(b), &r(c), &r(d));
        let q1 = &quartics(&s).unwrap()[0];
        for x in [a, b, c, d] {
            assert!(q1.eval(&r(x * x), &RingScalar::one()).is_zero());
        }
        assert_eq!(root_config(q1).unwrap(), RootConfig::FourDistinct);
    }
}

#[test]
fn g_abcd_with_equal_parameters_has_double_roots() {
    let r = RingScalar::from_int;
    let s = g_abcd(&r(2), &r(2), &r(0), &r(0));
    let configs: Vec<RootConfig> = quartics(&s).unwrap().iter().map(|q| root_config(q).unwrap()).collect();
    assert!(configs.iter().all(|&c| c != RootConfig::FourDistinct), "{configs:?}");
}

#[test]
fn five_qubit_table_rows_that_verify_are_used() {
    let e = PairSet::empty(5).unwrap();
    let p = ParamSpec::seeded(5, 2);
    let sol = tabulated_solution_5q(&e, &p).unwrap();
    assert_eq!(sol.source, SolutionSource::Table);
    assert!(hyperdet_system_check(&phi_state(&e, &p).unwrap(), &sol.solution).unwrap());
}

#[test]
fn five_qubit_classes_partition_all_pair_sets() {
    let mut seen = vec![0usize; class_table().len()];
    for mask in 0..1024u128 {
        let e = PairSet::from_mask(5, mask).unwrap();
        let (row, sigma) = canonical_class(&e).unwrap();
        assert_eq!(conjugate_pairs(&sigma, &e).unwrap(), row.representative());
        seen[row.index - 1] += 1;
    }
    let cards: Vec<usize> = class_table().iter().map(|r| r.cardinality).collect();
    assert_eq!(seen, cards);
}

#[test]
fn five_cycle_has_no_graph_form_solution() {
    let cycle = PairSet::parse(5, "01,12,23,34,04").unwrap();
    assert_eq!(fallback_graph_solution(&cycle).unwrap(), None);
    let path = PairSet::parse(5, "01,12,23,34").unwrap();
    assert!(fallback_graph_solution(&path).unwrap().is_some());
}

fn arb_params(k: usize) -> impl Strategy<Value = ParamSpec> {
    prop::collection::vec((1i64..50, 1i64..50, -20i64..20, 1i64..50), 2 * k).prop_map(move |v| {
        let scalars: Vec<RingScalar> = v
            .iter()
            .map(|&(n, d, m, e)| &RingScalar::from_ratio(n, d) + &(&RingScalar::i() * &RingScalar::from_ratio(m, e)))
            .collect();
        ParamSpec::new(scalars.chunks(2).map(|c| [c[0].clone(), c[1].clone()]).collect()).unwrap()
    })
}

fn arb_perm(k: usize) -> impl Strategy<Value = Permutation> {
    Just((0..k).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn no_three_qubit_state_is_w(mask in 0u128..8, p in arb_params(3)) {
        let e = PairSet::from_mask(3, mask).unwrap();
        prop_assert_ne!(classify3(&phi_state(&e, &p).unwrap()).unwrap(), Class3::WClass);
    }

    #[test]
    fn delta3_is_invariant_under_relabelling(mask in 0u128..8, p in arb_params(3), sigma in arb_perm(3)) {
        let e = PairSet::from_mask(3, mask).unwrap();
        let before = delta3(&phi_state(&e, &p).unwrap()).unwrap();
        let moved = phi_state(&conjugate_pairs(&sigma, &e).unwrap(), &p.relabel(&sigma)).unwrap();
        prop_assert_eq!(delta3(&moved).unwrap(), before);
    }

    #[test]
    fn four_qubit_lmn_and_discriminants_vanish(mask in 0u128..64, p in arb_params(4)) {
        let e = PairSet::from_mask(4, mask).unwrap();
        let s = phi_state(&e, &p).unwrap();
        let inv = invariants4(&s).unwrap();
        prop_assert!(inv.l.mul_ref(&inv.m).mul_ref(&inv.n).is_zero());
        for q in quartics(&s).unwrap() {
            prop_assert!(q.discriminant().is_zero());
        }
    }

    #[test]
    fn b_invariant_is_quadratic(mask in 0u128..64, p in arb_params(4), n in 1i64..9) {
        let e = PairSet::from_mask(4, mask).unwrap();
        let s = phi_state(&e, &p).unwrap();
        let lambda = RingScalar::from_int(n);
        let scaled_first = ParamSpec::new(
            p.pairs().iter().enumerate().map(|(q, [a, b])| if q == 0 { [a * &lambda, b * &lambda] } else { [a.clone(), b.clone()] }).collect(),
        ).unwrap();
        let t = phi_state(&e, &scaled_first).unwrap();
        let (b0, b1) = (invariants4(&s).unwrap().b, invariants4(&t).unwrap().b);
        prop_assert_eq!(b1, &b0 * &(&lambda * &lambda));
    }
}

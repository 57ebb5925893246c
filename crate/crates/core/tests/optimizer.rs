use czs_core::circuit::{parse_circuit, Circuit, Gate, Topology};
use czs_core::group::{NormalForm, PairSet, Permutation};
use czs_core::optimizer::{
    bfs_minimize, bfs_minimize_word, dehn_reduce, heuristic_line_reduce, normalize, rothe_reduced_word,
    synthesize_complete, GeneratorWord, Letter, RelationSet, DEFAULT_BUDGET,
};
use czs_core::sim::{equivalent, signed_perm_of, word_matrix, SignedPerm};
use proptest::prelude::*;

const EXAMPLE_A: &str = "qubits 3
swap 1 2
cz 0 1
cz 0 2
swap 1 2
cz 0 1
cz 1 2
swap 0 1
";

fn inversion_count(images: &[usize]) -> usize {
    let mut n = 0;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
                n += 1;
            }
        }
    }
    n
}

#[test]
fn example_operator_normalizes_and_resynthesizes() {
    let c = parse_circuit(EXAMPLE_A).unwrap();
    let nf = normalize(&c).unwrap();
    assert_eq!(nf.phase(), &PairSet::from_pairs(3, [(0, 2), (1, 2)]).unwrap());
    assert_eq!(nf.perm(), &Permutation::parse_cycles(3, "(0,1)").unwrap());
    let out = synthesize_complete(&nf);
    assert_eq!(out.gates(), &[Gate::Cz(0, 2), Gate::Cz(1, 2), Gate::Swap(0, 1)]);
    assert!(equivalent(&c, &out).unwrap());
}

#[test]
fn rothe_word_for_double_transposition() {
    let sigma = Permutation::parse_cycles(5, "(0,3)(2,4)").unwrap();
    let w = rothe_reduced_word(&sigma);
    assert_eq!(w.to_string(), "s2 s1 s0 s1 s3 s2");
    assert_eq!(w.evaluate().perm(), &sigma);
}

#[test]
fn dehn_first_example_reduces_to_single_swap() {
    let r = RelationSet::line(5).unwrap();
    let w = GeneratorWord::parse(5, "z0 z3 s1 s0 z1 z3 s0").unwrap();
    let out = dehn_reduce(&w, &r).unwrap();
    assert_eq!(out.to_string(), "s1");
    assert_eq!(word_matrix(&out), word_matrix(&w));
}

#[test]
fn dehn_second_example_is_fixpoint() {
    let r = RelationSet::line(5).unwrap();
    let w = GeneratorWord::parse(5, "s3 s2 z1 s2 s3 s2 z1 s2").unwrap();
    assert_eq!(dehn_reduce(&w, &r).unwrap(), w);
}

#[test]
fn heuristic_finds_length_six() {
    let r = RelationSet::line(5).unwrap();
    let w = GeneratorWord::parse(5, "s3 s2 z1 s2 s3 s2 z1 s2").unwrap();
    let out = heuristic_line_reduce(&w, &r, DEFAULT_BUDGET).unwrap();
    assert_eq!(out.len(), 6, "got {out}");
    assert_eq!(word_matrix(&out), word_matrix(&w));
    // Rewriting s2 z1 s2 -> s1 z2 s1 twice and cancelling s1 s3 s1 = s3 gives
    // this word; a leading s2 in place of s3 would denote a different element.
    let hand = GeneratorWord::parse(5, "s3 s1 z2 s3 z2 s1").unwrap();
    assert_eq!(hand.evaluate(), w.evaluate());
    assert_ne!(GeneratorWord::parse(5, "s2 s1 z2 s3 z2 s1").unwrap().evaluate(), w.evaluate());
    let minimal = bfs_minimize_word(&w.evaluate()).unwrap();
    assert!(minimal.len() <= 6);
    assert_eq!(minimal.evaluate(), w.evaluate());
}

#[test]
fn heuristic_keeps_minimal_word() {
    let r = RelationSet::line(4).unwrap();
    let w = GeneratorWord::parse(4, "s0 z1 s2").unwrap();
    assert_eq!(heuristic_line_reduce(&w, &r, DEFAULT_BUDGET).unwrap(), w);
}

#[test]
fn bfs_line_matches_rothe_on_permutations() {
    for images in [vec![1, 0, 2, 3], vec![3, 2, 1, 0], vec![2, 0, 3, 1]] {
        let sigma = Permutation::from_images(images.clone()).unwrap();
        let nf = NormalForm::new(PairSet::empty(4).unwrap(), sigma.clone()).unwrap();
        assert_eq!(bfs_minimize_word(&nf).unwrap().len(), inversion_count(&images));
    }
}

#[test]
fn bfs_complete_beats_or_matches_resynthesis() {
    let c = parse_circuit(EXAMPLE_A).unwrap();
    let nf = normalize(&c).unwrap();
    let min = bfs_minimize(&nf, Topology::Complete).unwrap();
    assert!(min.len() <= 3);
    assert!(equivalent(&c, &min).unwrap());
}

#[test]
fn heuristic_never_beats_bfs_on_random_words() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let r = RelationSet::line(4).unwrap();
    let table = czs_core::sim::enumerate_group(4, Topology::Line).unwrap();
    let mut equal = 0;
    for _ in 0..100 {
        let len = rng.gen_range(0..12);
        let letters: Vec<Letter> = (0..len)
            .map(|_| if rng.gen_bool(0.5) { Letter::s(rng.gen_range(0..3)) } else { Letter::z(rng.gen_range(0..3)) })
            .collect();
        let w = GeneratorWord::new(4, letters).unwrap();
        let out = heuristic_line_reduce(&w, &r, 2_000).unwrap();
        let min = table.distance(&w.evaluate()).unwrap() as usize;
        assert!(out.len() >= min);
        assert!(out.len() <= w.len());
        assert_eq!(out.evaluate(), w.evaluate());
        if out.len() == min {
            equal += 1;
        }
    }
    println!("heuristic reached the BFS minimum on {equal}/100 random words");
}

fn arb_czs_circuit(max_k: usize, max_len: usize) -> impl Strategy<Value = Circuit> {
    (2..=max_k).prop_flat_map(move |k| {
        prop::collection::vec((any::<bool>(), 0..k, 1..k), 0..=max_len).prop_map(move |gs| {
            let gates = gs.into_iter().map(|(cz, i, d)| {
                let j = (i + d) % k;
                if cz {
                    Gate::cz(i, j)
                } else {
                    Gate::swap(i, j)
                }
            });
            Circuit::from_gates(k, gates).unwrap()
        })
    })
}

fn arb_word(k: usize, max_len: usize) -> impl Strategy<Value = GeneratorWord> {
    prop::collection::vec((any::<bool>(), 0..k - 1), 0..=max_len).prop_map(move |ls| {
        let letters = ls.into_iter().map(|(s, i)| if s { Letter::s(i) } else { Letter::z(i) }).collect();
        GeneratorWord::new(k, letters).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normalize_agrees_with_matrix_semantics(c in arb_czs_circuit(5, 30)) {
        let nf = normalize(&c).unwrap();
        prop_assert_eq!(signed_perm_of(&nf), SignedPerm::of_circuit(&c).unwrap());
    }

    #[test]
    fn synthesize_then_normalize_is_identity(c in arb_czs_circuit(5, 30)) {
        let nf = normalize(&c).unwrap();
        let out = synthesize_complete(&nf);
        prop_assert_eq!(normalize(&out).unwrap(), nf.clone());
        prop_assert_eq!(out.count_cz(), nf.phase().len());
        let swaps: usize = nf.perm().cycles().iter().map(|c| c.len() - 1).sum();
        prop_assert_eq!(out.count_swap(), swaps);
    }

    #[test]
    fn rothe_length_is_inversion_count(images in (1usize..=8).prop_flat_map(|k| Just((0..k).collect::<Vec<_>>()).prop_shuffle())) {
        let sigma = Permutation::from_images(images.clone()).unwrap();
        let w = rothe_reduced_word(&sigma);
        prop_assert_eq!(w.len(), inversion_count(&images));
        prop_assert!(w.letters().iter().all(|l| l.kind == czs_core::optimizer::LetterKind::S));
        let nf = w.evaluate();
        prop_assert_eq!(nf.perm(), &sigma);
    }

    #[test]
    fn dehn_preserves_element_and_never_grows(w in arb_word(5, 16)) {
        let r = RelationSet::line(5).unwrap();
        let out = dehn_reduce(&w, &r).unwrap();
        prop_assert!(out.len() <= w.len());
        prop_assert_eq!(word_matrix(&out), word_matrix(&w));
        prop_assert!(czs_core::optimizer::dehn_step(out.letters(), &r).is_none());
    }
}

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symdca::lower_bound::{
    build_hard_fsa, denes_generators, pigeonhole_demo, semigroup_closure, separating_extension,
    PigeonholeVerdict, DEFAULT_CLOSURE_CAP,
};
use symdca::synthesis::{materialize_reachable, synthesize_composition_dca};
use symdca::{verify_equivalence, Alphabet, Dca, DcaParts, TransitionFn, VerifyConfig};

/// Brute-force closure: repeatedly compose every known pair until nothing new
/// appears.
fn naive_closure(gens: &[TransitionFn]) -> HashSet<TransitionFn> {
    let mut set: HashSet<TransitionFn> = gens.iter().cloned().collect();
    loop {
        let snapshot: Vec<TransitionFn> = set.iter().cloned().collect();
        let before = set.len();
        for f in &snapshot {
            for g in &snapshot {
                set.insert(f.after(g));
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

fn random_candidate(states: usize, seed: u64) -> Dca {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_out = 3;
    Dca::new(DcaParts {
        alphabet: Alphabet::letters(3).unwrap(),
        num_states: states,
        alpha: (0..3).map(|_| rng.gen_range(0..states)).collect(),
        combine: (0..states)
            .map(|_| (0..states).map(|_| rng.gen_range(0..states)).collect())
            .collect(),
        outputs: (0..n_out).map(|o| o.to_string()).collect(),
        output_map: (0..states).map(|_| rng.gen_range(0..n_out)).collect(),
        state_names: None,
    })
    .unwrap()
}

#[test]
fn closure_matches_pairwise_composition() {
    for n in 1..=3 {
        let gens = denes_generators(n).unwrap();
        let atlas = semigroup_closure(&gens, DEFAULT_CLOSURE_CAP).unwrap();
        let naive = naive_closure(&gens.generators);
        assert_eq!(atlas.len(), naive.len());
        assert_eq!(atlas.len(), n.pow(n as u32));
        for (g, _) in atlas.entries() {
            assert!(naive.contains(g));
        }
    }
}

#[test]
fn atlas_words_are_sound_up_to_four_states() {
    for n in 1..=4 {
        let fsa = build_hard_fsa(n).unwrap();
        let atlas = semigroup_closure(&denes_generators(n).unwrap(), DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(atlas.len(), n.pow(n as u32));
        for (g, w) in atlas.entries() {
            assert!(!w.is_empty());
            assert_eq!(&fsa.word_function(w).unwrap(), g);
        }
    }
}

#[test]
fn every_pair_is_separated_by_a_prefix() {
    for n in 1..=3 {
        let fsa = build_hard_fsa(n).unwrap();
        let atlas = semigroup_closure(&denes_generators(n).unwrap(), DEFAULT_CLOSURE_CAP).unwrap();
        for g1 in 0..atlas.len() {
            for g2 in g1 + 1..atlas.len() {
                let h = separating_extension(&fsa, &atlas, g1, g2)
                    .unwrap()
                    .expect("distinct functions are separable");
                let q_hat = atlas.function(h).apply(0);
                assert_ne!(
                    atlas.function(g1).apply(q_hat),
                    atlas.function(g2).apply(q_hat)
                );
            }
        }
    }
}

#[test]
fn hard_machine_composition_dca_has_n_to_the_n_states() {
    for n in 1..=3 {
        let fsa = build_hard_fsa(n).unwrap();
        let m = materialize_reachable(&synthesize_composition_dca(&fsa), 100).unwrap();
        assert_eq!(m.dca.num_states(), n.pow(n as u32));
    }
}

#[test]
fn hard_machine_outputs_word_function_at_zero() {
    let fsa = build_hard_fsa(3).unwrap();
    let atlas = semigroup_closure(&denes_generators(3).unwrap(), DEFAULT_CLOSURE_CAP).unwrap();
    for (g, w) in atlas.entries() {
        assert_eq!(fsa.eval(w).unwrap(), g.apply(0));
    }
}

#[test]
fn undersized_candidates_get_certificates() {
    for (n, sizes) in [(2usize, vec![1usize, 2, 3]), (3, vec![1, 2, 5, 9, 17, 26])] {
        let fsa = build_hard_fsa(n).unwrap();
        for &states in &sizes {
            for seed in 0..3 {
                let candidate = random_candidate(states, seed * 100 + states as u64);
                match pigeonhole_demo(n, &candidate).unwrap() {
                    PigeonholeVerdict::Certificate(cert) => {
                        assert!(cert.verify(&fsa, &candidate).unwrap());
                        assert_ne!(cert.fsa_outputs.0, cert.fsa_outputs.1);
                    }
                    PigeonholeVerdict::NoCollision { .. } => {
                        panic!("n={n} states={states}: pigeonhole must collide")
                    }
                }
            }
        }
    }
}

#[test]
fn exact_composition_dca_has_no_collision() {
    let fsa = build_hard_fsa(2).unwrap();
    let m = materialize_reachable(&synthesize_composition_dca(&fsa), 100).unwrap();
    assert_eq!(m.dca.num_states(), 4);
    match pigeonhole_demo(2, &m.dca).unwrap() {
        PigeonholeVerdict::NoCollision {
            atlas_size,
            candidate_states,
        } => {
            assert_eq!((atlas_size, candidate_states), (4, 4));
        }
        PigeonholeVerdict::Certificate(c) => panic!("unexpected certificate {c:?}"),
    }
    let report = verify_equivalence(&fsa, &m.dca, &VerifyConfig::default()).unwrap();
    assert!(report.passed());
}

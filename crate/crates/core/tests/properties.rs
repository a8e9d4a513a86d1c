//! Randomized machines: arbitrary small FSAs, and symmetric "counter product"
//! machines whose output is an arbitrary function of saturating or modular
//! symbol counts.

use proptest::prelude::*;

use symdca::engine::{check_well_defined, DEFAULT_CHI_BUDGET};
use symdca::minimize::{minimize, refine_partition, refine_partition_hopcroft};
use symdca::symmetry::{brute_force_symmetric, is_symmetric};
use symdca::synthesis::synthesize_symmetric_dca;
use symdca::{verify_equivalence, Alphabet, Fsa, FsaParts, VerifyConfig};

fn arb_fsa() -> impl Strategy<Value = Fsa> {
    (1usize..=5, 1usize..=3, 1usize..=3).prop_flat_map(|(n, k, outs)| {
        (
            prop::collection::vec(prop::collection::vec(0..n, n), k),
            prop::collection::vec(0..outs, n),
            0..n,
        )
            .prop_map(move |(transitions, output_map, initial)| {
                Fsa::new(FsaParts {
                    alphabet: Alphabet::letters(k).unwrap(),
                    num_states: n,
                    initial,
                    transitions,
                    outputs: (0..outs).map(|o| format!("o{o}")).collect(),
                    output_map,
                    state_names: None,
                })
                .unwrap()
            })
    })
}

#[derive(Clone, Debug)]
enum Counter {
    Saturating(usize),
    Modular(usize),
}

impl Counter {
    fn size(&self) -> usize {
        match *self {
            Counter::Saturating(c) => c + 1,
            Counter::Modular(m) => m,
        }
    }

    fn bump(&self, v: usize) -> usize {
        match *self {
            Counter::Saturating(c) => (v + 1).min(c),
            Counter::Modular(m) => (v + 1) % m,
        }
    }
}

fn arb_counter() -> impl Strategy<Value = Counter> {
    prop_oneof![
        (0usize..=2).prop_map(Counter::Saturating),
        (1usize..=3).prop_map(Counter::Modular),
    ]
}

/// One counter per symbol; state = mixed-radix count vector.
fn arb_symmetric_fsa() -> impl Strategy<Value = Fsa> {
    prop::collection::vec(arb_counter(), 1..=3)
        .prop_flat_map(|counters| {
            let n: usize = counters.iter().map(Counter::size).product();
            (Just(counters), prop::collection::vec(0usize..3, n))
        })
        .prop_map(|(counters, output_map)| {
            let n = output_map.len();
            let radices: Vec<usize> = counters.iter().map(Counter::size).collect();
            let decode = |mut q: usize| -> Vec<usize> {
                radices
                    .iter()
                    .map(|&r| {
                        let d = q % r;
                        q /= r;
                        d
                    })
                    .collect()
            };
            let encode = |digits: &[usize]| -> usize {
                digits
                    .iter()
                    .zip(&radices)
                    .rev()
                    .fold(0, |acc, (&d, &r)| acc * r + d)
            };
            let transitions = counters
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    (0..n)
                        .map(|q| {
                            let mut d = decode(q);
                            d[i] = c.bump(d[i]);
                            encode(&d)
                        })
                        .collect()
                })
                .collect();
            Fsa::new(FsaParts {
                alphabet: Alphabet::letters(counters.len()).unwrap(),
                num_states: n,
                initial: 0,
                transitions,
                outputs: vec!["x".into(), "y".into(), "z".into()],
                output_map,
                state_names: None,
            })
            .unwrap()
        })
}

fn small_verify() -> VerifyConfig {
    VerifyConfig {
        exhaustive_max_len: 6,
        num_random_trials: 200,
        random_max_len: 32,
        ..VerifyConfig::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hopcroft_agrees_with_moore(fsa in arb_fsa()) {
        prop_assert_eq!(refine_partition_hopcroft(&fsa), refine_partition(&fsa));
    }

    #[test]
    fn minimization_preserves_outputs(fsa in arb_fsa()) {
        let min = minimize(&fsa).minimized;
        prop_assert!(min.num_states() <= fsa.num_states());
        let k = fsa.num_symbols();
        for len in 1..=6u32 {
            for code in 0..k.pow(len) {
                let word: Vec<usize> = (0..len).map(|i| code / k.pow(i) % k).collect();
                prop_assert_eq!(fsa.eval(&word).unwrap(), min.eval(&word).unwrap());
            }
        }
    }

    #[test]
    fn symmetry_decision_matches_definition(fsa in arb_fsa()) {
        let verdict = is_symmetric(&fsa).unwrap();
        match verdict.counterexample {
            Some(cex) => {
                prop_assert!(!verdict.symmetric);
                prop_assert!(cex.verify(&fsa));
            }
            None => {
                prop_assert!(verdict.symmetric);
                prop_assert!(brute_force_symmetric(&fsa, 6).is_none());
            }
        }
    }

    #[test]
    fn counter_machines_synthesize_correctly(fsa in arb_symmetric_fsa()) {
        let s = synthesize_symmetric_dca(&fsa).unwrap();
        prop_assert!(s.dca.num_states() <= fsa.num_states());
        let report = verify_equivalence(&fsa, &s.dca, &small_verify()).unwrap();
        prop_assert!(report.passed(), "{:?}", report.first_failure);
        let wd = check_well_defined(&s.dca, 5, DEFAULT_CHI_BUDGET).unwrap();
        prop_assert!(wd.passed(), "{:?}", wd);
    }

    #[test]
    fn symmetric_random_machines_synthesize_correctly(fsa in arb_fsa()) {
        if let Ok(s) = synthesize_symmetric_dca(&fsa) {
            let report = verify_equivalence(&fsa, &s.dca, &small_verify()).unwrap();
            prop_assert!(report.passed(), "{:?}", report.first_failure);
        } else {
            prop_assert!(!is_symmetric(&fsa).unwrap().symmetric);
        }
    }
}

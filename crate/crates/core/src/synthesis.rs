//! Construction of divide-and-conquer automata from FSAs.
//!
//! For a symmetric machine the minimized state set itself serves as the DCA
//! state set: with a fixed representative word `r[q]` reaching each state,
//! `combine(q, q') = f_{r[q']}(q)` and `input(σ) = f_σ(q0)`. Any machine can
//! instead be run through the function-composition DCA, whose states are
//! transition tables.

use std::collections::HashMap;

use crate::automaton::{Fsa, TransitionFn, Word};
use crate::dca::{Dca, DcaParts, DivideAndConquer, FunctionalDca};
use crate::error::{Error, Result};
use crate::minimize::{self, MinimizationResult};
use crate::symmetry;

/// Default bound on the number of states [`materialize_reachable`] will emit.
pub const DEFAULT_MATERIALIZE_CAP: usize = 4096;

/// A fixed word per state that drives the initial state there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentativeTable {
    words: Vec<Word>,
}

impl RepresentativeTable {
    pub fn word(&self, q: usize) -> &Word {
        &self.words[q]
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }
}

/// Shortest, lexicographically least representatives. Fails on the first
/// inaccessible state.
pub fn representative_strings(fsa: &Fsa) -> Result<RepresentativeTable> {
    let access = minimize::accessible_states(fsa);
    let words = (0..fsa.num_states())
        .map(|q| {
            access
                .word(q)
                .cloned()
                .ok_or(Error::NotAccessible { state: q })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RepresentativeTable { words })
}

#[derive(Clone, Debug)]
pub struct SymmetricSynthesis {
    pub dca: Dca,
    pub minimization: MinimizationResult,
    pub representatives: RepresentativeTable,
}

/// Builds a DCA no larger than `fsa`. Refuses order-sensitive machines with
/// [`Error::NotSymmetric`] carrying a counterexample.
pub fn synthesize_symmetric_dca(fsa: &Fsa) -> Result<SymmetricSynthesis> {
    let verdict = symmetry::is_symmetric(fsa)?;
    if !verdict.symmetric {
        let cex = verdict
            .counterexample
            .ok_or_else(|| Error::Internal("asymmetric verdict without witness".into()))?;
        return Err(Error::NotSymmetric(Box::new(cex)));
    }
    let minimization = minimize::minimize(fsa);
    let min = &minimization.minimized;
    let representatives = representative_strings(min)?;
    let n = min.num_states();
    let q0 = min.initial();

    let alpha = (0..min.num_symbols())
        .map(|sigma| min.transition(sigma).apply(q0))
        .collect();
    let rep_functions: Vec<TransitionFn> = representatives
        .words()
        .iter()
        .map(|w| min.word_function(w))
        .collect::<Result<_>>()?;
    let combine = (0..n)
        .map(|q| rep_functions.iter().map(|f| f.apply(q)).collect())
        .collect();

    let dca = Dca::new(DcaParts {
        alphabet: min.alphabet().clone(),
        num_states: n,
        alpha,
        combine,
        outputs: min.outputs().to_vec(),
        output_map: min.output_map().to_vec(),
        state_names: Some(min.state_names().to_vec()),
    })?;
    debug_assert!(dca.num_states() <= fsa.num_states());
    Ok(SymmetricSynthesis {
        dca,
        minimization,
        representatives,
    })
}

/// The function-composition DCA; works for every FSA.
pub fn synthesize_composition_dca(fsa: &Fsa) -> FunctionalDca {
    FunctionalDca::new(fsa.clone())
}

#[derive(Clone, Debug)]
pub struct MaterializedDca {
    pub dca: Dca,
    /// Transition table represented by each DCA state.
    pub functions: Vec<TransitionFn>,
}

/// Enumerates the closure of the symbol functions under composition (the
/// word functions of all nonempty words) and tabulates the composition DCA
/// over it. States are numbered in breadth-first discovery order.
pub fn materialize_reachable(fdca: &FunctionalDca, cap: usize) -> Result<MaterializedDca> {
    let fsa = fdca.fsa();
    let mut functions: Vec<TransitionFn> = Vec::new();
    let mut index: HashMap<TransitionFn, usize> = HashMap::new();
    let mut intern = |f: TransitionFn, functions: &mut Vec<TransitionFn>| -> Result<usize> {
        if let Some(&i) = index.get(&f) {
            return Ok(i);
        }
        if functions.len() >= cap {
            return Err(Error::ResourceLimit {
                what: "composition closure size",
                count: functions.len() + 1,
                limit: cap,
            });
        }
        let i = functions.len();
        index.insert(f.clone(), i);
        functions.push(f);
        Ok(i)
    };

    let alpha = (0..fsa.num_symbols())
        .map(|sigma| intern(fdca.input(sigma), &mut functions))
        .collect::<Result<Vec<_>>>()?;
    let mut head = 0;
    while head < functions.len() {
        let g = functions[head].clone();
        head += 1;
        for sigma in 0..fsa.num_symbols() {
            intern(fsa.transition(sigma).after(&g), &mut functions)?;
        }
    }

    let n = functions.len();
    let combine = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let f = fdca.combine(&functions[i], &functions[j]);
                    intern(f, &mut functions)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if functions.len() != n {
        return Err(Error::Internal("composition closure was not closed".into()));
    }

    let dca = Dca::new(DcaParts {
        alphabet: fsa.alphabet().clone(),
        num_states: n,
        alpha,
        combine,
        outputs: fsa.outputs().to_vec(),
        output_map: functions.iter().map(|g| fdca.output(g)).collect(),
        state_names: Some(functions.iter().map(|g| format!("f{g}")).collect()),
    })?;
    Ok(MaterializedDca { dca, functions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn representatives_of_counters() {
        for fsa in [catalog::mod3_counter(), catalog::saturating_adder()] {
            let reps = representative_strings(&fsa).unwrap();
            assert!(reps.word(0).is_empty());
            assert_eq!(&**reps.word(1), &[0]);
            assert_eq!(&**reps.word(2), &[0, 0]);
        }
    }

    #[test]
    fn representatives_require_accessibility() {
        let err = representative_strings(&catalog::mod3_with_unreachable_clone()).unwrap_err();
        assert!(matches!(err, Error::NotAccessible { state: 3 }));
    }

    #[test]
    fn mod3_dca_is_addition_mod3() {
        let s = synthesize_symmetric_dca(&catalog::mod3_counter()).unwrap();
        assert_eq!(s.dca.alpha(), &[1, 0]);
        for q in 0..3 {
            for q2 in 0..3 {
                assert_eq!(s.dca.combine_states(q, q2), (q + q2) % 3);
            }
        }
    }

    #[test]
    fn saturating_dca_is_capped_addition() {
        let s = synthesize_symmetric_dca(&catalog::saturating_adder()).unwrap();
        for q in 0..3 {
            for q2 in 0..3 {
                assert_eq!(s.dca.combine_states(q, q2), (q + q2).min(2));
            }
        }
    }

    #[test]
    fn detector_is_refused_with_witness() {
        match synthesize_symmetric_dca(&catalog::ab_detector()) {
            Err(Error::NotSymmetric(cex)) => {
                assert_eq!(&*cex.word, &[0, 1]);
                assert_eq!(&*cex.permuted, &[1, 0]);
            }
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn split_machine_synthesizes_to_three_states() {
        let s = synthesize_symmetric_dca(&catalog::split_mod3()).unwrap();
        assert_eq!(s.dca.num_states(), 3);
    }

    #[test]
    fn mod3_closure_is_cyclic_group() {
        let m = materialize_reachable(&synthesize_composition_dca(&catalog::mod3_counter()), 100)
            .unwrap();
        assert_eq!(m.dca.num_states(), 3);
        let mut images: Vec<Vec<usize>> = m.functions.iter().map(|f| f.image().to_vec()).collect();
        images.sort();
        assert_eq!(images, vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]);
    }

    #[test]
    fn materialize_respects_cap() {
        let fdca =
            synthesize_composition_dca(&crate::lower_bound::build_hard_fsa(3).expect("n >= 1"));
        match materialize_reachable(&fdca, 10) {
            Err(Error::ResourceLimit { limit: 10, .. }) => {}
            other => panic!("expected resource limit, got {other:?}"),
        }
    }
}

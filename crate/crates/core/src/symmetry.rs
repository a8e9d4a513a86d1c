//! Symmetry: output invariance under permutations of the input word.
//!
//! On an accessible, distinguishable machine symmetry is equivalent to the
//! transition functions commuting pairwise. A non-commuting pair extends to a
//! concrete pair of permuted words with different outputs.

use std::collections::HashMap;

use crate::automaton::{Fsa, Word};
use crate::error::{Error, Result};
use crate::minimize::{self, AccessMap};

/// Default word-length bound for [`brute_force_symmetric`].
pub const DEFAULT_BRUTE_FORCE_LEN: usize = 6;

/// Two transition functions that disagree in order at state `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutativityViolation {
    pub sigma1: usize,
    pub sigma2: usize,
    pub q: usize,
    /// State reached by reading `sigma1` then `sigma2`.
    pub q1: usize,
    /// State reached by reading `sigma2` then `sigma1`.
    pub q2: usize,
}

/// Two words with equal symbol multisets and different outputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryCounterexample {
    pub word: Word,
    pub permuted: Word,
    pub output: usize,
    pub permuted_output: usize,
}

impl SymmetryCounterexample {
    /// Re-evaluates both words on `fsa`.
    pub fn verify(&self, fsa: &Fsa) -> bool {
        let mut a = self.word.to_vec();
        let mut b = self.permuted.to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a == b
            && self.output != self.permuted_output
            && fsa.eval(&self.word).ok() == Some(self.output)
            && fsa.eval(&self.permuted).ok() == Some(self.permuted_output)
    }
}

/// First violation in `(sigma1, sigma2, q)` lexicographic order with
/// `sigma1 < sigma2`.
pub fn transitions_commute(fsa: &Fsa) -> Option<CommutativityViolation> {
    let k = fsa.num_symbols();
    for sigma1 in 0..k {
        for sigma2 in sigma1 + 1..k {
            let f1 = fsa.transition(sigma1);
            let f2 = fsa.transition(sigma2);
            for q in 0..fsa.num_states() {
                let q1 = f2.apply(f1.apply(q));
                let q2 = f1.apply(f2.apply(q));
                if q1 != q2 {
                    return Some(CommutativityViolation {
                        sigma1,
                        sigma2,
                        q,
                        q1,
                        q2,
                    });
                }
            }
        }
    }
    None
}

/// Extends a violation on an accessible, distinguishable machine to
/// `(w_l σ1 σ2 w_r, w_l σ2 σ1 w_r)`, where `w_l` is the access word of the
/// violating state and `w_r` separates the two resulting states.
pub fn symmetry_counterexample(
    fsa_min: &Fsa,
    violation: &CommutativityViolation,
    access: &AccessMap,
) -> Result<SymmetryCounterexample> {
    let prefix = access.word(violation.q).ok_or_else(|| {
        Error::Internal(format!(
            "violating state {} has no access word",
            violation.q
        ))
    })?;
    let suffix =
        minimize::distinguishing_word(fsa_min, violation.q1, violation.q2).ok_or_else(|| {
            Error::Internal(format!(
                "states {} and {} are indistinguishable",
                violation.q1, violation.q2
            ))
        })?;
    let word = prefix
        .concat(&[violation.sigma1, violation.sigma2])
        .concat(&suffix);
    let permuted = prefix
        .concat(&[violation.sigma2, violation.sigma1])
        .concat(&suffix);
    let cex = SymmetryCounterexample {
        output: fsa_min.eval(&word)?,
        permuted_output: fsa_min.eval(&permuted)?,
        word,
        permuted,
    };
    if !cex.verify(fsa_min) {
        return Err(Error::Internal(
            "constructed counterexample does not separate outputs".into(),
        ));
    }
    Ok(cex)
}

/// Outcome of [`is_symmetric`].
#[derive(Clone, Debug)]
pub struct SymmetryVerdict {
    pub symmetric: bool,
    /// Counterexample valid on the original machine when not symmetric.
    pub counterexample: Option<SymmetryCounterexample>,
    /// Commutativity of the original (possibly non-minimal) machine.
    pub original_violation: Option<CommutativityViolation>,
    /// Violation on the minimized machine, if any.
    pub minimized_violation: Option<CommutativityViolation>,
    pub minimized_states: usize,
}

/// Decides symmetry by minimizing and testing commutativity.
pub fn is_symmetric(fsa: &Fsa) -> Result<SymmetryVerdict> {
    let min = minimize::minimize(fsa);
    let minimized_violation = transitions_commute(&min.minimized);
    let counterexample = match &minimized_violation {
        None => None,
        Some(v) => {
            let cex = symmetry_counterexample(&min.minimized, v, &min.access)?;
            // Minimization preserves outputs, so the words transfer verbatim.
            let transferred = SymmetryCounterexample {
                output: fsa.eval(&cex.word)?,
                permuted_output: fsa.eval(&cex.permuted)?,
                ..cex
            };
            if !transferred.verify(fsa) {
                return Err(Error::Internal(
                    "counterexample did not transfer to the original machine".into(),
                ));
            }
            Some(transferred)
        }
    };
    Ok(SymmetryVerdict {
        symmetric: minimized_violation.is_none(),
        counterexample,
        original_violation: transitions_commute(fsa),
        minimized_violation,
        minimized_states: min.minimized.num_states(),
    })
}

/// Definition-level oracle: groups every word of length `1..=max_len` by its
/// symbol multiset and checks that each group has a single output. Returns
/// the first witness pair found, in length-then-lexicographic order.
pub fn brute_force_symmetric(fsa: &Fsa, max_len: usize) -> Option<SymmetryCounterexample> {
    let k = fsa.num_symbols();
    for len in 1..=max_len {
        // counts vector -> (first word, its output)
        let mut seen: HashMap<Vec<u8>, (Vec<usize>, usize)> = HashMap::new();
        let mut word = vec![0usize; len];
        loop {
            let mut counts = vec![0u8; k];
            for &s in &word {
                counts[s] += 1;
            }
            let out = fsa.output_of(fsa.run_unchecked(fsa.initial(), &word));
            match seen.get(&counts) {
                Some((first, first_out)) if *first_out != out => {
                    return Some(SymmetryCounterexample {
                        word: Word::from(first.clone()),
                        permuted: Word::from(word),
                        output: *first_out,
                        permuted_output: out,
                    });
                }
                Some(_) => {}
                None => {
                    seen.insert(counts, (word.clone(), out));
                }
            }
            if !next_word(&mut word, k) {
                break;
            }
        }
    }
    None
}

/// Advances `word` to the next word of the same length in lexicographic
/// order; false once the last word has been passed.
pub(crate) fn next_word(word: &mut [usize], k: usize) -> bool {
    for i in (0..word.len()).rev() {
        word[i] += 1;
        if word[i] < k {
            return true;
        }
        word[i] = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn commuting_examples() {
        assert_eq!(transitions_commute(&catalog::mod3_counter()), None);
        assert_eq!(transitions_commute(&catalog::unary_lasso()), None);
        let v = transitions_commute(&catalog::ab_detector()).unwrap();
        assert_eq!((v.sigma1, v.sigma2, v.q), (0, 1, 0));
        assert_eq!((v.q1, v.q2), (2, 1));
    }

    #[test]
    fn detector_counterexample_is_ab_ba() {
        let d = catalog::ab_detector();
        let verdict = is_symmetric(&d).unwrap();
        assert!(!verdict.symmetric);
        let cex = verdict.counterexample.unwrap();
        assert_eq!(&*cex.word, &[0, 1]);
        assert_eq!(&*cex.permuted, &[1, 0]);
        assert_eq!(d.outputs()[cex.output], "accept");
        assert_eq!(d.outputs()[cex.permuted_output], "reject");
    }

    #[test]
    fn detector_counterexample_uses_empty_affixes() {
        let d = catalog::ab_detector();
        let access = minimize::accessible_states(&d);
        let v = transitions_commute(&d).unwrap();
        let cex = symmetry_counterexample(&d, &v, &access).unwrap();
        assert_eq!(cex.word.len(), 2);
        assert!(cex.verify(&d));
    }

    #[test]
    fn split_machine_is_symmetric_without_commuting() {
        let m = catalog::split_mod3();
        assert!(transitions_commute(&m).is_some());
        let verdict = is_symmetric(&m).unwrap();
        assert!(verdict.symmetric);
        assert!(verdict.original_violation.is_some());
        assert_eq!(verdict.minimized_states, 3);
        assert!(brute_force_symmetric(&m, 6).is_none());
    }

    #[test]
    fn brute_force_examples() {
        assert!(brute_force_symmetric(&catalog::mod3_counter(), 6).is_none());
        let cex = brute_force_symmetric(&catalog::ab_detector(), 2).unwrap();
        assert_eq!(&*cex.word, &[0, 1]);
        assert_eq!(&*cex.permuted, &[1, 0]);
        assert!(brute_force_symmetric(&catalog::unary_lasso(), 6).is_none());
    }

    #[test]
    fn next_word_enumerates_in_order() {
        let mut w = vec![0, 0];
        let mut all = vec![w.clone()];
        while next_word(&mut w, 2) {
            all.push(w.clone());
        }
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}

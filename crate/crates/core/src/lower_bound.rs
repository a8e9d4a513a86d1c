//! Machines whose divide-and-conquer implementations need `n^n` states.
//!
//! Three transition functions (an `n`-cycle, a transposition and a rank
//! `n - 1` collapse) generate every function on `n` states. The machine whose
//! symbols act by these generators and whose output is its state forces any
//! equivalent DCA to keep the `n^n` word functions apart: if two of them share
//! a χ state, prefixing a suitable word exposes the collision.

use std::collections::HashMap;

use crate::automaton::{Alphabet, Fsa, FsaParts, TransitionFn, Word};
use crate::dca::{Dca, DivideAndConquer};
use crate::engine::{chi_enumerate, DEFAULT_CHI_BUDGET};
use crate::error::{Error, Result};

/// Default closure size limit for [`semigroup_closure`].
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorTriple {
    pub generators: [TransitionFn; 3],
}

/// Cycle `i ↦ i + 1 mod n`, transposition of 0 and 1, and the collapse
/// `0 ↦ 1`. For `n < 2` the transposition and collapse degenerate to the
/// identity.
pub fn denes_generators(n: usize) -> Result<GeneratorTriple> {
    if n == 0 {
        return Err(Error::invalid("generator triple needs n >= 1"));
    }
    let cycle = TransitionFn::from_fn(n, |i| (i + 1) % n)?;
    let (swap, collapse) = if n >= 2 {
        (
            TransitionFn::from_fn(n, |i| match i {
                0 => 1,
                1 => 0,
                _ => i,
            })?,
            TransitionFn::from_fn(n, |i| if i == 0 { 1 } else { i })?,
        )
    } else {
        (TransitionFn::identity(n), TransitionFn::identity(n))
    };
    Ok(GeneratorTriple {
        generators: [cycle, swap, collapse],
    })
}

/// Every function reachable as a nonempty product of generators, each with
/// the shortest generating word found by breadth-first search (generator
/// index order breaks ties).
#[derive(Clone, Debug)]
pub struct SemigroupAtlas {
    entries: Vec<(TransitionFn, Word)>,
    index: HashMap<TransitionFn, usize>,
}

impl SemigroupAtlas {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(TransitionFn, Word)] {
        &self.entries
    }

    pub fn function(&self, i: usize) -> &TransitionFn {
        &self.entries[i].0
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.entries[i].1
    }

    pub fn word_for(&self, g: &TransitionFn) -> Option<&Word> {
        self.index.get(g).map(|&i| &self.entries[i].1)
    }
}

pub fn semigroup_closure(gens: &GeneratorTriple, cap: usize) -> Result<SemigroupAtlas> {
    let mut atlas = SemigroupAtlas {
        entries: Vec::new(),
        index: HashMap::new(),
    };
    let insert = |atlas: &mut SemigroupAtlas, g: TransitionFn, w: Word| -> Result<()> {
        if atlas.index.contains_key(&g) {
            return Ok(());
        }
        if atlas.entries.len() >= cap {
            return Err(Error::ResourceLimit {
                what: "semigroup closure size",
                count: atlas.entries.len() + 1,
                limit: cap,
            });
        }
        atlas.index.insert(g.clone(), atlas.entries.len());
        atlas.entries.push((g, w));
        Ok(())
    };
    for (sigma, g) in gens.generators.iter().enumerate() {
        insert(&mut atlas, g.clone(), Word::from(vec![sigma]))?;
    }
    let mut head = 0;
    while head < atlas.entries.len() {
        let (g, w) = atlas.entries[head].clone();
        head += 1;
        for (sigma, f) in gens.generators.iter().enumerate() {
            // reading sigma after w
            insert(&mut atlas, f.after(&g), w.concat(&[sigma]))?;
        }
    }
    Ok(atlas)
}

/// `n` states, symbols `a`, `b`, `c` acting by the generator triple, initial
/// state 0 and the state itself as output.
pub fn build_hard_fsa(n: usize) -> Result<Fsa> {
    let gens = denes_generators(n)?;
    let names: Vec<String> = (0..n).map(|q| q.to_string()).collect();
    Fsa::new(FsaParts {
        alphabet: Alphabet::letters(3).expect("three letters"),
        num_states: n,
        initial: 0,
        transitions: gens.generators.iter().map(|g| g.image().to_vec()).collect(),
        outputs: names.clone(),
        output_map: (0..n).collect(),
        state_names: Some(names),
    })
}

/// Index of an atlas entry `h` with `ν(w[h] w[g1]) ≠ ν(w[h] w[g2])`.
pub fn separating_extension(
    fsa: &Fsa,
    atlas: &SemigroupAtlas,
    g1: usize,
    g2: usize,
) -> Result<Option<usize>> {
    for h in 0..atlas.len() {
        let prefix = atlas.word(h);
        let a = fsa.eval(&prefix.concat(atlas.word(g1)))?;
        let b = fsa.eval(&prefix.concat(atlas.word(g2)))?;
        if a != b {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// Evidence that a candidate DCA cannot compute the hard machine's function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncorrectnessCertificate {
    pub g1: TransitionFn,
    pub g2: TransitionFn,
    /// A candidate state in both `χ(w[g1])` and `χ(w[g2])`.
    pub shared_state: usize,
    /// A state where `g1` and `g2` differ.
    pub q_hat: usize,
    pub h: TransitionFn,
    /// A candidate state in `χ(w[h])`.
    pub prefix_state: usize,
    /// `w[h] w[g1]` and `w[h] w[g2]`.
    pub inputs: (Word, Word),
    /// FSA outputs on the two inputs: `g1(q_hat)` and `g2(q_hat)`.
    pub fsa_outputs: (usize, usize),
    /// `combine(prefix_state, shared_state)`, reachable on both inputs.
    pub joint_state: usize,
    pub joint_output: usize,
}

impl IncorrectnessCertificate {
    /// Re-derives every claim from the machines.
    pub fn verify(&self, fsa: &Fsa, candidate: &Dca) -> Result<bool> {
        let o1 = fsa.eval(&self.inputs.0)?;
        let o2 = fsa.eval(&self.inputs.1)?;
        let chi1 = chi_enumerate(candidate, &self.inputs.0, DEFAULT_CHI_BUDGET)?;
        let chi2 = chi_enumerate(candidate, &self.inputs.1, DEFAULT_CHI_BUDGET)?;
        Ok(o1 == self.fsa_outputs.0
            && o2 == self.fsa_outputs.1
            && o1 != o2
            && self.g1.apply(self.q_hat) != self.g2.apply(self.q_hat)
            && self.h.apply(fsa.initial()) == self.q_hat
            && candidate.combine_states(self.prefix_state, self.shared_state) == self.joint_state
            && chi1.states.contains(&self.joint_state)
            && chi2.states.contains(&self.joint_state)
            && candidate.output(&self.joint_state) == self.joint_output)
    }
}

#[derive(Clone, Debug)]
pub enum PigeonholeVerdict {
    Certificate(Box<IncorrectnessCertificate>),
    NoCollision {
        atlas_size: usize,
        candidate_states: usize,
    },
}

/// Looks for two word functions whose χ sets overlap in `candidate` and turns
/// the overlap into an [`IncorrectnessCertificate`]. A candidate with fewer
/// than `n^n` states always yields one.
pub fn pigeonhole_demo(n: usize, candidate: &Dca) -> Result<PigeonholeVerdict> {
    let fsa = build_hard_fsa(n)?;
    if candidate.alphabet() != fsa.alphabet() {
        return Err(Error::invalid(
            "candidate must use the three-symbol alphabet a, b, c",
        ));
    }
    let atlas = semigroup_closure(&denes_generators(n)?, DEFAULT_CLOSURE_CAP)?;
    let chis = atlas
        .entries()
        .iter()
        .map(|(_, w)| chi_enumerate(candidate, w, DEFAULT_CHI_BUDGET).map(|c| c.states))
        .collect::<Result<Vec<_>>>()?;

    // first candidate state claimed by each atlas entry
    let mut owner: HashMap<usize, usize> = HashMap::new();
    let mut collision = None;
    'scan: for (i, chi) in chis.iter().enumerate() {
        for &s in chi {
            if let Some(&j) = owner.get(&s) {
                collision = Some((j, i, s));
                break 'scan;
            }
        }
        for &s in chi {
            owner.insert(s, i);
        }
    }
    let Some((i1, i2, shared_state)) = collision else {
        return Ok(PigeonholeVerdict::NoCollision {
            atlas_size: atlas.len(),
            candidate_states: candidate.num_states(),
        });
    };

    let g1 = atlas.function(i1).clone();
    let g2 = atlas.function(i2).clone();
    let q_hat = (0..n)
        .find(|&q| g1.apply(q) != g2.apply(q))
        .ok_or_else(|| Error::Internal("distinct atlas entries are equal".into()))?;
    let h_index = (0..atlas.len())
        .find(|&h| atlas.function(h).apply(fsa.initial()) == q_hat)
        .ok_or_else(|| Error::Internal(format!("no atlas entry maps q0 to {q_hat}")))?;
    let h = atlas.function(h_index).clone();
    let prefix_state = *chis[h_index]
        .iter()
        .next()
        .ok_or_else(|| Error::Internal("empty chi set".into()))?;
    let inputs = (
        atlas.word(h_index).concat(atlas.word(i1)),
        atlas.word(h_index).concat(atlas.word(i2)),
    );
    let fsa_outputs = (fsa.eval(&inputs.0)?, fsa.eval(&inputs.1)?);
    let joint_state = candidate.combine_states(prefix_state, shared_state);
    let cert = IncorrectnessCertificate {
        g1,
        g2,
        shared_state,
        q_hat,
        h,
        prefix_state,
        inputs,
        fsa_outputs,
        joint_state,
        joint_output: candidate.output(&joint_state),
    };
    if !cert.verify(&fsa, candidate)? {
        return Err(Error::Internal(
            "pigeonhole certificate failed verification".into(),
        ));
    }
    Ok(PigeonholeVerdict::Certificate(Box::new(cert)))
}

//! Divide-and-conquer automata.
//!
//! A DCA maps every input symbol to a state, merges adjacent states with a
//! binary combiner in any bracketing, and reads the output off the final
//! state. [`Dca`] is the tabular form; [`FunctionalDca`] computes with
//! transition tables of an underlying FSA.

use std::fmt::Debug;
use std::hash::Hash;

use crate::automaton::{Alphabet, Fsa, TransitionFn};
use crate::error::{Error, Result};

/// The operations an engine needs from a divide-and-conquer automaton.
pub trait DivideAndConquer {
    type State: Clone + Ord + Hash + Debug;

    fn alphabet(&self) -> &Alphabet;
    fn outputs(&self) -> &[String];
    fn input(&self, symbol: usize) -> Self::State;
    fn combine(&self, left: &Self::State, right: &Self::State) -> Self::State;
    fn output(&self, state: &Self::State) -> usize;
    /// Storage cells occupied by one held state.
    fn cells(&self, state: &Self::State) -> usize;
}

#[derive(Clone, Debug)]
pub struct DcaParts {
    pub alphabet: Alphabet,
    pub num_states: usize,
    pub alpha: Vec<usize>,
    /// Row-major `num_states × num_states` table: `combine[q][q2]`.
    pub combine: Vec<Vec<usize>>,
    pub outputs: Vec<String>,
    pub output_map: Vec<usize>,
    pub state_names: Option<Vec<String>>,
}

/// Structural diagnostics only; well-definedness is checked by the engine.
pub fn validate_dca(parts: &DcaParts) -> Vec<String> {
    let mut diags = Vec::new();
    let n = parts.num_states;
    if n == 0 {
        diags.push("automaton must have at least one state".to_string());
    }
    if parts.alpha.len() != parts.alphabet.len() {
        diags.push(format!(
            "input map has {} entries for {} symbols",
            parts.alpha.len(),
            parts.alphabet.len()
        ));
    }
    for (sigma, &q) in parts.alpha.iter().enumerate() {
        if q >= n {
            diags.push(format!("input of symbol {sigma} is {q}, outside 0..{n}"));
        }
    }
    if parts.combine.len() != n {
        diags.push(format!(
            "combine table has {} rows, expected {n}",
            parts.combine.len()
        ));
    }
    for (q, row) in parts.combine.iter().enumerate() {
        if row.len() != n {
            diags.push(format!(
                "combine row {q} has {} entries, expected {n}",
                row.len()
            ));
        }
        for (q2, &t) in row.iter().enumerate() {
            if t >= n {
                diags.push(format!("combine of ({q}, {q2}) is {t}, outside 0..{n}"));
            }
        }
    }
    if parts.outputs.is_empty() {
        diags.push("output set must be nonempty".to_string());
    }
    repeated_names("output name", &parts.outputs, &mut diags);
    if parts.output_map.len() != n {
        diags.push(format!(
            "output map has {} entries, expected {n}",
            parts.output_map.len()
        ));
    }
    for (q, &o) in parts.output_map.iter().enumerate() {
        if o >= parts.outputs.len() {
            diags.push(format!(
                "output of state {q} is {o}, outside 0..{}",
                parts.outputs.len()
            ));
        }
    }
    if let Some(names) = &parts.state_names {
        if names.len() != n {
            diags.push(format!("{} state names given for {n} states", names.len()));
        }
        repeated_names("state name", names, &mut diags);
    }
    diags
}

fn repeated_names(what: &str, names: &[String], diags: &mut Vec<String>) {
    let mut seen = std::collections::HashMap::new();
    for (i, s) in names.iter().enumerate() {
        if let Some(j) = seen.insert(s.as_str(), i) {
            diags.push(format!("{what} '{s}' repeated at indices {j} and {i}"));
        }
    }
}

/// A DCA with materialized input map, combiner and output tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dca {
    alphabet: Alphabet,
    num_states: usize,
    alpha: Vec<usize>,
    combine: Vec<usize>,
    outputs: Vec<String>,
    output_map: Vec<usize>,
    state_names: Vec<String>,
}

impl Dca {
    pub fn new(parts: DcaParts) -> Result<Self> {
        let diags = validate_dca(&parts);
        if !diags.is_empty() {
            return Err(Error::InvalidAutomaton(diags));
        }
        let n = parts.num_states;
        Ok(Dca {
            alphabet: parts.alphabet,
            num_states: n,
            alpha: parts.alpha,
            combine: parts.combine.into_iter().flatten().collect(),
            outputs: parts.outputs,
            output_map: parts.output_map,
            state_names: parts
                .state_names
                .unwrap_or_else(|| (0..n).map(|q| q.to_string()).collect()),
        })
    }

    pub fn parts(&self) -> DcaParts {
        DcaParts {
            alphabet: self.alphabet.clone(),
            num_states: self.num_states,
            alpha: self.alpha.clone(),
            combine: self
                .combine
                .chunks(self.num_states)
                .map(<[usize]>::to_vec)
                .collect(),
            outputs: self.outputs.clone(),
            output_map: self.output_map.clone(),
            state_names: Some(self.state_names.clone()),
        }
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    #[inline]
    pub fn combine_states(&self, q: usize, q2: usize) -> usize {
        self.combine[q * self.num_states + q2]
    }

    pub fn output_map(&self) -> &[usize] {
        &self.output_map
    }

    pub fn state_names(&self) -> &[String] {
        &self.state_names
    }

    pub fn state_name(&self, q: usize) -> &str {
        &self.state_names[q]
    }

    /// Copy with a single combine entry overwritten.
    pub fn with_combine_entry(&self, q: usize, q2: usize, value: usize) -> Result<Dca> {
        let n = self.num_states;
        if q >= n || q2 >= n || value >= n {
            return Err(Error::invalid(format!(
                "combine entry ({q}, {q2}) := {value} is outside 0..{n}"
            )));
        }
        let mut out = self.clone();
        out.combine[q * n + q2] = value;
        Ok(out)
    }
}

impl DivideAndConquer for Dca {
    type State = usize;

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn outputs(&self) -> &[String] {
        &self.outputs
    }

    #[inline]
    fn input(&self, symbol: usize) -> usize {
        self.alpha[symbol]
    }

    #[inline]
    fn combine(&self, left: &usize, right: &usize) -> usize {
        self.combine_states(*left, *right)
    }

    #[inline]
    fn output(&self, state: &usize) -> usize {
        self.output_map[*state]
    }

    fn cells(&self, _state: &usize) -> usize {
        1
    }
}

/// Function-composition DCA over an FSA: states are transition tables,
/// `input(σ) = f_σ`, `combine(g, h) = h ∘ g` and `output(g) = β(g(q0))`.
/// Tables are built on demand; the full function space is never enumerated.
#[derive(Clone, Debug)]
pub struct FunctionalDca {
    fsa: Fsa,
}

impl FunctionalDca {
    pub fn new(fsa: Fsa) -> Self {
        FunctionalDca { fsa }
    }

    pub fn fsa(&self) -> &Fsa {
        &self.fsa
    }
}

impl DivideAndConquer for FunctionalDca {
    type State = TransitionFn;

    fn alphabet(&self) -> &Alphabet {
        self.fsa.alphabet()
    }

    fn outputs(&self) -> &[String] {
        self.fsa.outputs()
    }

    fn input(&self, symbol: usize) -> TransitionFn {
        self.fsa.transition(symbol).clone()
    }

    fn combine(&self, left: &TransitionFn, right: &TransitionFn) -> TransitionFn {
        right.after(left)
    }

    fn output(&self, state: &TransitionFn) -> usize {
        self.fsa.output_of(state.apply(self.fsa.initial()))
    }

    fn cells(&self, state: &TransitionFn) -> usize {
        state.len()
    }
}

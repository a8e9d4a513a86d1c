//! Deterministic multi-output automata and their transition functions.
//!
//! States, symbols and outputs are dense 0-based indices. Names only exist so
//! that machines can be printed and serialized.

use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// An ordered, nonempty set of uniquely named input symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
    index: HashMap<String, usize>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::invalid("alphabet must contain at least one symbol"));
        }
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, s) in symbols.iter().enumerate() {
            if index.insert(s.clone(), i).is_some() {
                return Err(Error::invalid(format!("duplicate symbol name '{s}'")));
            }
        }
        Ok(Alphabet { symbols, index })
    }

    /// Alphabet with symbols `a`, `b`, `c`, ... (at most 26).
    pub fn letters(count: usize) -> Result<Self> {
        if count == 0 || count > 26 {
            return Err(Error::invalid("letter alphabets hold 1 to 26 symbols"));
        }
        Alphabet::new((b'a'..b'a' + count as u8).map(|c| (c as char).to_string()))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn name(&self, symbol: usize) -> &str {
        &self.symbols[symbol]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Parses a word written either as separated symbol names (`"a b a"`,
    /// `"a,b,a"`) or, when every symbol is a single character, as a compact
    /// string (`"aba"`).
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let tokens: Vec<&str> = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.len() == 1 && self.index_of(tokens[0]).is_none() {
            return tokens[0]
                .chars()
                .map(|c| {
                    self.index_of(&c.to_string())
                        .ok_or_else(|| Error::invalid(format!("unknown symbol '{c}'")))
                })
                .collect::<Result<Vec<_>>>()
                .map(Word::from);
        }
        tokens
            .into_iter()
            .map(|t| {
                self.index_of(t)
                    .ok_or_else(|| Error::invalid(format!("unknown symbol '{t}'")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::from)
    }

    /// Renders a word compactly when all symbol names are single characters,
    /// space-separated otherwise.
    pub fn format_word(&self, word: &[usize]) -> String {
        let compact = self.symbols.iter().all(|s| s.chars().count() == 1);
        let names = word.iter().map(|&s| self.symbols[s].as_str());
        if compact {
            names.collect()
        } else {
            names.collect::<Vec<_>>().join(" ")
        }
    }

    pub(crate) fn check_word(&self, word: &[usize]) -> Result<()> {
        match word.iter().position(|&s| s >= self.len()) {
            Some(pos) => Err(Error::invalid(format!(
                "symbol index {} at position {pos} is outside an alphabet of {} symbols",
                word[pos],
                self.len()
            ))),
            None => Ok(()),
        }
    }
}

/// A sequence of symbol indices. The empty word is the identity of
/// concatenation; evaluation entry points reject it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    pub fn push(&mut self, symbol: usize) {
        self.0.push(symbol);
    }

    pub fn concat(&self, other: &[usize]) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        Word(v)
    }
}

impl Deref for Word {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl From<&[usize]> for Word {
    fn from(v: &[usize]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<usize> for Word {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("λ");
        }
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// A total function on `0..len` stored as its image table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransitionFn(Vec<usize>);

impl TransitionFn {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if let Some((q, &t)) = image.iter().enumerate().find(|(_, &t)| t >= n) {
            return Err(Error::invalid(format!(
                "image of state {q} is {t}, outside 0..{n}"
            )));
        }
        Ok(TransitionFn(image))
    }

    pub fn identity(n: usize) -> Self {
        TransitionFn((0..n).collect())
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        TransitionFn::new((0..n).map(f).collect())
    }

    pub fn image(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, q: usize) -> usize {
        self.0[q]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &t)| i == t)
    }

    /// `self ∘ inner`: applies `inner` first, then `self`.
    pub fn after(&self, inner: &TransitionFn) -> TransitionFn {
        debug_assert_eq!(self.len(), inner.len());
        TransitionFn(inner.0.iter().map(|&x| self.0[x]).collect())
    }
}

impl fmt::Display for TransitionFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Composition in application order: the result maps `x` to `outer(inner(x))`,
/// so `inner` is applied first. For a word `uv`, the word function is
/// `compose(f_v, f_u)`.
pub fn compose(outer: &TransitionFn, inner: &TransitionFn) -> Result<TransitionFn> {
    if outer.len() != inner.len() {
        return Err(Error::invalid(format!(
            "cannot compose functions on {} and {} states",
            outer.len(),
            inner.len()
        )));
    }
    Ok(outer.after(inner))
}

/// Unvalidated components of an [`Fsa`]. [`validate`] reports every broken
/// invariant; [`Fsa::new`] refuses parts with any diagnostics.
#[derive(Clone, Debug)]
pub struct FsaParts {
    pub alphabet: Alphabet,
    pub num_states: usize,
    pub initial: usize,
    /// One image table per symbol.
    pub transitions: Vec<Vec<usize>>,
    pub outputs: Vec<String>,
    pub output_map: Vec<usize>,
    /// Optional display names; defaults to the decimal state index.
    pub state_names: Option<Vec<String>>,
}

/// Returns one human-readable diagnostic per violated invariant.
pub fn validate(parts: &FsaParts) -> Vec<String> {
    let mut diags = Vec::new();
    let n = parts.num_states;
    if n == 0 {
        diags.push("automaton must have at least one state".to_string());
    }
    if parts.initial >= n {
        diags.push(format!("initial state {} is outside 0..{n}", parts.initial));
    }
    if parts.transitions.len() != parts.alphabet.len() {
        diags.push(format!(
            "expected {} transition tables (one per symbol), found {}",
            parts.alphabet.len(),
            parts.transitions.len()
        ));
    }
    for (sigma, row) in parts.transitions.iter().enumerate() {
        let name = parts
            .alphabet
            .symbols()
            .get(sigma)
            .map(String::as_str)
            .unwrap_or("?");
        if row.len() != n {
            diags.push(format!(
                "transition table of symbol '{name}' has {} entries, expected {n}",
                row.len()
            ));
        }
        for (q, &t) in row.iter().enumerate() {
            if t >= n {
                diags.push(format!(
                    "transition of symbol '{name}' from state {q} targets {t}, outside 0..{n}"
                ));
            }
        }
    }
    if parts.outputs.is_empty() {
        diags.push("output set must be nonempty".to_string());
    }
    let mut seen = HashMap::new();
    for (i, o) in parts.outputs.iter().enumerate() {
        if let Some(j) = seen.insert(o.as_str(), i) {
            diags.push(format!("output name '{o}' repeated at indices {j} and {i}"));
        }
    }
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
        let mut seen = HashMap::new();
        for (i, s) in names.iter().enumerate() {
            if let Some(j) = seen.insert(s.as_str(), i) {
                diags.push(format!("state name '{s}' repeated at indices {j} and {i}"));
            }
        }
    }
    diags
}

/// A deterministic finite-state automaton with an output on every state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fsa {
    alphabet: Alphabet,
    initial: usize,
    transitions: Vec<TransitionFn>,
    outputs: Vec<String>,
    output_map: Vec<usize>,
    state_names: Vec<String>,
}

impl Fsa {
    pub fn new(parts: FsaParts) -> Result<Self> {
        let diags = validate(&parts);
        if !diags.is_empty() {
            return Err(Error::InvalidAutomaton(diags));
        }
        let state_names = parts
            .state_names
            .unwrap_or_else(|| (0..parts.num_states).map(|q| q.to_string()).collect());
        Ok(Fsa {
            alphabet: parts.alphabet,
            initial: parts.initial,
            transitions: parts.transitions.into_iter().map(TransitionFn).collect(),
            outputs: parts.outputs,
            output_map: parts.output_map,
            state_names,
        })
    }

    /// Builds a machine over the letter alphabet `a`, `b`, ... with one
    /// image table per letter.
    pub fn from_tables(
        transitions: Vec<Vec<usize>>,
        initial: usize,
        outputs: &[&str],
        output_map: Vec<usize>,
    ) -> Result<Self> {
        let num_states = output_map.len();
        Fsa::new(FsaParts {
            alphabet: Alphabet::letters(transitions.len())?,
            num_states,
            initial,
            transitions,
            outputs: outputs.iter().map(|s| s.to_string()).collect(),
            output_map,
            state_names: None,
        })
    }

    pub fn parts(&self) -> FsaParts {
        FsaParts {
            alphabet: self.alphabet.clone(),
            num_states: self.num_states(),
            initial: self.initial,
            transitions: self.transitions.iter().map(|t| t.0.clone()).collect(),
            outputs: self.outputs.clone(),
            output_map: self.output_map.clone(),
            state_names: Some(self.state_names.clone()),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.output_map.len()
    }

    pub fn num_symbols(&self) -> usize {
        self.alphabet.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn transition(&self, symbol: usize) -> &TransitionFn {
        &self.transitions[symbol]
    }

    pub fn transitions(&self) -> &[TransitionFn] {
        &self.transitions
    }

    pub fn outputs(&self) -> &[String] {
        &self.outputs
    }

    pub fn output_map(&self) -> &[usize] {
        &self.output_map
    }

    #[inline]
    pub fn output_of(&self, q: usize) -> usize {
        self.output_map[q]
    }

    pub fn state_names(&self) -> &[String] {
        &self.state_names
    }

    pub fn state_name(&self, q: usize) -> &str {
        &self.state_names[q]
    }

    pub fn validate(&self) -> Vec<String> {
        validate(&self.parts())
    }

    fn check_state(&self, q: usize) -> Result<()> {
        if q >= self.num_states() {
            return Err(Error::invalid(format!(
                "state {q} is outside 0..{}",
                self.num_states()
            )));
        }
        Ok(())
    }

    /// `f_σ(q)`.
    pub fn step(&self, q: usize, symbol: usize) -> Result<usize> {
        self.check_state(q)?;
        if symbol >= self.num_symbols() {
            return Err(Error::invalid(format!(
                "symbol {symbol} is outside 0..{}",
                self.num_symbols()
            )));
        }
        Ok(self.transitions[symbol].apply(q))
    }

    /// `f_w(q)`; the empty word leaves `q` unchanged.
    pub fn run_word(&self, q: usize, word: &[usize]) -> Result<usize> {
        self.check_state(q)?;
        self.alphabet.check_word(word)?;
        Ok(self.run_unchecked(q, word))
    }

    #[inline]
    pub(crate) fn run_unchecked(&self, q: usize, word: &[usize]) -> usize {
        word.iter().fold(q, |q, &s| self.transitions[s].apply(q))
    }

    /// The output computed on a nonempty word, `β(f_w(q0))`.
    pub fn eval(&self, word: &[usize]) -> Result<usize> {
        if word.is_empty() {
            return Err(Error::EmptyInput);
        }
        let q = self.run_word(self.initial, word)?;
        Ok(self.output_map[q])
    }

    /// The table of `f_w = f_{w_k} ∘ … ∘ f_{w_1}`; identity for the empty word.
    pub fn word_function(&self, word: &[usize]) -> Result<TransitionFn> {
        self.alphabet.check_word(word)?;
        let n = self.num_states();
        Ok(TransitionFn(
            (0..n).map(|q| self.run_unchecked(q, word)).collect(),
        ))
    }
}

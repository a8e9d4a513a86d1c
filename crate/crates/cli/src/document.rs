//! JSON documents describing an FSA or a tabular DCA.
//!
//! States, symbols and outputs are referred to by name. The canonical text
//! form has sorted keys, two-space indentation and a trailing newline.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use symdca::{Alphabet, Dca, DcaParts, Fsa, FsaParts};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Fsa,
    Dca,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Fsa => "fsa",
            Kind::Dca => "dca",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonDocument {
    pub kind: Kind,
    pub name: String,
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub outputs: Vec<String>,
    /// Output name of each state, in `states` order.
    pub output_map: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<String>,
    /// Symbol name to the successor of each state, in `states` order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transitions: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<BTreeMap<String, String>>,
    /// `combine[i][j]` is the state for left operand `states[i]` and right
    /// operand `states[j]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub combine: Option<Vec<Vec<String>>>,
}

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("syntax error: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid document: {}", .0.join("; "))]
    Semantic(Vec<String>),
}

/// A validated document turned into a machine.
#[derive(Clone, Debug)]
pub enum Automaton {
    Fsa(Fsa),
    Dca(Dca),
}

/// Parses and fully validates a document.
pub fn parse_document(text: &str) -> Result<AutomatonDocument, DocumentError> {
    let doc: AutomatonDocument = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.build()?;
    Ok(doc)
}

pub fn serialize_document(doc: &AutomatonDocument) -> String {
    let value = serde_json::to_value(doc).expect("documents serialize");
    let mut text = serde_json::to_string_pretty(&value).expect("values serialize");
    text.push('\n');
    text
}

fn name_index<'a>(
    what: &str,
    names: &'a [String],
    diags: &mut Vec<String>,
) -> HashMap<&'a str, usize> {
    let mut index = HashMap::new();
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            diags.push(format!("{what}: duplicate name \"{name}\""));
        }
    }
    index
}

fn resolve(
    index: &HashMap<&str, usize>,
    what: &str,
    name: &str,
    at: impl FnOnce() -> String,
    diags: &mut Vec<String>,
) -> usize {
    match index.get(name) {
        Some(&i) => i,
        None => {
            diags.push(format!("{}: unknown {what} \"{name}\"", at()));
            0
        }
    }
}

fn core_diagnostics(err: symdca::Error) -> DocumentError {
    match err {
        symdca::Error::InvalidAutomaton(diags) => DocumentError::Semantic(diags),
        other => DocumentError::Semantic(vec![other.to_string()]),
    }
}

fn expect_len(field: &str, len: usize, expected: usize, diags: &mut Vec<String>) {
    if len != expected {
        diags.push(format!("{field}: {len} entries, expected {expected}"));
    }
}

impl AutomatonDocument {
    pub fn build(&self) -> Result<Automaton, DocumentError> {
        match self.kind {
            Kind::Fsa => self.to_fsa().map(Automaton::Fsa),
            Kind::Dca => self.to_dca().map(Automaton::Dca),
        }
    }

    /// State index and resolved output map.
    fn common(&self, diags: &mut Vec<String>) -> (HashMap<&str, usize>, Vec<usize>) {
        let states = name_index("states", &self.states, diags);
        let outputs = name_index("outputs", &self.outputs, diags);
        expect_len(
            "output_map",
            self.output_map.len(),
            self.states.len(),
            diags,
        );
        let output_map = self
            .output_map
            .iter()
            .enumerate()
            .map(|(q, o)| resolve(&outputs, "output", o, || format!("output_map[{q}]"), diags))
            .collect();
        (states, output_map)
    }

    fn forbid(&self, diags: &mut Vec<String>) {
        let present = |b: bool, field: &str, diags: &mut Vec<String>| {
            if b {
                diags.push(format!(
                    "{field}: not allowed in a {} document",
                    self.kind.as_str()
                ));
            }
        };
        match self.kind {
            Kind::Fsa => {
                present(self.alpha.is_some(), "alpha", diags);
                present(self.combine.is_some(), "combine", diags);
            }
            Kind::Dca => {
                present(self.initial.is_some(), "initial", diags);
                present(self.transitions.is_some(), "transitions", diags);
            }
        }
    }

    fn alphabet(&self) -> Result<Alphabet, DocumentError> {
        Alphabet::new(self.alphabet.iter().cloned()).map_err(core_diagnostics)
    }

    /// Keys of a per-symbol map must be exactly the alphabet.
    fn check_symbol_keys<'a, V: 'a>(
        &self,
        field: &str,
        keys: impl Iterator<Item = (&'a String, V)>,
        alphabet: &Alphabet,
        diags: &mut Vec<String>,
    ) {
        let mut seen = vec![false; alphabet.len()];
        for (k, _) in keys {
            match alphabet.index_of(k) {
                Some(i) => seen[i] = true,
                None => diags.push(format!("{field}[\"{k}\"]: unknown symbol")),
            }
        }
        for (i, s) in seen.iter().enumerate() {
            if !s {
                diags.push(format!(
                    "{field}: missing row for symbol \"{}\"",
                    alphabet.name(i)
                ));
            }
        }
    }

    pub fn to_fsa(&self) -> Result<Fsa, DocumentError> {
        let mut diags = Vec::new();
        if self.kind != Kind::Fsa {
            diags.push(format!(
                "kind: expected \"fsa\", found \"{}\"",
                self.kind.as_str()
            ));
        }
        self.forbid(&mut diags);
        let alphabet = self.alphabet()?;
        let (states, output_map) = self.common(&mut diags);
        let initial = match &self.initial {
            Some(name) => resolve(&states, "state", name, || "initial".into(), &mut diags),
            None => {
                diags.push("initial: missing".into());
                0
            }
        };
        let empty = BTreeMap::new();
        let rows = self.transitions.as_ref().unwrap_or_else(|| {
            diags.push("transitions: missing".into());
            &empty
        });
        self.check_symbol_keys("transitions", rows.iter(), &alphabet, &mut diags);
        let mut transitions = Vec::with_capacity(alphabet.len());
        for sigma in alphabet.symbols() {
            let Some(row) = rows.get(sigma) else { continue };
            let field = format!("transitions[\"{sigma}\"]");
            expect_len(&field, row.len(), self.states.len(), &mut diags);
            transitions.push(
                row.iter()
                    .enumerate()
                    .map(|(q, t)| {
                        resolve(&states, "state", t, || format!("{field}[{q}]"), &mut diags)
                    })
                    .collect(),
            );
        }
        if !diags.is_empty() {
            return Err(DocumentError::Semantic(diags));
        }
        Fsa::new(FsaParts {
            alphabet,
            num_states: self.states.len(),
            initial,
            transitions,
            outputs: self.outputs.clone(),
            output_map,
            state_names: Some(self.states.clone()),
        })
        .map_err(core_diagnostics)
    }

    pub fn to_dca(&self) -> Result<Dca, DocumentError> {
        let mut diags = Vec::new();
        if self.kind != Kind::Dca {
            diags.push(format!(
                "kind: expected \"dca\", found \"{}\"",
                self.kind.as_str()
            ));
        }
        self.forbid(&mut diags);
        let alphabet = self.alphabet()?;
        let (states, output_map) = self.common(&mut diags);

        let empty = BTreeMap::new();
        let alpha_map = self.alpha.as_ref().unwrap_or_else(|| {
            diags.push("alpha: missing".into());
            &empty
        });
        self.check_symbol_keys("alpha", alpha_map.iter(), &alphabet, &mut diags);
        let alpha = alphabet
            .symbols()
            .iter()
            .map(|sigma| match alpha_map.get(sigma) {
                Some(name) => resolve(
                    &states,
                    "state",
                    name,
                    || format!("alpha[\"{sigma}\"]"),
                    &mut diags,
                ),
                None => 0,
            })
            .collect();

        let no_rows = Vec::new();
        let rows = self.combine.as_ref().unwrap_or_else(|| {
            diags.push("combine: missing".into());
            &no_rows
        });
        if self.combine.is_some() {
            expect_len("combine", rows.len(), self.states.len(), &mut diags);
        }
        let combine = rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let field = format!("combine[{i}]");
                expect_len(&field, row.len(), self.states.len(), &mut diags);
                row.iter()
                    .enumerate()
                    .map(|(j, t)| {
                        resolve(&states, "state", t, || format!("{field}[{j}]"), &mut diags)
                    })
                    .collect()
            })
            .collect();
        if !diags.is_empty() {
            return Err(DocumentError::Semantic(diags));
        }
        Dca::new(DcaParts {
            alphabet,
            num_states: self.states.len(),
            alpha,
            combine,
            outputs: self.outputs.clone(),
            output_map,
            state_names: Some(self.states.clone()),
        })
        .map_err(core_diagnostics)
    }

    pub fn from_fsa(name: &str, fsa: &Fsa) -> Self {
        let states = fsa.state_names().to_vec();
        let state = |q: usize| states[q].clone();
        AutomatonDocument {
            kind: Kind::Fsa,
            name: name.to_string(),
            alphabet: fsa.alphabet().symbols().to_vec(),
            outputs: fsa.outputs().to_vec(),
            output_map: fsa
                .output_map()
                .iter()
                .map(|&o| fsa.outputs()[o].clone())
                .collect(),
            initial: Some(state(fsa.initial())),
            transitions: Some(
                fsa.alphabet()
                    .symbols()
                    .iter()
                    .zip(fsa.transitions())
                    .map(|(s, f)| (s.clone(), f.image().iter().map(|&t| state(t)).collect()))
                    .collect(),
            ),
            alpha: None,
            combine: None,
            states: states.clone(),
        }
    }

    pub fn from_dca(name: &str, dca: &Dca) -> Self {
        let parts = dca.parts();
        let states = dca.state_names().to_vec();
        let state = |q: usize| states[q].clone();
        AutomatonDocument {
            kind: Kind::Dca,
            name: name.to_string(),
            alphabet: parts.alphabet.symbols().to_vec(),
            output_map: parts
                .output_map
                .iter()
                .map(|&o| parts.outputs[o].clone())
                .collect(),
            outputs: parts.outputs.clone(),
            initial: None,
            transitions: None,
            alpha: Some(
                parts
                    .alphabet
                    .symbols()
                    .iter()
                    .zip(&parts.alpha)
                    .map(|(s, &q)| (s.clone(), state(q)))
                    .collect(),
            ),
            combine: Some(
                parts
                    .combine
                    .iter()
                    .map(|row| row.iter().map(|&q| state(q)).collect())
                    .collect(),
            ),
            states: states.clone(),
        }
    }
}

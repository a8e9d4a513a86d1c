#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use symdca::{catalog, Alphabet, Dca, DcaParts};
use symdca_cli::AutomatonDocument;

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture(name: &str) -> PathBuf {
    fixtures_dir().join(format!("{name}.json"))
}

/// Candidate DCA over `a, b, c` with uniformly random tables.
pub fn random_candidate(states: usize, outputs: usize, seed: u64) -> Dca {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Dca::new(DcaParts {
        alphabet: Alphabet::letters(3).unwrap(),
        num_states: states,
        alpha: (0..3).map(|_| rng.gen_range(0..states)).collect(),
        combine: (0..states)
            .map(|_| (0..states).map(|_| rng.gen_range(0..states)).collect())
            .collect(),
        outputs: (0..outputs).map(|o| o.to_string()).collect(),
        output_map: (0..states).map(|_| rng.gen_range(0..outputs)).collect(),
        state_names: None,
    })
    .unwrap()
}

/// Every document kept under `fixtures/`, keyed by file stem.
pub fn expected_fixtures() -> Vec<(String, AutomatonDocument)> {
    let mut docs: Vec<(String, AutomatonDocument)> = catalog::all_fixtures()
        .into_iter()
        .map(|(name, fsa)| (name.to_string(), AutomatonDocument::from_fsa(name, &fsa)))
        .collect();
    docs.push((
        "perturbed_mod3_dca".into(),
        AutomatonDocument::from_dca("perturbed_mod3_dca", &catalog::perturbed_mod3_dca()),
    ));
    for (n, states, seed) in [(2usize, 3usize, 7u64), (3, 26, 11)] {
        let name = format!("candidate_n{n}_{states}");
        let dca = random_candidate(states, n, seed);
        docs.push((name.clone(), AutomatonDocument::from_dca(&name, &dca)));
    }
    docs
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

pub fn symdca<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    let out = Command::new(env!("CARGO_BIN_EXE_symdca"))
        .args(args)
        .output()
        .expect("binary runs");
    Outcome {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

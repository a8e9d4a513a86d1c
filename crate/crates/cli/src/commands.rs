//! Command implementations. Each returns a [`RunReport`]; errors are mapped
//! to exit codes by [`CliError::exit_code`].

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use symdca::engine::{check_well_defined, eval_state, EvalStats, WellDefinedness};
use symdca::lower_bound::{
    build_hard_fsa, denes_generators, pigeonhole_demo, semigroup_closure, separating_extension,
    PigeonholeVerdict, DEFAULT_CLOSURE_CAP,
};
use symdca::symmetry::CommutativityViolation;
use symdca::synthesis::DEFAULT_MATERIALIZE_CAP;
use symdca::{
    is_symmetric, materialize_reachable, minimize, synthesize_composition_dca,
    synthesize_symmetric_dca, verify_equivalence, Alphabet, Dca, DivideAndConquer, Fsa,
    SplitStrategy, SymmetryCounterexample, VerifyConfig,
};

use crate::document::{serialize_document, Automaton, AutomatonDocument, DocumentError};
use crate::report::{RunReport, Status};

#[derive(Debug, Parser)]
#[command(
    name = "symdca",
    version,
    about = "Symmetric FSAs and divide-and-conquer automata"
)]
pub struct Cli {
    /// Omit wall-clock timing from reports.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Symmetric,
    Composition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Fold,
    Tree,
    Random,
}

impl StrategyArg {
    fn with_seed(self, seed: u64) -> SplitStrategy {
        match self {
            StrategyArg::Fold => SplitStrategy::LeftFold,
            StrategyArg::Tree => SplitStrategy::Balanced,
            StrategyArg::Random => SplitStrategy::Random(seed),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimize an FSA and write the result.
    Minimize { input: PathBuf, output: PathBuf },
    /// Decide whether an FSA's output ignores input order.
    CheckSymmetry { input: PathBuf },
    /// Build a DCA from an FSA.
    Synthesize {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, value_enum, default_value = "symmetric")]
        method: Method,
        /// Largest composition closure to tabulate.
        #[arg(long, default_value_t = DEFAULT_MATERIALIZE_CAP)]
        cap: usize,
    },
    /// Evaluate an FSA or DCA on one word.
    Run {
        input: PathBuf,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value = "fold")]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare an FSA and a DCA on exhaustive and random words.
    Verify {
        fsa: PathBuf,
        dca: PathBuf,
        #[arg(long, default_value_t = 8)]
        exhaustive_len: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 64)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check that a DCA's output does not depend on the bracketing.
    CheckDca {
        dca: PathBuf,
        #[arg(long, default_value_t = symdca::engine::DEFAULT_WELL_DEFINED_LEN)]
        max_len: usize,
        #[arg(long, default_value_t = symdca::engine::DEFAULT_CHI_BUDGET)]
        budget: usize,
    },
    /// Transformation-semigroup lower bound, optionally refuting a candidate DCA.
    Lowerbound {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        n: u8,
        candidate: Option<PathBuf>,
    },
    /// Measure intermediate storage of the symmetric and composition DCAs.
    Bench {
        fsa: PathBuf,
        #[arg(long, default_value_t = 4096)]
        length: usize,
        #[arg(long, default_value_t = 8)]
        trials: usize,
        #[arg(long, value_enum, default_value = "tree")]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Minimize { .. } => "minimize",
            Command::CheckSymmetry { .. } => "check-symmetry",
            Command::Synthesize { .. } => "synthesize",
            Command::Run { .. } => "run",
            Command::Verify { .. } => "verify",
            Command::CheckDca { .. } => "check-dca",
            Command::Lowerbound { .. } => "lowerbound",
            Command::Bench { .. } => "bench",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Document { path: String, source: DocumentError },
    #[error(transparent)]
    Core(#[from] symdca::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(symdca::Error::ResourceLimit { .. }) => 3,
            _ => 2,
        }
    }
}

type CmdResult = Result<RunReport, CliError>;

/// Runs a parsed command and always produces a report.
pub fn execute(cli: &Cli) -> RunReport {
    let start = Instant::now();
    let mut report = dispatch(&cli.command).unwrap_or_else(|err| {
        let mut r = RunReport::new(cli.command.name());
        r.set_status(Status::Error, Some(err.exit_code()));
        r.error = Some(err.to_string());
        r
    });
    if !cli.no_timing {
        let timing = report.timing.get_or_insert_with(Map::new);
        timing.insert(
            "total_ms".into(),
            json!(start.elapsed().as_secs_f64() * 1e3),
        );
    } else {
        report.timing = None;
    }
    report
}

fn dispatch(command: &Command) -> CmdResult {
    match command {
        Command::Minimize { input, output } => cmd_minimize(input, output),
        Command::CheckSymmetry { input } => cmd_check_symmetry(input),
        Command::Synthesize {
            input,
            output,
            method,
            cap,
        } => cmd_synthesize(input, output, *method, *cap),
        Command::Run {
            input,
            word,
            strategy,
            seed,
        } => cmd_run(input, word, strategy.with_seed(*seed), *seed),
        Command::Verify {
            fsa,
            dca,
            exhaustive_len,
            trials,
            max_len,
            seed,
        } => cmd_verify(
            fsa,
            dca,
            &VerifyConfig {
                exhaustive_max_len: *exhaustive_len,
                num_random_trials: *trials,
                random_max_len: *max_len,
                seed: *seed,
                ..VerifyConfig::default()
            },
        ),
        Command::CheckDca {
            dca,
            max_len,
            budget,
        } => cmd_check_dca(dca, *max_len, *budget),
        Command::Lowerbound { n, candidate } => {
            cmd_lowerbound(usize::from(*n), candidate.as_deref())
        }
        Command::Bench {
            fsa,
            length,
            trials,
            strategy,
            seed,
        } => cmd_bench(fsa, *length, *trials, *strategy, *seed),
    }
}

fn display(path: &Path) -> String {
    path.display().to_string()
}

pub fn load_document(path: &Path) -> Result<(AutomatonDocument, Automaton), CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: display(path),
        source,
    })?;
    let wrap = |source| CliError::Document {
        path: display(path),
        source,
    };
    let doc = crate::document::parse_document(&text).map_err(wrap)?;
    let machine = doc.build().map_err(wrap)?;
    Ok((doc, machine))
}

fn load_fsa(path: &Path) -> Result<(String, Fsa), CliError> {
    match load_document(path)? {
        (doc, Automaton::Fsa(fsa)) => Ok((doc.name, fsa)),
        (_, Automaton::Dca(_)) => Err(CliError::Usage(format!(
            "{}: expected an fsa document, found a dca",
            display(path)
        ))),
    }
}

fn load_dca(path: &Path) -> Result<(String, Dca), CliError> {
    match load_document(path)? {
        (doc, Automaton::Dca(dca)) => Ok((doc.name, dca)),
        (_, Automaton::Fsa(_)) => Err(CliError::Usage(format!(
            "{}: expected a dca document, found an fsa",
            display(path)
        ))),
    }
}

fn write_document(path: &Path, doc: &AutomatonDocument) -> Result<(), CliError> {
    fs::write(path, serialize_document(doc)).map_err(|source| CliError::Io {
        path: display(path),
        source,
    })
}

fn word_json(alphabet: &Alphabet, word: &[usize]) -> Value {
    json!(alphabet.format_word(word))
}

fn counterexample_json(fsa: &Fsa, cex: &SymmetryCounterexample) -> Value {
    json!({
        "word": word_json(fsa.alphabet(), &cex.word),
        "permuted": word_json(fsa.alphabet(), &cex.permuted),
        "output": fsa.outputs()[cex.output],
        "permuted_output": fsa.outputs()[cex.permuted_output],
    })
}

fn violation_json(fsa: &Fsa, v: &CommutativityViolation) -> Value {
    json!({
        "symbols": [fsa.alphabet().name(v.sigma1), fsa.alphabet().name(v.sigma2)],
        "state": fsa.state_name(v.q),
        "first_then_second": fsa.state_name(v.q1),
        "second_then_first": fsa.state_name(v.q2),
    })
}

fn stats_json(stats: &EvalStats) -> Value {
    json!({
        "combines": stats.combines,
        "peak_values_held": stats.peak_values_held,
        "cells_per_value": stats.max_cells_per_value,
        "peak_cells": stats.peak_cells,
    })
}

fn cmd_minimize(input: &Path, output: &Path) -> CmdResult {
    let (name, fsa) = load_fsa(input)?;
    let result = minimize(&fsa);
    let min = &result.minimized;
    write_document(output, &AutomatonDocument::from_fsa(&name, min))?;

    let state_map: Map<String, Value> = result
        .state_map
        .iter()
        .enumerate()
        .map(|(q, m)| {
            let target = m.map_or(Value::Null, |m| json!(min.state_name(m)));
            (fsa.state_name(q).to_string(), target)
        })
        .collect();
    let mut report = RunReport::new("minimize");
    report
        .input("file", display(input))
        .input("output", display(output))
        .verdict("original_states", fsa.num_states())
        .verdict("minimized_states", min.num_states())
        .verdict("inaccessible_states", result.access.inaccessible().count())
        .verdict("already_minimal", min.num_states() == fsa.num_states())
        .witness("state_map", state_map);
    Ok(report)
}

fn cmd_check_symmetry(input: &Path) -> CmdResult {
    let (_, fsa) = load_fsa(input)?;
    let verdict = is_symmetric(&fsa)?;
    let mut report = RunReport::new("check-symmetry");
    report
        .input("file", display(input))
        .verdict("symmetric", verdict.symmetric)
        .verdict("states", fsa.num_states())
        .verdict("minimized_states", verdict.minimized_states)
        .verdict("transitions_commute", verdict.original_violation.is_none())
        .verdict(
            "minimized_transitions_commute",
            verdict.minimized_violation.is_none(),
        );
    if let Some(v) = &verdict.original_violation {
        report.witness("commutativity_violation", violation_json(&fsa, v));
    }
    if let Some(cex) = &verdict.counterexample {
        report.witness("counterexample", counterexample_json(&fsa, cex));
        report.fail();
    }
    Ok(report)
}

fn cmd_synthesize(input: &Path, output: &Path, method: Method, cap: usize) -> CmdResult {
    let (name, fsa) = load_fsa(input)?;
    let mut report = RunReport::new("synthesize");
    report
        .input("file", display(input))
        .input("output", display(output))
        .verdict("fsa_states", fsa.num_states());
    match method {
        Method::Symmetric => {
            report.input("method", "symmetric");
            let synthesis = match synthesize_symmetric_dca(&fsa) {
                Ok(s) => s,
                Err(symdca::Error::NotSymmetric(cex)) => {
                    report
                        .verdict("symmetric", false)
                        .witness("counterexample", counterexample_json(&fsa, &cex))
                        .fail();
                    return Ok(report);
                }
                Err(e) => return Err(e.into()),
            };
            let dca = &synthesis.dca;
            let min = &synthesis.minimization.minimized;
            write_document(output, &AutomatonDocument::from_dca(&name, dca))?;
            let reps: Map<String, Value> = synthesis
                .representatives
                .words()
                .iter()
                .enumerate()
                .map(|(q, w)| (min.state_name(q).to_string(), word_json(fsa.alphabet(), w)))
                .collect();
            report
                .verdict("symmetric", true)
                .verdict("minimized_states", min.num_states())
                .verdict("dca_states", dca.num_states())
                .verdict("size_bound_holds", dca.num_states() <= fsa.num_states())
                .witness("representatives", reps);
        }
        Method::Composition => {
            report.input("method", "composition").input("cap", cap);
            let m = materialize_reachable(&synthesize_composition_dca(&fsa), cap)?;
            write_document(output, &AutomatonDocument::from_dca(&name, &m.dca))?;
            report.verdict("dca_states", m.dca.num_states()).verdict(
                "function_space_size",
                u32::try_from(fsa.num_states())
                    .ok()
                    .and_then(|n| fsa.num_states().checked_pow(n)),
            );
        }
    }
    Ok(report)
}

fn cmd_run(input: &Path, word: &str, strategy: SplitStrategy, seed: u64) -> CmdResult {
    let (doc, machine) = load_document(input)?;
    let mut report = RunReport::new("run");
    report
        .input("file", display(input))
        .input("kind", doc.kind.as_str())
        .input("strategy", strategy.to_string())
        .input("seed", seed);
    let usage = |e: symdca::Error| CliError::Usage(e.to_string());
    match machine {
        Automaton::Fsa(fsa) => {
            let w = fsa.alphabet().parse_word(word).map_err(usage)?;
            report.input("word", word_json(fsa.alphabet(), &w));
            let q = fsa.run_word(fsa.initial(), &w).map_err(usage)?;
            let out = fsa.eval(&w).map_err(usage)?;
            report
                .verdict("final_state", fsa.state_name(q))
                .verdict("output", fsa.outputs()[out].as_str());
        }
        Automaton::Dca(dca) => {
            let w = dca.alphabet().parse_word(word).map_err(usage)?;
            report.input("word", word_json(dca.alphabet(), &w));
            let (q, stats) = eval_state(&dca, &w, strategy).map_err(usage)?;
            report
                .verdict("final_state", dca.state_name(q))
                .verdict("output", dca.outputs()[dca.output(&q)].as_str());
            report.footprint = Some(stats_json(&stats));
        }
    }
    Ok(report)
}

fn cmd_verify(fsa_path: &Path, dca_path: &Path, config: &VerifyConfig) -> CmdResult {
    let (_, fsa) = load_fsa(fsa_path)?;
    let (_, dca) = load_dca(dca_path)?;
    let result = verify_equivalence(&fsa, &dca, config)?;
    let mut report = RunReport::new("verify");
    report
        .input("fsa", display(fsa_path))
        .input("dca", display(dca_path))
        .input("exhaustive_len", config.exhaustive_max_len)
        .input("trials", config.num_random_trials)
        .input("max_len", config.random_max_len)
        .input("seed", config.seed)
        .verdict("equivalent", result.passed())
        .verdict("exhaustive_max_len", result.exhaustive_max_len)
        .verdict("exhaustive_words", result.exhaustive_words)
        .verdict("random_trials", result.num_random_trials);
    if let Some(m) = &result.first_failure {
        report
            .witness(
                "mismatch",
                json!({
                    "word": word_json(fsa.alphabet(), &m.word),
                    "strategy": m.strategy.to_string(),
                    "fsa_output": fsa.outputs()[m.fsa_output],
                    "dca_output": dca.outputs()[m.dca_output],
                }),
            )
            .fail();
    }
    Ok(report)
}

fn cmd_check_dca(path: &Path, max_len: usize, budget: usize) -> CmdResult {
    let (_, dca) = load_dca(path)?;
    let mut report = RunReport::new("check-dca");
    report
        .input("file", display(path))
        .input("max_len", max_len)
        .input("budget", budget);
    match check_well_defined(&dca, max_len, budget)? {
        WellDefinedness::Pass { words_checked, .. } => {
            report
                .verdict("well_defined", true)
                .verdict("words_checked", words_checked);
        }
        WellDefinedness::Fail(w) => {
            let names = |s: &usize| dca.state_name(*s).to_string();
            report
                .verdict("well_defined", false)
                .verdict("witness_verified", w.verify(&dca))
                .witness(
                    "split_dependence",
                    json!({
                        "word": word_json(dca.alphabet(), &w.word),
                        "trees": [w.trees.0.render(dca.alphabet()), w.trees.1.render(dca.alphabet())],
                        "states": [names(&w.states.0), names(&w.states.1)],
                        "outputs": [dca.outputs()[w.outputs.0], dca.outputs()[w.outputs.1]],
                    }),
                )
                .fail();
        }
    }
    Ok(report)
}

fn cmd_lowerbound(n: usize, candidate: Option<&Path>) -> CmdResult {
    let fsa = build_hard_fsa(n)?;
    let atlas = semigroup_closure(&denes_generators(n)?, DEFAULT_CLOSURE_CAP)?;
    let expected = n.pow(n as u32);
    let words_verified = atlas
        .entries()
        .iter()
        .map(|(g, w)| fsa.word_function(w).map(|f| &f == g))
        .collect::<symdca::Result<Vec<bool>>>()?
        .into_iter()
        .all(|ok| ok);
    let mut separated = 0usize;
    for g1 in 0..atlas.len() {
        for g2 in g1 + 1..atlas.len() {
            if separating_extension(&fsa, &atlas, g1, g2)?.is_some() {
                separated += 1;
            }
        }
    }
    let pairs = atlas.len() * atlas.len().saturating_sub(1) / 2;
    let composition = materialize_reachable(&synthesize_composition_dca(&fsa), expected)?;

    let mut report = RunReport::new("lowerbound");
    report
        .input("n", n)
        .input("candidate", candidate.map(display))
        .verdict("closure_size", atlas.len())
        .verdict("expected_closure_size", expected)
        .verdict("atlas_words_verified", words_verified)
        .verdict("pairs", pairs)
        .verdict("pairs_separated", separated)
        .verdict("composition_dca_states", composition.dca.num_states());
    if atlas.len() != expected || !words_verified || separated != pairs {
        report.fail();
    }

    if let Some(path) = candidate {
        let (_, dca) = load_dca(path)?;
        report.verdict("candidate_states", dca.num_states());
        match pigeonhole_demo(n, &dca)? {
            PigeonholeVerdict::Certificate(cert) => {
                let verified = cert.verify(&fsa, &dca)?;
                let alphabet = fsa.alphabet();
                report
                    .verdict("candidate_refuted", true)
                    .verdict("certificate_verified", verified)
                    .witness(
                        "certificate",
                        json!({
                            "g1": cert.g1.to_string(),
                            "g2": cert.g2.to_string(),
                            "h": cert.h.to_string(),
                            "q_hat": fsa.state_name(cert.q_hat),
                            "inputs": [word_json(alphabet, &cert.inputs.0), word_json(alphabet, &cert.inputs.1)],
                            "fsa_outputs": [fsa.outputs()[cert.fsa_outputs.0], fsa.outputs()[cert.fsa_outputs.1]],
                            "shared_state": dca.state_name(cert.shared_state),
                            "prefix_state": dca.state_name(cert.prefix_state),
                            "joint_state": dca.state_name(cert.joint_state),
                            "joint_output": dca.outputs()[cert.joint_output],
                        }),
                    )
                    .fail();
            }
            PigeonholeVerdict::NoCollision { .. } => {
                report.verdict("candidate_refuted", false);
            }
        }
    }
    Ok(report)
}

/// Worst-case footprint of `dca` over the given words, and whether every
/// output matched `fsa`.
fn measure<D: DivideAndConquer>(
    fsa: &Fsa,
    dca: &D,
    words: &[Vec<usize>],
    strategy: SplitStrategy,
) -> symdca::Result<(EvalStats, bool, f64)> {
    let start = Instant::now();
    let mut worst = EvalStats::default();
    let mut agree = true;
    for w in words {
        let (q, s) = eval_state(dca, w, strategy)?;
        agree &= dca.output(&q) == fsa.eval(w)?;
        worst.combines = worst.combines.max(s.combines);
        worst.peak_values_held = worst.peak_values_held.max(s.peak_values_held);
        worst.max_cells_per_value = worst.max_cells_per_value.max(s.max_cells_per_value);
        worst.peak_cells = worst.peak_cells.max(s.peak_cells);
    }
    Ok((worst, agree, start.elapsed().as_secs_f64() * 1e3))
}

fn cmd_bench(
    path: &Path,
    length: usize,
    trials: usize,
    strategy: StrategyArg,
    seed: u64,
) -> CmdResult {
    if length == 0 || trials == 0 {
        return Err(CliError::Usage(
            "--length and --trials must be positive".into(),
        ));
    }
    let (_, fsa) = load_fsa(path)?;
    let strategy = strategy.with_seed(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = fsa.num_symbols();
    let words: Vec<Vec<usize>> = (0..trials)
        .map(|_| (0..length).map(|_| rng.gen_range(0..k)).collect())
        .collect();

    let mut report = RunReport::new("bench");
    report
        .input("file", display(path))
        .input("length", length)
        .input("trials", trials)
        .input("strategy", strategy.to_string())
        .input("seed", seed)
        .verdict("fsa_states", fsa.num_states());

    let composition = synthesize_composition_dca(&fsa);
    let (comp, comp_ok, comp_ms) = measure(&fsa, &composition, &words, strategy)?;
    let mut timing = Map::new();
    timing.insert("composition_ms".into(), json!(comp_ms));

    let symmetric = match synthesize_symmetric_dca(&fsa) {
        Ok(s) => Some(s.dca),
        Err(symdca::Error::NotSymmetric(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let mut agree = comp_ok;
    let mut footprint = Map::new();
    footprint.insert("composition".into(), stats_json(&comp));
    match &symmetric {
        Some(dca) => {
            let (sym, sym_ok, sym_ms) = measure(&fsa, dca, &words, strategy)?;
            agree &= sym_ok;
            timing.insert("symmetric_ms".into(), json!(sym_ms));
            footprint.insert("symmetric".into(), stats_json(&sym));
            footprint.insert(
                "cells_per_value_ratio".into(),
                json!(comp.max_cells_per_value as f64 / sym.max_cells_per_value as f64),
            );
            footprint.insert(
                "peak_cells_ratio".into(),
                json!(comp.peak_cells as f64 / sym.peak_cells as f64),
            );
        }
        None => {
            footprint.insert("symmetric".into(), Value::Null);
            footprint.insert("cells_per_value_ratio".into(), Value::Null);
            footprint.insert("peak_cells_ratio".into(), Value::Null);
        }
    }
    report
        .verdict("symmetric", symmetric.is_some())
        .verdict("outputs_agree", agree);
    report.footprint = Some(Value::Object(footprint));
    report.timing = Some(timing);
    if !agree {
        report.fail();
    }
    Ok(report)
}

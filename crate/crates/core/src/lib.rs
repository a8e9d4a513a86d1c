//! Finite-state automata and their divide-and-conquer counterparts.
//!
//! A symmetric FSA (one whose output ignores input order) can be run as a
//! divide-and-conquer automaton with no more states than the minimized
//! machine: see [`synthesis::synthesize_symmetric_dca`]. Arbitrary machines
//! fall back to composing transition tables
//! ([`synthesis::synthesize_composition_dca`]), which [`lower_bound`] shows
//! cannot be avoided in general.

pub mod automaton;
pub mod catalog;
pub mod dca;
pub mod engine;
pub mod error;
pub mod lower_bound;
pub mod minimize;
pub mod symmetry;
pub mod synthesis;

pub use automaton::{compose, validate, Alphabet, Fsa, FsaParts, TransitionFn, Word};
pub use dca::{Dca, DcaParts, DivideAndConquer, FunctionalDca};
pub use engine::{
    aggregate_neighborhood, check_well_defined, chi_enumerate, eval_dca, verify_equivalence,
    EquivalenceReport, SplitStrategy, VerifyConfig,
};
pub use error::{Error, Result};
pub use minimize::{minimize, MinimizationResult, Partition};
pub use symmetry::{is_symmetric, CommutativityViolation, SymmetryCounterexample};
pub use synthesis::{materialize_reachable, synthesize_composition_dca, synthesize_symmetric_dca};

use thiserror::Error;

use crate::symmetry::SymmetryCounterexample;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid automaton: {}", .0.join("; "))]
    InvalidAutomaton(Vec<String>),

    #[error("empty input: words must be nonempty")]
    EmptyInput,

    #[error("state {state} is not accessible from the initial state")]
    NotAccessible { state: usize },

    #[error("automaton is not symmetric")]
    NotSymmetric(Box<SymmetryCounterexample>),

    #[error("resource limit exceeded: {what} (reached {count}, limit {limit})")]
    ResourceLimit {
        what: &'static str,
        count: usize,
        limit: usize,
    },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

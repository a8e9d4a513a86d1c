//! Command-line front end: automaton documents, run reports and the
//! `symdca` subcommands.

pub mod commands;
pub mod document;
pub mod report;

pub use commands::{execute, Cli, CliError, Command};
pub use document::{
    parse_document, serialize_document, Automaton, AutomatonDocument, DocumentError, Kind,
};
pub use report::{RunReport, Status};

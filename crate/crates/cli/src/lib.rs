//! Command-line front end: session and graph files, command dispatch, JSON reports and
//! the built-in example suite.

pub mod commands;
pub mod graph_file;
pub mod report;
pub mod session;
pub mod suite;

pub use commands::{load_session, run, Cli, CliError, Command, Flags};
pub use report::{Outcome, Report};

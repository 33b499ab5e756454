//! File-based front end for the `conjulin` solvers.

pub mod commands;
pub mod mtx;
pub mod report;

pub use commands::{execute, run, Cli, CliError, Command, Kind};
pub use report::Report;

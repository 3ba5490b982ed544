//! Command-line front end: problem files, reports and subcommands.

pub mod app;
pub mod problem;
pub mod report;

pub use app::{run, Cli, CliError};
pub use problem::{ParseError, ProblemFile};
pub use report::Report;

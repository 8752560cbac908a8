//! Library side of the `rectflow` command-line tool.

pub mod commands;
pub mod config_file;
pub mod error;
pub mod output;
pub mod report;
pub mod svg;

pub use commands::run_command;

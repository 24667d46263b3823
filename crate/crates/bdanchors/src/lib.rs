//! Command-line front end and file formats for [`bdanchors_core`].
//!
//! The binary is a thin wrapper around [`run`]; every subcommand writes
//! CSV or newline-separated integers to standard output.

pub mod cli;
pub mod index_file;
pub mod io;
pub mod report;

pub use cli::{run, run_with, DEFAULT_SEED};

//! Library side of the `lozenge` binary: spec files, rendering and the
//! subcommands, each returning its output and exit code so they can be
//! tested without spawning a process.

pub mod commands;
pub mod render;
pub mod spec_file;

pub use commands::{cmd_count, cmd_macmahon, cmd_render, cmd_sweep, cmd_verify, Method, Outcome, SweepClass, SweepConfig};
pub use spec_file::RegionSpecFile;

/// Bad input. Always maps to exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] lozenge_core::Error),
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INVALID: u8 = 2;

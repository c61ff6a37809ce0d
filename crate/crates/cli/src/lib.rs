//! IO, configuration, and rendering for the `demandcast` CLI.

pub mod config;
pub mod csvio;
pub mod render;

/// Master seed used when none is given on the command line or in a config
/// file.
pub const DEFAULT_SEED: u64 = 1;

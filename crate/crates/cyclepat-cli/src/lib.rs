//! Command-line companion to the `cyclepat` library: JSON file formats,
//! report emission, instance generators, and an experiment runner.
//!
//! Everything lives behind [`run`], which parses the process arguments and
//! prints exactly one report — success and failure alike are JSON objects
//! (or plain-text tables under `--output table`). Exit codes: 0 success,
//! 1 usage or parse problems, 2 domain errors.

pub mod commands;
pub mod doc;
pub mod exact;
pub mod report;
pub mod rng;

pub use commands::run;

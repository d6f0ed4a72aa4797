//! File formats and command-line front end for the `modresc-core` solver.

pub mod cli;
pub mod dot;
pub mod format;
pub mod report;

pub use cli::run;

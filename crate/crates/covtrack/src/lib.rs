//! File formats, pipeline and command-line front end for `covtrack-core`.
//!
//! Every subcommand reads plain-text inputs, runs the in-memory
//! [`pipeline`], writes its output atomically and echoes the exact run
//! configuration to `<out>.config.json`.

pub mod cli;
pub mod config;
mod error;
pub mod formats;
pub mod io;
pub mod pipeline;
pub mod svg;

pub use error::{CliError, Result};

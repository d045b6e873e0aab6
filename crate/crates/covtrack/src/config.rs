//! Run configuration echoed next to every output as `<out>.config.json`.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::io::write_atomic;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub tool: String,
    pub version: String,
    pub command: String,
    /// Exact parameters, including defaults that were not given on the
    /// command line.
    pub args: serde_json::Value,
    /// Generator behind any random draws, e.g. `chacha8`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rng: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl RunConfig {
    pub fn new<A: Serialize>(command: &str, args: &A) -> Self {
        RunConfig {
            tool: env!("CARGO_PKG_NAME").to_owned(),
            version: env!("CARGO_PKG_VERSION").to_owned(),
            command: command.to_owned(),
            args: serde_json::to_value(args).expect("arguments serialize"),
            rng: None,
            seed: None,
        }
    }
}

pub fn config_path(out: &Path) -> PathBuf {
    let mut s: OsString = out.as_os_str().to_owned();
    s.push(".config.json");
    PathBuf::from(s)
}

pub fn write_config(out: &Path, cfg: &RunConfig) -> Result<()> {
    let mut text = serde_json::to_string_pretty(cfg).expect("config serializes");
    text.push('\n');
    write_atomic(&config_path(out), text.as_bytes())
}

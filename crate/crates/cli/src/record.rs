use std::path::{Path, PathBuf};
use std::time::Duration;

use chrono::{SecondsFormat, Utc};
use serde::Serialize;

use crate::output::to_json;
use crate::CliError;

/// Provenance for one invocation, written next to its output file.
#[derive(Serialize)]
pub struct RunRecord {
    pub command: Vec<String>,
    pub result: serde_json::Value,
    pub wall_time_ms: f64,
    pub tool_version: &'static str,
    pub timestamp_utc: String,
}

impl RunRecord {
    pub fn new(args: &[String], result: serde_json::Value, elapsed: Duration) -> Self {
        RunRecord {
            command: args.to_vec(),
            result,
            wall_time_ms: elapsed.as_secs_f64() * 1e3,
            tool_version: env!("CARGO_PKG_VERSION"),
            timestamp_utc: Utc::now().to_rfc3339_opts(SecondsFormat::Millis, true),
        }
    }

    /// `<output>.run.json`.
    pub fn path_for(output: &Path) -> PathBuf {
        let mut name = output.as_os_str().to_owned();
        name.push(".run.json");
        PathBuf::from(name)
    }

    pub fn write_beside(&self, output: &Path) -> Result<(), CliError> {
        let path = Self::path_for(output);
        std::fs::write(&path, to_json(self)).map_err(|e| CliError::io(&path, e))
    }
}

// SPDX-License-Identifier: Apache-2.0

//! Rendering, persistence and the results cache.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::config::{Format, RunConfig};
use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    /// UTF-8 with LF line endings.
    pub fn to_csv(&self) -> CliResult<String> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv of strings is UTF-8"))
    }
}

/// Result of one command, in every form it can be emitted.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Output {
    pub command: String,
    pub json: Value,
    pub table: Table,
    /// Extra files relative to the output directory.
    pub files: Vec<(String, String)>,
    /// Overrides the printed form when no format is requested.
    pub text: Option<String>,
}

pub fn envelope(
    command: &str,
    config: &RunConfig,
    params: Value,
    result: Value,
) -> CliResult<Value> {
    Ok(serde_json::json!({
        "schema": boolobs::audit::SCHEMA_VERSION,
        "tool": boolobs::audit::BINARY_NAME,
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "config": serde_json::to_value(config)?,
        "params": params,
        "result": result,
    }))
}

pub fn to_json_string(v: &Value) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

/// Hash of the command, its parameters and the result-relevant settings.
pub fn cache_key(command: &str, params: &Value, config: &RunConfig) -> CliResult<String> {
    let material = serde_json::to_string(&serde_json::json!({
        "command": command,
        "params": params,
        "config": config,
        "version": env!("CARGO_PKG_VERSION"),
    }))?;
    Ok(hex::encode(Sha256::digest(material.as_bytes())))
}

fn cache_path(config: &RunConfig, key: &str) -> PathBuf {
    config.out.join("cache").join(format!("{key}.json"))
}

pub fn cache_load(config: &RunConfig, key: &str) -> Option<Output> {
    if config.no_cache {
        return None;
    }
    let text = std::fs::read_to_string(cache_path(config, key)).ok()?;
    serde_json::from_str(&text).ok()
}

pub fn cache_store(config: &RunConfig, key: &str, output: &Output) -> CliResult<()> {
    if config.no_cache {
        return Ok(());
    }
    write_file(&cache_path(config, key), &serde_json::to_string(output)?)
}

pub fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent).map_err(|e| CliError::io(parent, e))?;
    }
    std::fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

/// Writes the result files and returns what goes to standard output.
pub fn emit(output: &Output, config: &RunConfig) -> CliResult<String> {
    let json = to_json_string(&output.json)?;
    write_file(&config.out.join(format!("{}.json", output.command)), &json)?;
    let csv = output.table.to_csv()?;
    write_file(&config.out.join(format!("{}.csv", output.command)), &csv)?;
    for (rel, contents) in &output.files {
        write_file(&config.out.join(rel), contents)?;
    }
    Ok(match (config.format, &output.text) {
        (Some(Format::Json), _) | (None, None) => json,
        (Some(Format::Csv), _) => csv,
        (None, Some(text)) => text.clone(),
    })
}

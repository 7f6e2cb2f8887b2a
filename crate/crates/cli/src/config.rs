// SPDX-License-Identifier: Apache-2.0

//! Run configuration: defaults, then a `key = value` file, then flags.

use std::path::{Path, PathBuf};

use boolobs::boolfun::ARITY_LIMIT;
use boolobs::gf2::DEFAULT_DENSE_CAP;
use serde::Serialize;

use crate::error::{CliError, CliResult};

/// Largest accepted dense matrix arity (a `2^16 × 2^16` bit matrix is 512 MiB).
pub const DENSE_CAP_MAX: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(CliError::Usage(format!(
                "unknown format {other:?} (expected json or csv)"
            ))),
        }
    }
}

/// Everything that influences results. The output directory is kept out of
/// the serialized form so reports do not depend on where they are written.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub dense_cap: u32,
    pub arity_cap: u32,
    pub level_cap: u32,
    pub jobs: usize,
    pub format: Option<Format>,
    #[serde(skip)]
    pub out: PathBuf,
    #[serde(skip)]
    pub no_cache: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            dense_cap: DEFAULT_DENSE_CAP,
            arity_cap: ARITY_LIMIT,
            level_cap: 12,
            jobs: 1,
            format: None,
            out: PathBuf::from("out"),
            no_cache: false,
        }
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str) -> CliResult<T> {
    value
        .parse()
        .map_err(|_| CliError::Usage(format!("invalid value {value:?} for {key}")))
}

impl RunConfig {
    pub fn set(&mut self, key: &str, value: &str) -> CliResult<()> {
        match key {
            "seed" => self.seed = parse_num(key, value)?,
            "dense_cap" => self.dense_cap = parse_num(key, value)?,
            "arity_cap" => self.arity_cap = parse_num(key, value)?,
            "level_cap" => self.level_cap = parse_num(key, value)?,
            "jobs" => self.jobs = parse_num(key, value)?,
            "format" => self.format = Some(value.parse()?),
            "out" => self.out = PathBuf::from(value),
            "no_cache" => self.no_cache = parse_num(key, value)?,
            other => return Err(CliError::Usage(format!("unknown config key {other:?}"))),
        }
        Ok(())
    }

    /// Applies a `key = value` file; blank lines and `#` comments are skipped.
    pub fn apply_file(&mut self, path: &Path) -> CliResult<()> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                CliError::Usage(format!(
                    "{}:{}: expected key = value",
                    path.display(),
                    i + 1
                ))
            })?;
            self.set(k.trim(), v.trim())?;
        }
        Ok(())
    }

    pub fn validate(&self) -> CliResult<()> {
        if !(1..=ARITY_LIMIT).contains(&self.arity_cap) {
            return Err(CliError::Usage(format!(
                "arity_cap must be in 1..={ARITY_LIMIT}"
            )));
        }
        if !(1..=DENSE_CAP_MAX).contains(&self.dense_cap) {
            return Err(CliError::Usage(format!(
                "dense_cap must be in 1..={DENSE_CAP_MAX}"
            )));
        }
        if self.level_cap == 0 {
            return Err(CliError::Usage("level_cap must be at least 1".into()));
        }
        if self.jobs == 0 {
            return Err(CliError::Usage("jobs must be at least 1".into()));
        }
        Ok(())
    }

    pub fn check_arity(&self, n: u32) -> CliResult<()> {
        if n == 0 || n > self.arity_cap {
            return Err(boolobs::Error::ArityOutOfRange {
                n,
                cap: self.arity_cap,
            }
            .into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_then_flags() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.conf");
        std::fs::write(
            &path,
            "# comment\nseed = 9\n\ndense_cap=10  # trailing\nformat = csv\n",
        )
        .unwrap();
        let mut c = RunConfig::default();
        c.apply_file(&path).unwrap();
        assert_eq!((c.seed, c.dense_cap, c.format), (9, 10, Some(Format::Csv)));
        c.set("seed", "3").unwrap();
        assert_eq!(c.seed, 3);
    }

    #[test]
    fn rejects_bad_input() {
        let mut c = RunConfig::default();
        assert!(c.set("colour", "red").is_err());
        assert!(c.set("seed", "-1").is_err());
        c.dense_cap = 40;
        assert!(c.validate().is_err());
    }
}

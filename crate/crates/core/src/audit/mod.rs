// SPDX-License-Identifier: Apache-2.0

//! Claim battery: each claim is recomputed and paired with its cited value.

mod claims;
pub mod printed;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::boolfun::ARITY_LIMIT;
use crate::error::{Error, Result};
use crate::gf2::DEFAULT_DENSE_CAP;

pub use claims::{claim_ids, CLAIMS};

/// Version of the report layout.
pub const SCHEMA_VERSION: u32 = 1;
/// Name of the executable used in re-run command lines.
pub const BINARY_NAME: &str = "boolobs";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "CONFIRMED")]
    Confirmed,
    #[serde(rename = "REFUTED")]
    Refuted,
    #[serde(rename = "UNDECIDABLE-AT-SCALE")]
    UndecidableAtScale,
}

impl Status {
    pub fn from_holds(holds: bool) -> Self {
        if holds {
            Status::Confirmed
        } else {
            Status::Refuted
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Confirmed => "CONFIRMED",
            Status::Refuted => "REFUTED",
            Status::UndecidableAtScale => "UNDECIDABLE-AT-SCALE",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditVerdict {
    pub claim_id: String,
    /// Where the claim is stated.
    pub source: String,
    /// The assertion being checked, in symbols.
    pub claim: String,
    pub claimed: Value,
    pub computed: Value,
    pub status: Status,
    /// Supporting data; written to a separate file by the command line.
    pub evidence: Value,
    pub artifacts: Vec<String>,
    pub rerun: String,
    pub notes: Vec<String>,
}

impl AuditVerdict {
    /// A refutation carries both values.
    pub fn is_well_formed(&self) -> bool {
        self.status != Status::Refuted || (!self.claimed.is_null() && !self.computed.is_null())
    }
}

/// Settings that influence battery results.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatteryConfig {
    pub seed: u64,
    pub dense_cap: u32,
    pub arity_cap: u32,
    /// Highest level used by per-level sweeps.
    pub level_cap: u32,
    pub jobs: usize,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        BatteryConfig {
            seed: 0,
            dense_cap: DEFAULT_DENSE_CAP,
            arity_cap: ARITY_LIMIT,
            level_cap: 12,
            jobs: 1,
        }
    }
}

impl BatteryConfig {
    /// Command line reproducing one claim; caps are included when not at their defaults.
    pub fn rerun(&self, claim_id: &str) -> String {
        let d = BatteryConfig::default();
        let mut s = format!("{BINARY_NAME} audit --only {claim_id} --seed {}", self.seed);
        if self.dense_cap != d.dense_cap {
            s.push_str(&format!(" --dense-cap {}", self.dense_cap));
        }
        if self.arity_cap != d.arity_cap {
            s.push_str(&format!(" --arity-cap {}", self.arity_cap));
        }
        if self.level_cap != d.level_cap {
            s.push_str(&format!(" --level-cap {}", self.level_cap));
        }
        s
    }
}

/// A claim whose computation failed; distinct from a refutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToolError {
    pub claim_id: String,
    pub message: String,
    pub rerun: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub confirmed: usize,
    pub refuted: usize,
    pub undecidable: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub schema: u32,
    pub tool: String,
    pub version: String,
    pub config: BatteryConfig,
    pub summary: Summary,
    pub verdicts: Vec<AuditVerdict>,
    pub errors: Vec<ToolError>,
}

/// Context handed to each claim.
pub struct ClaimContext<'a> {
    pub id: &'static str,
    pub config: &'a BatteryConfig,
}

pub type ClaimFn = fn(&ClaimContext<'_>) -> Result<AuditVerdict>;

pub struct ClaimSpec {
    pub id: &'static str,
    pub run: ClaimFn,
}

/// Runs the selected claims (all when `only` is empty) in battery order.
pub fn run_battery(config: &BatteryConfig, only: &[String]) -> Result<AuditReport> {
    for id in only {
        if !CLAIMS.iter().any(|c| c.id == id) {
            return Err(Error::InvalidArgument(format!("unknown claim id {id:?}")));
        }
    }
    let selected: Vec<&ClaimSpec> = CLAIMS
        .iter()
        .filter(|c| only.is_empty() || only.iter().any(|o| o == c.id))
        .collect();
    let run_one = |spec: &&ClaimSpec| {
        let ctx = ClaimContext {
            id: spec.id,
            config,
        };
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| (spec.run)(&ctx)));
        match outcome {
            Ok(Ok(v)) => Ok(v),
            Ok(Err(e)) => Err(ToolError {
                claim_id: spec.id.to_string(),
                message: e.to_string(),
                rerun: config.rerun(spec.id),
            }),
            Err(_) => Err(ToolError {
                claim_id: spec.id.to_string(),
                message: "claim computation panicked".to_string(),
                rerun: config.rerun(spec.id),
            }),
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let outcomes: Vec<std::result::Result<AuditVerdict, ToolError>> =
        pool.install(|| selected.par_iter().map(run_one).collect());

    let mut verdicts = Vec::new();
    let mut errors = Vec::new();
    for o in outcomes {
        match o {
            Ok(v) if v.is_well_formed() => verdicts.push(v),
            Ok(v) => errors.push(ToolError {
                claim_id: v.claim_id.clone(),
                message: "refutation without both values".to_string(),
                rerun: v.rerun,
            }),
            Err(e) => errors.push(e),
        }
    }
    let count = |s: Status| verdicts.iter().filter(|v| v.status == s).count();
    let summary = Summary {
        confirmed: count(Status::Confirmed),
        refuted: count(Status::Refuted),
        undecidable: count(Status::UndecidableAtScale),
        errors: errors.len(),
    };
    Ok(AuditReport {
        schema: SCHEMA_VERSION,
        tool: BINARY_NAME.to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        summary,
        verdicts,
        errors,
    })
}

impl AuditReport {
    pub fn verdict(&self, claim_id: &str) -> Option<&AuditVerdict> {
        self.verdicts.iter().find(|v| v.claim_id == claim_id)
    }

    /// Fixed-width table: id, status, claimed, computed.
    pub fn to_table(&self) -> String {
        let short = |v: &Value| {
            let s = v.to_string();
            if s.chars().count() > 48 {
                format!("{}…", s.chars().take(47).collect::<String>())
            } else {
                s
            }
        };
        let width = self
            .verdicts
            .iter()
            .map(|v| v.claim_id.len())
            .chain(self.errors.iter().map(|e| e.claim_id.len()))
            .max()
            .unwrap_or(8)
            .max(8);
        let mut out = format!(
            "{:<width$}  {:<20}  {:<48}  {}\n",
            "claim", "status", "claimed", "computed"
        );
        for v in &self.verdicts {
            out.push_str(&format!(
                "{:<width$}  {:<20}  {:<48}  {}\n",
                v.claim_id,
                v.status.label(),
                short(&v.claimed),
                short(&v.computed)
            ));
        }
        for e in &self.errors {
            out.push_str(&format!(
                "{:<width$}  {:<20}  {}\n",
                e.claim_id, "ERROR", e.message
            ));
        }
        out.push_str(&format!(
            "\n{} confirmed, {} refuted, {} undecidable at scale, {} errors\n",
            self.summary.confirmed,
            self.summary.refuted,
            self.summary.undecidable,
            self.summary.errors
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rerun_lines() {
        let mut c = BatteryConfig::default();
        assert_eq!(
            c.rerun("S5.3-rank"),
            "boolobs audit --only S5.3-rank --seed 0"
        );
        c.seed = 4;
        c.level_cap = 6;
        assert_eq!(
            c.rerun("S5.3-rank"),
            "boolobs audit --only S5.3-rank --seed 4 --level-cap 6"
        );
    }

    #[test]
    fn unknown_id_rejected() {
        assert!(run_battery(&BatteryConfig::default(), &["S99-nothing".to_string()]).is_err());
    }

    #[test]
    fn status_labels_serialize() {
        assert_eq!(
            serde_json::to_value(Status::UndecidableAtScale).unwrap(),
            "UNDECIDABLE-AT-SCALE"
        );
        assert_eq!(Status::from_holds(false).to_string(), "REFUTED");
    }

    #[test]
    fn refutation_needs_both_values() {
        let v = AuditVerdict {
            claim_id: "x".into(),
            source: String::new(),
            claim: String::new(),
            claimed: Value::Null,
            computed: serde_json::json!(1),
            status: Status::Refuted,
            evidence: Value::Null,
            artifacts: Vec::new(),
            rerun: String::new(),
            notes: Vec::new(),
        };
        assert!(!v.is_well_formed());
    }

    #[test]
    fn parallel_order_matches_serial() {
        let serial = run_battery(
            &BatteryConfig {
                level_cap: 5,
                ..BatteryConfig::default()
            },
            &[],
        )
        .unwrap();
        let parallel = run_battery(
            &BatteryConfig {
                level_cap: 5,
                jobs: 4,
                ..BatteryConfig::default()
            },
            &[],
        )
        .unwrap();
        assert_eq!(serial.verdicts, parallel.verdicts);
        assert_eq!(serial.verdicts.len(), CLAIMS.len());
    }
}

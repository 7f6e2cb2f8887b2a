// SPDX-License-Identifier: Apache-2.0

use boolobs::audit::{run_battery, BatteryConfig};
use boolobs::boolfun::TruthTable;
use boolobs::cech::cocycle_audit;
use boolobs::cftsim::{detailed_balance, metropolis, CftParams, Metric, GROUND_STATE_CAP};
use boolobs::gf2::{basis_tables, fixed_space_capped};
use boolobs::lfunction::{compare_series, local_factor, PredicateCharacter};
use boolobs::observer::Observer;
use boolobs::spectral::{spectrum_with, MatrixLift};
use boolobs::stabcode::orbit_code_seeded;
use num::rational::Rational64;
use serde_json::{json, Value};

use crate::args::Command;
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::output::{self, envelope, Output, Table};
use crate::predicate;

/// Standard output text and exit code.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn need_n(n: Option<u32>, config: &RunConfig) -> CliResult<u32> {
    let n = n.ok_or_else(|| CliError::Usage("--n is required for this command".into()))?;
    config.check_arity(n)?;
    Ok(n)
}

fn parse_rational(s: &str) -> CliResult<Rational64> {
    s.parse()
        .map_err(|_| CliError::Usage(format!("invalid rational {s:?} (expected p or p/q)")))
}

fn cell(v: impl ToString) -> String {
    v.to_string()
}

pub fn run(command: &Command, n: Option<u32>, config: &RunConfig) -> CliResult<Outcome> {
    if let Command::Audit { list: true, .. } = command {
        let mut s = boolobs::audit::claim_ids().join("\n");
        s.push('\n');
        return Ok(Outcome { stdout: s, code: 0 });
    }
    let (name, params) = describe(command, n, config)?;
    let key = output::cache_key(name, &params, config)?;
    let out = match output::cache_load(config, &key) {
        Some(o) => {
            eprintln!("using cached result {key}");
            o
        }
        None => {
            let o = compute(command, name, &params, n, config)?;
            output::cache_store(config, &key, &o)?;
            o
        }
    };
    let stdout = output::emit(&out, config)?;
    // tool errors inside the battery are reported, then signalled
    let code = match out.json.get("errors").and_then(Value::as_array) {
        Some(errs) if name == "audit" && !errs.is_empty() => 3,
        _ => 0,
    };
    Ok(Outcome { stdout, code })
}

/// Command name and the parameters that identify its result.
fn describe(
    command: &Command,
    n: Option<u32>,
    config: &RunConfig,
) -> CliResult<(&'static str, Value)> {
    Ok(match command {
        Command::Kernel => ("kernel", json!({ "n": need_n(n, config)? })),
        Command::Spectrum { lift } => {
            ("spectrum", json!({ "n": need_n(n, config)?, "lift": lift }))
        }
        Command::Orbit {
            predicate,
            max_steps,
        } => {
            let n = need_n(n, config)?;
            (
                "orbit",
                json!({ "n": n, "predicate": predicate.clone().unwrap_or(format!("atom:{}", (1u64 << n) - 1)), "max_steps": max_steps }),
            )
        }
        Command::Lfactor { predicate } => {
            let n = need_n(n, config)?;
            (
                "lfactor",
                json!({ "n": n, "predicate": predicate.clone().unwrap_or(format!("atom:{}", (1u64 << n) - 1)) }),
            )
        }
        Command::Euler { character, degree } => {
            ("euler", json!({ "character": character, "degree": degree }))
        }
        Command::Cocycle { predicate } => {
            let n = need_n(n, config)?;
            (
                "cocycle",
                json!({ "n": n, "predicate": predicate.clone().unwrap_or("var:1".into()) }),
            )
        }
        Command::Code {
            predicate,
            orbit_cap,
        } => {
            let n = need_n(n, config)?;
            (
                "code",
                json!({ "n": n, "predicate": predicate.clone().unwrap_or("even-parity".into()), "orbit_cap": orbit_cap }),
            )
        }
        Command::Cft {
            predicate,
            lambda,
            beta,
            steps,
            record_every,
            metric,
        } => {
            let n = need_n(n, config)?;
            (
                "cft",
                json!({
                    "n": n,
                    "predicate": predicate.clone().unwrap_or("even-parity".into()),
                    "lambda": lambda,
                    "beta": beta,
                    "steps": steps,
                    "record_every": record_every,
                    "metric": metric,
                }),
            )
        }
        Command::Audit { only, .. } => ("audit", json!({ "only": only })),
    })
}

fn param_str(params: &Value, key: &str) -> String {
    params[key].as_str().unwrap_or_default().to_string()
}

fn compute(
    command: &Command,
    name: &'static str,
    params: &Value,
    n: Option<u32>,
    config: &RunConfig,
) -> CliResult<Output> {
    let wrap = |result: Value, table: Table| -> CliResult<Output> {
        Ok(Output {
            command: name.to_string(),
            json: envelope(name, config, params.clone(), result)?,
            table,
            files: Vec::new(),
            text: None,
        })
    };
    match command {
        Command::Kernel => {
            let n = need_n(n, config)?;
            let k = fixed_space_capped(n, config.dense_cap)?;
            let basis: Vec<String> = basis_tables(n, &k)?
                .iter()
                .map(TruthTable::to_hex)
                .collect();
            let mut table = Table::new(&["index", "truth_table_hex"]);
            for (i, b) in basis.iter().enumerate() {
                table.push(vec![cell(i), b.clone()]);
            }
            wrap(
                json!({ "n": n, "dimension": k.dimension, "rank": k.rank, "basis": basis }),
                table,
            )
        }
        Command::Spectrum { lift } => {
            let n = need_n(n, config)?;
            let lift: MatrixLift = lift.parse()?;
            let s = spectrum_with(n, lift)?;
            let (count, trace, second) = s.moments();
            let mut table = Table::new(&["eigenvalue", "multiplicity"]);
            for (l, m) in &s.pairs {
                table.push(vec![cell(l), cell(m)]);
            }
            let mut v = serde_json::to_value(&s)?;
            v["spectral_radius"] = json!(s.spectral_radius());
            v["moments"] = json!({ "count": count.to_string(), "trace": trace.to_string(), "second": second.to_string() });
            wrap(v, table)
        }
        Command::Orbit { max_steps, .. } => {
            let n = need_n(n, config)?;
            let f = predicate::parse(&param_str(params, "predicate"), n)?;
            let o = Observer::new(n)?;
            let r = o.orbit(&f, *max_steps)?;
            let mut table = Table::new(&["step", "truth_table_hex"]);
            let mut cur = f.clone();
            for step in 0..r.orbit_size {
                table.push(vec![cell(step), cur.to_hex()]);
                cur = o.apply(&cur)?;
            }
            wrap(serde_json::to_value(&r)?, table)
        }
        Command::Lfactor { .. } => {
            let n = need_n(n, config)?;
            let f = predicate::parse(&param_str(params, "predicate"), n)?;
            let lf = local_factor(&Observer::new(n)?, &f)?;
            let mut table = Table::new(&["degree", "denominator", "char_poly"]);
            let top = lf
                .denominator
                .coeffs()
                .len()
                .max(lf.char_poly.coeffs().len());
            for d in 0..top {
                table.push(vec![
                    cell(d),
                    cell(lf.denominator.coeff(d)),
                    cell(lf.char_poly.coeff(d)),
                ]);
            }
            let mut v = serde_json::to_value(&lf)?;
            v["denominator_text"] = json!(lf.denominator.format_in("u"));
            wrap(v, table)
        }
        Command::Euler { character, degree } => {
            let chi = PredicateCharacter::by_name(character)?;
            let c = compare_series(&chi, *degree)?;
            let mut table = Table::new(&["degree", "euler", "dirichlet", "equal"]);
            for r in &c.rows {
                table.push(vec![
                    cell(r.degree),
                    r.euler_coeff.clone(),
                    r.dirichlet_coeff.clone(),
                    cell(r.equal),
                ]);
            }
            let mut v = serde_json::to_value(&c)?;
            v["euler_coefficients"] = json!(c.euler.integer_coeffs());
            v["dirichlet_coefficients"] = json!(c.dirichlet.integer_coeffs());
            v["all_equal"] = json!(c.all_equal());
            v["first_divergence"] = json!(c.first_divergence());
            wrap(v, table)
        }
        Command::Cocycle { .. } => {
            let n = need_n(n, config)?;
            let a = predicate::parse(&param_str(params, "predicate"), n)?;
            let r = cocycle_audit(&a)?;
            let mut table = Table::new(&[
                "n",
                "predicate",
                "quadruples_checked",
                "coboundary_violations",
                "symmetric",
                "pair_system_solvable",
            ]);
            table.push(vec![
                cell(n),
                a.to_hex(),
                cell(r.quadruples_checked),
                cell(r.coboundary_violations),
                cell(r.symmetric),
                cell(r.pair_system.is_solvable()),
            ]);
            let mut v = serde_json::to_value(&r)?;
            v["is_cocycle"] = json!(r.is_cocycle());
            wrap(v, table)
        }
        Command::Code { orbit_cap, .. } => {
            let n = need_n(n, config)?;
            let seed = predicate::parse(&param_str(params, "predicate"), n)?;
            let r = orbit_code_seeded(&Observer::new(n)?, &seed, *orbit_cap, config.seed)?;
            let mut table = Table::new(&[
                "n",
                "length",
                "dimension",
                "distance",
                "distance_kind",
                "matches_claim",
            ]);
            table.push(vec![
                cell(n),
                cell(r.length),
                cell(r.dimension),
                r.distance.map(cell).unwrap_or_default(),
                serde_json::to_value(r.distance_kind)?
                    .as_str()
                    .unwrap_or_default()
                    .to_string(),
                cell(r.matches_claim),
            ]);
            wrap(serde_json::to_value(&r)?, table)
        }
        Command::Cft {
            lambda,
            beta,
            steps,
            record_every,
            metric,
            ..
        } => {
            let n = need_n(n, config)?;
            let reference = predicate::parse(&param_str(params, "predicate"), n)?;
            let metric: Metric = metric.parse()?;
            let p = CftParams::new(
                reference.clone(),
                parse_rational(lambda)?,
                *beta,
                config.seed,
            )?
            .with_metric(metric);
            let trace = metropolis(&p, *steps, *record_every)?;
            let mut table = Table::new(&["step", "energy", "overlap"]);
            for r in &trace.rows {
                table.push(vec![cell(r.step), cell(r.energy), cell(r.overlap)]);
            }
            let balance = if n <= GROUND_STATE_CAP.min(3) {
                Some(detailed_balance(&p)?)
            } else {
                None
            };
            let v = json!({
                "params": p,
                "trace": trace,
                "final_equals_reference": trace.final_state == reference,
                "detailed_balance": balance,
            });
            wrap(v, table)
        }
        Command::Audit { only, .. } => audit(only, config),
    }
}

fn audit(only: &[String], config: &RunConfig) -> CliResult<Output> {
    let battery = BatteryConfig {
        seed: config.seed,
        dense_cap: config.dense_cap,
        arity_cap: config.arity_cap,
        level_cap: config.level_cap,
        jobs: config.jobs,
    };
    let mut report = run_battery(&battery, only)?;
    let mut files = Vec::new();
    for v in &mut report.verdicts {
        if v.evidence.is_null() {
            continue;
        }
        let rel = format!("evidence/{}.json", v.claim_id);
        files.push((rel.clone(), output::to_json_string(&v.evidence)?));
        v.artifacts.push(rel);
    }
    let text = report.to_table();
    files.push(("audit.txt".to_string(), text.clone()));
    let mut table = Table::new(&["claim_id", "status", "claimed", "computed", "rerun"]);
    for v in &report.verdicts {
        table.push(vec![
            v.claim_id.clone(),
            v.status.label().to_string(),
            v.claimed.to_string(),
            v.computed.to_string(),
            v.rerun.clone(),
        ]);
    }
    for e in &report.errors {
        table.push(vec![
            e.claim_id.clone(),
            "ERROR".into(),
            String::new(),
            e.message.clone(),
            e.rerun.clone(),
        ]);
    }
    Ok(Output {
        command: "audit".to_string(),
        json: serde_json::to_value(&report)?,
        table,
        files,
        text: Some(text),
    })
}

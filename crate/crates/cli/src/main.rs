// SPDX-License-Identifier: Apache-2.0

//! `boolobs` command-line front end.

mod args;
mod commands;
mod config;
mod error;
mod output;
mod predicate;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, Common};
use config::RunConfig;
use error::CliResult;

fn build_config(common: &Common, command: &Command) -> CliResult<RunConfig> {
    let mut c = RunConfig::default();
    if let Some(path) = &common.config {
        c.apply_file(path)?;
    }
    if let Some(v) = common.seed {
        c.seed = v;
    }
    if let Some(v) = common.dense_cap {
        c.dense_cap = v;
    }
    if let Some(v) = common.arity_cap {
        c.arity_cap = v;
    }
    if let Some(v) = common.jobs {
        c.jobs = v;
    }
    if let Some(v) = &common.format {
        c.format = Some(v.parse()?);
    }
    if let Some(v) = &common.out {
        c.out = v.clone();
    }
    if common.no_cache {
        c.no_cache = true;
    }
    if let Command::Audit {
        level_cap: Some(v), ..
    } = command
    {
        c.level_cap = *v;
    }
    c.validate()?;
    Ok(c)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return ExitCode::from(if ok { 0 } else { 1 });
        }
    };
    let result = build_config(&cli.common, &cli.command)
        .and_then(|config| commands::run(&cli.command, cli.common.n, &config));
    match result {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::predicate::PREDICATE_HELP;

#[derive(Debug, Parser)]
#[command(
    name = "boolobs",
    version,
    about = "Boolean observer operators, their fixed points and a claim audit"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Arity of the Boolean cube.
    #[arg(long, global = true)]
    pub n: Option<u32>,
    /// Output format for standard output: json or csv.
    #[arg(long, global = true)]
    pub format: Option<String>,
    /// Output directory for result files and the cache [default: out].
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Plain `key = value` configuration file; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Largest arity for which dense 2^n × 2^n matrices are built.
    #[arg(long, global = true)]
    pub dense_cap: Option<u32>,
    #[arg(long, global = true)]
    pub arity_cap: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Basis of the fixed space ker(O_n + I).
    Kernel,
    /// Eigenvalues of O_n with multiplicities.
    Spectrum {
        /// zero_one or plus_minus.
        #[arg(long, default_value = "zero_one")]
        lift: String,
    },
    /// Orbit of a predicate under O_n.
    Orbit {
        #[arg(long, help = PREDICATE_HELP)]
        predicate: Option<String>,
        #[arg(long, default_value_t = 1024)]
        max_steps: u64,
    },
    /// Local factor of a predicate on its Krylov space.
    Lfactor {
        #[arg(long, help = PREDICATE_HELP)]
        predicate: Option<String>,
    },
    /// Euler product against Dirichlet series for a character on F_2[t].
    Euler {
        /// delta, one or zero.
        #[arg(long, default_value = "delta")]
        character: String,
        #[arg(long, default_value_t = 12)]
        degree: u32,
    },
    /// Cocycle and pair-system audit of a predicate.
    Cocycle {
        #[arg(long, help = PREDICATE_HELP)]
        predicate: Option<String>,
    },
    /// Parameters of the code spanned by the orbit of a predicate.
    Code {
        #[arg(long, help = PREDICATE_HELP)]
        predicate: Option<String>,
        #[arg(long, default_value_t = 4096)]
        orbit_cap: usize,
    },
    /// Metropolis sampling of the lattice action.
    Cft {
        #[arg(long, help = PREDICATE_HELP)]
        predicate: Option<String>,
        /// Potential strength, an integer or a fraction p/q.
        #[arg(long, default_value = "1000")]
        lambda: String,
        #[arg(long, default_value_t = 10.0)]
        beta: f64,
        #[arg(long, default_value_t = 100_000)]
        steps: u64,
        #[arg(long, default_value_t = 1000)]
        record_every: u64,
        /// ultrametric or hamming.
        #[arg(long, default_value = "ultrametric")]
        metric: String,
    },
    /// Runs the claim battery.
    Audit {
        /// Comma-separated claim ids; all claims when absent.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Highest level in per-level sweeps.
        #[arg(long)]
        level_cap: Option<u32>,
        /// Lists the claim ids and exits.
        #[arg(long)]
        list: bool,
    },
}

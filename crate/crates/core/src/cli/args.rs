use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "zetalab", version, about = "Zeta and L-function laboratory")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// zeta, chi3, chi4 or chi:q:i
    #[arg(long, global = true, default_value = "zeta")]
    pub family: String,
    /// Height T of the critical-line window.
    #[arg(long, global = true)]
    pub height: Option<f64>,
    /// Sieve limit for prime tables.
    #[arg(long = "prime-limit", global = true)]
    pub prime_limit: Option<u64>,
    /// Histogram bin width.
    #[arg(long, global = true)]
    pub bins: Option<f64>,
    /// lo:hi range (x values or histogram support, depending on command).
    #[arg(long, global = true)]
    pub range: Option<String>,
    /// Directory for CSV and JSON artifacts.
    #[arg(long, global = true, default_value = "zetalab-out")]
    pub out: PathBuf,
    /// Zero cache directory; ZETALAB_CACHE overrides the default.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Evaluate the family at one point with its completion.
    Eval {
        /// Point s as re,im (or a real number).
        #[arg(long, allow_hyphen_values = true, default_value = "0.5,14.134725")]
        s: String,
    },
    /// Find and certify critical-line zeros up to the height.
    Zeros,
    /// Count zeros up to the height by the argument principle.
    Count,
    /// Compare ψ(x) against the explicit formula and run the Delsarte pairing.
    Explicit,
    /// Pair correlation and delta-histogram dips of zero ordinates.
    Stats,
    /// Star-product algebra and the unit equation.
    Ene {
        /// Check the local unit equation.
        #[arg(long = "unit-check")]
        unit_check: bool,
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Dynamical zeta function of a subshift, or ℙ¹ over 𝔽_p.
    Dynzeta {
        /// id<l>, full<l>, golden, rows like 11/10, or a file of 0/1 rows.
        #[arg(long, default_value = "golden")]
        matrix: String,
        #[arg(long, default_value_t = 20)]
        order: usize,
        /// Run the ℙ¹ check at this prime instead.
        #[arg(long = "weil-prime")]
        weil_prime: Option<u64>,
    },
    /// Kummer congruences and p-adic interpolation.
    Padic {
        #[arg(long, default_value_t = 5)]
        prime: u64,
        #[arg(long, default_value_t = 1)]
        residue: u64,
        #[arg(long, default_value_t = 4)]
        digits: u32,
        /// Largest Bernoulli index in the Kummer suite.
        #[arg(long = "max-index", default_value_t = 60)]
        max_index: usize,
    },
    /// Ramanujan τ with Hecke relations and the Ramanujan bound.
    Tau {
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// Fast end-to-end checks of every module.
    Selfcheck,
}

//! Configuration, dispatch and reports behind the `zetalab` binary.
//!
//! [`run`] executes one [`RunConfig`] and returns a [`Report`]; CSV artifacts
//! go to the output directory, zero sets to the cache directory. The process
//! exit code is 0 when every verdict passes, 1 when one fails, 2 for usage
//! errors and 3 for internal errors.

mod args;
mod commands;

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::Parser;
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{Map, Value};

pub use args::{Cli, CommandArgs, CommonArgs};

use crate::lfun::Family;
use crate::{Error, Result};

/// Environment variable overriding the default cache directory.
pub const CACHE_ENV: &str = "ZETALAB_CACHE";
pub const DEFAULT_CACHE: &str = "zetalab-cache";

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Eval { s: Complex64 },
    Zeros,
    Count,
    Explicit,
    Stats,
    Ene { unit_check: bool, prime: u64 },
    Dynzeta { matrix: String, order: usize, weil_prime: Option<u64> },
    Padic { prime: u64, residue: u64, digits: u32, max_index: usize },
    Tau { limit: usize },
    Selfcheck,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Eval { .. } => "eval",
            Command::Zeros => "zeros",
            Command::Count => "count",
            Command::Explicit => "explicit",
            Command::Stats => "stats",
            Command::Ene { .. } => "ene",
            Command::Dynzeta { .. } => "dynzeta",
            Command::Padic { .. } => "padic",
            Command::Tau { .. } => "tau",
            Command::Selfcheck => "selfcheck",
        }
    }

    fn default_height(&self) -> f64 {
        match self {
            Command::Explicit => 500.0,
            Command::Stats => 5000.0,
            _ => 100.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub family: Family,
    pub height: f64,
    /// Sieve limit; `None` lets the command pick.
    pub prime_limit: Option<u64>,
    pub bin_width: f64,
    pub range: Option<(f64, f64)>,
    pub out_dir: PathBuf,
    pub cache_dir: PathBuf,
    pub seed: u64,
    pub json: bool,
}

fn parse_range(s: &str) -> Result<(f64, f64)> {
    let bad = || Error::Usage(format!("range must be lo:hi with lo < hi, got `{s}`"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn parse_point(s: &str) -> Result<Complex64> {
    let bad = || Error::Usage(format!("point must be re,im or re, got `{s}`"));
    let mut parts = s.split(',').map(|p| p.trim().parse::<f64>());
    let re = parts.next().ok_or_else(bad)?.map_err(|_| bad())?;
    let im = match parts.next() {
        Some(v) => v.map_err(|_| bad())?,
        None => 0.0,
    };
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(Complex64::new(re, im))
}

impl RunConfig {
    /// A config with the defaults of `command`.
    pub fn new(command: Command) -> Self {
        RunConfig {
            height: command.default_height(),
            command,
            family: Family::Zeta,
            prime_limit: None,
            bin_width: 0.05,
            range: None,
            out_dir: PathBuf::from("zetalab-out"),
            cache_dir: PathBuf::from(DEFAULT_CACHE),
            seed: 1,
            json: false,
        }
    }

    /// Builds a config from parsed arguments; `env_cache` is the value of
    /// [`CACHE_ENV`], used when `--cache` is absent.
    pub fn from_cli(cli: Cli, env_cache: Option<PathBuf>) -> Result<Self> {
        let c = cli.common;
        let command = match cli.command {
            CommandArgs::Eval { s } => Command::Eval { s: parse_point(&s)? },
            CommandArgs::Zeros => Command::Zeros,
            CommandArgs::Count => Command::Count,
            CommandArgs::Explicit => Command::Explicit,
            CommandArgs::Stats => Command::Stats,
            CommandArgs::Ene { unit_check, prime } => Command::Ene { unit_check, prime: prime.unwrap_or(97) },
            CommandArgs::Dynzeta { matrix, order, weil_prime } => Command::Dynzeta { matrix, order, weil_prime },
            CommandArgs::Padic { prime, residue, digits, max_index } => Command::Padic { prime, residue, digits, max_index },
            CommandArgs::Tau { limit } => Command::Tau { limit },
            CommandArgs::Selfcheck => Command::Selfcheck,
        };
        let mut config = RunConfig::new(command);
        config.family = c.family.parse()?;
        if let Some(h) = c.height {
            config.height = h;
        }
        config.prime_limit = c.prime_limit;
        if let Some(b) = c.bins {
            config.bin_width = b;
        }
        config.range = c.range.as_deref().map(parse_range).transpose()?;
        config.out_dir = c.out;
        if let Some(dir) = c.cache.or(env_cache) {
            config.cache_dir = dir;
        }
        config.seed = c.seed;
        config.json = c.json;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.height > 0.0 && self.height.is_finite()) {
            return Err(Error::Usage(format!("height must be positive, got {}", self.height)));
        }
        if !(self.bin_width > 0.0 && self.bin_width.is_finite()) {
            return Err(Error::Usage(format!("bin width must be positive, got {}", self.bin_width)));
        }
        if self.prime_limit == Some(0) {
            return Err(Error::Usage("prime limit must be positive".into()));
        }
        if self.out_dir == self.cache_dir {
            return Err(Error::Usage("output and cache directories must differ".into()));
        }
        Ok(())
    }
}

/// One asserted tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub value: Value,
    pub budget: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub outputs: Map<String, Value>,
    pub artifacts: Vec<PathBuf>,
    pub verdicts: Vec<Verdict>,
    pub elapsed_seconds: f64,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Map::new(),
            outputs: Map::new(),
            artifacts: Vec::new(),
            verdicts: Vec::new(),
            elapsed_seconds: 0.0,
        }
    }

    pub(crate) fn input(&mut self, key: &str, value: impl Serialize) {
        self.inputs.insert(key.into(), serde_json::to_value(value).unwrap_or(Value::Null));
    }

    pub(crate) fn output(&mut self, key: &str, value: impl Serialize) {
        self.outputs.insert(key.into(), serde_json::to_value(value).unwrap_or(Value::Null));
    }

    pub(crate) fn verdict(&mut self, check: &str, value: impl Serialize, budget: impl Into<String>, pass: bool) {
        self.verdicts.push(Verdict {
            check: check.into(),
            value: serde_json::to_value(value).unwrap_or(Value::Null),
            budget: budget.into(),
            pass,
        });
    }

    /// Writes `text` to `dir/name` and records the artifact.
    pub(crate) fn artifact(&mut self, dir: &Path, name: &str, text: &str) -> Result<()> {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        let path = dir.join(name);
        fs::write(&path, text).map_err(|e| Error::io(&path, e))?;
        self.artifacts.push(path);
        Ok(())
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.command)?;
        for (k, v) in &self.outputs {
            writeln!(f, "  {k}: {v}")?;
        }
        for v in &self.verdicts {
            let tag = if v.pass { "PASS" } else { "FAIL" };
            writeln!(f, "  [{tag}] {}: {} (budget {})", v.check, v.value, v.budget)?;
        }
        for a in &self.artifacts {
            writeln!(f, "  wrote {}", a.display())?;
        }
        write!(f, "  {:.3} s", self.elapsed_seconds)
    }
}

/// Runs one command.
pub fn run(config: &RunConfig) -> Result<Report> {
    config.validate()?;
    let start = Instant::now();
    let mut report = Report::new(config.command.name());
    commands::dispatch(config, &mut report)?;
    report.elapsed_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

/// 2 for errors caused by the invocation, 3 for everything else.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_)
        | Error::NotPrime(_)
        | Error::Precondition(_)
        | Error::Domain(_)
        | Error::CharacterIndex { .. }
        | Error::NonPrimitive { .. }
        | Error::TrivialCharacter
        | Error::UnsupportedFamily(_)
        | Error::ConvergenceRegion(_)
        | Error::HeightExceeded { .. }
        | Error::InsufficientZeros { .. }
        | Error::JumpPoint(_)
        | Error::BeyondSieve { .. } => 2,
        _ => 3,
    }
}

/// Parses `args` (program name first), runs, prints, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let env_cache = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    let config = match RunConfig::from_cli(cli, env_cache) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("zetalab: {e}");
            return 2;
        }
    };
    match run(&config) {
        Ok(report) => {
            if config.json {
                match report.to_json() {
                    Ok(text) => println!("{text}"),
                    Err(e) => {
                        eprintln!("zetalab: {e}");
                        return 3;
                    }
                }
            } else {
                println!("{report}");
            }
            if report.passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("zetalab: {}: {e}", config.command.name());
            error_exit_code(&e)
        }
    }
}

//! `mbzeta`: census, filter roots, counting audits, statistics and the claims ledger.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mbzeta::{Error, LFunction, Precision};

const EXIT_HELP: &str = "\
Exit status:
  0  success (audits always exit 0 once the ledger is written)
  1  invalid configuration or usage
  2  census suspects a missed zero; the suspect interval is printed
  3  a filter Newton run failed (basin escape, no convergence, non-real root)
  4  I/O failure, including a missing catalog
  5  catalog integrity failure (checksum, version, format)
  6  other numerical failure";

#[derive(Parser, Debug)]
#[command(name = "mbzeta", version, about = "Mellin-Barnes spectral filters and zeta/beta zero audits", after_help = EXIT_HELP)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// L-function to work with
    #[arg(long, global = true, value_enum, default_value_t = FunctionArg::Zeta)]
    pub function: FunctionArg,
    /// Census height
    #[arg(long, global = true, default_value_t = 200.0)]
    pub t_max: f64,
    /// Energy ceiling for root searches and the counting audit
    #[arg(long, global = true)]
    pub e_max: Option<f64>,
    /// Scale a in (0, 1)
    #[arg(long, global = true, default_value_t = 0.2)]
    pub a: f64,
    /// Abscissa of the integration line (defaults: 0.6 for zeta, 0.75 for beta)
    #[arg(long, global = true)]
    pub abscissa: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = PrecisionArg::Double)]
    pub precision: PrecisionArg,
    /// Worker threads; results do not depend on this
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Directory for CSV, ledger and plot files
    #[arg(long, global = true, default_value = ".")]
    pub out: PathBuf,
    /// Catalog file (default: <out>/<function>.catalog)
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// Comma-separated claim ids to audit (default: all)
    #[arg(long, global = true, value_delimiter = ',')]
    pub claims: Vec<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FunctionArg {
    Zeta,
    Beta,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PrecisionArg {
    Double,
    DoubleDouble,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Locate critical-line zeros up to --t-max and store the catalog
    Census,
    /// Newton roots of the filter seeded at 2·ordinate + 0.05
    FilterRoots {
        /// Explicit starting energies instead of catalog seeds
        #[arg(long = "guess")]
        guesses: Vec<f64>,
    },
    /// Compare the filter-root count with the zero count up to --e-max
    Bijection,
    /// Spacing and pair-correlation statistics of the cached zeros
    Stats,
    /// Evaluate the registered claims into a JSON ledger
    Audit {
        /// List claim ids and exit
        #[arg(long)]
        list: bool,
    },
    /// Inspect or verify the catalog file
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum CacheAction {
    Inspect,
    Verify,
}

/// Validated settings shared by every subcommand.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub function: LFunction,
    pub t_max: f64,
    pub e_max: Option<f64>,
    pub a: f64,
    pub abscissa: f64,
    pub precision: Precision,
    pub out: PathBuf,
    pub cache: PathBuf,
    pub threads: usize,
    pub claims: Vec<String>,
}

impl RunConfig {
    fn from_args(g: &GlobalArgs) -> Result<Self, Failure> {
        let function = match g.function {
            FunctionArg::Zeta => LFunction::Zeta,
            FunctionArg::Beta => LFunction::Beta,
        };
        let abscissa = g.abscissa.unwrap_or(match function {
            LFunction::Zeta => 0.6,
            LFunction::Beta => 0.75,
        });
        let usage = |m: String| Failure::new(1, m);
        if !(g.t_max > 0.0 && g.t_max <= mbzeta::zerocensus::SCAN_CEILING) {
            return Err(usage(format!("--t-max must lie in (0, {}]", mbzeta::zerocensus::SCAN_CEILING)));
        }
        if let Some(e) = g.e_max {
            if !(e > 0.0 && e <= 2.0 * mbzeta::zerocensus::SCAN_CEILING) {
                return Err(usage(format!("--e-max must lie in (0, {}]", 2.0 * mbzeta::zerocensus::SCAN_CEILING)));
            }
        }
        if !(g.a > 0.0 && g.a < 1.0) {
            return Err(usage("--a must lie in (0, 1)".into()));
        }
        if !abscissa.is_finite() {
            return Err(usage("--abscissa must be finite".into()));
        }
        let threads = g.threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        if threads == 0 {
            return Err(usage("--threads must be positive".into()));
        }
        let cache = g.cache.clone().unwrap_or_else(|| g.out.join(format!("{function}.catalog")));
        Ok(RunConfig {
            function,
            t_max: g.t_max,
            e_max: g.e_max,
            a: g.a,
            abscissa,
            precision: match g.precision {
                PrecisionArg::Double => Precision::Double,
                PrecisionArg::DoubleDouble => Precision::DoubleDouble,
            },
            out: g.out.clone(),
            cache,
            threads,
            claims: g.claims.iter().filter(|c| !c.is_empty()).cloned().collect(),
        })
    }
}

/// An error with the exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::InvalidParameter(_) | Error::ArgumentDomain(_) => 1,
            Error::MissedZeroSuspected { .. } => 2,
            Error::BasinEscape { .. } | Error::NoConvergence(_) | Error::NonRealRoot(_) | Error::DerivativeVanishes(_) => 3,
            Error::Io(_) => 4,
            Error::ChecksumMismatch | Error::VersionUnsupported(_) | Error::CatalogFormat(_) => 5,
            _ => 6,
        };
        Failure::new(code, e.to_string())
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = RunConfig::from_args(&cli.global)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| Failure::new(1, format!("cannot start {} worker threads: {e}", cfg.threads)))?;
    pool.install(|| match cli.command {
        Command::Census => commands::census(&cfg),
        Command::FilterRoots { guesses } => commands::filter_roots(&cfg, &guesses),
        Command::Bijection => commands::bijection(&cfg),
        Command::Stats => commands::stats(&cfg),
        Command::Audit { list } => commands::audit(&cfg, list),
        Command::Cache { action: CacheAction::Inspect } => commands::cache_inspect(&cfg),
        Command::Cache { action: CacheAction::Verify } => commands::cache_verify(&cfg),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help and version requests are not errors
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

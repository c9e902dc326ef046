//! Command-line arguments and the validated run configuration.

use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use shpf_core::verify::{Suite, SuiteConfig};

use crate::cache::Cache;
use crate::error::CliError;

/// Largest brute-force bound accepted by `verify`.
pub const BRUTE_BOUND_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Pf,
    Sh,
    #[value(name = "sh_t")]
    ShT,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    P,
    VOdd,
    VNaive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Pf,
    SortedPf,
    Naive,
    SortedNaive,
    Garages,
    SortedOdd,
    SchroederPaths,
    MatchingPaths,
}

impl Family {
    /// Largest `n` for `count` and `enumerate`.
    pub fn limit(self) -> usize {
        match self {
            Family::Pf => 7,
            Family::SortedPf => 12,
            Family::Naive => 6,
            Family::SortedNaive | Family::Garages | Family::SortedOdd | Family::MatchingPaths => 9,
            Family::SchroederPaths => 10,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Pf => "pf",
            Family::SortedPf => "sorted-pf",
            Family::Naive => "naive",
            Family::SortedNaive => "sorted-naive",
            Family::Garages => "garages",
            Family::SortedOdd => "sorted-odd",
            Family::SchroederPaths => "schroeder-paths",
            Family::MatchingPaths => "matching-paths",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Identities,
    Combinatorics,
    Characters,
    Clifford,
    All,
}

impl SuiteArg {
    pub fn suite(self) -> Option<Suite> {
        match self {
            SuiteArg::Identities => Some(Suite::Identities),
            SuiteArg::Combinatorics => Some(Suite::Combinatorics),
            SuiteArg::Characters => Some(Suite::Characters),
            SuiteArg::Clifford => Some(Suite::Clifford),
            SuiteArg::All => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CharacterKind {
    /// Permutation character on parking functions.
    Pf,
    /// Character of the exterior algebra.
    Exterior,
    /// `chi_Pf` times the exterior character.
    Naive,
    /// Sum of the class traces over all sorted naive objects.
    NaiveTraces,
    /// Spin character of the Clifford algebra.
    Clifford,
    /// Spin character of `Pf` tensor the Clifford algebra.
    SpinNaive,
}

impl CharacterKind {
    pub fn limit(self) -> usize {
        match self {
            CharacterKind::NaiveTraces => 6,
            CharacterKind::Pf | CharacterKind::Naive | CharacterKind::SpinNaive => 10,
            CharacterKind::Exterior | CharacterKind::Clifford => 12,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CharacterKind::Pf => "pf",
            CharacterKind::Exterior => "exterior",
            CharacterKind::Naive => "naive",
            CharacterKind::NaiveTraces => "naive-traces",
            CharacterKind::Clifford => "clifford",
            CharacterKind::SpinNaive => "spin-naive",
        }
    }
}

/// Exact shifted parking function computations.
#[derive(Debug, Parser)]
#[command(name = "shpf", version, about)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Directory for cached expansions and character tables.
    #[arg(long, env = "SHPF_CACHE_DIR", global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Ignore the cache even if a directory is configured.
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Worker threads for independent checks (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand PF_n, SH_n or the t-graded SH_n(1, t).
    Expand {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "sh")]
        target: Target,
        #[arg(long, value_enum, default_value = "p")]
        basis: Basis,
    },
    /// Count a family and compare with its closed form.
    Count {
        #[arg(long, conflicts_with = "max_n", required_unless_present = "max_n")]
        n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum)]
        what: Family,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Largest n for brute-force oracles.
        #[arg(long, default_value_t = 5)]
        brute_bound: usize,
        /// Seed for the randomized claims.
        #[arg(long, default_value_t = SuiteConfig::default().seed)]
        seed: u64,
    },
    /// List the members of a family.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        what: Family,
    },
    /// Print a class function.
    Character {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        which: CharacterKind,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommandSpec {
    Expand { n: usize, target: Target, basis: Basis },
    Count { ns: RangeInclusive<usize>, what: Family },
    Verify { suite: Option<Suite>, config: SuiteConfig },
    Enumerate { n: usize, what: Family },
    Character { n: usize, which: CharacterKind },
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: CommandSpec,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub cache: Cache,
    pub jobs: Option<usize>,
}

fn check_n(n: usize, limit: usize, what: &str) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    if n > limit {
        return Err(CliError::Usage(format!("n = {n} is above the limit {limit} for {what}")));
    }
    Ok(())
}

impl TryFrom<Cli> for RunConfig {
    type Error = CliError;

    fn try_from(cli: Cli) -> Result<Self, CliError> {
        let command = match cli.command {
            Command::Expand { n, target, basis } => {
                let limit = if target == Target::ShT { 8 } else { 12 };
                check_n(n, limit, "expand")?;
                match (target, basis) {
                    (Target::Pf, Basis::VOdd | Basis::VNaive) => {
                        return Err(CliError::Usage("PF_n is not in SymP; use --basis p".into()))
                    }
                    (Target::ShT, Basis::VOdd | Basis::VNaive) => {
                        return Err(CliError::Usage("sh_t is only available in the p basis".into()))
                    }
                    _ => {}
                }
                CommandSpec::Expand { n, target, basis }
            }
            Command::Count { n, max_n, what } => {
                let ns = match (n, max_n) {
                    (Some(n), None) => n..=n,
                    (None, Some(m)) => 1..=m,
                    _ => return Err(CliError::Usage("give exactly one of --n and --max-n".into())),
                };
                check_n(*ns.end(), what.limit(), what.name())?;
                CommandSpec::Count { ns, what }
            }
            Command::Verify { suite, max_n, brute_bound, seed } => {
                if max_n == 0 {
                    return Err(CliError::Usage("--max-n must be at least 1".into()));
                }
                if brute_bound > BRUTE_BOUND_CAP {
                    return Err(CliError::Usage(format!("--brute-bound is capped at {BRUTE_BOUND_CAP}")));
                }
                CommandSpec::Verify { suite: suite.suite(), config: SuiteConfig { max_n, brute_bound, seed } }
            }
            Command::Enumerate { n, what } => {
                check_n(n, what.limit(), what.name())?;
                if what == Family::Naive {
                    return Err(CliError::Usage("enumerate lists sorted objects; use sorted-naive".into()));
                }
                CommandSpec::Enumerate { n, what }
            }
            Command::Character { n, which } => {
                check_n(n, which.limit(), which.name())?;
                CommandSpec::Character { n, which }
            }
        };
        if cli.global.jobs == Some(0) {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        let cache = match (&cli.global.cache_dir, cli.global.no_cache) {
            (Some(dir), false) => Cache::at(dir),
            _ => Cache::disabled(),
        };
        Ok(RunConfig { command, format: cli.global.format, out: cli.global.out, cache, jobs: cli.global.jobs })
    }
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use facon::cli::{run, Command, OutputFormat, RunConfig};

#[derive(Parser)]
#[command(
    name = "facon",
    version,
    about = "Asymptotic sets of polynomial mappings C^n -> C^n: curve catalog and stratification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Exponent box half-width E for the curve search
    #[arg(short = 'E', long = "max-exponent", default_value_t = 4)]
    max_exponent: i64,
    /// Total-degree bound D for implicit equations
    #[arg(short = 'D', long = "degree", default_value_t = 4)]
    degree: u32,
    /// Seed for all rational sampling
    #[arg(long, env = "FACON_SEED", default_value_t = 0)]
    seed: u64,
    /// Rank probes per dimension measurement
    #[arg(long, default_value_t = 8)]
    trials: u32,
    /// Sample budget per parametrized piece
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Output format
    #[arg(long, value_enum, default_value_t = Fmt::Json)]
    format: Fmt,
}

impl Default for Common {
    fn default() -> Self {
        Common { max_exponent: 4, degree: 4, seed: 0, trials: 8, samples: 200, format: Fmt::Text }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Fmt {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full analysis: dominance, façon catalog, strata, filtration, frontier
    Analyze {
        /// Mapping file (see README for the input grammar)
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Stratification view only
    Stratify {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Maximum number of distinct façons in dimension n
    CountFacons {
        #[arg(short)]
        n: u32,
    },
    /// Numeric oracles against the symbolic catalog
    Verify {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

fn main() {
    let cli = Cli::parse();
    let (command, common) = match cli.cmd {
        Cmd::Analyze { input, common } => (Command::Analyze { input }, common),
        Cmd::Stratify { input, common } => (Command::Stratify { input }, common),
        Cmd::CountFacons { n } => (Command::CountFacons { n }, Common::default()),
        Cmd::Verify { input, common } => (Command::Verify { input }, common),
    };
    let config = RunConfig {
        command,
        max_exponent: common.max_exponent,
        degree: common.degree,
        seed: common.seed,
        trials: common.trials,
        samples: common.samples,
        format: match common.format {
            Fmt::Json => OutputFormat::Json,
            Fmt::Text => OutputFormat::Text,
        },
    };
    std::process::exit(run(&config));
}

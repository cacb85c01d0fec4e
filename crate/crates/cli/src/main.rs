use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::{CliError, Output};

/// Construct, classify, convert and verify Majorana Clifford stabilizer codes.
#[derive(Parser, Debug)]
#[command(name = "anyoncodec", version)]
struct Cli {
    /// Output format; JSON is the stable machine interface.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Largest enumeration, as log2 of the number of words visited.
    #[arg(long, default_value_t = anyon_core::gf2::DEFAULT_ENUM_BITS, global = true)]
    max_enum_bits: usize,

    /// Largest qubit count for dense matrices.
    #[arg(long, default_value_t = anyon_core::clifford::DEFAULT_DENSE_QUBITS, global = true)]
    max_dense_qubits: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Extend,
    Puncture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Combinatorial,
    Dense,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MetricLabel {
    QuantumHamming,
    FullClifford,
    Spinorial,
    Semispinorial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ChiralityArg {
    Plus,
    Minus,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a subspace as all-even or mixed-parity.
    Classify { file: PathBuf },

    /// Extend a q-isotropic subspace by a parity bit, or puncture an
    /// all-even self-orthogonal code.
    Convert {
        #[arg(value_enum)]
        direction: Direction,
        file: PathBuf,
        /// Coordinate to delete when puncturing (default: last).
        #[arg(long)]
        coordinate: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },

    /// Build the Hamming-family code of order s and report its parameters.
    Hamming {
        s: usize,
        /// Increasing-weight search bound used when enumeration exceeds the cap.
        #[arg(long)]
        weight_limit: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },

    /// Run the invariant checklist on a subspace file.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Level::Combinatorial)]
        level: Level,
        /// Comma-separated ±1 signs for the canonical basis rows.
        #[arg(long, allow_hyphen_values = true)]
        signs: Option<String>,
        /// Seed for sampled error vectors.
        #[arg(long, env = "ANYONCODEC_SEED", default_value_t = 0)]
        seed: u64,
    },

    /// Span dimensions of the graph-metric filtration.
    Metric {
        #[arg(value_enum)]
        label: MetricLabel,
        /// Qubit count for quantum-hamming, mode count otherwise.
        size: usize,
        /// Last level to compute (default: until saturation).
        t_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = ChiralityArg::Plus)]
        chirality: ChiralityArg,
    },

    /// Randomized search for a q-isotropic subspace of length n whose
    /// extension has dual distance at least d.
    Search {
        n: usize,
        d: usize,
        budget: u64,
        #[arg(long, env = "ANYONCODEC_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = commands::Context {
        format: cli.format,
        max_enum_bits: cli.max_enum_bits,
        max_dense_qubits: cli.max_dense_qubits,
    };
    let result = match cli.command {
        Command::Classify { file } => commands::classify(&ctx, &file),
        Command::Convert {
            direction,
            file,
            coordinate,
            output,
        } => commands::convert(&ctx, direction, &file, coordinate, output.as_deref()),
        Command::Hamming {
            s,
            weight_limit,
            output,
        } => commands::hamming(&ctx, s, weight_limit, output.as_deref()),
        Command::Verify {
            file,
            level,
            signs,
            seed,
        } => commands::verify(&ctx, &file, level, signs.as_deref(), seed),
        Command::Metric {
            label,
            size,
            t_max,
            chirality,
        } => commands::metric(&ctx, label, size, t_max, chirality),
        Command::Search {
            n,
            d,
            budget,
            seed,
            output,
        } => commands::search(&ctx, n, d, budget, seed, output.as_deref()),
    };
    match result {
        Ok(Output { stdout, code }) => {
            print!("{stdout}");
            ExitCode::from(code)
        }
        Err(e) => {
            if let Some(stdout) = &e.stdout {
                print!("{stdout}");
            }
            eprintln!("error: {}", e.message);
            ExitCode::from(e.exit_code)
        }
    }
}

impl From<anyon_core::Error> for CliError {
    fn from(e: anyon_core::Error) -> Self {
        let exit_code = match e {
            anyon_core::Error::Capacity { .. } => commands::EXIT_CAPACITY,
            _ => commands::EXIT_INPUT,
        };
        CliError {
            message: e.to_string(),
            exit_code,
            stdout: None,
        }
    }
}

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pauli_composer::decompose::{DecomposeOptions, MatrixClass};
use pauli_cli::bench::{parse_n_range, BenchConfig, Suite};
use pauli_cli::commands::{self, CliError};

/// Environment variable capping the rayon worker count.
const THREADS_ENV: &str = "PAULI_THREADS";

#[derive(Parser)]
#[command(name = "pauli", version, about = "Sparse Pauli-string composition and Pauli-basis decomposition")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compose a Pauli string, printing `row col re im` lines.
    Compose {
        /// Label such as `ZXI` or `310`.
        label: String,
        /// Complex weight, e.g. `2.5` or `1-0.5i`.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Print a dense matrix file instead.
        #[arg(long)]
        dense: bool,
    },
    /// Decompose a matrix file into `<label> <re> <im>` lines.
    Decompose {
        /// Matrix file, or `-` for standard input.
        input: String,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, default_value_t = 0.0)]
        prune: f64,
        #[arg(long)]
        parallel: bool,
        /// non-hermitian, hermitian, symmetric or diagonal.
        #[arg(long)]
        force_class: Option<MatrixClass>,
    },
    /// Build a diagonal Ising Hamiltonian, printing `index value` lines.
    Ising {
        /// Comma-separated field weights.
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// Coupling `i j value` with i < j; repeatable.
        #[arg(long, allow_hyphen_values = true)]
        beta: Vec<String>,
        #[arg(long)]
        dense: bool,
    },
    /// exp(-iθP) as `row col re im` lines.
    Exp {
        label: String,
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long)]
        dense: bool,
    },
    /// Time methods over a range of n and write CSV.
    Bench {
        /// compose, decompose or ising.
        suite: Suite,
        /// Inclusive range, e.g. `2..6`.
        #[arg(long, default_value = "2..8")]
        n_range: String,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        /// Comma-separated; defaults to every method of the suite.
        #[arg(long, value_delimiter = ',')]
        methods: Vec<String>,
        /// Matrix class for the decompose suite.
        #[arg(long, default_value = "non-hermitian")]
        class: MatrixClass,
        #[arg(long, default_value_t = 2023)]
        seed: u64,
        /// Output CSV path; standard output when omitted.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

fn configure_threads() -> Result<(), CliError> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let threads: usize = v
            .parse()
            .map_err(|_| CliError::Usage(format!("{THREADS_ENV} must be a positive integer")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    let out = match cli.command {
        Command::Compose { label, weight, dense } => commands::compose(&label, weight.as_deref(), dense)?,
        Command::Decompose { input, tol, prune, parallel, force_class } => {
            let text = if input == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                s
            } else {
                std::fs::read_to_string(&input)?
            };
            let options = DecomposeOptions { tol, prune, parallel, force_class };
            let (class, out) = commands::decompose_text(&text, &options)?;
            eprintln!("class: {class}");
            out
        }
        Command::Ising { alpha, beta, dense } => commands::ising(&alpha, &beta, dense)?,
        Command::Exp { label, theta, dense } => commands::exp(&label, theta, dense)?,
        Command::Bench { suite, n_range, reps, methods, class, seed, out } => {
            let (n_min, n_max) = parse_n_range(&n_range)?;
            let methods = if methods.is_empty() {
                suite.methods().iter().map(|m| m.to_string()).collect()
            } else {
                methods
            };
            let config = BenchConfig { suite, n_min, n_max, reps, methods, seed, class };
            let csv = commands::bench(&config)?;
            match out {
                Some(path) => {
                    std::fs::write(path, csv)?;
                    String::new()
                }
                None => csv,
            }
        }
    };
    print!("{out}");
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use qgha_core::{Error, Limits};

mod commands;

#[derive(Parser)]
#[command(
    name = "qgha",
    version,
    about = "Exact computations in quantum generalized Heisenberg algebras H_q(f, g)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Domain, Noetherian and down-up flags plus a center summary
    Analyze { file: PathBuf },
    /// Product of two elements in normal form
    Mul {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
        /// Multiply through the free-algebra rewriting oracle
        #[arg(long, hide = true)]
        oracle: bool,
    },
    /// Lexicographic bidegree of an element
    Deg {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Image under the anti-automorphism swapping x and y
    Iota {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Decide whether two algebras are isomorphic
    Iso { file_a: PathBuf, file_b: PathBuf },
    /// Automorphism group description (JSON)
    Aut { file: PathBuf },
    /// Description of the center
    Center { file: PathBuf },
    /// dim V^n for V = span{1, x, y, h} (CSV)
    Gk {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_n: u32,
    },
    /// Check the ascending chain of left ideals for deg f >= 2
    NoethWitness {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        depth: u32,
    },
    /// Convert between down-up presentations and H_q(f, g)
    #[command(group(ArgGroup::new("mode").required(true)))]
    Convert {
        /// A(alpha, beta, gamma) to H_s(r*h + gamma, h)
        #[arg(long, num_args = 3, value_names = ["ALPHA", "BETA", "GAMMA"], allow_hyphen_values = true, group = "mode")]
        from_downup: Option<Vec<String>>,
        /// L(v, r, s, gamma) to H_s(r*h - gamma, -v); v is a polynomial in h
        #[arg(long, num_args = 4, value_names = ["V", "R", "S", "GAMMA"], allow_hyphen_values = true, group = "mode")]
        from_gdua: Option<Vec<String>>,
        /// H_q(a*h + b, g) to L(-g, a, q, -b)
        #[arg(long, value_name = "FILE", group = "mode")]
        to_gdua: Option<PathBuf>,
        /// Work over F_p instead of the rationals
        #[arg(long)]
        p: Option<u64>,
        /// Which root ordering to use when h^2 - alpha*h - beta has two roots
        #[arg(long, default_value_t = 0)]
        choice: usize,
    },
}

const EXIT_USAGE: u8 = 1;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) => EXIT_USAGE,
        Error::Parse(_) | Error::Schema(_) | Error::InvalidScalar(_) | Error::NotPrime(_) => 2,
        Error::CapacityExceeded { .. } => 4,
        _ => 3,
    }
}

fn limits_from_env() -> Result<Limits, String> {
    match std::env::var("QGHA_CAPACITY") {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .map(Limits::uniform)
            .map_err(|_| format!("QGHA_CAPACITY must be a non-negative integer, got {text:?}")),
        Err(_) => Ok(Limits::default()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let limits = match limits_from_env() {
        Ok(l) => l,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match commands::run(cli.command, &limits) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

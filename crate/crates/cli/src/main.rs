use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use monogen::monogenity::ClassifyOptions;
use monogen_cli::commands::{
    self, cmd_analyze, cmd_monogenic, cmd_polygon, cmd_sweep, render_text, CommandError,
};

/// Exact-arithmetic analysis of monic integer polynomials at primes: Newton
/// polygons, Ore index bounds, prime factorization shapes, common index
/// divisors, and monogenity of pure fields x^(2^u 3^v) - m.
#[derive(Parser)]
#[command(name = "monogen", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a monic polynomial at one or more primes.
    Analyze {
        /// Polynomial expression, e.g. "x^12-13".
        poly: String,
        /// Prime to analyze (repeatable); defaults to 2, 3 and the primes of
        /// the constant term.
        #[arg(long = "prime")]
        primes: Vec<u64>,
        /// Emit the versioned JSON report instead of text.
        #[arg(long)]
        json: bool,
        /// Write output to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Seed for the factorization-internal randomness.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Decide monogenity of x^(2^u 3^v) - m. Exit code: 0 monogenic,
    /// 3 not monogenic, 4 undecided.
    Monogenic {
        u: u32,
        v: u32,
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Classify every m in a range and write a CSV (one row per m).
    Sweep {
        u: u32,
        v: u32,
        #[arg(allow_negative_numbers = true)]
        m_from: i64,
        #[arg(allow_negative_numbers = true)]
        m_to: i64,
        /// CSV output path.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Render the phi-Newton polygon of a polynomial as SVG.
    Polygon {
        poly: String,
        phi: String,
        p: u64,
        /// SVG output path.
        #[arg(long)]
        out: PathBuf,
    },
}

fn write_out(out: Option<&PathBuf>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => std::io::stdout().write_all(content.as_bytes()),
    }
}

fn run() -> Result<i32, CommandError> {
    let cli = Cli::parse();
    let bound = commands::squarefree_bound_from_env();
    match cli.command {
        Command::Analyze {
            poly,
            primes,
            json,
            out,
            seed,
        } => {
            let report = cmd_analyze(&poly, &primes, seed.unwrap_or_else(commands::default_seed))?;
            let content = if json {
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else {
                render_text(&report)
            };
            write_out(out.as_ref(), &content).map_err(io_err)?;
            Ok(0)
        }
        Command::Monogenic {
            u,
            v,
            m,
            json,
            out,
            seed,
        } => {
            let m: BigInt = m.parse().map_err(|_| CommandError {
                exit_code: 2,
                message: "invalid integer m".into(),
            })?;
            let opts = ClassifyOptions {
                squarefree_bound: bound,
                factor_seed: seed.unwrap_or_else(commands::default_seed),
            };
            let outcome = cmd_monogenic(u, v, &m, &opts)?;
            let content = if json {
                serde_json::to_string_pretty(&outcome.report).expect("report serializes") + "\n"
            } else {
                render_text(&outcome.report)
            };
            write_out(out.as_ref(), &content).map_err(io_err)?;
            Ok(outcome.exit_code)
        }
        Command::Sweep {
            u,
            v,
            m_from,
            m_to,
            out,
            seed,
        } => {
            let opts = ClassifyOptions {
                squarefree_bound: bound,
                factor_seed: seed.unwrap_or_else(commands::default_seed),
            };
            let csv = cmd_sweep(u, v, m_from, m_to, &opts)?;
            write_out(Some(&out), &csv).map_err(io_err)?;
            Ok(0)
        }
        Command::Polygon { poly, phi, p, out } => {
            let svg = cmd_polygon(&poly, &phi, p)?;
            write_out(Some(&out), &svg).map_err(io_err)?;
            Ok(0)
        }
    }
}

fn io_err(e: std::io::Error) -> CommandError {
    CommandError {
        exit_code: 1,
        message: e.to_string(),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.exit_code as u8)
        }
    }
}

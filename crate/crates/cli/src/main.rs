//! `g2skein`: power-sum polynomials, star maps, transparency defects and the
//! verification suite from the command line.
//!
//! Exit codes: 0 success, 1 a check failed, 2 a check or computation raised
//! an error, 64 usage error.

mod commands;

use std::fs;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use commands::Outcome;

pub const EXIT_FAIL: u8 = 1;
pub const EXIT_ERROR: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

#[derive(Debug, Parser)]
#[command(name = "g2skein", version, about = "Exact G2 power sums, star maps and transparency checks")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to PATH instead of stdout.
    #[arg(long, value_name = "PATH", global = true)]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "Q", alias = "q")]
    Q,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print P_k or Q_k as a polynomial in x, y.
    Pq {
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=60))]
        k: u32,
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Print the star elements x^*, y^*, x_*, y_*, y_bar, y_under.
    Estar {
        /// Cyclotomic order of q; generic q when absent.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=200))]
        m: Option<u32>,
    },
    /// Apply F^* and F_* to a symmetric Laurent polynomial in l1, l2.
    Fmap {
        /// e.g. "l1 + l2 + l1^-1*l2^-1"
        expr: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=200))]
        m: Option<u32>,
    },
    /// Transparency defect S(x_bar, y_bar) - S(x_under, y_under) of a polynomial.
    Defect {
        /// e.g. "x^2 - 2*x - 2*y"
        poly: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=200))]
        m: Option<u32>,
    },
    /// Run one named check, or `all` for the default suite.
    Verify {
        name: String,
        #[command(flatten)]
        params: CheckParams,
    },
    /// Transparent subspace below a bidegree bound.
    Search {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=200))]
        m: Option<u32>,
        #[arg(long, value_parser = parse_bound, default_value = "10,10")]
        bound: (u64, u64),
    },
}

/// Overrides for a single check; unset values keep the suite defaults.
#[derive(Debug, Default, clap::Args)]
pub struct CheckParams {
    #[arg(long, value_parser = clap::value_parser!(u32).range(0..=60))]
    k: Option<u32>,
    #[arg(long, value_enum)]
    which: Option<Which>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(0..=60))]
    n: Option<u32>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=200))]
    m: Option<u32>,
    #[arg(long, value_parser = parse_bound)]
    bound: Option<(u64, u64)>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=10_000))]
    samples: Option<u32>,
}

const MAX_BOUND: u64 = 30;

fn parse_bound(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected A,B but found `{s}`"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| format!("`{t}` is not a non-negative integer"))
    };
    let (a, b) = (parse(a)?, parse(b)?);
    if a > MAX_BOUND || b > MAX_BOUND {
        return Err(format!("bound entries must be at most {MAX_BOUND}"));
    }
    Ok((a, b))
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}\n");
    eprintln!("{}", Cli::command().render_help());
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            eprintln!("\n{}", Cli::command().render_help());
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let result = commands::run(&cli.command, cli.json);
    let (text, outcome) = match result {
        Ok(done) => done,
        Err(commands::CliError::Usage(msg)) => return usage_error(&msg),
        Err(commands::CliError::Compute(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_ERROR);
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_ERROR);
    }
    match outcome {
        Outcome::Pass => ExitCode::SUCCESS,
        Outcome::Fail => ExitCode::from(EXIT_FAIL),
        Outcome::Error => ExitCode::from(EXIT_ERROR),
    }
}

//! Command-line front end for the invariant calculator.
//!
//! Subcommands:
//!   invariant   arithmetic invariants of Q(sqrt(p1 * ... * pr))
//!   unit        continued fraction, minimal Pell solution, unit norm
//!   topo        invariants of a branched double cover from a linking matrix
//!   lens        invariants of the lens space L(a, b)
//!   scan        tabulate invariants over all admissible tuples below a bound
//!   dictionary  cross-check the arithmetic and topological routes
//!
//! Exit codes: 0 success, 1 failed dictionary cross-check, 2 invalid input
//! or I/O failure, 3 unit-norm hypothesis violated without --force.

mod report;
mod scan;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dw_core::{Error as CoreError, PrimeTuple, UnitNormPolicy};

use report::Format;

#[derive(Parser)]
#[command(
    name = "dwcli",
    version,
    about = "Mod-2 Chern-Simons and Dijkgraaf-Witten invariants for real quadratic fields \
             Q(sqrt(p1*...*pr)), pi = 1 mod 4, and for double branched covers of S^3"
)]
struct Cli {
    /// Emit JSON instead of the human-readable report.
    #[arg(long, global = true)]
    json: bool,

    /// Emit CSV instead of the human-readable report.
    #[arg(long, global = true, conflicts_with = "json")]
    csv: bool,

    /// Compute invariants even when the fundamental unit has norm +1.
    /// Such output is labeled: the formulas are outside their hypothesis.
    #[arg(long, global = true)]
    force: bool,

    /// Omit the generation-timestamp header from scan files, making them
    /// byte-stable across runs.
    #[arg(long, global = true)]
    no_meta: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of the real quadratic field defined by a comma-separated
    /// list of primes, each congruent to 1 mod 4 (e.g. `invariant 5,29,37`).
    Invariant { primes: String },

    /// Continued fraction of sqrt(d), minimal solution of x^2 - d y^2 = +-1
    /// and the norm of the fundamental unit; takes a squarefree d >= 2 or a
    /// comma-separated prime list.
    Unit { input: String },

    /// Invariants of the double cover of S^3 branched over a link, read
    /// from a JSON linking-matrix file {"r": N, "lk": [[i, j, value], ...]}
    /// with 1-based pairs i < j; unlisted pairs are 0.
    Topo { matrix_file: PathBuf },

    /// Invariants of the lens space L(a, b), the double cover branched
    /// over the two-bridge link B(a, b): 0 < a < b, b even, gcd(a, b) = 1.
    Lens { a: u64, b: u64 },

    /// Tabulate invariants of every strictly increasing r-tuple of
    /// admissible primes below the bound, writing one CSV (or JSON) row per
    /// tuple; tuples failing the unit-norm hypothesis are recorded with a
    /// marker. The output path defaults to scan_r{R}_b{BOUND}.csv under
    /// $DWCLI_SCAN_DIR (or the working directory).
    Scan {
        r: usize,
        bound: u64,
        out: Option<PathBuf>,
    },

    /// Compare the arithmetic profile of a prime tuple with the
    /// topological profile of a link realizing its mod-2 linking matrix;
    /// exits 1 if they differ.
    Dictionary { primes: String },
}

/// Errors surfacing to the user, each mapped to a process exit code.
#[derive(Debug)]
enum CliError {
    Core(CoreError),
    Input(String),
    Io(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Input(msg) => write!(f, "{msg}"),
            CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Core(CoreError::NormNotMinusOne { .. }) => ExitCode::from(3),
            _ => ExitCode::from(2),
        }
    }
}

fn parse_primes(s: &str) -> Result<PrimeTuple, CliError> {
    let mut primes = Vec::new();
    for token in s.split(',') {
        let token = token.trim();
        let p: u64 = token
            .parse()
            .map_err(|_| CliError::Input(format!("`{token}` is not a positive integer")))?;
        primes.push(p);
    }
    Ok(PrimeTuple::new(primes)?)
}

fn format_of(cli: &Cli) -> Format {
    if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Human
    }
}

fn policy_of(cli: &Cli) -> UnitNormPolicy {
    if cli.force {
        UnitNormPolicy::Override
    } else {
        UnitNormPolicy::Enforce
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let format = format_of(cli);
    match &cli.command {
        Command::Invariant { primes } => {
            let t = parse_primes(primes)?;
            let rep = report::invariant_report(&t, policy_of(cli))?;
            print!("{}", rep.render(format));
            if let Some(w) = &rep.warning {
                eprintln!("warning: {w}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Unit { input } => {
            let d = if input.contains(',') {
                parse_primes(input)?.discriminant()
            } else {
                let d: u64 = input
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Input(format!("`{input}` is not a positive integer")))?;
                if d < 2 {
                    return Err(CliError::Input(format!("d must be at least 2, got {d}")));
                }
                d
            };
            let rep = report::unit_report(d)?;
            print!("{}", rep.render(format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Topo { matrix_file } => {
            let text = std::fs::read_to_string(matrix_file)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", matrix_file.display())))?;
            let rep = report::topo_report(&text, &matrix_file.display().to_string())?;
            print!("{}", rep.render(format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Lens { a, b } => {
            let rep = report::lens_report(*a, *b)?;
            print!("{}", rep.render(format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan { r, bound, out } => {
            let outcome = scan::run_scan(scan::ScanConfig {
                r: *r,
                bound: *bound,
                out: out.clone(),
                json: cli.json,
                meta: !cli.no_meta,
            })?;
            print!("{}", outcome.summary());
            Ok(ExitCode::SUCCESS)
        }
        Command::Dictionary { primes } => {
            let t = parse_primes(primes)?;
            let rep = report::dictionary_report(&t, policy_of(cli))?;
            print!("{}", rep.render(format));
            Ok(if rep.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

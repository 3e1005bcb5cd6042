//! The `dihedral-moduli` command line.
//!
//! Results go to stdout and diagnostics to stderr. Exit codes: 0 on success
//! (or when every check passes), 1 when a verification fails, 2 on usage
//! errors.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::{census_mismatches, enumerate_dissections};
use crate::error::Error;
use crate::moduli::{
    betti_table_with, cross_check_methods, delta_series, euler_compact, euler_delta, euler_open,
    open_series, verify_inversion, Method,
};
use crate::{IntPoly, IntSeries};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "dihedral-moduli",
    version,
    about = "Betti numbers of the moduli spaces M_{0,n}^delta"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Betti table a_{n,i} for 3 <= n <= N.
    Table {
        #[arg(long = "n-max", value_parser = clap::value_parser!(u64).range(3..))]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long, value_enum, default_value_t = MethodArg::Stratification)]
        method: MethodArg,
    },
    /// Poincaré polynomial of M_{0,n}, M_{0,n}^delta or Mbar_{0,n}.
    Euler {
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Stratification)]
        method: MethodArg,
    },
    /// Prints f, f_delta and the residuals of both compositions.
    Invert {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
        /// Specialize every coefficient to q = 0.
        #[arg(long)]
        q0: bool,
    },
    /// Inversion identities, cross-method agreement and the dissection oracle.
    Verify {
        #[arg(long)]
        order: u64,
    },
    /// Number of dissections of the n-gon of each type.
    Dissections {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        n: u64,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Stratification,
    Inversion,
    Recurrence,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Stratification => Method::Stratification,
            MethodArg::Inversion => Method::Inversion,
            MethodArg::Recurrence => Method::Recurrence,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Space {
    Open,
    Delta,
    Compact,
}

/// Runs the CLI against the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut io::stdout().lock(), &mut io::stderr().lock())
}

/// Runs the CLI with explicit output streams; `argv[0]` is the program name.
pub fn run_with<I, T>(argv: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                CliError::Io(_) => EXIT_FAILED,
                CliError::Compute(Error::OutOfRange { .. }) => EXIT_USAGE,
                CliError::Compute(_) => EXIT_FAILED,
            }
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Compute(#[from] Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn usize_arg(v: u64) -> usize {
    usize::try_from(v).unwrap_or(usize::MAX)
}

fn execute(command: Command, out: &mut impl Write) -> Result<u8, CliError> {
    match command {
        Command::Table {
            n_max,
            format,
            method,
        } => {
            let table = betti_table_with(usize_arg(n_max), method.into())?;
            match format {
                OutputFormat::Text => write!(out, "{}", table.to_text())?,
                OutputFormat::Csv => write!(out, "{}", table.to_csv())?,
                OutputFormat::Json => writeln!(out, "{}", table.to_json())?,
            }
        }
        Command::Euler { space, n, method } => {
            let n = usize_arg(n);
            let poly = match space {
                Space::Open => euler_open(n)?,
                Space::Delta => euler_delta(n, method.into())?,
                Space::Compact => euler_compact(n)?,
            };
            writeln!(out, "{poly}")?;
        }
        Command::Invert { order, q0 } => {
            let order = usize_arg(order);
            let (mut f, mut f_delta) = (open_series(order)?, delta_series(order)?);
            if q0 {
                f = at_q_zero(&f);
                f_delta = at_q_zero(&f_delta);
            }
            writeln!(out, "f = {f}")?;
            writeln!(out, "f_delta = {f_delta}")?;
            writeln!(
                out,
                "f(f_delta(x)) - x = {}",
                f.compose(&f_delta)?.residual_from_identity()
            )?;
            writeln!(
                out,
                "f_delta(f(x)) - x = {}",
                f_delta.compose(&f)?.residual_from_identity()
            )?;
        }
        Command::Verify { order } => return verify(usize_arg(order), out),
        Command::Dissections { n } => {
            let census = enumerate_dissections(usize_arg(n))?;
            for (lambda, count) in census.iter().rev() {
                writeln!(out, "{lambda}: {count}")?;
            }
            writeln!(out, "total: {}", census.values().sum::<u64>())?;
        }
    }
    Ok(EXIT_OK)
}

fn at_q_zero(s: &IntSeries) -> IntSeries {
    s.map(|p| IntPoly::constant(p.eval(&BigInt::zero())))
}

fn verify(order: usize, out: &mut impl Write) -> Result<u8, CliError> {
    let mut all_passed = true;

    let report = verify_inversion(order);
    if report.checks.is_empty() {
        writeln!(out, "PASS inversion identities (vacuous at order {order})")?;
    }
    for check in &report.checks {
        writeln!(out, "{check}")?;
    }
    all_passed &= report.passed();

    let n_max = order + 1;
    if n_max >= 3 {
        match cross_check_methods(n_max) {
            Ok(()) => writeln!(out, "PASS methods agree for 3 <= n <= {n_max}")?,
            Err(e) => {
                all_passed = false;
                writeln!(out, "FAIL {e}")?;
            }
        }
    }

    for n in 3..=(order + 2).min(10) {
        let (total, mismatches) = census_mismatches(n)?;
        if mismatches.is_empty() {
            writeln!(
                out,
                "PASS dissections of the {n}-gon: {total} enumerated, all types match"
            )?;
        } else {
            all_passed = false;
            for m in mismatches {
                writeln!(
                    out,
                    "FAIL dissections of the {n}-gon of type {}: enumerated {}, formula {}",
                    m.lambda, m.enumerated, m.formula
                )?;
            }
        }
    }

    Ok(if all_passed { EXIT_OK } else { EXIT_FAILED })
}

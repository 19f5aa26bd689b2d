//! Command-line front end for `fibcube-core`: tables, polynomials,
//! generating-function expansions, census dumps and verification sweeps.

pub mod commands;
pub mod range;
pub mod report;
pub mod verify;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use fibcube_core::graphs::DEFAULT_MAX_N;
use fibcube_core::GfName;

use commands::{CensusKind, FamilyArg, Format, PolyKind, TableKind};
use range::ParamRange;
use verify::{Suite, VerifyOptions};

#[derive(Debug, Parser)]
#[command(
    name = "fibcube",
    version,
    about = "Fibonacci cube enumeration and verification"
)]
pub struct Cli {
    /// Largest dimension for which graphs are built.
    #[arg(long, global = true, env = "FIBCUBE_MAX_N", default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the p-nomial triangle, a Fibonacci-type sequence or weight distributions.
    Table(TableArgs),
    /// Print a weight, cube, distance cube or maximal cube polynomial.
    Poly(PolyArgs),
    /// Expand a generating function.
    Gf(GfArgs),
    /// Dump induced cubes, maximal cubes or the graph as JSON.
    Census(CensusArgs),
    /// Cross-check closed forms against brute force and emit a JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub kind: TableKind,
    #[arg(long, default_value_t = 3)]
    pub p: usize,
    /// Last triangle row.
    #[arg(long, default_value_t = 5)]
    pub rows: usize,
    /// Last sequence index or dimension.
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    /// Append the diagonal sums of the triangle.
    #[arg(long)]
    pub diagonals: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[arg(value_enum)]
    pub kind: PolyKind,
    #[arg(long, value_enum, default_value_t = FamilyArg::PthOrder)]
    pub family: FamilyArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: Option<usize>,
    /// Recompute by brute force and exit with status 1 on disagreement.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct GfArgs {
    #[arg(value_parser = parse_gf)]
    pub name: GfName,
    #[arg(long)]
    pub p: usize,
    /// Truncation order.
    #[arg(short = 'N', long = "order", default_value_t = 10)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(value_enum)]
    pub kind: CensusKind,
    #[arg(long, value_enum, default_value_t = FamilyArg::PthOrder)]
    pub family: FamilyArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, default_value = "2..4")]
    pub p: ParamRange,
    #[arg(long, default_value = "0..10")]
    pub n: ParamRange,
    /// Write the report (with its duration) to a file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Print the elapsed time to stderr.
    #[arg(long)]
    pub timing: bool,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long)]
    pub jobs: Option<usize>,
}

fn parse_gf(s: &str) -> Result<GfName, String> {
    s.parse().map_err(|e: fibcube_core::Error| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Mismatch,
}

impl From<bool> for Outcome {
    fn from(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Mismatch
        }
    }
}

/// Runs a parsed command. Errors are usage or domain errors; check
/// failures are reported through [`Outcome::Mismatch`].
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    match &cli.command {
        Command::Table(a) => {
            commands::table(out, a.kind, a.p, a.rows, a.n, a.diagonals, a.format)?;
            Ok(Outcome::Pass)
        }
        Command::Poly(a) => {
            let spec = a.family.spec(a.n, a.p)?;
            Ok(commands::poly(out, err, a.kind, spec, a.oracle, cli.max_n)?.into())
        }
        Command::Gf(a) => {
            commands::gf(out, a.name, a.p, a.order, a.format)?;
            Ok(Outcome::Pass)
        }
        Command::Census(a) => {
            let spec = a.family.spec(a.n, a.p)?;
            commands::census(out, a.kind, spec, cli.max_n)?;
            Ok(Outcome::Pass)
        }
        Command::Verify(a) => {
            let start = Instant::now();
            let mut report = verify::run_verify(&VerifyOptions {
                suite: a.suite,
                n: a.n,
                p: a.p,
                max_n: cli.max_n,
                jobs: a.jobs,
            })?;
            let elapsed = start.elapsed();
            match &a.output {
                Some(path) => {
                    report.duration_ms = Some(elapsed.as_millis() as u64);
                    fs::write(path, report.to_json() + "\n")
                        .with_context(|| format!("writing {}", path.display()))?;
                    let passed = report.checks.iter().filter(|c| c.pass).count();
                    writeln!(
                        out,
                        "{}: {passed}/{} checks passed",
                        report.suite,
                        report.checks.len()
                    )?;
                }
                None => writeln!(out, "{}", report.to_json())?,
            }
            for failure in report.failures() {
                writeln!(
                    err,
                    "FAIL {} at {:?}: expected {}, got {}",
                    failure.name, failure.instance, failure.expected, failure.actual
                )?;
            }
            if a.timing {
                writeln!(
                    err,
                    "{} finished in {} ms",
                    report.suite,
                    elapsed.as_millis()
                )?;
            }
            Ok(report.pass.into())
        }
    }
}

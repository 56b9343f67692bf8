//! `hopfcheck`: runs the named verification suites over an exact field and
//! reports one pass/fail line per check.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use hopfcheck_core::scalar::FieldSpec;
use hopfcheck_core::suites::{run_suite, SuiteConfig, SuiteReport, SUITE_NAMES};

#[derive(Parser)]
#[command(name = "hopfcheck", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and exit 0 iff every check passes.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name: hopf-axioms, double-axioms, rmatrix, cocycle, twist,
    /// ext-space, braiding, grassmannian, rho-images, sp-decompose, or all.
    #[arg(long)]
    suite: String,
    /// Rank of E(n).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    n: u8,
    /// Ground field: `rational` or `gf:<p>` for an odd prime p.
    #[arg(long)]
    field: String,
    /// Seed for the randomized checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sample count for the randomized checks.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Write the full JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
}

fn print_report(report: &SuiteReport) {
    for c in &report.checks {
        let tag = if c.pass { "PASS" } else { "FAIL" };
        if c.detail.is_empty() {
            println!("[{tag}] {}", c.name);
        } else {
            println!("[{tag}] {} -- {}", c.name, c.detail);
        }
    }
    println!(
        "suite {} (n = {}, field = {}): {} ({} checks, {} ms)",
        report.suite,
        report.n,
        report.field,
        if report.passed { "PASS" } else { "FAIL" },
        report.checks.len(),
        report.elapsed_ms
    );
}

fn verify(args: &VerifyArgs) -> Result<bool> {
    if !SUITE_NAMES.contains(&args.suite.as_str()) {
        anyhow::bail!(
            "unknown suite `{}`; available: {}",
            args.suite,
            SUITE_NAMES.join(", ")
        );
    }
    let field = FieldSpec::parse(&args.field).context("bad --field")?;
    let cfg = SuiteConfig { seed: args.seed, samples: args.samples };
    let report = run_suite(&args.suite, args.n as usize, field, &cfg)?;
    print_report(&report);
    if let Some(path) = &args.json {
        let out = serde_json::to_string_pretty(&report)?;
        std::fs::write(path, out).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(report.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => match verify(&args) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
    }
}

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod bnr;
mod cat;
mod geo;
mod geometry;
mod group;
mod input;
mod report;
mod workspace;

use input::{CliError, Inputs};
use report::Report;

#[derive(Parser)]
#[command(name = "abtqft", version, about = "Finitely generated abelian groups, their monoidal categories, and the mod-24 invariant")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Normal forms, kernels, pullbacks and isomorphism tests.
    #[command(subcommand)]
    Group(group::GroupCmd),
    /// Hom-sets, homotopy fibers and the comparison functor.
    #[command(subcommand)]
    Cat(cat::CatCmd),
    /// Stokes, holonomy and Chern numbers on cell complexes.
    #[command(subcommand)]
    Geo(geo::GeoCmd),
    /// The mod-24 and mod-2 invariants.
    #[command(subcommand)]
    Bnr(bnr::BnrCmd),
    /// Built-in test suites.
    #[command(subcommand)]
    Suite(SuiteCmd),
}

#[derive(Subcommand)]
enum SuiteCmd {
    /// Run every acceptance criterion and print PASS/FAIL lines.
    Acceptance {
        #[arg(long, default_value_t = abtqft_acceptance::SEED)]
        seed: u64,
        /// Run a single criterion.
        #[arg(long)]
        only: Option<u32>,
    },
}

fn suite(cmd: SuiteCmd) -> Result<Report, CliError> {
    let SuiteCmd::Acceptance { seed, only } = cmd;
    let outcomes = match only {
        Some(id) => vec![abtqft_acceptance::run_one(id, seed)
            .ok_or_else(|| CliError::Compute(format!("no criterion {id}")))?],
        None => abtqft_acceptance::run_all(seed),
    };
    let mut r = Report::default();
    for o in &outcomes {
        r.line(o.to_string());
        r.failed |= !o.passed;
    }
    let rows: Vec<_> = outcomes
        .iter()
        .map(|o| serde_json::json!({"id": o.id, "name": o.name, "passed": o.passed, "detail": o.detail}))
        .collect();
    r.set("criteria", rows).set("seed", seed);
    Ok(r)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let mut inputs = Inputs::default();
    let result = match cli.command {
        Command::Group(c) => group::run(c, &mut inputs),
        Command::Cat(c) => cat::run(c, &mut inputs),
        Command::Geo(c) => geo::run(c, &mut inputs),
        Command::Bnr(c) => bnr::run(c, &mut inputs),
        Command::Suite(c) => suite(c),
    };
    match result {
        Ok(report) => {
            let text = match cli.format {
                Format::Text => report.lines.join("\n"),
                Format::Json => report::render_json(&argv, &inputs, &report),
            };
            let mut out = std::io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = writeln!(out, "{text}");
            if report.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}

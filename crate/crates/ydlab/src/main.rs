//! `ydlab`: batch verification of finite group models.

mod model;
mod output;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ydlab_core::catalog;

use crate::model::{parse_model, validate, ParseError};
use crate::output::{render, Format, Header};
use crate::suites::{run, Context, Suite};

#[derive(Parser)]
#[command(name = "ydlab", version, about = "Exact Hopf algebra and Yetter-Drinfeld checks on finite group models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite on a catalog model or a model file.
    Check(CheckArgs),
    /// List the built-in catalog.
    Catalog,
}

#[derive(Args)]
struct CheckArgs {
    /// Suite to run.
    #[arg(long, value_enum)]
    suite: Suite,
    /// Built-in model name (see `ydlab catalog`).
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    catalog: Option<String>,
    /// Model file path.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest accepted group order.
    #[arg(long, default_value_t = 6)]
    max_order: usize,
}

#[derive(Debug, thiserror::Error)]
enum InputError {
    #[error("unknown catalog model '{0}' (run `ydlab catalog` for the list)")]
    UnknownModel(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("group {name} has order {order}, above --max-order {max}")]
    TooLarge { name: String, order: usize, max: usize },
}

/// Exit status for failed checks.
const CHECK_FAILURE: u8 = 1;
/// Exit status for unusable input.
const INPUT_ERROR: u8 = 2;

fn check(args: &CheckArgs) -> Result<ExitCode, InputError> {
    let (label, model, perturbations) = match (&args.catalog, &args.file) {
        (Some(name), _) => {
            let model = catalog::lookup(name).ok_or_else(|| InputError::UnknownModel(name.clone()))?;
            (name.clone(), Ok(model), Vec::new())
        }
        (None, Some(path)) => {
            let shown = path.display().to_string();
            let text = std::fs::read_to_string(path).map_err(|source| InputError::Io { path: shown.clone(), source })?;
            let raw = parse_model(&text).map_err(|source| InputError::Parse { path: shown.clone(), source })?;
            (shown, validate(&raw), raw.perturbations)
        }
        (None, None) => unreachable!("clap requires one of --catalog and --file"),
    };
    let header = Header { suite: args.suite.name(), model: &label, perturbations: perturbations.iter().map(|p| p.keyword()).collect() };
    let model = match model {
        Ok(m) => m,
        Err(invalid) => {
            print!("{}", render(args.format, &header, &invalid.reports));
            return Ok(ExitCode::from(CHECK_FAILURE));
        }
    };
    let order = model.group.order();
    if order > args.max_order {
        return Err(InputError::TooLarge { name: model.group.name().to_string(), order, max: args.max_order });
    }
    let ctx = Context { model, perturbations };
    let reports: Vec<_> = args.suite.expand().into_iter().flat_map(|s| run(s, &ctx)).collect();
    print!("{}", render(args.format, &header, &reports));
    let failed = reports.iter().any(|r| !r.passed());
    Ok(if failed { ExitCode::from(CHECK_FAILURE) } else { ExitCode::SUCCESS })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Catalog => {
            for name in catalog::NAMES {
                let m = catalog::lookup(name).expect("catalog entry");
                match &m.action {
                    Some(a) => println!("{name}\torder {}\tacting on {} points", m.group.order(), a.size()),
                    None => println!("{name}\torder {}", m.group.order()),
                }
            }
            ExitCode::SUCCESS
        }
        Command::Check(args) => match check(&args) {
            Ok(code) => code,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(INPUT_ERROR)
            }
        },
    }
}

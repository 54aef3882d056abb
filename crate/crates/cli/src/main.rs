//! `polyball`: inradius, bound tables, gauge queries and brute-force
//! verification for the hull of normalized `{-1, 0, 1}^m` directions.

mod commands;
mod format;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{CliError, CliResult, Output, Step};

#[derive(Parser)]
#[command(name = "polyball", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Exact inradius s_m of the polytope in dimension m
    Inradius {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Inradius, bounds and asymptote for a range of dimensions
    Table {
        #[arg(long)]
        max: usize,
        /// pow2, all, or a positive stride starting at m = 2
        #[arg(long, default_value = "pow2")]
        step: Step,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Gauge value and inside/boundary/outside classification of a point
    Gauge {
        /// Comma-separated coordinates
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cross-check the closed form against the brute-force hull (m ≤ 4)
    Verify {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Facet count and facet normals (m ≤ 5)
    Facets {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        count_only: bool,
    },
}

fn json_or_text(format: Format, command: &str) -> CliResult<bool> {
    match format {
        Format::Json => Ok(true),
        Format::Text => Ok(false),
        Format::Csv => Err(CliError::Usage(format!("{command} supports --format text or json"))),
    }
}

fn run(cli: Cli) -> CliResult<Output> {
    Ok(match cli.command {
        Command::Inradius { dim, format } => commands::inradius_cmd(dim, json_or_text(format, "inradius")?)?.into(),
        Command::Table { max, step, format, out } => {
            let json = match format {
                Format::Csv => false,
                Format::Json => true,
                Format::Text => return Err(CliError::Usage("table supports --format csv or json".into())),
            };
            commands::table_cmd(max, step, json, out.as_deref())?.into()
        }
        Command::Gauge { point, tol, format } => {
            commands::gauge_cmd(&point, tol, json_or_text(format, "gauge")?)?.into()
        }
        Command::Verify { dim, tol } => commands::verify_cmd(dim, tol)?,
        Command::Facets { dim, count_only } => commands::facets_cmd(dim, count_only)?.into(),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, failure) = match run(cli) {
        Ok(Output { text, failure }) => (text, failure),
        Err(e) => (String::new(), Some(e)),
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()).is_err() {
        return ExitCode::from(1);
    }
    match failure {
        None => ExitCode::SUCCESS,
        Some(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

//! `liecurv`: curvature analysis of metric Lie algebras from the command line.

mod report;
mod sweep;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lie_curvature::catalog::{self, Params};
use lie_curvature::{json, Analysis, Error, MetricLieAlgebra, Stage};

#[derive(Debug, Parser)]
#[command(name = "liecurv", version)]
#[command(about = "Curvature, curvature operator spectra and V/Z-decompositions of metric Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze one algebra, from a JSON file or the built-in catalog.
    Analyze(AnalyzeArgs),
    /// Evaluate the verdicts of a catalog entry over a parameter grid.
    Sweep(SweepArgs),
    /// Inspect the built-in catalog.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Debug, clap::Args)]
struct AnalyzeArgs {
    /// Catalog entry name, e.g. "A_{3,3}+A_1".
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    catalog: Option<String>,

    /// Algebra file: {"dim": n, "label": ..., "brackets": [{"i","j","k","v"}, ...]}.
    #[arg(long)]
    file: Option<PathBuf>,

    /// Catalog parameter, `key=value`. Repeatable.
    #[arg(short = 'p', long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,

    /// Catalog variant.
    #[arg(long)]
    variant: Option<String>,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Last pipeline stage to run.
    #[arg(long, value_enum, default_value_t = StageArg::All)]
    stage: StageArg,

    /// Print the validated algebra as a JSON file instead of the report.
    #[arg(long)]
    emit_algebra: bool,
}

#[derive(Debug, clap::Args)]
struct SweepArgs {
    /// Catalog entry name.
    #[arg(long)]
    catalog: String,

    /// Grid axis, `key=v1,v2,...`. Repeatable; the first axis varies slowest.
    #[arg(short = 'p', long = "param", value_name = "KEY=V1,V2,...")]
    params: Vec<String>,

    #[arg(long)]
    variant: Option<String>,

    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Debug, Subcommand)]
enum CatalogCommand {
    /// List entries with their parameters and restrictions.
    List {
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ListFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StageArg {
    Curvature,
    Spectrum,
    Vdecomp,
    Zdecomp,
    All,
}

impl From<StageArg> for Stage {
    fn from(s: StageArg) -> Stage {
        match s {
            StageArg::Curvature => Stage::Curvature,
            StageArg::Spectrum => Stage::Spectrum,
            StageArg::Vdecomp => Stage::VDecomp,
            StageArg::Zdecomp => Stage::ZDecomp,
            StageArg::All => Stage::All,
        }
    }
}

const EXIT_INVALID: u8 = 2;
const EXIT_AMBIGUOUS: u8 = 3;

/// Failure reported as JSON on stderr.
#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn report(&self) -> ExitCode {
        let (value, code) = match self {
            Failure::Lib(e) => {
                let code = match e {
                    Error::AmbiguousIrreducibility { .. } => EXIT_AMBIGUOUS,
                    _ => EXIT_INVALID,
                };
                (json::error(e), code)
            }
            Failure::Io(msg) => (serde_json::json!({"error": "Io", "message": msg}), EXIT_INVALID),
        };
        eprintln!("{value}");
        ExitCode::from(code)
    }
}

/// Writes `text` and a newline to stdout. A closed pipe (e.g. `| head`) is
/// not an error.
fn emit(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match writeln!(out, "{}", text.trim_end()).and_then(|_| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(Failure::Io(format!("stdout: {e}"))),
    }
}

fn params_from(args: &[String], variant: Option<&str>) -> Result<Params, Error> {
    let mut p = Params::new();
    for a in args {
        p.assign(a)?;
    }
    if let Some(v) = variant {
        p.set_variant(v);
    }
    Ok(p)
}

fn load(args: &AnalyzeArgs) -> Result<MetricLieAlgebra, Failure> {
    if let Some(path) = &args.file {
        if !args.params.is_empty() || args.variant.is_some() {
            return Err(Error::Parse("parameters apply to catalog entries only".into()).into());
        }
        let text =
            std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        return Ok(MetricLieAlgebra::from_json(&text)?);
    }
    let name = args
        .catalog
        .as_deref()
        .expect("clap requires --catalog or --file");
    let params = params_from(&args.params, args.variant.as_deref())?;
    Ok(catalog::build(name, &params)?)
}

fn analyze(args: &AnalyzeArgs) -> Result<(), Failure> {
    let alg = load(args)?;
    if args.emit_algebra {
        return emit(&alg.to_json());
    }
    let a = Analysis::run(&alg, args.stage.into());
    let out = match args.format {
        Format::Json => serde_json::to_string_pretty(&json::report(&a)).expect("report serializes"),
        Format::Text => report::text(&a),
        Format::Csv => report::csv_summary(&a),
    };
    emit(&out)?;
    // partial results are printed before the ambiguity is reported
    match a.ambiguity() {
        Some(e) => Err(e.clone().into()),
        None => Ok(()),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze(args) => analyze(&args),
        Command::Sweep(args) => {
            let entry = catalog::entry(&args.catalog)?;
            let grid = sweep::grid(entry, &args.params, args.variant.as_deref())?;
            let rows = sweep::evaluate(entry, &grid);
            let out = match args.format {
                TableFormat::Csv => sweep::to_csv(entry, &rows),
                TableFormat::Json => {
                    serde_json::to_string_pretty(&sweep::to_json(&rows)).expect("rows serialize")
                }
            };
            emit(&out)
        }
        Command::Catalog {
            command: CatalogCommand::List { format },
        } => {
            let out = match format {
                ListFormat::Text => report::catalog_text(),
                ListFormat::Json => {
                    serde_json::to_string_pretty(&report::catalog_json()).expect("listing serializes")
                }
            };
            emit(&out)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.report(),
    }
}

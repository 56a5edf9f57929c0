use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qjudge::scenario::{
    demo_scenario, emit_report, fit_outcome, parse_scenario, parse_targets, run_scenario, Format, QueryResult,
    Report, ScenarioError, Tolerances, DEFAULT_GRID_STEP, DEFAULT_REFINE_TOL,
};

const EXIT_INPUT: u8 = 2;
const EXIT_ENGINE: u8 = 3;

#[derive(Parser)]
#[command(name = "qjudge", version, about = "Quantum-probability models of human judgment")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Table,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Table => Format::Table,
        }
    }
}

#[derive(clap::Args)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file and print its report.
    Run {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Fit the planar conjunction model to observed probabilities.
    Fit {
        targets: PathBuf,
        #[arg(long, default_value_t = DEFAULT_GRID_STEP)]
        grid_step: f64,
        #[arg(long, default_value_t = DEFAULT_REFINE_TOL)]
        tol: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Run a bundled scenario.
    Demo {
        #[arg(value_parser = ["linda", "korea"])]
        name: String,
        #[command(flatten)]
        output: Output,
    },
    /// Parse and validate a scenario without running it.
    Validate { file: PathBuf },
}

enum Failure {
    Input(String),
    Engine(String),
}

impl From<ScenarioError> for Failure {
    fn from(e: ScenarioError) -> Self {
        match e {
            ScenarioError::Engine { .. } => Failure::Engine(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn write(report: &Report, output: &Output) -> Result<(), Failure> {
    let bytes = emit_report(report, output.format.into());
    match &output.out {
        Some(path) => fs::write(path, bytes)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(&bytes)
                .map_err(|e| Failure::Input(format!("cannot write stdout: {e}")))
        }
    }
}

fn execute(command: Command) -> Result<(), Failure> {
    match command {
        Command::Run { file, output } => {
            let scenario = parse_scenario(&read(&file)?)?;
            write(&run_scenario(&scenario)?, &output)
        }
        Command::Demo { name, output } => {
            let text = demo_scenario(&name).ok_or_else(|| Failure::Input(format!("unknown demo `{name}`")))?;
            let scenario = parse_scenario(text.as_bytes())?;
            write(&run_scenario(&scenario)?, &output)
        }
        Command::Fit {
            targets,
            grid_step,
            tol,
            output,
        } => {
            let spec = parse_targets(&read(&targets)?)?;
            let targets_2d = spec.to_targets().map_err(|e| Failure::Input(e.to_string()))?;
            let fit = qjudge::fit_2d(&targets_2d, grid_step, tol).map_err(|e| Failure::Input(e.to_string()))?;
            let name = targets
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "fit".into());
            let report = Report {
                scenario: name,
                engine_version: qjudge::VERSION.to_owned(),
                tolerances: Tolerances::default(),
                results: vec![QueryResult {
                    index: 0,
                    outcome: fit_outcome(&fit),
                }],
            };
            write(&report, &output)
        }
        Command::Validate { file } => {
            let scenario = parse_scenario(&read(&file)?)?;
            println!(
                "ok: {} ({} events, {} queries)",
                scenario.name,
                scenario.events.len(),
                scenario.queries.len()
            );
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("qjudge: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Engine(msg)) => {
            eprintln!("qjudge: {msg}");
            ExitCode::from(EXIT_ENGINE)
        }
    }
}

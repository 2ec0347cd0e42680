use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use hopf_deform::commands::{self, budget_from_env, Settings};
use hopf_deform::datum::parse_datum;
use hopf_deform::report::{Report, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Full,
    Sampled,
}

/// Liftings, cocycle deformations and cohomology of quantum linear spaces.
#[derive(Debug, Parser)]
#[command(name = "hopf-deform", version)]
struct Cli {
    /// build, verify, nichols, deform-mult, deform-comult, cohomology, theta, delta, dual, irreps or fixtures
    command: String,
    /// Datum file (JSON).
    #[arg(long)]
    input: Option<String>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Degree cap for truncated tensor algebras and symmetrizer degrees.
    #[arg(long)]
    degree_cap: Option<usize>,
    #[arg(long, value_enum)]
    verify_mode: Option<Mode>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Restrict cohomology to G-invariant cochains.
    #[arg(long)]
    invariant: bool,
    /// Highest cohomological degree.
    #[arg(long, default_value_t = 2)]
    level: usize,
    /// Odd order for `irreps`.
    #[arg(long, default_value_t = 3)]
    p: u32,
    /// Named example for `fixtures`.
    #[arg(long)]
    example: Option<String>,
    /// Cocycle file for `deform-mult`.
    #[arg(long)]
    cocycle: Option<String>,
    /// Include wall-clock timing in the report.
    #[arg(long)]
    timing: bool,
}

fn input_error(command: &str, msg: String) -> Report {
    let mut r = Report::new(command, serde_json::Value::Null);
    commands::add_conventions(&mut r);
    r.status = Status::InputError;
    r.error = Some(msg);
    r
}

fn execute(cli: &Cli) -> Report {
    let budget = match budget_from_env() {
        Ok(b) => b,
        Err(e) => return input_error(&cli.command, e),
    };
    let settings = Settings {
        jobs: cli.jobs,
        degree_cap: cli.degree_cap,
        verify_mode: cli.verify_mode.map(|m| if m == Mode::Full { "full".into() } else { "sampled".into() }),
        seed: cli.seed,
        invariant: cli.invariant,
        level: cli.level,
        p: cli.p,
        example: cli.example.clone(),
        budget,
    };
    let file = match &cli.input {
        None => None,
        Some(path) => match std::fs::read_to_string(path) {
            Err(e) => return input_error(&cli.command, format!("cannot read {path}: {e}")),
            Ok(text) => match parse_datum(&text) {
                Ok(f) => Some(f),
                Err(e) => return input_error(&cli.command, format!("{path}: {e}")),
            },
        },
    };
    let cocycle = match &cli.cocycle {
        None => None,
        Some(path) => match std::fs::read_to_string(path) {
            Ok(t) => Some(t),
            Err(e) => return input_error(&cli.command, format!("cannot read {path}: {e}")),
        },
    };
    commands::run(&cli.command, file.as_ref(), cocycle.as_deref(), &settings)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = execute(&cli);
    if cli.timing {
        report.timing = Some([("total".to_string(), start.elapsed().as_secs_f64())].into_iter().collect());
    }
    let out = match cli.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    ExitCode::from(report.status.exit_code() as u8)
}

use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use forge_cli::builtin::builtin_fixture;
use forge_cli::{run_document, Document, InputError};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Command {
    Check,
    Galois,
    Principal,
    Connection,
    Cointegral,
    Induce,
    Duality,
    Injectivity,
    Report,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Galois => "galois",
            Command::Principal => "principal",
            Command::Connection => "connection",
            Command::Cointegral => "cointegral",
            Command::Induce => "induce",
            Command::Duality => "duality",
            Command::Injectivity => "injectivity",
            Command::Report => "report",
        }
    }
}

/// Exact verification of corings, entwinings and Galois comodules.
#[derive(Debug, Parser)]
#[command(name = "forge", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Input document (JSON); omit when using --fixture.
    file: Option<String>,
    /// Use a builtin fixture instead of a file.
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Run independent checks in parallel.
    #[arg(long)]
    parallel: bool,
}

fn load(cli: &Cli) -> Result<(Document, String), InputError> {
    match (&cli.fixture, &cli.file) {
        (Some(name), None) => Ok((builtin_fixture(name)?, format!("fixture {name}"))),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| InputError::Io { path: path.clone(), message: e.to_string() })?;
            Ok((Document::parse(&text)?, path.clone()))
        }
        (Some(_), Some(_)) => Err(InputError::invalid("arguments", "give either a file or --fixture, not both")),
        (None, None) => Err(InputError::invalid("arguments", "missing input file or --fixture")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = load(&cli).and_then(|(doc, source)| run_document(&doc, &source, cli.command.name(), cli.parallel));
    match result {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => print!("{}", report.to_json()),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

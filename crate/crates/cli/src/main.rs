//! `mfmoduli`: command-line frontend. Reads a JSON problem file, writes a
//! JSON report with sorted keys.
//!
//! Exit codes: 0 on success, 1 on malformed input, 2 when a precondition of
//! the requested computation fails (for `phi`, an unsaturated monoid).

mod commands;
mod input;
mod render;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use input::ProblemFile;

/// Thread count for internal parallelism; unset means one per core.
const THREADS_VAR: &str = "MFMODULI_THREADS";

#[derive(Debug, Parser)]
#[command(name = "mfmoduli", version, about = "Tangent-space weights of moduli of multiplicity-free affine varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Problem file; standard input if omitted or `-`.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Report file; standard output if omitted or `-`.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Indent the report.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Debug, Clone, Copy, Subcommand)]
enum Command {
    /// List Σ̄_G with rows, supports and Π_σ. Needs `dynkin`.
    Sigmabar,
    /// Compute Φ(Γ) with per-condition verdicts. Needs `generators`.
    Phi,
    /// Hilbert basis of the saturation, lattice basis and the rays of 𝒦.
    Saturate,
    /// Apply the doubling rule to `sigma`.
    LosevBar,
    /// Structure constants of the Chevalley basis and a Jacobi check.
    Chevalley,
    /// Check a candidate `sigma_bar` against Φ(Γ).
    Validate,
    /// All subsets of Φ(Γ) passing validation.
    Components,
    /// Canonical fingerprint of (Γ, `sigma_bar`).
    Fingerprint,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Sigmabar => "sigmabar",
            Command::Phi => "phi",
            Command::Saturate => "saturate",
            Command::LosevBar => "losev-bar",
            Command::Chevalley => "chevalley",
            Command::Validate => "validate",
            Command::Components => "components",
            Command::Fingerprint => "fingerprint",
        }
    }
}

#[derive(Debug)]
pub enum Failure {
    Malformed(String),
    Precondition(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Malformed(_) => 1,
            Failure::Precondition(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Malformed(m) | Failure::Precondition(m) => m,
        }
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<Vec<u8>, Failure> {
    let mut buf = Vec::new();
    let res = match path {
        Some(p) if p.as_os_str() != "-" => std::fs::File::open(p).and_then(|mut f| f.read_to_end(&mut buf)),
        _ => std::io::stdin().read_to_end(&mut buf),
    };
    res.map_err(|e| Failure::Malformed(format!("cannot read input: {e}")))?;
    Ok(buf)
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .map_err(|_| Failure::Malformed(format!("{THREADS_VAR} must be a non-negative integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Malformed(e.to_string()))
}

fn write_report(cli: &Cli, report: &Value) -> Result<(), Failure> {
    let mut text = if cli.pretty {
        serde_json::to_string_pretty(report)
    } else {
        serde_json::to_string(report)
    }
    .expect("JSON values serialize");
    text.push('\n');
    let res = match &cli.output {
        Some(p) if p.as_os_str() != "-" => std::fs::write(p, text),
        _ => std::io::stdout().write_all(text.as_bytes()),
    };
    res.map_err(|e| Failure::Malformed(format!("cannot write report: {e}")))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    configure_threads()?;
    let bytes = read_input(cli.input.as_ref())?;
    let problem = ProblemFile::parse(&bytes)?;
    let (results, failure) = match cli.command {
        Command::Sigmabar => (commands::sigmabar(&problem)?, None),
        Command::Phi => match commands::phi(&problem)? {
            Ok(v) => (v, None),
            Err((v, f)) => (v, Some(f)),
        },
        Command::Saturate => (commands::saturate(&problem)?, None),
        Command::LosevBar => (commands::losev(&problem)?, None),
        Command::Chevalley => (commands::chevalley(&problem)?, None),
        Command::Validate => (commands::validate(&problem)?, None),
        Command::Components => (commands::components(&problem)?, None),
        Command::Fingerprint => (commands::fingerprint_cmd(&problem)?, None),
    };
    let report = json!({
        "command": cli.command.name(),
        "input_sha256": hex::encode(Sha256::digest(&bytes)),
        "results": results,
        "tool_version": env!("CARGO_PKG_VERSION"),
    });
    write_report(cli, &report)?;
    match failure {
        Some(f) => Err(f),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("mfmoduli {}: {}", cli.command.name(), f.message());
            ExitCode::from(f.code())
        }
    }
}

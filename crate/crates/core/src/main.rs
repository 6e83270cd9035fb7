use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use fano_toric::conjectures::{analyze, AnalysisReport, BoundKind};
use fano_toric::polytope::{validate_smooth_fano, FanoPolytope};
use fano_toric::shell::{
    batch, construct, directory_files, enumerate_2d, parse_file, report_json, to_pretty, to_text,
    ExitStatus,
};
use fano_toric::Error;

#[derive(Parser)]
#[command(
    name = "fano-toric",
    version,
    about = "Exact analysis of smooth toric Fano polytopes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the smooth Fano conditions for every polytope in the files.
    Validate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Full JSON analysis of every polytope in the files.
    Analyze {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate one bound family.
    Check {
        #[arg(long, value_parser = parse_kind)]
        which: BoundKind,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Print a polytope from a family spec, e.g. `product(simplex:2,hexagon)`.
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the smooth Fano polygons with vertices in a box.
    Enumerate2d {
        #[arg(long = "box", default_value_t = 1, value_parser = clap::value_parser!(i64).range(1..))]
        radius: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze every file in a directory.
    Batch {
        dir: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_kind(s: &str) -> Result<BoundKind, String> {
    s.parse().map_err(|_| format!("unknown bound `{s}`"))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn load(files: &[PathBuf]) -> Result<Vec<FanoPolytope>, Error> {
    let mut all = Vec::new();
    for f in files {
        all.extend(parse_file(f).map_err(|e| match e {
            Error::Io(io) => Error::Io(std::io::Error::new(
                io.kind(),
                format!("{}: {io}", f.display()),
            )),
            other => other,
        })?);
    }
    Ok(all)
}

fn status_of(reports: &[AnalysisReport]) -> ExitStatus {
    if reports.iter().any(|r| r.theorem_violations() > 0) {
        ExitStatus::TheoremViolation
    } else if reports.iter().any(|r| !r.is_valid()) {
        ExitStatus::InvalidPolytope
    } else {
        ExitStatus::Ok
    }
}

fn analyze_all(polytopes: &[FanoPolytope]) -> Result<Vec<AnalysisReport>, Error> {
    polytopes.iter().map(analyze).collect()
}

fn run(cmd: Command) -> Result<ExitStatus, Error> {
    match cmd {
        Command::Validate { files } => {
            let mut status = ExitStatus::Ok;
            let mut text = String::new();
            for p in load(&files)? {
                let v = validate_smooth_fano(&p);
                if !v.is_valid() {
                    status = ExitStatus::InvalidPolytope;
                }
                text.push_str(&format!("{}: {}\n", p.name(), v.summary()));
            }
            emit(&text, None)?;
            Ok(status)
        }
        Command::Analyze { files, out } => {
            let reports = analyze_all(&load(&files)?)?;
            let value = Value::Array(reports.iter().map(report_json).collect());
            emit(&to_pretty(&value), out.as_deref())?;
            Ok(status_of(&reports))
        }
        Command::Check { which, files } => {
            let reports = analyze_all(&load(&files)?)?;
            let value: Vec<Value> = reports
                .iter()
                .map(|r| {
                    let full = report_json(r);
                    let checks: Vec<Value> = full["checks"]
                        .as_array()
                        .into_iter()
                        .flatten()
                        .filter(|c| c["name"] == which.as_str())
                        .cloned()
                        .collect();
                    json!({"name": r.name, "valid": r.is_valid(), "checks": checks})
                })
                .collect();
            emit(&to_pretty(&Value::Array(value)), None)?;
            Ok(status_of(&reports))
        }
        Command::Construct { family, out } => {
            let p = construct(&family)?;
            emit(&to_text(&[p]), out.as_deref())?;
            Ok(ExitStatus::Ok)
        }
        Command::Enumerate2d { radius, out } => {
            emit(&to_text(&enumerate_2d(radius)), out.as_deref())?;
            Ok(ExitStatus::Ok)
        }
        Command::Batch { dir, jobs, out } => {
            let files = directory_files(&dir)?;
            let outcome = batch(&files, jobs as usize)?;
            emit(&to_pretty(&outcome.output), out.as_deref())?;
            Ok(outcome.status)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(ExitStatus::ParseError.code() as u8),
            };
        }
    };
    match run(cli.command) {
        Ok(status) => ExitCode::from(status.code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            let status = match e {
                Error::Parse { .. } | Error::Shape { .. } | Error::Spec { .. } | Error::Io(_) => {
                    ExitStatus::ParseError
                }
                _ => ExitStatus::TheoremViolation,
            };
            ExitCode::from(status.code() as u8)
        }
    }
}

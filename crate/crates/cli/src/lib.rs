//! File formats, reports and subcommands behind the `gsm` binary.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 infeasible construction
//! or class mismatch, 3 a measurement that fails verification.

pub mod cli;
pub mod construct;
pub mod detect;
pub mod error;
pub mod format;
pub mod inspect;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::Parser;

pub use cli::{Cli, Command};
pub use error::{CliError, Status};

/// Rendered output of a finished command.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub status: Status,
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let tol = cli.tolerance;
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::Usage(format!(
            "--tolerance must be positive, got {tol}"
        )));
    }
    let (value, status) = match &cli.command {
        Command::Construct(args) => {
            let file = construct::construct(args, tol)?;
            return Ok(Output {
                text: format::to_pretty(&file),
                status: Status::Ok,
            });
        }
        Command::Verify(a) => inspect::verify(&a.file, tol)?,
        Command::Certify(a) => inspect::certify(&a.file, tol)?,
        Command::Bounds(a) => inspect::bounds(&a.file, a.states.as_deref(), tol)?,
        Command::Detect(a) => detect::detect(a, tol)?,
    };
    Ok(Output {
        text: format::to_pretty(&value),
        status,
    })
}

fn output_path(cli: &Cli) -> Option<&std::path::Path> {
    match &cli.command {
        Command::Construct(a) => a.output.as_deref(),
        _ => None,
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let written = match output_path(&cli) {
                Some(path) => {
                    fs::write(path, &out.text).map_err(|e| format!("{}: {e}", path.display()))
                }
                None => std::io::stdout()
                    .lock()
                    .write_all(out.text.as_bytes())
                    .map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return 1;
            }
            out.status as u8
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

//! `kacspec` command-line front end.
//!
//! Exit codes: 0 on success, 1 on usage, domain or I/O errors (one JSON line
//! on stderr), 2 when an exact identity fails or an eigenpair does not verify.

mod args;
mod family;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;
use kacspec_core::appendix::battery;
use kacspec_core::report::spectral_report;
use kacspec_core::serial::{
    battery_to_csv, matrix_to_csv, matrix_to_json, report_to_csv, to_json, verification_to_csv,
    AppendixBatteryJson, SpectralReportJson, VerificationJson,
};
use kacspec_core::Error;

pub use args::{Cli, Command, Format};
pub use family::{random_family, resolve};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    /// The artifact was written but reports a failed check.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Core(e) if e.is_internal() => "consistency",
            CliError::Core(_) => "domain",
            CliError::Io { .. } => "io",
            CliError::Failed(_) => "check_failed",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_internal() => 2,
            CliError::Failed(_) => 2,
            _ => 1,
        }
    }

    /// Single-line JSON description.
    pub fn to_line(&self) -> String {
        serde_json::json!({ "error": self.kind(), "message": self.to_string() }).to_string()
    }
}

/// Runs with the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let sink: &mut dyn Write = if help { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if help { 0 } else { 1 };
        }
    };
    match execute(&cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "{}", e.to_line());
            e.exit_code()
        }
    }
}

fn emit(text: &str, target: &Option<PathBuf>, out: &mut dyn Write) -> Result<(), CliError> {
    match target {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Build(a) => {
            let t = resolve(a, false)?.matrix(a.n)?;
            let text = match a.out.format {
                Format::Json => matrix_to_json(&t),
                Format::Csv => matrix_to_csv(&t)?,
            };
            emit(&text, &a.out.output, out)
        }
        Command::Spectrum(a) | Command::Eigvec(a) => {
            let only = match (&cli.command, a.j) {
                (Command::Eigvec(_), None) => {
                    return Err(CliError::Usage("eigvec needs --j".into()))
                }
                (Command::Eigvec(_), j) => j,
                (_, Some(_)) => {
                    return Err(CliError::Usage(
                        "spectrum does not take --j; use eigvec".into(),
                    ))
                }
                (_, None) => None,
            };
            let report = spectral_report(&resolve(a, false)?, a.n, only)?;
            let text = match a.out.format {
                Format::Json => to_json(&SpectralReportJson::from(&report)),
                Format::Csv => report_to_csv(&report)?,
            };
            emit(&text, &a.out.output, out)?;
            if report.all_verified() {
                Ok(())
            } else {
                Err(CliError::Failed(format!(
                    "{} of {} eigenpairs verified, characteristic polynomial match: {}",
                    report.verified_count(),
                    report.pairs.len(),
                    report.char_poly_match
                )))
            }
        }
        Command::Verify(a) => {
            if a.j.is_some() {
                return Err(CliError::Usage("verify does not take --j".into()));
            }
            let family = resolve(a, true)?;
            let report = spectral_report(&family, a.n, None)?;
            let text = match a.out.format {
                Format::Json => to_json(&VerificationJson::from(&report)),
                Format::Csv => verification_to_csv(&report)?,
            };
            emit(&text, &a.out.output, out)?;
            let radicand = report
                .radicand
                .as_ref()
                .map(|d| format!(", radicand {d}"))
                .unwrap_or_default();
            let summary = format!(
                "{family}: {} of {} pairs verified{radicand}",
                report.verified_count(),
                report.pairs.len()
            );
            if report.all_verified() {
                let _ = writeln!(err, "{summary}");
                Ok(())
            } else {
                Err(CliError::Failed(format!(
                    "{summary}, characteristic polynomial match: {}",
                    report.char_poly_match
                )))
            }
        }
        Command::Appendix(a) => {
            let b = battery(a.n)?;
            let text = match a.out.format {
                Format::Json => to_json(&AppendixBatteryJson::from(&b)),
                Format::Csv => battery_to_csv(&b)?,
            };
            emit(&text, &a.out.output, out)?;
            if b.all_passed() {
                Ok(())
            } else {
                let names: Vec<&str> = b.failed().map(|c| c.name.as_str()).collect();
                Err(CliError::Failed(format!(
                    "failed checks: {}",
                    names.join(", ")
                )))
            }
        }
    }
}

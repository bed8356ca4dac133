//! The `gtrig` command line.
//!
//! Exit codes: 0 success, 1 an identity failed verification, 2 usage or
//! domain error, 3 I/O error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use gtrig_core::{Error, EvalConfig, IdentityId, Panel, ParamPair, VerifyOptions};

use crate::cache::evaluator;
use crate::output::{self, g17};
use crate::sweep::{verify_jobs, Job};
use crate::table::{self, Function, TableError, TableFormat, TableRequest};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Exit {
    Ok = 0,
    Fail = 1,
    Usage = 2,
    Io = 3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Csv,
    Json,
}

/// Every user-facing default in one place.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Defaults {
    pub samples: usize,
    pub tol: f64,
    pub seed: u64,
    pub table_format: TableFormat,
    pub report_format: ReportFormat,
}

pub const DEFAULTS: Defaults = Defaults {
    samples: 1000,
    tol: 1e-9,
    seed: 0,
    table_format: TableFormat::Csv,
    report_format: ReportFormat::Text,
};

#[derive(Debug, Parser)]
#[command(name = "gtrig", version, about = "Generalized trigonometric functions sin_{p,q}, cos_{p,q} and pi_{p,q}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print pi_{p,q}, the half-period of sin_{p,q}.
    Pi {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
    },
    /// Evaluate sin, cos or arcsin at one point.
    #[command(allow_negative_numbers = true)]
    Eval {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        #[arg(long = "fn", value_enum)]
        function: Function,
        #[arg(long)]
        x: f64,
    },
    /// Tabulate a function on from, from + step, ..., up to `to`.
    #[command(allow_negative_numbers = true)]
    Table {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        #[arg(long = "fn", value_enum)]
        function: Function,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long)]
        step: f64,
        #[arg(long, value_enum, default_value_t = DEFAULTS.table_format)]
        format: TableFormat,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check catalog identities on sampled points.
    Verify {
        /// Identity to check (see --list-identities).
        #[arg(long, conflicts_with = "all")]
        identity: Option<String>,
        /// Check the whole catalog.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = DEFAULTS.samples)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULTS.tol)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULTS.seed)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = DEFAULTS.report_format)]
        format: ReportFormat,
        /// Print the identity vocabulary and exit.
        #[arg(long)]
        list_identities: bool,
        /// Replace the exponent panel by this p (and the pair panel by (p, q)).
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, requires = "p")]
        q: Option<f64>,
        /// ID=DELTA: add DELTA to every right-hand side of ID.
        #[arg(long, hide = true, value_name = "ID=DELTA")]
        perturb: Vec<String>,
    },
}

/// A failure that ends the command with a message on standard error.
#[derive(Debug)]
struct Failure {
    exit: Exit,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { exit: Exit::Usage, message: message.into() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { exit: Exit::Io, message: format!("I/O error: {e}") }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::usage(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command, writing to the
/// given streams. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(sink, "{}", e.render());
            return if code == 0 { Exit::Ok as u8 } else { Exit::Usage as u8 };
        }
    };
    let mut out = BufWriter::new(stdout);
    let result = dispatch(cli.command, &mut out).and_then(|exit| {
        out.flush()?;
        Ok(exit)
    });
    match result {
        Ok(exit) => exit as u8,
        Err(f) => {
            let _ = out.flush();
            let _ = writeln!(stderr, "error: {}", f.message);
            f.exit as u8
        }
    }
}

fn pair(p: f64, q: f64) -> Result<ParamPair, Failure> {
    Ok(ParamPair::new(p, q)?)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<Exit, Failure> {
    match command {
        Command::Pi { p, q } => {
            let g = evaluator(pair(p, q)?, &EvalConfig::default())?;
            writeln!(out, "{}", g17(g.pi()))?;
            Ok(Exit::Ok)
        }
        Command::Eval { p, q, function, x } => {
            let g = evaluator(pair(p, q)?, &EvalConfig::default())?;
            let v = match function {
                Function::Sin => g.sin(x)?.value,
                Function::Cos => g.cos(x)?.value,
                Function::Arcsin => g.arcsin(x)?,
            };
            writeln!(out, "{}", g17(v))?;
            Ok(Exit::Ok)
        }
        Command::Table { p, q, function, from, to, step, format, out: path } => {
            let req = TableRequest { pp: pair(p, q)?, function, from, to, step, format };
            let rows = req.rows().map_err(|e| match e {
                TableError::Request(m) => Failure::usage(m),
                TableError::Eval(e) => e.into(),
            })?;
            match path {
                Some(path) => {
                    let file = File::create(&path)
                        .map_err(|e| Failure { exit: Exit::Io, message: format!("{}: {e}", path.display()) })?;
                    write_table(BufWriter::new(file), format, &rows)?;
                }
                None => write_table(out, format, &rows)?,
            }
            Ok(Exit::Ok)
        }
        Command::Verify { identity, all, samples, tol, seed, format, list_identities, p, q, perturb } => {
            if list_identities {
                for id in IdentityId::ALL {
                    writeln!(out, "{:<16} {}", id.as_str(), id.summary())?;
                }
                return Ok(Exit::Ok);
            }
            let ids: Vec<IdentityId> = match (identity, all) {
                (_, true) => IdentityId::ALL.to_vec(),
                (Some(name), false) => vec![parse_id(&name)?],
                (None, false) => return Err(Failure::usage("give --identity ID or --all")),
            };
            let panel = panel_for(p, q)?;
            let perturbations = perturb.iter().map(|s| parse_perturbation(s)).collect::<Result<Vec<_>, _>>()?;
            let jobs: Vec<Job> = ids
                .iter()
                .map(|&id| Job {
                    id,
                    perturbation: perturbations.iter().filter(|(pid, _)| *pid == id).map(|(_, d)| d).sum(),
                })
                .collect();
            if samples < 2 {
                return Err(Failure::usage(format!("--samples must be at least 2 (got {samples})")));
            }
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(Failure::usage(format!("--tol must be positive (got {tol})")));
            }
            let opts = VerifyOptions { samples, tol, seed, perturbation: 0.0 };
            let mut reports = Vec::with_capacity(jobs.len());
            let mut failed = false;
            for (job, r) in jobs.iter().zip(verify_jobs(&jobs, &panel, EvalConfig::default(), &opts)) {
                match r {
                    Ok(r) => {
                        failed |= !r.pass;
                        reports.push(r);
                    }
                    Err(e @ (Error::NonConvergence { .. } | Error::NonFiniteIntegrand { .. } | Error::Bracket { .. })) => {
                        return Err(Failure { exit: Exit::Fail, message: format!("{}: {e}", job.id) });
                    }
                    Err(e) => return Err(Failure::usage(format!("{}: {e}", job.id))),
                }
            }
            match format {
                ReportFormat::Text => output::write_text(out, &reports)?,
                ReportFormat::Csv => output::write_csv(&mut *out, &reports).map_err(csv_failure)?,
                ReportFormat::Json => output::write_json(&mut *out, &reports)?,
            }
            Ok(if failed { Exit::Fail } else { Exit::Ok })
        }
    }
}

fn write_table<W: Write>(out: W, format: TableFormat, rows: &[table::Row]) -> io::Result<()> {
    match format {
        TableFormat::Csv => table::write_csv(out, rows),
        TableFormat::Json => table::write_json(out, rows),
    }
}

fn csv_failure(e: csv::Error) -> Failure {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => e.into(),
        other => Failure { exit: Exit::Io, message: format!("CSV output failed: {other:?}") },
    }
}

fn parse_id(name: &str) -> Result<IdentityId, Failure> {
    name.parse()
        .map_err(|_| Failure::usage(format!("unknown identity `{name}` (see verify --list-identities)")))
}

fn parse_perturbation(s: &str) -> Result<(IdentityId, f64), Failure> {
    let (name, delta) = s.split_once('=').ok_or_else(|| Failure::usage(format!("--perturb expects ID=DELTA (got `{s}`)")))?;
    let delta: f64 = delta
        .parse()
        .ok()
        .filter(|d: &f64| d.is_finite())
        .ok_or_else(|| Failure::usage(format!("--perturb: `{delta}` is not a finite number")))?;
    Ok((parse_id(name)?, delta))
}

fn panel_for(p: Option<f64>, q: Option<f64>) -> Result<Panel, Failure> {
    let mut panel = Panel::default();
    if let Some(p) = p {
        // Validates p through the pair (p*, p) used by the exponent identities.
        ParamPair::new(p, p.max(2.0))?;
        panel.exponents = vec![p];
        if let Some(q) = q {
            panel.pairs = vec![pair(p, q)?];
        }
    }
    Ok(panel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("gtrig").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn pi_and_guard() {
        assert_eq!(run_args(&["pi", "--p", "2", "--q", "2"]), (0, "3.1415926535897931\n".into(), String::new()));
        let (code, _, err) = run_args(&["pi", "--p", "1", "--q", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("p must exceed 1"), "{err}");
    }

    #[test]
    fn usage_errors_and_help() {
        assert_eq!(run_args(&[]).0, 2);
        assert_eq!(run_args(&["pi", "--p", "x", "--q", "2"]).0, 2);
        assert_eq!(run_args(&["verify"]).0, 2);
        assert_eq!(run_args(&["verify", "--identity", "dbl-2-2", "--all"]).0, 2);
        assert_eq!(run_args(&["verify", "--identity", "dbl-2-2", "--perturb", "dbl-2-2"]).0, 2);
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }

    #[test]
    fn negative_arguments() {
        let (code, out, _) = run_args(&["eval", "--p", "2", "--q", "2", "--fn", "sin", "--x", "-0.5"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim().parse::<f64>().unwrap(), -(0.5f64.sin()));
    }

    #[test]
    fn defaults_come_from_one_record() {
        let cli = Cli::try_parse_from(["gtrig", "verify", "--all"]).unwrap();
        let Command::Verify { samples, tol, seed, format, .. } = cli.command else { panic!() };
        assert_eq!((samples, tol, seed, format), (DEFAULTS.samples, DEFAULTS.tol, DEFAULTS.seed, DEFAULTS.report_format));
    }
}

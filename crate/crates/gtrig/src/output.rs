//! Number formatting and report rendering.

use std::io::Write;

use gtrig_core::IdentityReport;
use serde::Serialize;

/// `x` with 17 significant digits in the style of C's `%.17g`: fixed
/// notation for decimal exponents in `[−4, 17)`, scientific otherwise,
/// trailing zeros removed.
pub fn g17(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form always has an 'e'");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if (-4..17).contains(&exp) {
        trim_zeros(format!("{:.*}", (16 - exp) as usize, x))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa.to_string()), exp.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Flat record used for the CSV and JSON forms of a report.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRecord {
    pub id: String,
    pub param: Option<String>,
    pub instances: usize,
    pub samples: usize,
    pub max_abs_err: f64,
    pub argmax_x: f64,
    pub argmax_y: Option<f64>,
    pub max_rel_err: Option<f64>,
    pub tol: f64,
    pub pass: bool,
    pub elapsed_s: Option<f64>,
    pub diagnostic: Option<String>,
}

impl From<&IdentityReport> for ReportRecord {
    fn from(r: &IdentityReport) -> Self {
        ReportRecord {
            id: r.id.as_str().to_string(),
            param: r.param.clone(),
            instances: r.instances,
            samples: r.samples,
            max_abs_err: r.max_abs_err,
            argmax_x: r.argmax_x,
            argmax_y: r.argmax_y,
            max_rel_err: r.max_rel_err,
            tol: r.tol,
            pass: r.pass,
            elapsed_s: r.elapsed.map(|d| d.as_secs_f64()),
            diagnostic: r.diagnostic.clone(),
        }
    }
}

/// Aligned, human-readable table.
pub fn write_text<W: Write + ?Sized>(out: &mut W, reports: &[IdentityReport]) -> std::io::Result<()> {
    writeln!(
        out,
        "{:<16} {:<6} {:>8} {:>11} {:>22} {:>9} {:>9}  worst parameter",
        "identity", "result", "samples", "max_abs_err", "argmax", "tol", "time_s"
    )?;
    for r in reports {
        let at = match r.argmax_y {
            Some(y) => format!("({:.6}, {:.6})", r.argmax_x, y),
            None => format!("{:.10}", r.argmax_x),
        };
        writeln!(
            out,
            "{:<16} {:<6} {:>8} {:>11.3e} {:>22} {:>9.1e} {:>9.3}  {}",
            r.id.as_str(),
            if r.pass { "PASS" } else { "FAIL" },
            r.samples,
            r.max_abs_err,
            at,
            r.tol,
            r.elapsed.map_or(0.0, |d| d.as_secs_f64()),
            r.param.as_deref().unwrap_or("-"),
        )?;
        if let Some(d) = &r.diagnostic {
            writeln!(out, "  note: {d}")?;
        }
    }
    Ok(())
}

pub fn write_csv<W: Write>(out: W, reports: &[IdentityReport]) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    for r in reports {
        w.serialize(ReportRecord::from(r))?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(mut out: W, reports: &[IdentityReport]) -> std::io::Result<()> {
    let records: Vec<ReportRecord> = reports.iter().map(ReportRecord::from).collect();
    serde_json::to_writer_pretty(&mut out, &records)?;
    writeln!(out)
}

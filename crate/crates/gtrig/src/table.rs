//! Value tables over a uniform grid.

use std::io::Write;

use gtrig_core::{EvalConfig, ParamPair};
use serde::Serialize;

use crate::cache::evaluator;

/// Upper bound on the number of rows one request may produce.
pub const MAX_ROWS: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Function {
    Sin,
    Cos,
    Arcsin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRequest {
    pub pp: ParamPair,
    pub function: Function,
    pub from: f64,
    pub to: f64,
    pub step: f64,
    pub format: TableFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Row {
    pub x: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TableError {
    /// The request itself is malformed.
    Request(String),
    /// An evaluation failed.
    Eval(gtrig_core::Error),
}

impl std::fmt::Display for TableError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TableError::Request(m) => f.write_str(m),
            TableError::Eval(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for TableError {}

impl TableRequest {
    pub fn validate(&self) -> Result<usize, TableError> {
        let bad = |m: String| Err(TableError::Request(m));
        if !(self.from.is_finite() && self.to.is_finite() && self.step.is_finite()) {
            return bad("from, to and step must be finite".into());
        }
        if self.from >= self.to {
            return bad(format!("from ({}) must be less than to ({})", self.from, self.to));
        }
        if !(self.step > 0.0) {
            return bad(format!("step must be positive (got {})", self.step));
        }
        if self.step > self.to - self.from {
            return bad(format!("step ({}) exceeds the range width ({})", self.step, self.to - self.from));
        }
        if self.function == Function::Arcsin && (self.from < 0.0 || self.to > 1.0) {
            return bad("arcsin tables must lie within [0, 1]".into());
        }
        // Rows at from + i·step; the relative slack keeps an endpoint that is
        // an exact multiple of step despite rounding in the division.
        let n = ((self.to - self.from) / self.step * (1.0 + 1e-12)).floor();
        if !(n < MAX_ROWS as f64) {
            return bad(format!("the table would exceed {MAX_ROWS} rows"));
        }
        Ok(n as usize + 1)
    }

    pub fn grid(&self) -> Result<Vec<f64>, TableError> {
        let rows = self.validate()?;
        Ok((0..rows).map(|i| (self.from + i as f64 * self.step).min(self.to)).collect())
    }

    pub fn rows(&self) -> Result<Vec<Row>, TableError> {
        let g = evaluator(self.pp, &EvalConfig::default()).map_err(TableError::Eval)?;
        self.grid()?
            .into_iter()
            .map(|x| {
                let value = match self.function {
                    Function::Sin => g.sin(x).map(|v| v.value),
                    Function::Cos => g.cos(x).map(|v| v.value),
                    Function::Arcsin => g.arcsin(x),
                };
                value.map(|value| Row { x, value }).map_err(TableError::Eval)
            })
            .collect()
    }
}

/// CSV with an `x,value` header and LF line endings; `Display` for `f64`
/// gives the shortest decimal that parses back to the same bits.
pub fn write_csv<W: Write>(mut out: W, rows: &[Row]) -> std::io::Result<()> {
    writeln!(out, "x,value")?;
    for r in rows {
        writeln!(out, "{},{}", r.x, r.value)?;
    }
    out.flush()
}

pub fn write_json<W: Write>(mut out: W, rows: &[Row]) -> std::io::Result<()> {
    serde_json::to_writer(&mut out, rows)?;
    writeln!(out)?;
    out.flush()
}

//! Report rows and their CSV/JSON renderings.
//!
//! Floats are serialized with 17 significant digits in CSV, so parsing a
//! cell back yields the identical `f64`; JSON uses the shortest
//! round-tripping representation. Both renderings of one run therefore
//! carry identical numeric values.

use serde::Serialize;

use crate::config::OutputFormat;

/// 17 significant digits: exact round-trip for an `f64`.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Serialize, Debug, Clone)]
pub struct BasicRow {
    pub kind: String,
    pub n: u32,
    pub symbolic: String,
    pub q: f64,
    pub value: f64,
}

#[derive(Serialize, Debug, Clone)]
pub struct IdentityRow {
    pub identity: String,
    pub n_max: u32,
    pub passed: bool,
    pub residual: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct FockRow {
    pub kind: String,
    pub q: f64,
    pub dim: usize,
    pub relation: String,
    pub residual: f64,
    pub passed: bool,
}

#[derive(Serialize, Debug, Clone)]
pub struct EvolveRow {
    pub t: f64,
    pub m: usize,
    pub n: usize,
    pub re: f64,
    pub im: f64,
    pub abs: f64,
    pub phase: f64,
    pub freq_exact: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub freq_paper: Option<f64>,
}

#[derive(Serialize, Debug, Clone)]
pub struct LimitRow {
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub value: f64,
}

/// One line of CSV with no quoting; no field here ever contains a comma.
fn csv_line(fields: &[String]) -> String {
    fields.join(",")
}

pub trait CsvRow {
    fn header(&self) -> Vec<&'static str>;
    fn fields(&self) -> Vec<String>;
}

impl CsvRow for BasicRow {
    fn header(&self) -> Vec<&'static str> {
        vec!["kind", "n", "symbolic", "q", "value"]
    }
    fn fields(&self) -> Vec<String> {
        vec![
            self.kind.clone(),
            self.n.to_string(),
            self.symbolic.clone(),
            fmt_f64(self.q),
            fmt_f64(self.value),
        ]
    }
}

impl CsvRow for IdentityRow {
    fn header(&self) -> Vec<&'static str> {
        vec!["identity", "n_max", "passed", "residual"]
    }
    fn fields(&self) -> Vec<String> {
        vec![
            self.identity.clone(),
            self.n_max.to_string(),
            self.passed.to_string(),
            self.residual.clone(),
        ]
    }
}

impl CsvRow for FockRow {
    fn header(&self) -> Vec<&'static str> {
        vec!["kind", "q", "dim", "relation", "residual", "passed"]
    }
    fn fields(&self) -> Vec<String> {
        vec![
            self.kind.clone(),
            fmt_f64(self.q),
            self.dim.to_string(),
            self.relation.clone(),
            fmt_f64(self.residual),
            self.passed.to_string(),
        ]
    }
}

impl CsvRow for EvolveRow {
    fn header(&self) -> Vec<&'static str> {
        let mut h = vec!["t", "m", "n", "re", "im", "abs", "phase", "freq_exact"];
        if self.freq_paper.is_some() {
            h.push("freq_paper");
        }
        h
    }
    fn fields(&self) -> Vec<String> {
        let mut f = vec![
            fmt_f64(self.t),
            self.m.to_string(),
            self.n.to_string(),
            fmt_f64(self.re),
            fmt_f64(self.im),
            fmt_f64(self.abs),
            fmt_f64(self.phase),
            fmt_f64(self.freq_exact),
        ];
        if let Some(p) = self.freq_paper {
            f.push(fmt_f64(p));
        }
        f
    }
}

impl CsvRow for LimitRow {
    fn header(&self) -> Vec<&'static str> {
        vec!["check", "q", "n", "value"]
    }
    fn fields(&self) -> Vec<String> {
        vec![
            self.check.clone(),
            self.q.map(fmt_f64).unwrap_or_default(),
            self.n.map(|n| n.to_string()).unwrap_or_default(),
            fmt_f64(self.value),
        ]
    }
}

/// Renders rows in the requested format, trailing newline included.
pub fn render<R: CsvRow + Serialize>(rows: &[R], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut out = String::new();
            if let Some(first) = rows.first() {
                out.push_str(&csv_line(
                    &first
                        .header()
                        .iter()
                        .map(|s| s.to_string())
                        .collect::<Vec<_>>(),
                ));
                out.push('\n');
            }
            for row in rows {
                out.push_str(&csv_line(&row.fields()));
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => {
            let mut out = serde_json::to_string_pretty(rows).expect("rows serialize");
            out.push('\n');
            out
        }
    }
}

//! Corpus scan: one record per graph6 line, computed on a worker pool and
//! emitted in input order.

use std::io::Write;
use std::time::Instant;

use pairdom_core::{canonical_pds, certify_bound, gamma_pr, Graph};
use rayon::prelude::*;
use serde::Serialize;

use crate::input::parse_line;
use crate::CliError;

/// Stable CSV header.
pub const CSV_HEADER: &str = "id,n,gamma_pr,bound_ok,is_petersen,cert_ok,ms";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub id: String,
    pub n: usize,
    pub gamma_pr: usize,
    /// `7 γ_pr <= 4n`.
    pub bound_ok: bool,
    pub is_petersen: bool,
    /// Certificate verdict; `None` when the graph is not connected cubic.
    pub cert_ok: Option<bool>,
    pub ms: u64,
}

impl ScanRecord {
    fn connected_cubic(&self) -> bool {
        self.cert_ok.is_some()
    }

    /// The 4n/7 bound fails on a connected cubic graph other than Petersen.
    pub fn is_unexpected_violation(&self) -> bool {
        self.connected_cubic() && !self.bound_ok && !self.is_petersen
    }
}

/// One row: a record or a per-line error message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanRow {
    Ok(ScanRecord),
    Error { id: String, message: String },
}

impl ScanRow {
    pub fn id(&self) -> &str {
        match self {
            ScanRow::Ok(r) => &r.id,
            ScanRow::Error { id, .. } => id,
        }
    }

    pub fn csv_line(&self) -> String {
        match self {
            ScanRow::Ok(r) => format!(
                "{},{},{},{},{},{},{}",
                r.id,
                r.n,
                r.gamma_pr,
                r.bound_ok,
                r.is_petersen,
                r.cert_ok.map_or(String::new(), |b| b.to_string()),
                r.ms
            ),
            ScanRow::Error { id, .. } => format!("{id},,,,,,"),
        }
    }
}

pub fn scan_graph(id: String, g: &Graph, timing: bool) -> Result<ScanRecord, CliError> {
    let start = Instant::now();
    let gamma = gamma_pr(g)?.value;
    let n = g.n();
    let cert_ok = if g.is_cubic() && g.is_connected() {
        let ties = canonical_pds(g)?;
        Some(certify_bound(g, &ties)?.verdict)
    } else {
        None
    };
    let ms = if timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    };
    Ok(ScanRecord {
        id,
        n,
        gamma_pr: gamma,
        bound_ok: 7 * gamma <= 4 * n,
        is_petersen: g.is_petersen(),
        cert_ok,
        ms,
    })
}

/// Scans every non-blank line of `text`. Ids are `source:line`.
pub fn scan_text(
    text: &str,
    source: &str,
    jobs: usize,
    timing: bool,
) -> Result<Vec<ScanRow>, CliError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Failed(e.to_string()))?;
    Ok(pool.install(|| {
        lines
            .par_iter()
            .map(|&(lineno, line)| {
                let id = format!("{source}:{lineno}");
                match parse_line(line).and_then(|g| scan_graph(id.clone(), &g, timing)) {
                    Ok(r) => ScanRow::Ok(r),
                    Err(e) => ScanRow::Error {
                        id,
                        message: e.to_string(),
                    },
                }
            })
            .collect()
    }))
}

pub fn write_csv(rows: &[ScanRow], out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.csv_line())?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub errors: usize,
    pub bound_violations: usize,
    pub petersen_violations: usize,
    pub unexpected_violations: usize,
    /// Connected cubic graphs other than Petersen without a certificate.
    pub uncertified: usize,
    /// Largest `γ_pr / n` as `(γ_pr, n, id)`.
    pub max_ratio: Option<(usize, usize, String)>,
}

impl Summary {
    pub fn of(rows: &[ScanRow]) -> Self {
        let records: Vec<&ScanRecord> = rows
            .iter()
            .filter_map(|r| match r {
                ScanRow::Ok(rec) => Some(rec),
                ScanRow::Error { .. } => None,
            })
            .collect();
        let cubic_violations = records
            .iter()
            .filter(|r| r.connected_cubic() && !r.bound_ok);
        let max_ratio = records
            .iter()
            .filter(|r| r.n > 0)
            .fold(None::<&ScanRecord>, |best, r| match best {
                Some(b) if r.gamma_pr * b.n <= b.gamma_pr * r.n => Some(b),
                _ => Some(r),
            })
            .map(|r| (r.gamma_pr, r.n, r.id.clone()));
        Summary {
            graphs: rows.len(),
            errors: rows.len() - records.len(),
            bound_violations: cubic_violations.clone().count(),
            petersen_violations: cubic_violations.filter(|r| r.is_petersen).count(),
            unexpected_violations: records
                .iter()
                .filter(|r| r.is_unexpected_violation())
                .count(),
            uncertified: records
                .iter()
                .filter(|r| r.cert_ok == Some(false) && !r.is_petersen)
                .count(),
            max_ratio,
        }
    }

    pub fn write(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(out, "graphs: {}", self.graphs)?;
        writeln!(out, "errors: {}", self.errors)?;
        writeln!(
            out,
            "bound_violations: {} (petersen: {}, other: {})",
            self.bound_violations, self.petersen_violations, self.unexpected_violations
        )?;
        writeln!(out, "uncertified: {}", self.uncertified)?;
        match &self.max_ratio {
            Some((g, n, id)) => writeln!(
                out,
                "max_ratio: {g}/{n} = {:.4} at {id} (4/7 = {:.4})",
                *g as f64 / *n as f64,
                4.0 / 7.0
            ),
            None => writeln!(out, "max_ratio: none"),
        }
    }
}

use std::io::Write;

use serde::{Deserialize, Serialize};

use super::config::{Format, Model};
use crate::analysis::Strategy;
use crate::error::Result;

/// A measured value against its threshold.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditFlag {
    pub value: f64,
    pub threshold: f64,
    pub ok: bool,
}

impl AuditFlag {
    /// `ok` when `value <= threshold`.
    pub fn at_most(value: f64, threshold: f64) -> Self {
        Self {
            value,
            threshold,
            ok: value <= threshold,
        }
    }

    /// `ok` when `value < threshold`.
    pub fn below(value: f64, threshold: f64) -> Self {
        Self {
            value,
            threshold,
            ok: value < threshold,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DensityStatus {
    Passed,
    Violated,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityRecord {
    pub status: DensityStatus,
    pub c: f64,
    pub smax: usize,
    pub worst_edges: Option<u64>,
    pub worst_size: Option<usize>,
    pub sets_enumerated: Option<u64>,
}

/// One measured trial. `null` marks a measurement that does not apply to the
/// run (or timing that was not requested).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub model: Model,
    pub r: u32,
    pub n: usize,
    /// Pairing degree, or out-degree of the k-out graph in adversarial runs.
    pub d: Option<usize>,
    pub trial: usize,
    /// Seed the graph was generated from.
    pub seed: u64,
    pub strategy: Option<Strategy>,
    pub fell_back: Option<bool>,
    /// Largest monochromatic component per color.
    pub max_component: Vec<usize>,
    pub max_fraction: f64,
    pub estar: Option<usize>,
    pub peel_iterations: Option<usize>,
    pub path_audit: Option<AuditFlag>,
    pub height_audit: Option<AuditFlag>,
    pub order_audit: Option<AuditFlag>,
    pub estar_audit: Option<AuditFlag>,
    pub majority_color: Option<u32>,
    pub majority_edges: Option<usize>,
    pub density: Option<DensityRecord>,
    /// Cycle length guaranteed at `k = smax`, when the hypothesis holds.
    pub cycle_floor: Option<f64>,
    pub cycle_length: Option<usize>,
    pub wall_time_ms: Option<u64>,
}

impl RunRecord {
    pub fn max(&self) -> usize {
        self.max_component.iter().copied().max().unwrap_or(0)
    }
}

const CSV_HEADER: [&str; 33] = [
    "model",
    "r",
    "n",
    "d",
    "trial",
    "seed",
    "strategy",
    "fell_back",
    "max_component",
    "max_fraction",
    "estar",
    "peel_iterations",
    "path_max",
    "path_threshold",
    "path_ok",
    "height_max",
    "height_threshold",
    "height_ok",
    "order_max",
    "order_threshold",
    "order_ok",
    "estar_threshold",
    "estar_ok",
    "majority_color",
    "majority_edges",
    "density_status",
    "density_c",
    "smax",
    "worst_edges",
    "worst_size",
    "cycle_floor",
    "cycle_length",
    "wall_time_ms",
];

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn csv_row(rec: &RunRecord) -> Vec<String> {
    let flag = |f: Option<AuditFlag>| -> [String; 3] {
        [
            opt(f.map(|f| f.value)),
            opt(f.map(|f| f.threshold)),
            opt(f.map(|f| f.ok)),
        ]
    };
    let [path_max, path_threshold, path_ok] = flag(rec.path_audit);
    let [height_max, height_threshold, height_ok] = flag(rec.height_audit);
    let [order_max, order_threshold, order_ok] = flag(rec.order_audit);
    let [_, estar_threshold, estar_ok] = flag(rec.estar_audit);
    let density = rec.density.as_ref();
    vec![
        rec.model.to_string(),
        rec.r.to_string(),
        rec.n.to_string(),
        opt(rec.d),
        rec.trial.to_string(),
        rec.seed.to_string(),
        opt(rec.strategy),
        opt(rec.fell_back),
        rec.max_component
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(";"),
        rec.max_fraction.to_string(),
        opt(rec.estar),
        opt(rec.peel_iterations),
        path_max,
        path_threshold,
        path_ok,
        height_max,
        height_threshold,
        height_ok,
        order_max,
        order_threshold,
        order_ok,
        estar_threshold,
        estar_ok,
        opt(rec.majority_color),
        opt(rec.majority_edges),
        opt(density.map(|d| {
            serde_json::to_value(d.status)
                .ok()
                .and_then(|v| v.as_str().map(String::from))
                .unwrap_or_default()
        })),
        opt(density.map(|d| d.c)),
        opt(density.map(|d| d.smax)),
        opt(density.and_then(|d| d.worst_edges)),
        opt(density.and_then(|d| d.worst_size)),
        opt(rec.cycle_floor),
        opt(rec.cycle_length),
        opt(rec.wall_time_ms),
    ]
}

/// Serialized record sink: JSON lines or CSV with a header row.
pub enum RecordWriter<W: Write> {
    Json(W),
    Csv(Box<csv::Writer<W>>),
}

impl<W: Write> RecordWriter<W> {
    pub fn new(out: W, format: Format) -> Result<Self> {
        Ok(match format {
            Format::Json => RecordWriter::Json(out),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(CSV_HEADER)?;
                RecordWriter::Csv(Box::new(w))
            }
        })
    }

    pub fn write(&mut self, rec: &RunRecord) -> Result<()> {
        match self {
            RecordWriter::Json(w) => {
                serde_json::to_writer(&mut *w, rec)?;
                w.write_all(b"\n")?;
            }
            RecordWriter::Csv(w) => w.write_record(csv_row(rec))?,
        }
        Ok(())
    }

    pub fn flush(&mut self) -> Result<()> {
        match self {
            RecordWriter::Json(w) => w.flush()?,
            RecordWriter::Csv(w) => w.flush()?,
        }
        Ok(())
    }
}

/// Reads records back from JSON lines.
pub fn read_records<R: std::io::BufRead>(input: R) -> Result<Vec<RunRecord>> {
    let mut out = Vec::new();
    for line in input.lines() {
        let line = line?;
        if !line.trim().is_empty() {
            out.push(serde_json::from_str(&line)?);
        }
    }
    Ok(out)
}

use std::io::Write;

use serde::Serialize;

use super::config::Model;
use super::record::RunRecord;
use crate::analysis::Strategy;
use crate::error::Result;

/// Median of a nonempty sample; the mean of the two middle values for even
/// sizes.
pub fn median(values: &[f64]) -> f64 {
    assert!(!values.is_empty(), "median of an empty sample");
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let k = v.len();
    if k % 2 == 1 {
        v[k / 2]
    } else {
        (v[k / 2 - 1] + v[k / 2]) / 2.0
    }
}

/// Least-squares slope of `ln y` against `ln x`. `None` with fewer than two
/// distinct `x` or a non-positive value.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.iter().any(|&(x, y)| x <= 0.0 || y <= 0.0) {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx <= 0.0 {
        None
    } else {
        Some(sxy / sxx)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SummaryRow {
    pub model: Model,
    pub r: u32,
    pub n: usize,
    pub strategy: Option<Strategy>,
    pub trials: usize,
    /// Median over trials of the largest monochromatic component.
    pub median_max_component: f64,
    pub median_max_fraction: f64,
    pub median_estar: Option<f64>,
    pub audit_failures: usize,
    pub min_cycle_length: Option<usize>,
    /// Slope of ln(median max component) against ln n over this row's
    /// (model, r, strategy) group.
    pub fitted_exponent: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Summary {
    pub rows: Vec<SummaryRow>,
}

impl Summary {
    /// Fitted exponent of the group with this strategy (`None` for the
    /// constructive colorings).
    pub fn exponent(&self, strategy: Option<Strategy>) -> Option<f64> {
        self.rows
            .iter()
            .find(|r| r.strategy == strategy)
            .and_then(|r| r.fitted_exponent)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "model",
            "r",
            "n",
            "strategy",
            "trials",
            "median_max_component",
            "median_max_fraction",
            "median_estar",
            "audit_failures",
            "min_cycle_length",
            "fitted_exponent",
        ])?;
        let opt = |x: Option<String>| x.unwrap_or_default();
        for row in &self.rows {
            w.write_record([
                row.model.to_string(),
                row.r.to_string(),
                row.n.to_string(),
                opt(row.strategy.map(|s| s.to_string())),
                row.trials.to_string(),
                row.median_max_component.to_string(),
                row.median_max_fraction.to_string(),
                opt(row.median_estar.map(|x| x.to_string())),
                row.audit_failures.to_string(),
                opt(row.min_cycle_length.map(|x| x.to_string())),
                opt(row.fitted_exponent.map(|x| x.to_string())),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

fn failed_audits(rec: &RunRecord) -> bool {
    [rec.path_audit, rec.height_audit, rec.order_audit, rec.estar_audit]
        .iter()
        .flatten()
        .any(|f| !f.ok)
}

/// Summary computed from records alone, grouped by (model, r, strategy, n)
/// in order of first appearance.
pub fn summarize(records: &[RunRecord]) -> Summary {
    type Key = (Model, u32, Option<Strategy>, usize);
    let mut keys: Vec<Key> = Vec::new();
    for rec in records {
        let key = (rec.model, rec.r, rec.strategy, rec.n);
        if !keys.contains(&key) {
            keys.push(key);
        }
    }
    let mut rows: Vec<SummaryRow> = keys
        .iter()
        .map(|&(model, r, strategy, n)| {
            let group: Vec<&RunRecord> = records
                .iter()
                .filter(|x| (x.model, x.r, x.strategy, x.n) == (model, r, strategy, n))
                .collect();
            let estars: Vec<f64> = group.iter().filter_map(|x| x.estar).map(|e| e as f64).collect();
            SummaryRow {
                model,
                r,
                n,
                strategy,
                trials: group.len(),
                median_max_component: median(&group.iter().map(|x| x.max() as f64).collect::<Vec<_>>()),
                median_max_fraction: median(&group.iter().map(|x| x.max_fraction).collect::<Vec<_>>()),
                median_estar: (!estars.is_empty()).then(|| median(&estars)),
                audit_failures: group.iter().filter(|x| failed_audits(x)).count(),
                min_cycle_length: group.iter().filter_map(|x| x.cycle_length).min(),
                fitted_exponent: None,
            }
        })
        .collect();
    let groups: Vec<(Model, u32, Option<Strategy>)> = rows.iter().map(|r| (r.model, r.r, r.strategy)).collect();
    for g in &groups {
        let points: Vec<(f64, f64)> = rows
            .iter()
            .filter(|r| (r.model, r.r, r.strategy) == *g)
            .map(|r| (r.n as f64, r.median_max_component))
            .collect();
        let slope = loglog_slope(&points);
        for row in rows.iter_mut().filter(|r| (r.model, r.r, r.strategy) == *g) {
            row.fitted_exponent = slope;
        }
    }
    Summary { rows }
}

use std::io::Write;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::config::{ExperimentConfig, Model};
use super::record::{AuditFlag, DensityRecord, DensityStatus, RecordWriter, RunRecord};
use super::summary::{summarize, Summary};
use crate::analysis::{
    adversarial_color, find_long_cycle, gamma_kout, gamma_regular, kout_audit, local_density_audit,
    majority_subgraph, mono_stats, path_length_audit,
};
use crate::coloring::{color_hamilton, color_kout};
use crate::error::{Error, Result};
use crate::generators::{hamilton_sum, kout_sum, pairing_model, Seed};
use crate::graph::{EdgeColoring, MultiGraph};

#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub records: Vec<RunRecord>,
    pub summary: Summary,
    /// The stop flag was raised; `records` holds the completed trials.
    pub interrupted: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Experiment,
    Adversarial,
}

/// Seed of the graph for trial `trial` at size `n`.
pub fn trial_seed(master: Seed, n: usize, trial: usize) -> Seed {
    master.derive(&[n as u64, trial as u64])
}

fn base_record(cfg: &ExperimentConfig, n: usize, trial: usize, seed: Seed) -> RunRecord {
    RunRecord {
        model: cfg.model,
        r: cfg.r,
        n,
        d: None,
        trial,
        seed: seed.0,
        strategy: None,
        fell_back: None,
        max_component: Vec::new(),
        max_fraction: 0.0,
        estar: None,
        peel_iterations: None,
        path_audit: None,
        height_audit: None,
        order_audit: None,
        estar_audit: None,
        majority_color: None,
        majority_edges: None,
        density: None,
        cycle_floor: None,
        cycle_length: None,
        wall_time_ms: None,
    }
}

fn fill_mono(rec: &mut RunRecord, g: &MultiGraph, coloring: &EdgeColoring, r: u32) -> Result<()> {
    let stats = mono_stats(g, coloring, r)?;
    rec.max_fraction = stats.max_fraction;
    rec.max_component = stats.max_component;
    Ok(())
}

fn experiment_trial(cfg: &ExperimentConfig, n: usize, trial: usize) -> Result<Vec<RunRecord>> {
    let seed = trial_seed(cfg.seed, n, trial);
    let r = cfg.r;
    let mut rec = base_record(cfg, n, trial, seed);
    match cfg.model {
        Model::HamiltonSum => {
            let (g, decomp) = hamilton_sum(n, r as usize, seed)?;
            let hc = color_hamilton(&decomp, r as usize, cfg.hamilton)?;
            fill_mono(&mut rec, &g, &hc.coloring, r)?;
            let audit = path_length_audit(&decomp, &hc)?;
            rec.estar = Some(hc.estar.len());
            rec.path_audit = Some(AuditFlag::at_most(audit.max() as f64, audit.threshold));
            Ok(vec![rec])
        }
        Model::Kout => {
            let (g, digraphs) = kout_sum(n, r as usize, seed)?;
            let kc = color_kout(&digraphs, r as usize, cfg.kout)?;
            fill_mono(&mut rec, &g, &kc.coloring, r)?;
            let audit = kout_audit(&digraphs, &kc)?;
            rec.estar = Some(audit.estar);
            rec.peel_iterations = Some(kc.peel_iterations);
            rec.height_audit = Some(AuditFlag::at_most(audit.max_height as f64, audit.height_threshold));
            rec.order_audit = Some(AuditFlag::at_most(audit.max_order as f64, audit.order_threshold));
            rec.estar_audit = Some(AuditFlag::below(audit.estar as f64, audit.estar_threshold));
            Ok(vec![rec])
        }
        Model::Pairing => {
            let d = cfg.d.unwrap_or(2 * r as usize);
            let g = pairing_model(n, d, seed)?;
            cfg.strategies
                .iter()
                .enumerate()
                .map(|(si, &strategy)| {
                    let ac = adversarial_color(&g, r, strategy, seed.derive(&[1 + si as u64]))?;
                    let mut rec = rec.clone();
                    rec.d = Some(d);
                    rec.strategy = Some(strategy);
                    rec.fell_back = Some(ac.fell_back);
                    fill_mono(&mut rec, &g, &ac.coloring, r)?;
                    Ok(rec)
                })
                .collect()
        }
    }
}

fn adversarial_trial(cfg: &ExperimentConfig, n: usize, trial: usize) -> Result<Vec<RunRecord>> {
    let seed = trial_seed(cfg.seed, n, trial);
    let r = cfg.r;
    let (g, d, gamma) = match cfg.model {
        Model::Pairing => {
            let d = 2 * r as usize + 1;
            (pairing_model(n, d, seed)?, d, gamma_regular(r)?)
        }
        Model::Kout => {
            let k = r as usize + 1;
            (kout_sum(n, k, seed)?.0, k, gamma_kout(r)?)
        }
        Model::HamiltonSum => {
            return Err(Error::Config("adversarial runs need model = pairing or kout".into()));
        }
    };
    let floor = gamma.bound_at(cfg.smax as f64)?.guaranteed();
    let mut out = Vec::with_capacity(cfg.strategies.len());
    for (si, &strategy) in cfg.strategies.iter().enumerate() {
        let ac = adversarial_color(&g, r, strategy, seed.derive(&[1 + si as u64]))?;
        let mut rec = base_record(cfg, n, trial, seed);
        rec.d = Some(d);
        rec.strategy = Some(strategy);
        rec.fell_back = Some(ac.fell_back);
        fill_mono(&mut rec, &g, &ac.coloring, r)?;

        let majority = majority_subgraph(&g, &ac.coloring, r)?;
        let h = &majority.subgraph.graph;
        rec.majority_color = Some(majority.color);
        rec.majority_edges = Some(h.m());
        rec.density = Some(match local_density_audit(h, gamma.c2, cfg.smax, cfg.density_budget) {
            Ok(a) => DensityRecord {
                status: if a.passed {
                    DensityStatus::Passed
                } else {
                    DensityStatus::Violated
                },
                c: gamma.c2,
                smax: cfg.smax,
                worst_edges: Some(a.worst_edges),
                worst_size: Some(a.worst_size),
                sets_enumerated: Some(a.sets_enumerated),
            },
            Err(Error::BudgetExceeded { .. }) => DensityRecord {
                status: DensityStatus::BudgetExceeded,
                c: gamma.c2,
                smax: cfg.smax,
                worst_edges: None,
                worst_size: None,
                sets_enumerated: None,
            },
            Err(e) => return Err(e),
        });
        rec.cycle_floor = floor;
        let cycle = find_long_cycle(h, cfg.search, seed.derive(&[101 + si as u64]));
        if let Some(c) = &cycle {
            if !c.is_valid_in(h) {
                return Err(Error::Contract("cycle search returned an invalid cycle".into()));
            }
        }
        rec.cycle_length = Some(cycle.map_or(0, |c| c.len()));
        out.push(rec);
    }
    Ok(out)
}

fn run<W: Write>(
    cfg: &ExperimentConfig,
    kind: Kind,
    stop: &AtomicBool,
    mut sink: Option<&mut RecordWriter<W>>,
) -> Result<RunOutcome> {
    cfg.validate()?;
    if kind == Kind::Adversarial {
        let expected = 2 * cfg.r as usize + 1;
        if cfg.model == Model::Pairing && cfg.d.is_some_and(|d| d != expected) {
            return Err(Error::Config(format!("adversarial pairing runs use d = 2r + 1 = {expected}")));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    let mut records = Vec::new();
    let mut interrupted = false;
    for &n in &cfg.n_grid {
        let batch: Vec<Option<Result<Vec<RunRecord>>>> = pool.install(|| {
            (0..cfg.trials)
                .into_par_iter()
                .map(|trial| {
                    if stop.load(Ordering::SeqCst) {
                        return None;
                    }
                    let start = Instant::now();
                    let result = match kind {
                        Kind::Experiment => experiment_trial(cfg, n, trial),
                        Kind::Adversarial => adversarial_trial(cfg, n, trial),
                    };
                    Some(result.map(|mut recs| {
                        if cfg.timing {
                            let ms = start.elapsed().as_millis() as u64;
                            recs.iter_mut().for_each(|r| r.wall_time_ms = Some(ms));
                        }
                        recs
                    }))
                })
                .collect()
        });
        let mut failure = None;
        for item in batch {
            match item {
                Some(Ok(recs)) => {
                    for rec in recs {
                        if let Some(w) = sink.as_deref_mut() {
                            w.write(&rec)?;
                        }
                        records.push(rec);
                    }
                }
                Some(Err(e)) => {
                    failure.get_or_insert(e);
                }
                None => interrupted = true,
            }
        }
        if let Some(w) = sink.as_deref_mut() {
            w.flush()?;
        }
        if let Some(e) = failure {
            return Err(e);
        }
        if interrupted || stop.load(Ordering::SeqCst) {
            interrupted = true;
            break;
        }
    }
    let summary = summarize(&records);
    Ok(RunOutcome {
        records,
        summary,
        interrupted,
    })
}

/// Generate, color, measure and audit every `(n, trial)` of the grid.
///
/// Hamilton sums and k-out graphs use their constructive colorings; pairing
/// graphs (degree `d`, default `2r`) get every configured strategy. Records
/// reach `sink` in `(n, trial)` order, flushed after each `n`.
pub fn run_experiment<W: Write>(
    cfg: &ExperimentConfig,
    stop: &AtomicBool,
    sink: Option<&mut RecordWriter<W>>,
) -> Result<RunOutcome> {
    run(cfg, Kind::Experiment, stop, sink)
}

/// For each strategy: color a pairing graph of degree `2r+1` (or an
/// `(r+1)`-out graph), take the majority color, audit its local density at
/// `smax`, and search it for a long cycle.
pub fn run_adversarial<W: Write>(
    cfg: &ExperimentConfig,
    stop: &AtomicBool,
    sink: Option<&mut RecordWriter<W>>,
) -> Result<RunOutcome> {
    run(cfg, Kind::Adversarial, stop, sink)
}

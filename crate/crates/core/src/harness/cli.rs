use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use super::config::{ExperimentConfig, Format};
use super::record::RecordWriter;
use super::runner::{run_adversarial, run_experiment, RunOutcome};
use crate::analysis::{
    adversarial_color, gamma_kout, gamma_regular, local_density_audit, majority_subgraph, mono_stats,
    MonoStats, DEFAULT_DENSITY_BUDGET,
};
use crate::coloring::{color_hamilton, color_kout, HamiltonParams, KoutParams};
use crate::error::{Error, Result};
use crate::generators::{hamilton_sum, kout_sum, pairing_model, simple_regular, Seed};
use crate::graph::{
    read_coloring, read_graph, write_coloring, write_graph, EdgeColoring, FunctionalDigraph,
    HamiltonDecomposition, MultiGraph,
};

#[derive(Debug, Parser)]
#[command(name = "ramsey-regular", version, about = "Monochromatic components of edge-colored random regular and k-out graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Master seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads for trial-level parallelism.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Report format.
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GenModel {
    Pairing,
    Simple,
    HamiltonSum,
    Kout,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Hamilton,
    Kout,
    UniformRandom,
    GreedyBalanced,
    OrientationSplit,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BoundModel {
    Regular,
    Kout,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a graph and write it in the `n m` / `u v` text format.
    Generate {
        #[arg(long, value_enum)]
        model: GenModel,
        #[arg(long)]
        n: usize,
        /// Degree for `pairing` and `simple`.
        #[arg(long)]
        d: Option<usize>,
        /// Number of Hamilton cycles or functional digraphs.
        #[arg(long)]
        r: Option<usize>,
        /// Rejection-sampling attempts for `simple`.
        #[arg(long, default_value_t = 10_000)]
        attempts: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Color a graph file; writes one color per line plus `<out>.json`.
    Color {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Exhaustive local density audit of a graph (or of its majority color).
    Audit {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 1.125)]
        c: f64,
        #[arg(long, default_value_t = 10)]
        smax: usize,
        #[arg(long, default_value_t = DEFAULT_DENSITY_BUDGET)]
        budget: u64,
        /// Audit the majority-color subgraph of this coloring instead.
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        r: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Constants and cycle-length bounds for r colors.
    Bound {
        #[arg(long, value_enum)]
        model: BoundModel,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: f64,
        /// Locality scale for the finite bound (defaults to δn).
        #[arg(long)]
        k: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Monte Carlo sweep from a config file.
    Experiment {
        #[arg(long)]
        config: PathBuf,
        /// Record per-trial wall time.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Adversarial coloring probes from a config file.
    Adversarial {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        common: Common,
    },
}

/// 0 ok, 2 config error, 3 contract violation, 1 anything else.
pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Config(_) => 2,
        Error::Contract(_) => 3,
        _ => 1,
    }
}

fn open_out(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn load_graph(path: &Path) -> Result<MultiGraph> {
    read_graph(BufReader::new(File::open(path)?))
}

fn sidecar(path: &Path, ext: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(ext);
    PathBuf::from(s)
}

fn emit<T: Serialize>(value: &T, common: &Common) -> Result<()> {
    let mut out = open_out(common.out.as_deref())?;
    match common.format.map(Format::from).unwrap_or_default() {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, value)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let serde_json::Value::Object(map) = serde_json::to_value(value)? else {
                return Err(Error::invalid("report is not a flat object"));
            };
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(map.keys())?;
            w.write_record(map.values().map(|v| match v {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Null => String::new(),
                serde_json::Value::Array(items) => items
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(";"),
                other => other.to_string(),
            }))?;
            w.flush()?;
        }
    }
    out.flush()?;
    Ok(())
}

fn generate(model: GenModel, n: usize, d: Option<usize>, r: Option<usize>, attempts: usize, common: &Common) -> Result<()> {
    let seed = Seed(common.seed.unwrap_or(1));
    let need = |x: Option<usize>, name: &str| x.ok_or_else(|| Error::Config(format!("--{name} is required for this model")));
    let g = match model {
        GenModel::Pairing => pairing_model(n, need(d, "d")?, seed)?,
        GenModel::Simple => simple_regular(n, need(d, "d")?, seed, attempts)?,
        GenModel::HamiltonSum => hamilton_sum(n, need(r, "r")?, seed)?.0,
        GenModel::Kout => kout_sum(n, need(r, "r")?, seed)?.0,
    };
    write_graph(open_out(common.out.as_deref())?, &g)
}

#[derive(Serialize)]
struct ColorReport {
    method: String,
    r: u32,
    n: usize,
    m: usize,
    block_sizes: Option<Vec<usize>>,
    estar: Option<usize>,
    stripped: Option<usize>,
    peeled: Option<usize>,
    peel_iterations: Option<usize>,
    fell_back: Option<bool>,
    mono: MonoStats,
}

fn color(graph: &Path, method: Method, r: u32, common: &Common) -> Result<()> {
    let g = load_graph(graph)?;
    let seed = Seed(common.seed.unwrap_or(1));
    let mut report = ColorReport {
        method: format!("{method:?}"),
        r,
        n: g.n(),
        m: g.m(),
        block_sizes: None,
        estar: None,
        stripped: None,
        peeled: None,
        peel_iterations: None,
        fell_back: None,
        mono: MonoStats {
            n: 0,
            max_component: Vec::new(),
            component_count: Vec::new(),
            max_fraction: 0.0,
        },
    };
    let coloring: EdgeColoring = match method {
        Method::Hamilton => {
            let decomp = HamiltonDecomposition::from_multigraph(&g, r as usize)?;
            let hc = color_hamilton(&decomp, r as usize, HamiltonParams::default())?;
            report.block_sizes = Some(hc.blocks.sizes());
            report.estar = Some(hc.estar.len());
            hc.coloring
        }
        Method::Kout => {
            let digraphs = FunctionalDigraph::split_sum(&g, r as usize)?;
            let kc = color_kout(&digraphs, r as usize, KoutParams::default())?;
            report.block_sizes = Some(kc.blocks.sizes());
            report.estar = Some(kc.estar.len());
            report.stripped = Some(kc.stripped);
            report.peeled = Some(kc.peeled);
            report.peel_iterations = Some(kc.peel_iterations);
            kc.coloring
        }
        other => {
            let strategy = match other {
                Method::UniformRandom => crate::analysis::Strategy::UniformRandom,
                Method::GreedyBalanced => crate::analysis::Strategy::GreedyBalanced,
                _ => crate::analysis::Strategy::OrientationSplit,
            };
            report.method = strategy.to_string();
            let ac = adversarial_color(&g, r, strategy, seed)?;
            report.fell_back = Some(ac.fell_back);
            ac.coloring
        }
    };
    if let Method::Hamilton | Method::Kout = method {
        report.method = format!("{method:?}").to_lowercase();
    }
    report.mono = mono_stats(&g, &coloring, r)?;
    write_coloring(open_out(common.out.as_deref())?, &coloring)?;
    let mut meta: Box<dyn Write> = match &common.out {
        Some(p) => Box::new(BufWriter::new(File::create(sidecar(p, ".json"))?)),
        None => Box::new(io::stderr().lock()),
    };
    serde_json::to_writer_pretty(&mut meta, &report)?;
    writeln!(meta)?;
    meta.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct AuditReport {
    c: f64,
    smax: usize,
    worst_ratio: f64,
    worst_edges: u64,
    worst_size: usize,
    witness: Vec<usize>,
    sets_enumerated: u64,
    passed: bool,
    majority_color: Option<u32>,
}

#[allow(clippy::too_many_arguments)]
fn audit(graph: &Path, c: f64, smax: usize, budget: u64, coloring: Option<&Path>, r: u32, common: &Common) -> Result<()> {
    let g = load_graph(graph)?;
    let (target, majority_color) = match coloring {
        Some(p) => {
            let col = read_coloring(BufReader::new(File::open(p)?), Some(r))?;
            let maj = majority_subgraph(&g, &col, r)?;
            (maj.subgraph.graph, Some(maj.color))
        }
        None => (g, None),
    };
    let a = local_density_audit(&target, c, smax, budget)?;
    emit(
        &AuditReport {
            c,
            smax,
            worst_ratio: a.worst_ratio,
            worst_edges: a.worst_edges,
            worst_size: a.worst_size,
            witness: a.witness,
            sets_enumerated: a.sets_enumerated,
            passed: a.passed,
            majority_color,
        },
        common,
    )
}

#[derive(Serialize)]
struct BoundReport {
    model: &'static str,
    r: u32,
    n: f64,
    c1: f64,
    c2: f64,
    d: f64,
    delta: f64,
    gamma_n: f64,
    k: f64,
    bound: f64,
    hypothesis_holds: bool,
}

fn bound(model: BoundModel, r: u32, n: f64, k: Option<f64>, common: &Common) -> Result<()> {
    let (name, gamma) = match model {
        BoundModel::Regular => ("regular", gamma_regular(r)?),
        BoundModel::Kout => ("kout", gamma_kout(r)?),
    };
    let k = k.unwrap_or(gamma.delta * n);
    let b = gamma.bound_at(k)?;
    emit(
        &BoundReport {
            model: name,
            r,
            n,
            c1: gamma.c1,
            c2: gamma.c2,
            d: gamma.d,
            delta: gamma.delta,
            gamma_n: gamma.gamma_n(n),
            k,
            bound: b.value(),
            hypothesis_holds: b.guaranteed().is_some(),
        },
        common,
    )
}

fn load_config(path: &Path, timing: bool, common: &Common) -> Result<ExperimentConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    let mut cfg = ExperimentConfig::parse(&text)?;
    if let Some(s) = common.seed {
        cfg.seed = Seed(s);
    }
    if let Some(o) = &common.out {
        cfg.out = Some(o.display().to_string());
    }
    if let Some(j) = common.jobs {
        cfg.jobs = j;
    }
    if let Some(f) = common.format {
        cfg.format = f.into();
    }
    cfg.timing |= timing;
    cfg.validate()?;
    Ok(cfg)
}

fn sweep(cfg: &ExperimentConfig, adversarial: bool, stop: &AtomicBool) -> Result<RunOutcome> {
    let out = open_out(cfg.out.as_deref().map(Path::new))?;
    let mut sink = RecordWriter::new(out, cfg.format)?;
    let outcome = if adversarial {
        run_adversarial(cfg, stop, Some(&mut sink))?
    } else {
        run_experiment(cfg, stop, Some(&mut sink))?
    };
    sink.flush()?;
    match &cfg.out {
        Some(p) => {
            let file = File::create(sidecar(Path::new(p), ".summary.csv"))?;
            outcome.summary.write_csv(BufWriter::new(file))?;
        }
        None => outcome.summary.write_csv(io::stderr().lock())?,
    }
    if outcome.interrupted {
        eprintln!("interrupted: {} records written", outcome.records.len());
    }
    Ok(outcome)
}

/// Runs one parsed invocation. `stop` is polled between trials.
pub fn run(cli: Cli, stop: &AtomicBool) -> Result<()> {
    match cli.command {
        Command::Generate { model, n, d, r, attempts, common } => generate(model, n, d, r, attempts, &common),
        Command::Color { graph, method, r, common } => color(&graph, method, r, &common),
        Command::Audit { graph, c, smax, budget, coloring, r, common } => {
            audit(&graph, c, smax, budget, coloring.as_deref(), r, &common)
        }
        Command::Bound { model, r, n, k, common } => bound(model, r, n, k, &common),
        Command::Experiment { config, timing, common } => {
            sweep(&load_config(&config, timing, &common)?, false, stop).map(drop)
        }
        Command::Adversarial { config, timing, common } => {
            sweep(&load_config(&config, timing, &common)?, true, stop).map(drop)
        }
    }
}

/// Entry point of the binary: parses arguments, installs a Ctrl-C handler
/// that stops sweeps after the running trials, and maps errors to exit codes.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let stop = Arc::new(AtomicBool::new(false));
    let flag = Arc::clone(&stop);
    // a second handler cannot be installed in-process; ignore that case
    let _ = ctrlc::set_handler(move || flag.store(true, Ordering::SeqCst));
    match run(cli, &stop) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

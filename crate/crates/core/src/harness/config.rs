use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analysis::{CycleSearch, Strategy, DEFAULT_DENSITY_BUDGET};
use crate::coloring::{HamiltonParams, KoutParams};
use crate::error::{Error, Result};
use crate::generators::Seed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    HamiltonSum,
    Kout,
    Pairing,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::HamiltonSum => "hamilton-sum",
            Model::Kout => "kout",
            Model::Pairing => "pairing",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hamilton-sum" => Ok(Model::HamiltonSum),
            "kout" => Ok(Model::Kout),
            "pairing" => Ok(Model::Pairing),
            _ => Err(Error::Config(format!("unknown model {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Config(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub model: Model,
    pub r: u32,
    pub n_grid: Vec<usize>,
    pub trials: usize,
    pub seed: Seed,
    /// Colorings applied to pairing-model graphs and in adversarial runs.
    pub strategies: Vec<Strategy>,
    pub out: Option<String>,
    pub format: Format,
    pub jobs: usize,
    /// Pairing-model degree; `None` means `2r` for experiments and `2r + 1`
    /// for adversarial runs.
    pub d: Option<usize>,
    pub hamilton: HamiltonParams,
    pub kout: KoutParams,
    pub smax: usize,
    pub density_budget: u64,
    pub search: CycleSearch,
    /// Record wall-clock time per trial (makes output nondeterministic).
    pub timing: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            model: Model::HamiltonSum,
            r: 2,
            n_grid: vec![10_000],
            trials: 1,
            seed: Seed(1),
            strategies: Strategy::ALL.to_vec(),
            out: None,
            format: Format::Json,
            jobs: 1,
            d: None,
            hamilton: HamiltonParams::default(),
            kout: KoutParams::default(),
            smax: 100,
            density_budget: DEFAULT_DENSITY_BUDGET,
            search: CycleSearch::default(),
            timing: false,
        }
    }
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T>
where
    T::Err: fmt::Display,
{
    value
        .parse()
        .map_err(|e| Error::Config(format!("{key} = {value:?}: {e}")))
}

fn list<T: FromStr>(key: &str, value: &str) -> Result<Vec<T>>
where
    T::Err: fmt::Display,
{
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse(key, s))
        .collect()
}

/// Grid entries may be written `10000`, `10_000` or `1e4`.
fn count(key: &str, value: &str) -> Result<usize> {
    let v = value.replace('_', "");
    if let Ok(x) = v.parse::<usize>() {
        return Ok(x);
    }
    match v.parse::<f64>() {
        Ok(x) if x >= 0.0 && x.fract() == 0.0 && x < 1e15 => Ok(x as usize),
        _ => Err(Error::Config(format!("{key} = {value:?}: not a count"))),
    }
}

impl ExperimentConfig {
    /// Parses the flat `key = value` format; `#` starts a comment. Unknown
    /// keys are errors.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", idx + 1)))?;
            cfg.set(key.trim(), value.trim())?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "model" => self.model = parse(key, value)?,
            "r" => self.r = parse(key, value)?,
            "n" | "n_grid" => {
                self.n_grid = value
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| count(key, s))
                    .collect::<Result<_>>()?
            }
            "trials" => self.trials = count(key, value)?,
            "seed" => self.seed = Seed(parse(key, value)?),
            "strategies" => self.strategies = list(key, value)?,
            "out" => self.out = Some(value.to_string()),
            "format" => self.format = parse(key, value)?,
            "jobs" => self.jobs = parse(key, value)?,
            "d" => self.d = Some(parse(key, value)?),
            "hamilton_block_exponent" => self.hamilton.block_exponent = parse(key, value)?,
            "hamilton_path_exponent" => self.hamilton.path_exponent = parse(key, value)?,
            "kout_block_exponent" => self.kout.block_exponent = parse(key, value)?,
            "kout_peel_exponent" => self.kout.peel_exponent = parse(key, value)?,
            "kout_path_exponent" => self.kout.path_exponent = parse(key, value)?,
            "kout_order_exponent" => self.kout.order_exponent = parse(key, value)?,
            "kout_estar_exponent" => self.kout.estar_exponent = parse(key, value)?,
            "smax" => self.smax = count(key, value)?,
            "density_budget" => self.density_budget = count(key, value)? as u64,
            "restarts" => self.search.restarts = count(key, value)?,
            "steps_per_vertex" => self.search.steps_per_vertex = count(key, value)?,
            "timing" => self.timing = parse(key, value)?,
            _ => return Err(Error::Config(format!("unknown key {key:?}"))),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |m: String| Err(Error::Config(m));
        if self.r < 2 {
            return fail(format!("r must be at least 2, got {}", self.r));
        }
        if self.n_grid.is_empty() {
            return fail("n grid is empty".into());
        }
        if self.n_grid.windows(2).any(|w| w[0] >= w[1]) {
            return fail("n grid must be strictly increasing".into());
        }
        if self.trials == 0 {
            return fail("trials must be at least 1".into());
        }
        if self.jobs == 0 {
            return fail("jobs must be at least 1".into());
        }
        if self.strategies.is_empty() {
            return fail("strategy list is empty".into());
        }
        if self.smax == 0 {
            return fail("smax must be at least 1".into());
        }
        let min_n = self.n_grid[0];
        match self.model {
            Model::HamiltonSum if min_n < 3.max(self.r as usize) => {
                fail(format!("hamilton-sum needs n >= max(3, r), got {min_n}"))
            }
            Model::Kout if min_n < 2 => fail(format!("kout needs n >= 2, got {min_n}")),
            _ => Ok(()),
        }
    }
}

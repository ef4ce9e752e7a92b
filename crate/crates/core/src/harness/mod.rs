//! Experiment driver: flat config files, seeded Monte Carlo sweeps over an
//! `n` grid, JSON-lines or CSV records, median summaries with a log-log
//! exponent fit, and the command-line front end.

pub mod cli;
mod config;
mod record;
mod runner;
mod summary;

pub use config::{ExperimentConfig, Format, Model};
pub use record::{read_records, AuditFlag, DensityRecord, DensityStatus, RecordWriter, RunRecord};
pub use runner::{run_adversarial, run_experiment, trial_seed, RunOutcome};
pub use summary::{loglog_slope, median, summarize, Summary, SummaryRow};

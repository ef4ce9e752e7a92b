//! Monte Carlo sweep for both constructive colorings with a log-log fit of
//! the median largest monochromatic component against n.

use std::io;
use std::sync::atomic::AtomicBool;

use ramsey_regular::harness::{run_experiment, ExperimentConfig, Model};

fn main() -> ramsey_regular::Result<()> {
    for (model, expected) in [(Model::HamiltonSum, 0.7), (Model::Kout, 0.9)] {
        let cfg = ExperimentConfig::parse(&format!("model = {model}\nr = 2\nn = 1e3, 1e4, 1e5\ntrials = 5\nseed = 1"))?;
        let out = run_experiment::<Vec<u8>>(&cfg, &AtomicBool::new(false), None)?;
        println!("{model}: fitted exponent {:.3} (expected about {expected})", out.summary.exponent(None).unwrap());
        out.summary.write_csv(io::stdout().lock())?;
    }
    Ok(())
}

//! Color a (2r+1)-regular graph adversarially and look for a long cycle in the
//! majority color.

use std::sync::atomic::AtomicBool;

use ramsey_regular::harness::{run_adversarial, ExperimentConfig, Model};

fn main() -> ramsey_regular::Result<()> {
    let cfg = ExperimentConfig {
        model: Model::Pairing,
        r: 2,
        n_grid: vec![2000],
        trials: 2,
        smax: 8,
        ..ExperimentConfig::default()
    };
    let out = run_adversarial::<Vec<u8>>(&cfg, &AtomicBool::new(false), None)?;
    for rec in &out.records {
        let density = rec.density.as_ref().unwrap();
        println!(
            "trial {} {:<18} majority {} edges, density {:?} (worst {:?}/{:?}), cycle {:?}, floor {:?}",
            rec.trial,
            rec.strategy.unwrap().to_string(),
            rec.majority_edges.unwrap(),
            density.status,
            density.worst_edges,
            density.worst_size,
            rec.cycle_length,
            rec.cycle_floor,
        );
    }
    Ok(())
}

//! Color a sum of Hamilton cycles and report monochromatic components
//! against n^0.7.

use ramsey_regular::analysis::{mono_stats, path_length_audit};
use ramsey_regular::coloring::{color_hamilton, HamiltonParams};
use ramsey_regular::generators::{hamilton_sum, Seed};

fn main() -> ramsey_regular::Result<()> {
    let r = 3;
    for n in [10_000, 100_000] {
        let (g, decomp) = hamilton_sum(n, r, Seed(7))?;
        let hc = color_hamilton(&decomp, r, HamiltonParams::default())?;
        let stats = mono_stats(&g, &hc.coloring, r as u32)?;
        let paths = path_length_audit(&decomp, &hc)?;
        println!(
            "n={n:>6} r={r}: blocks {}, |E*| {}, max component per color {:?} (n^0.7 = {:.0}), \
             longest crossing run {} (threshold {:.1}, violations {})",
            hc.blocks.len(),
            hc.estar.len(),
            stats.max_component,
            (n as f64).powf(0.7),
            paths.max(),
            paths.threshold,
            paths.violations,
        );
    }
    Ok(())
}

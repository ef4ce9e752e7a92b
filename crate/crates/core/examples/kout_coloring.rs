//! Color a k-out graph: strip the cycles of the first digraph, peel its
//! large in-arborescences, pack the rest into blocks.

use ramsey_regular::analysis::{kout_audit, mono_stats};
use ramsey_regular::coloring::{color_kout, KoutParams};
use ramsey_regular::generators::{kout_sum, Seed};

fn main() -> ramsey_regular::Result<()> {
    let r = 2;
    for n in [10_000, 100_000] {
        let (g, digraphs) = kout_sum(n, r, Seed(3))?;
        let kc = color_kout(&digraphs, r, KoutParams::default())?;
        let audit = kout_audit(&digraphs, &kc)?;
        let stats = mono_stats(&g, &kc.coloring, r as u32)?;
        println!("n={n}:");
        println!(
            "  stripped {} cycle arcs, peeled {} arcs in {} rounds, {} blocks of sizes {:?}",
            kc.stripped,
            kc.peeled,
            kc.peel_iterations,
            kc.blocks.len(),
            kc.blocks.sizes()
        );
        println!(
            "  |E*| = {} (n^0.2 = {:.2}); max post-peel order {} (cap {})",
            audit.estar, audit.estar_threshold, audit.peeled_max_order, audit.peel_threshold
        );
        println!(
            "  classes >= 2: height {} (<= {:.1}? {}), order {} (<= {:.1}? {})",
            audit.max_height,
            audit.height_threshold,
            audit.height_ok(),
            audit.max_order,
            audit.order_threshold,
            audit.order_ok()
        );
        println!("  max component per color {:?} (n^0.9 = {:.0})", stats.max_component, (n as f64).powf(0.9));
    }
    Ok(())
}

//! Exact local density audit: the densest connected set of at most `smax`
//! vertices, on a sparse pairing graph and on its majority color class.

use ramsey_regular::analysis::{adversarial_color, local_density_audit, majority_subgraph, Strategy, DEFAULT_DENSITY_BUDGET};
use ramsey_regular::generators::{pairing_model, Seed};

fn main() -> ramsey_regular::Result<()> {
    let g = pairing_model(500, 5, Seed(300))?;
    let a = local_density_audit(&g, 1.5, 10, DEFAULT_DENSITY_BUDGET)?;
    println!(
        "G(500, 5), smax=10: worst e(S)/|S| = {}/{} = {:.3} over {} candidate sets, passes c=1.5: {}",
        a.worst_edges, a.worst_size, a.worst_ratio, a.sets_enumerated, a.passed
    );
    println!("  witness {:?}", a.witness);

    let g = pairing_model(2000, 5, Seed(1))?;
    let coloring = adversarial_color(&g, 2, Strategy::UniformRandom, Seed(2))?.coloring;
    let maj = majority_subgraph(&g, &coloring, 2)?;
    println!("majority color {} keeps {} of {} edges", maj.color, maj.subgraph.graph.m(), g.m());
    for smax in [6, 8, 100] {
        match local_density_audit(&maj.subgraph.graph, 1.125, smax, 20_000_000) {
            Ok(a) => println!("  smax={smax}: worst ratio {:.4}, passes c=1.125: {}", a.worst_ratio, a.passed),
            Err(e) => println!("  smax={smax}: {e}"),
        }
    }
    Ok(())
}

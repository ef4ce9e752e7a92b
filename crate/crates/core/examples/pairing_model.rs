//! Sample pairing-model graphs and compare loop and multi-edge counts with
//! their limiting means, (d-1)/2 and (d-1)^2/4.

use ramsey_regular::generators::{pairing_model, simple_regular, Seed};

fn main() -> ramsey_regular::Result<()> {
    let (n, d, trials) = (2000, 5, 200);
    let (mut loops, mut multi) = (0, 0);
    for t in 0..trials {
        let g = pairing_model(n, d, Seed(t))?;
        loops += g.loop_count();
        multi += g.multi_edge_count();
    }
    let df = d as f64;
    println!("pairing model n={n}, d={d}, {trials} samples");
    println!("  mean loops       {:.3}  (limit {:.3})", loops as f64 / trials as f64, (df - 1.0) / 2.0);
    println!("  mean multi-edges {:.3}  (limit {:.3})", multi as f64 / trials as f64, (df - 1.0).powi(2) / 4.0);

    let g = simple_regular(200, 3, Seed(1), 10_000)?;
    println!("simple 3-regular sample on 200 vertices: {} edges, simple = {}", g.m(), g.is_simple());
    Ok(())
}

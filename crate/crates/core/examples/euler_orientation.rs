//! Orient a 2r-regular graph along Euler circuits so every vertex has in- and
//! out-degree r, which splits it into r functional digraphs' worth of arcs.

use ramsey_regular::analysis::euler_orient;
use ramsey_regular::generators::{pairing_model, Seed};

fn main() -> ramsey_regular::Result<()> {
    for r in [2, 3] {
        let g = pairing_model(10_000, 2 * r, Seed(r as u64))?;
        let o = euler_orient(&g)?;
        let ins = o.in_degrees();
        println!(
            "2r = {}: {} arcs, in-degrees {}..{}, max in-degree {}",
            2 * r,
            o.arcs.len(),
            ins.iter().min().unwrap(),
            ins.iter().max().unwrap(),
            o.max_in_degree()
        );
    }
    let odd = pairing_model(10, 3, Seed(1))?;
    println!("odd degree: {}", euler_orient(&odd).unwrap_err());
    Ok(())
}

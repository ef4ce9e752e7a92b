//! The constants behind the long-cycle guarantee for r colors.

use ramsey_regular::analysis::{cycle_bound, delta_lemma4, gamma_kout, gamma_regular, CycleBoundInput};

fn main() -> ramsey_regular::Result<()> {
    println!("delta(d=5, c=1.125) = {:e}", delta_lemma4(5.0, 1.125)?);
    let b = cycle_bound(CycleBoundInput { c1: 1.25, c2: 1.125, k: 100.0 })?;
    println!("cycle bound at c1=1.25, c2=1.125, k=100: {:.6} (guaranteed: {})", b.value(), b.guaranteed().is_some());

    println!("{:>8} {:>2} {:>8} {:>8} {:>4} {:>12} {:>14}", "model", "r", "c1", "c2", "d", "delta", "k for length 3");
    for r in 2..=6 {
        for (name, g) in [("regular", gamma_regular(r)?), ("kout", gamma_kout(r)?)] {
            // smallest k the bound turns into a cycle of length 3
            let k = 2.0 * (3.0 / ((g.c1 / g.c2).sqrt() - 1.0) + 1.0);
            println!("{name:>8} {r:>2} {:>8.5} {:>8.5} {:>4} {:>12.3e} {:>14.1}", g.c1, g.c2, g.d, g.delta, k);
        }
    }
    let g = gamma_regular(2)?;
    println!("gamma n for r=2 at n=1e20: {:.3e}", g.gamma_n(1e20));
    Ok(())
}

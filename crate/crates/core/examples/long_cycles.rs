//! Heuristic long-cycle search against the exact search on small graphs,
//! then on a large sparse graph.

use ramsey_regular::analysis::{find_long_cycle, longest_cycle_exact, CycleSearch};
use ramsey_regular::generators::{pairing_model, Seed};
use ramsey_regular::MultiGraph;

fn main() -> ramsey_regular::Result<()> {
    let petersen = MultiGraph::new(
        10,
        vec![
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    )?;
    let found = find_long_cycle(&petersen, CycleSearch::default(), Seed(1)).map_or(0, |c| c.len());
    println!("Petersen graph: heuristic {found}, exact {}", longest_cycle_exact(&petersen)?);

    let mut agree = 0;
    for s in 0..50 {
        let g = pairing_model(12, 3, Seed(s))?;
        let h = find_long_cycle(&g, CycleSearch::default(), Seed(s)).map_or(0, |c| c.len());
        agree += usize::from(h == longest_cycle_exact(&g)?);
    }
    println!("cubic pairing graphs on 12 vertices: heuristic optimal in {agree}/50");

    let g = pairing_model(20_000, 3, Seed(9))?;
    if let Some(c) = find_long_cycle(&g, CycleSearch::default(), Seed(9)) {
        println!("cubic graph on 20000 vertices: cycle of length {} (valid: {})", c.len(), c.is_valid_in(&g));
    }
    Ok(())
}

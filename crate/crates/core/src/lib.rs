//! Edge colorings of random regular and random k-out graphs with small
//! monochromatic components, and the machinery behind the matching lower
//! bound: one extra unit of degree forces a monochromatic cycle.
//!
//! * [`generators`]: pairing model, sums of Hamilton cycles, sums of
//!   functional digraphs, all seeded.
//! * [`coloring`]: the block colorings [`color_hamilton`] and [`color_kout`].
//! * [`analysis`]: component statistics, structural audits, the local
//!   density audit, cycle bounds, long-cycle search, Euler orientation and
//!   adversarial colorings.
//! * [`harness`]: Monte Carlo sweeps and the `ramsey-regular` command line.

pub mod analysis;
pub mod coloring;
pub mod error;
pub mod generators;
pub mod graph;
pub mod harness;

pub use coloring::{color_hamilton, color_kout};
pub use error::{Error, Result};
pub use generators::Seed;
pub use graph::{EdgeColoring, EdgeId, FunctionalDigraph, HamiltonDecomposition, MultiGraph};

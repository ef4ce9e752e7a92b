//! Measurement and certification: monochromatic component statistics, audits
//! of the structural claims behind the two colorings, the local-sparseness
//! constant and cycle-length bound, long-cycle search, Euler orientation and
//! adversarial coloring probes.

mod adversarial;
mod bounds;
mod cycles;
mod density;
mod orient;
mod stats;

pub use adversarial::{adversarial_color, greedy_balanced_with_order, AdversarialColoring, Strategy};
pub use bounds::{cycle_bound, delta_lemma4, gamma_kout, gamma_regular, CycleBound, CycleBoundInput, Gamma};
pub use cycles::{find_long_cycle, longest_cycle_exact, Cycle, CycleSearch, EXACT_MAX_N};
pub use density::{
    edges_within, local_density_audit, majority_subgraph, DensityAudit, Majority,
    DEFAULT_DENSITY_BUDGET,
};
pub use orient::{euler_orient, Orientation};
pub use stats::{
    arborescence_stats, kout_audit, kout_class_arcs, mono_stats, path_length_audit,
    ArborescenceStats, KoutAudit, MonoStats, PathAudit,
};

//! Samplers for the three random models: the pairing (configuration) model,
//! sums of independent uniform Hamilton cycles, and sums of independent
//! uniform functional digraphs (the k-out model).
//!
//! Every sampler is a pure function of its parameters and a [`Seed`]. The
//! random stream is ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`).

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{FunctionalDigraph, HamiltonDecomposition, MultiGraph};

/// Additive constant of the seed mixer (the 64-bit golden ratio).
pub const SEED_INCREMENT: u64 = 0x9E37_79B9_7F4A_7C15;
const MIX_MUL_1: u64 = 0xBF58_476D_1CE4_E5B9;
const MIX_MUL_2: u64 = 0x94D0_49BB_1331_11EB;

/// The SplitMix64 finalizer: add the golden-ratio increment, then two rounds
/// of xor-shift and constant multiplication.
pub fn mix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(SEED_INCREMENT);
    z = (z ^ (z >> 30)).wrapping_mul(MIX_MUL_1);
    z = (z ^ (z >> 27)).wrapping_mul(MIX_MUL_2);
    z ^ (z >> 31)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// Child seed for a structured position, e.g. `(n, trial)`:
    /// `mix64(... mix64(mix64(master) ^ p0) ^ p1 ...)`.
    pub fn derive(self, parts: &[u64]) -> Seed {
        let mut z = mix64(self.0);
        for &p in parts {
            z = mix64(z ^ p);
        }
        Seed(z)
    }
}

impl From<u64> for Seed {
    fn from(v: u64) -> Self {
        Seed(v)
    }
}

/// Uniform pairing-model multigraph: `n*d` points in `n` cells of size `d`,
/// a uniform perfect matching, cells contracted. d-regular with loops
/// counting 2; loops and parallel edges may appear.
pub fn pairing_model(n: usize, d: usize, seed: Seed) -> Result<MultiGraph> {
    pairing_model_with(n, d, &mut seed.rng())
}

fn pairing_model_with<R: Rng>(n: usize, d: usize, rng: &mut R) -> Result<MultiGraph> {
    if d == 0 {
        return Err(Error::invalid("pairing model needs d >= 1"));
    }
    if !(n * d).is_multiple_of(2) {
        return Err(Error::OddPointCount { n, d });
    }
    let mut points: Vec<usize> = (0..n * d).map(|p| p / d).collect();
    // A uniform permutation read in consecutive pairs is a uniform matching.
    points.shuffle(rng);
    let edges = points
        .chunks_exact(2)
        .map(|pair| (pair[0].min(pair[1]), pair[0].max(pair[1])))
        .collect();
    MultiGraph::new(n, edges)
}

/// Rejection sampler for simple d-regular graphs. Only practical for small
/// `d`; large-scale experiments use the multigraph models directly.
pub fn simple_regular(n: usize, d: usize, seed: Seed, max_attempts: usize) -> Result<MultiGraph> {
    if d >= n {
        return Err(Error::invalid(format!(
            "a simple {d}-regular graph needs more than {d} vertices, got {n}"
        )));
    }
    let mut rng = seed.rng();
    for _ in 0..max_attempts {
        let g = pairing_model_with(n, d, &mut rng)?;
        if g.is_simple() {
            let edges = g.edges().to_vec();
            return MultiGraph::with_loop_policy(n, edges, false);
        }
    }
    Err(Error::AttemptsExhausted {
        attempts: max_attempts,
    })
}

/// Edge union of `r` independent uniform Hamilton cycles on `0..n`.
///
/// Each cycle is a uniform permutation read cyclically; the decomposition is
/// returned alongside so the constructive coloring can use it. Edge ids follow
/// [`HamiltonDecomposition::to_multigraph`].
pub fn hamilton_sum(n: usize, r: usize, seed: Seed) -> Result<(MultiGraph, HamiltonDecomposition)> {
    if n < 3 {
        return Err(Error::invalid(format!("Hamilton cycles need n >= 3, got {n}")));
    }
    if r == 0 {
        return Err(Error::invalid("hamilton_sum needs r >= 1"));
    }
    let mut rng = seed.rng();
    let cycles = (0..r)
        .map(|_| {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            perm
        })
        .collect();
    let decomp = HamiltonDecomposition::new(n, cycles)?;
    Ok((decomp.to_multigraph(), decomp))
}

/// Uniform functional digraph without fixed points: each `succ(v)` is uniform
/// on `0..n` minus `v`.
pub fn functional_digraph<R: Rng>(n: usize, rng: &mut R) -> Result<FunctionalDigraph> {
    if n < 2 {
        return Err(Error::invalid(format!("functional digraphs need n >= 2, got {n}")));
    }
    let succ = (0..n)
        .map(|v| {
            let x = rng.random_range(0..n - 1);
            if x >= v {
                x + 1
            } else {
                x
            }
        })
        .collect();
    FunctionalDigraph::new(succ)
}

/// Orientation-free union of `k` independent uniform functional digraphs.
/// Edge `i*n + v` is the arc `(v, succ_i(v))`, so the digraphs can be
/// recovered with [`FunctionalDigraph::split_sum`].
pub fn kout_sum(n: usize, k: usize, seed: Seed) -> Result<(MultiGraph, Vec<FunctionalDigraph>)> {
    if k == 0 {
        return Err(Error::invalid("kout_sum needs k >= 1"));
    }
    let mut rng = seed.rng();
    let digraphs = (0..k)
        .map(|_| functional_digraph(n, &mut rng))
        .collect::<Result<Vec<_>>>()?;
    let edges = digraphs.iter().flat_map(|d| d.arcs()).collect();
    let g = MultiGraph::with_loop_policy(n, edges, false)?;
    Ok((g, digraphs))
}

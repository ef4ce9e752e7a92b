use serde::{Deserialize, Serialize};

use super::{floor_index, BlockPartition};
use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, EdgeId, HamiltonDecomposition};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HamiltonParams {
    /// Blocks hold `n^block_exponent` consecutive vertices of the first cycle.
    pub block_exponent: f64,
    /// Audit threshold exponent for color-class path lengths.
    pub path_exponent: f64,
}

impl Default for HamiltonParams {
    fn default() -> Self {
        Self {
            block_exponent: 0.7,
            path_exponent: 0.4,
        }
    }
}

#[derive(Clone, Debug)]
pub struct HamiltonColoring {
    pub coloring: EdgeColoring,
    pub blocks: BlockPartition,
    /// Block-crossing edges of the first cycle, all colored 2.
    pub estar: Vec<EdgeId>,
    pub params: HamiltonParams,
}

impl HamiltonColoring {
    /// Edge ids of cycle `i` (0-based) that join two different blocks and are
    /// not in `estar`; for `i >= 1` these are exactly the edges colored `i + 1`.
    pub fn crossing_edges(&self, decomp: &HamiltonDecomposition, i: usize) -> Vec<EdgeId> {
        let n = decomp.n();
        let cycle = &decomp.cycles()[i];
        (0..n)
            .filter(|&j| !self.blocks.same_block(cycle[j], cycle[(j + 1) % n]))
            .map(|j| i * n + j)
            .collect()
    }
}

/// Block boundaries `floor(i * s)` for `i = 0, 1, ...`, clamped to `n`, until
/// all `n` positions are covered.
fn block_boundaries(n: usize, block_size: f64) -> Vec<usize> {
    let mut bounds = vec![0];
    let mut i = 1usize;
    while *bounds.last().unwrap() < n {
        bounds.push(floor_index(i as f64 * block_size).min(n));
        i += 1;
    }
    bounds
}

/// Colors the edge union of `decomp`'s cycles with colors `1..=r`.
///
/// Relabel vertices `v_1..v_n` along the first cycle. Block `V_i` holds
/// positions `floor((i-1) s) + 1 ..= floor(i s)` with `s = n^block_exponent`;
/// the count `n^(1 - block_exponent)` is rounded up so every vertex is
/// covered. Then:
///
/// * every edge with both endpoints in one block gets color 1,
/// * the block-crossing edges of the first cycle form `estar` and get color 2,
/// * every remaining edge of cycle `i` gets color `i`.
pub fn color_hamilton(
    decomp: &HamiltonDecomposition,
    r: usize,
    params: HamiltonParams,
) -> Result<HamiltonColoring> {
    if r < 2 {
        return Err(Error::invalid(format!("color_hamilton needs r >= 2, got {r}")));
    }
    if decomp.r() != r {
        return Err(Error::invalid(format!(
            "decomposition has {} cycles, expected {r}",
            decomp.r()
        )));
    }
    let n = decomp.n();
    if n < r {
        return Err(Error::invalid(format!("need n >= r, got n = {n}, r = {r}")));
    }
    if !(params.block_exponent > 0.0 && params.block_exponent <= 1.0) {
        return Err(Error::invalid("block exponent must lie in (0, 1]"));
    }

    let block_size = (n as f64).powf(params.block_exponent);
    let bounds = block_boundaries(n, block_size);
    let first = &decomp.cycles()[0];
    let blocks: Vec<Vec<usize>> = bounds
        .windows(2)
        .map(|w| first[w[0]..w[1]].to_vec())
        .collect();
    let blocks = BlockPartition::new(n, blocks)?;

    let mut colors = Vec::with_capacity(n * r);
    let mut estar = Vec::new();
    for (i, cycle) in decomp.cycles().iter().enumerate() {
        for j in 0..n {
            let (u, v) = (cycle[j], cycle[(j + 1) % n]);
            let color = if blocks.same_block(u, v) {
                1
            } else if i == 0 {
                estar.push(j);
                2
            } else {
                i as u32 + 1
            };
            colors.push(color);
        }
    }
    Ok(HamiltonColoring {
        coloring: EdgeColoring::new(colors, r as u32)?,
        blocks,
        estar,
        params,
    })
}

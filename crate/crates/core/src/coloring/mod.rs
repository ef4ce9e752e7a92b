//! The two constructive colorings.
//!
//! [`color_hamilton`] colors a sum of `r` Hamilton cycles: vertices are cut
//! into consecutive blocks along the first cycle, intra-block edges get color
//! 1, the block-crossing edges of the first cycle get color 2, and every other
//! edge keeps the index of its cycle.
//!
//! [`color_kout`] does the same for a sum of `r` functional digraphs, with the
//! blocks assembled from the in-arborescences left after cutting every cycle of
//! the first digraph and peeling its large arborescences.

mod hamilton;
mod kout;

pub use hamilton::{color_hamilton, HamiltonColoring, HamiltonParams};
pub use kout::{
    color_kout, partition_blocks, peel_arborescences, strip_cycles, ArborescenceForest,
    KoutColoring, KoutParams, Peeling,
};

use crate::error::{Error, Result};

/// Ordered partition of `0..n` into blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl BlockPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::invalid(format!("block {b} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::invalid(format!("vertex {v} outside 0..{n}")));
                }
                if block_of[v] != usize::MAX {
                    return Err(Error::invalid(format!("vertex {v} is in two blocks")));
                }
                block_of[v] = b;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::invalid(format!("vertex {v} is in no block")));
        }
        Ok(Self { blocks, block_of })
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn same_block(&self, u: usize, v: usize) -> bool {
        self.block_of[u] == self.block_of[v]
    }
}

/// `floor(x)` as an index, for the block-boundary formulas.
pub(crate) fn floor_index(x: f64) -> usize {
    x.floor() as usize
}

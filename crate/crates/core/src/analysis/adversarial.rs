use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::orient::euler_orient;
use crate::error::{Error, Result};
use crate::generators::Seed;
use crate::graph::{EdgeColoring, EdgeId, MultiGraph, UnionFind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    UniformRandom,
    GreedyBalanced,
    OrientationSplit,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [
        Strategy::UniformRandom,
        Strategy::GreedyBalanced,
        Strategy::OrientationSplit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::UniformRandom => "uniform-random",
            Strategy::GreedyBalanced => "greedy-balanced",
            Strategy::OrientationSplit => "orientation-split",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown strategy {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct AdversarialColoring {
    pub coloring: EdgeColoring,
    /// The strategy that actually produced the coloring.
    pub applied: Strategy,
    /// Orientation split was requested but some degree was odd.
    pub fell_back: bool,
}

/// Colors `g` with one of the probing strategies:
///
/// * `uniform-random`: independent uniform colors;
/// * `greedy-balanced`: edges in random order, each taking the color whose
///   component through it stays smallest;
/// * `orientation-split`: Euler-orient, then give the in-edges of every vertex
///   consecutive colors from a random offset. Falls back to greedy-balanced on
///   odd degrees.
pub fn adversarial_color(g: &MultiGraph, r: u32, strategy: Strategy, seed: Seed) -> Result<AdversarialColoring> {
    if r < 2 {
        return Err(Error::invalid(format!("adversarial coloring needs r >= 2, got {r}")));
    }
    let mut rng = seed.rng();
    let result = |colors, applied, fell_back| -> Result<AdversarialColoring> {
        Ok(AdversarialColoring {
            coloring: EdgeColoring::new(colors, r)?,
            applied,
            fell_back,
        })
    };
    match strategy {
        Strategy::UniformRandom => {
            let colors = (0..g.m()).map(|_| rng.random_range(1..=r)).collect();
            result(colors, strategy, false)
        }
        Strategy::GreedyBalanced => {
            let mut order: Vec<EdgeId> = (0..g.m()).collect();
            order.shuffle(&mut rng);
            result(greedy_balanced_colors(g, r, &order)?, strategy, false)
        }
        Strategy::OrientationSplit => match euler_orient(g) {
            Ok(orientation) => {
                let offset: Vec<u32> = (0..g.n()).map(|_| rng.random_range(0..r)).collect();
                let mut seen = vec![0u32; g.n()];
                let colors = orientation
                    .arcs
                    .iter()
                    .map(|&(_, h)| {
                        let c = (offset[h] + seen[h]) % r + 1;
                        seen[h] += 1;
                        c
                    })
                    .collect();
                result(colors, strategy, false)
            }
            Err(Error::OddDegree { .. }) => {
                let mut order: Vec<EdgeId> = (0..g.m()).collect();
                order.shuffle(&mut rng);
                result(greedy_balanced_colors(g, r, &order)?, Strategy::GreedyBalanced, true)
            }
            Err(e) => Err(e),
        },
    }
}

/// Greedy-balanced coloring with a caller-chosen edge order. Ties go to the
/// color with fewer edges so far, then to the smaller color.
pub fn greedy_balanced_with_order(g: &MultiGraph, r: u32, order: &[EdgeId]) -> Result<EdgeColoring> {
    if r < 2 {
        return Err(Error::invalid(format!("adversarial coloring needs r >= 2, got {r}")));
    }
    EdgeColoring::new(greedy_balanced_colors(g, r, order)?, r)
}

fn greedy_balanced_colors(g: &MultiGraph, r: u32, order: &[EdgeId]) -> Result<Vec<u32>> {
    let mut seen = vec![false; g.m()];
    for &e in order {
        if e >= g.m() || std::mem::replace(&mut seen[e], true) {
            return Err(Error::invalid("edge order must be a permutation of the edge ids"));
        }
    }
    if order.len() != g.m() {
        return Err(Error::invalid("edge order must be a permutation of the edge ids"));
    }
    let mut ufs: Vec<UnionFind> = (0..r).map(|_| UnionFind::new(g.n())).collect();
    let mut used = vec![0usize; r as usize];
    let mut colors = vec![0u32; g.m()];
    for &e in order {
        let (u, v) = g.edge(e);
        let mut best = (usize::MAX, usize::MAX, 0usize);
        for (c, uf) in ufs.iter_mut().enumerate() {
            let (a, b) = (uf.find(u), uf.find(v));
            let merged = if a == b {
                uf.set_size(a)
            } else {
                uf.set_size(a) + uf.set_size(b)
            };
            let key = (merged, used[c], c);
            if key < best {
                best = key;
            }
        }
        let c = best.2;
        ufs[c].union(u, v);
        used[c] += 1;
        colors[e] = c as u32 + 1;
    }
    Ok(colors)
}

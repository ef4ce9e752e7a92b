use serde::Serialize;

use crate::coloring::{HamiltonColoring, KoutColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, FunctionalDigraph, HamiltonDecomposition, MultiGraph, UnionFind};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonoStats {
    pub n: usize,
    /// Largest component of each color class (index 0 is color 1); an
    /// unused color still has singleton components.
    pub max_component: Vec<usize>,
    /// Components with at least one edge, per color.
    pub component_count: Vec<usize>,
    /// Largest monochromatic component over all colors, divided by `n`.
    pub max_fraction: f64,
}

impl MonoStats {
    pub fn max(&self) -> usize {
        self.max_component.iter().copied().max().unwrap_or(0)
    }
}

pub fn mono_stats(g: &MultiGraph, coloring: &EdgeColoring, r: u32) -> Result<MonoStats> {
    coloring.check_total(g)?;
    if r == 0 {
        return Err(Error::invalid("r must be at least 1"));
    }
    if let Some((edge, &color)) = coloring.colors().iter().enumerate().find(|(_, &c)| c > r) {
        return Err(Error::ColorOutOfRange { edge, color, r });
    }
    let n = g.n();
    let mut max_component = Vec::with_capacity(r as usize);
    let mut component_count = Vec::with_capacity(r as usize);
    for c in 1..=r {
        let mut uf = g.union_find(|e| coloring.color(e) == c);
        let mut touched = vec![false; n];
        for (e, &(u, _)) in g.edges().iter().enumerate() {
            if coloring.color(e) == c {
                let root = uf.find(u);
                touched[root] = true;
            }
        }
        let sizes = uf.set_sizes();
        max_component.push(sizes.iter().copied().max().unwrap_or(0));
        component_count.push(touched.iter().filter(|&&t| t).count());
    }
    let max = max_component.iter().copied().max().unwrap_or(0);
    Ok(MonoStats {
        n,
        max_component,
        component_count,
        max_fraction: if n == 0 { 0.0 } else { max as f64 / n as f64 },
    })
}

/// Longest block-crossing runs along each Hamilton cycle after the first.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PathAudit {
    /// `max_path[k]` is the longest path (in edges) of color `k + 2`'s own
    /// cycle edges, i.e. cycle index `k + 1`.
    pub max_path: Vec<usize>,
    pub threshold: f64,
    /// Number of cycles whose longest path exceeds `threshold`.
    pub violations: usize,
}

impl PathAudit {
    pub fn max(&self) -> usize {
        self.max_path.iter().copied().max().unwrap_or(0)
    }
}

/// Longest run of consecutive `true` values read cyclically. `None` when all
/// values are `true`: the run closes up into a cycle.
fn longest_cyclic_run(flags: &[bool]) -> Option<usize> {
    let n = flags.len();
    let start = match flags.iter().position(|&f| !f) {
        Some(s) => s,
        None if n == 0 => return Some(0),
        None => return None,
    };
    let (mut best, mut run) = (0, 0);
    for k in 1..=n {
        if flags[(start + k) % n] {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    Some(best)
}

/// For every cycle `H_i`, `i >= 2`, the edges not inside one block form the
/// class `E_i`; it must be a disjoint union of paths. Reports the longest one
/// against `n^path_exponent`.
pub fn path_length_audit(decomp: &HamiltonDecomposition, hc: &HamiltonColoring) -> Result<PathAudit> {
    let n = decomp.n();
    let mut max_path = Vec::new();
    for (i, cycle) in decomp.cycles().iter().enumerate().skip(1) {
        let crossing: Vec<bool> = (0..n)
            .map(|j| !hc.blocks.same_block(cycle[j], cycle[(j + 1) % n]))
            .collect();
        let run = longest_cyclic_run(&crossing).ok_or_else(|| {
            Error::Contract(format!("every edge of cycle {i} crosses blocks; E_{} is a cycle", i + 1))
        })?;
        max_path.push(run);
    }
    let threshold = (n as f64).powf(hc.params.path_exponent);
    let violations = max_path.iter().filter(|&&l| l as f64 > threshold).count();
    Ok(PathAudit {
        max_path,
        threshold,
        violations,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ArborescenceStats {
    /// Longest directed path, in arcs. For a unicyclic component this is
    /// the deepest tree vertex's distance to the cycle plus `L - 1`.
    pub max_height: usize,
    /// Largest component, counting only vertices touched by an arc.
    pub max_order: usize,
    pub unicyclic: usize,
    pub components: usize,
}

/// Decomposes an arc set with out-degree at most 1 into in-arborescences and
/// unicyclic components.
pub fn arborescence_stats(n: usize, arcs: &[(usize, usize)]) -> Result<ArborescenceStats> {
    let mut succ = vec![usize::MAX; n];
    let mut touched = vec![false; n];
    let mut uf = UnionFind::new(n);
    for &(v, w) in arcs {
        if v >= n || w >= n {
            return Err(Error::invalid(format!("arc ({v}, {w}) outside 0..{n}")));
        }
        if succ[v] != usize::MAX {
            return Err(Error::Contract(format!("vertex {v} has out-degree above 1")));
        }
        succ[v] = w;
        touched[v] = true;
        touched[w] = true;
        uf.union(v, w);
    }

    // depth[v]: arcs from v to its root or to the cycle of its component
    const UNSET: usize = usize::MAX;
    const ON_STACK: usize = usize::MAX - 1;
    let mut depth = vec![UNSET; n];
    let mut cycle_len = vec![0usize; n]; // per union-find root
    let mut walk = Vec::new();
    for start in 0..n {
        if !touched[start] || depth[start] != UNSET {
            continue;
        }
        let mut v = start;
        loop {
            if depth[v] != UNSET {
                break;
            }
            depth[v] = ON_STACK;
            walk.push(v);
            if succ[v] == usize::MAX {
                break;
            }
            v = succ[v];
        }
        let mut base = if depth[v] == ON_STACK {
            if succ[v] == usize::MAX {
                // walk ended at a root
                walk.pop();
                depth[v] = 0;
                0
            } else {
                // walk closed a cycle through v
                let at = walk.iter().position(|&u| u == v).expect("v is on the walk");
                let len = walk.len() - at;
                for &u in &walk[at..] {
                    depth[u] = 0;
                }
                walk.truncate(at);
                let root = uf.find(v);
                cycle_len[root] = len;
                0
            }
        } else {
            depth[v]
        };
        while let Some(u) = walk.pop() {
            base += 1;
            depth[u] = base;
        }
    }

    let mut order = vec![0usize; n];
    let mut height = vec![0usize; n];
    for v in (0..n).filter(|&v| touched[v]) {
        let root = uf.find(v);
        order[root] += 1;
        height[root] = height[root].max(depth[v]);
    }
    let mut stats = ArborescenceStats::default();
    for root in (0..n).filter(|&v| touched[v] && uf.find(v) == v) {
        stats.components += 1;
        stats.max_order = stats.max_order.max(order[root]);
        let h = if cycle_len[root] > 0 {
            stats.unicyclic += 1;
            height[root] + cycle_len[root] - 1
        } else {
            height[root]
        };
        stats.max_height = stats.max_height.max(h);
    }
    Ok(stats)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KoutAudit {
    /// Stats of the arcs of `D_i` (`i >= 2`) colored `i`.
    pub classes: Vec<ArborescenceStats>,
    pub estar: usize,
    pub max_height: usize,
    pub max_order: usize,
    pub height_threshold: f64,
    pub order_threshold: f64,
    pub estar_threshold: f64,
    /// Largest post-peel arborescence of the first digraph.
    pub peeled_max_order: usize,
    pub peel_threshold: usize,
}

impl KoutAudit {
    pub fn height_ok(&self) -> bool {
        self.max_height as f64 <= self.height_threshold
    }
    pub fn order_ok(&self) -> bool {
        self.max_order as f64 <= self.order_threshold
    }
    pub fn estar_ok(&self) -> bool {
        (self.estar as f64) < self.estar_threshold
    }
}

/// Arcs of `digraphs[i]` that kept the color `i + 1` of their digraph.
pub fn kout_class_arcs(digraphs: &[FunctionalDigraph], kc: &KoutColoring, i: usize) -> Vec<(usize, usize)> {
    let n = digraphs[i].n();
    digraphs[i]
        .arcs()
        .enumerate()
        .filter(|&(v, _)| kc.coloring.color(i * n + v) == i as u32 + 1)
        .map(|(_, a)| a)
        .collect()
}

pub fn kout_audit(digraphs: &[FunctionalDigraph], kc: &KoutColoring) -> Result<KoutAudit> {
    let n = digraphs.first().map_or(0, FunctionalDigraph::n);
    let classes = (1..digraphs.len())
        .map(|i| arborescence_stats(n, &kout_class_arcs(digraphs, kc, i)))
        .collect::<Result<Vec<_>>>()?;
    let nf = n as f64;
    let p = &kc.params;
    Ok(KoutAudit {
        max_height: classes.iter().map(|s| s.max_height).max().unwrap_or(0),
        max_order: classes.iter().map(|s| s.max_order).max().unwrap_or(0),
        classes,
        estar: kc.estar.len(),
        height_threshold: nf.powf(p.path_exponent),
        order_threshold: nf.powf(p.order_exponent),
        estar_threshold: nf.powf(p.estar_exponent),
        peeled_max_order: kc.forest.max_order(),
        peel_threshold: p.peel_threshold(n),
    })
}

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, MultiGraph, Subgraph};

/// Default cap on search steps before the audit refuses.
pub const DEFAULT_DENSITY_BUDGET: u64 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityAudit {
    pub c: f64,
    pub smax: usize,
    /// `e(witness)`, kept exact.
    pub worst_edges: u64,
    pub worst_size: usize,
    pub worst_ratio: f64,
    pub witness: Vec<usize>,
    /// Candidate sets scored.
    pub sets_enumerated: u64,
    /// No connected set of at most `smax` vertices spans more than `c|S|`
    /// edges.
    pub passed: bool,
}

/// Per-vertex neighbour multiplicities with loops split out.
struct Local {
    loops: Vec<u64>,
    nbrs: Vec<Vec<(usize, u64)>>,
}

impl Local {
    fn new(g: &MultiGraph) -> Self {
        let n = g.n();
        let mut loops = vec![0; n];
        let mut raw: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in g.edges() {
            if u == v {
                loops[u] += 1;
            } else {
                raw[u].push(v);
                raw[v].push(u);
            }
        }
        let nbrs = raw
            .into_iter()
            .map(|mut list| {
                list.sort_unstable();
                let mut out: Vec<(usize, u64)> = Vec::new();
                for w in list {
                    match out.last_mut() {
                        Some((x, k)) if *x == w => *k += 1,
                        _ => out.push((w, 1)),
                    }
                }
                out
            })
            .collect();
        Self { loops, nbrs }
    }
}

struct Search<'a> {
    local: &'a Local,
    smax: usize,
    budget: u64,
    work: u64,
    in_set: Vec<bool>,
    on_path: Vec<bool>,
    scratch: Vec<bool>,
    seen: HashSet<Vec<usize>>,
    pending: Vec<Vec<usize>>,
    best_edges: u64,
    best_size: usize,
    best: Vec<usize>,
}

impl Search<'_> {
    fn tick(&mut self, k: u64) -> Result<()> {
        self.work += k;
        if self.work > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        Ok(())
    }

    fn offer(&mut self, set: &[usize], edges: u64) {
        let size = set.len();
        // strictly denser wins; the first witness found is kept on ties
        if self.best.is_empty() || edges * self.best_size as u64 > self.best_edges * size as u64 {
            self.best_edges = edges;
            self.best_size = size;
            self.best = set.to_vec();
        }
    }

    fn edges_of(&mut self, set: &[usize]) -> u64 {
        for &v in set {
            self.scratch[v] = true;
        }
        let mut e = 0;
        for &v in set {
            e += self.local.loops[v];
            for &(u, k) in &self.local.nbrs[v] {
                if u > v && self.scratch[u] {
                    e += k;
                }
            }
        }
        for &v in set {
            self.scratch[v] = false;
        }
        e
    }

    fn add(&mut self, mut set: Vec<usize>) -> Result<()> {
        set.sort_unstable();
        if self.seen.contains(&set) {
            return Ok(());
        }
        self.tick(set.len() as u64)?;
        let e = self.edges_of(&set);
        self.offer(&set, e);
        if set.len() < self.smax {
            self.pending.push(set.clone());
        }
        self.seen.insert(set);
        Ok(())
    }

    /// Simple cycles of length `3..=smax` whose smallest vertex is `path[0]`.
    fn cycles(&mut self, path: &mut Vec<usize>) -> Result<()> {
        let local = self.local;
        let start = path[0];
        let last = *path.last().unwrap();
        for &(u, _) in &local.nbrs[last] {
            self.tick(1)?;
            if u == start && path.len() >= 3 {
                self.add(path.clone())?;
            } else if u > start && !self.on_path[u] && path.len() < self.smax {
                self.on_path[u] = true;
                path.push(u);
                self.cycles(path)?;
                path.pop();
                self.on_path[u] = false;
            }
        }
        Ok(())
    }

    /// Grows `path` (fresh vertices hanging off the marked set) until its
    /// last vertex closes: a loop, a second edge to its predecessor, or an
    /// edge back to the set or to an earlier path vertex.
    fn ear(&mut self, base: &[usize], prev: usize, path: &mut Vec<usize>, room: usize) -> Result<()> {
        let local = self.local;
        let p = *path.last().unwrap();
        let mut closes = local.loops[p] > 0;
        for &(u, k) in &local.nbrs[p] {
            self.tick(1)?;
            closes |= if u == prev {
                k >= 2
            } else {
                self.in_set[u] || self.on_path[u]
            };
        }
        if closes {
            let mut set = base.to_vec();
            set.extend_from_slice(path);
            return self.add(set);
        }
        if path.len() == room {
            return Ok(());
        }
        for &(u, _) in &local.nbrs[p] {
            if !self.in_set[u] && !self.on_path[u] {
                self.on_path[u] = true;
                path.push(u);
                self.ear(base, p, path, room)?;
                path.pop();
                self.on_path[u] = false;
            }
        }
        Ok(())
    }

    fn expand(&mut self, base: &[usize]) -> Result<()> {
        let local = self.local;
        let room = self.smax - base.len();
        for &v in base {
            self.in_set[v] = true;
        }
        let mut path = Vec::with_capacity(room);
        let mut result = Ok(());
        'outer: for &x in base {
            for &(p, _) in &local.nbrs[x] {
                if self.in_set[p] {
                    continue;
                }
                self.on_path[p] = true;
                path.push(p);
                result = self.ear(base, x, &mut path, room);
                path.pop();
                self.on_path[p] = false;
                if result.is_err() {
                    break 'outer;
                }
            }
        }
        for &v in base {
            self.in_set[v] = false;
        }
        result
    }
}

/// Largest connected component's first `k` vertices in BFS order.
fn tree_witness(g: &MultiGraph, local: &Local, k: usize) -> Vec<usize> {
    let comps = g.components(|_| true);
    let Some(start) = comps.first().map(|c| c[0]) else {
        return Vec::new();
    };
    let mut seen = vec![false; g.n()];
    let mut order = vec![start];
    seen[start] = true;
    let mut head = 0;
    while head < order.len() && order.len() < k {
        let v = order[head];
        head += 1;
        for &(u, _) in &local.nbrs[v] {
            if !seen[u] && order.len() < k {
                seen[u] = true;
                order.push(u);
            }
        }
    }
    order
}

/// Densest connected vertex set of at most `smax` vertices, exactly.
///
/// `e(S)` counts edges with both ends in `S`: loops once, parallel edges
/// each; singletons are included. Connected sets suffice because `e` and
/// `|S|` add over components.
///
/// Rather than visiting every connected set, the search uses the shape of a
/// smallest densest set `S`. If its ratio exceeds 1, every vertex of `S` has
/// at least two incident edges inside `S` (dropping one with fewer would
/// raise the ratio), so `S` grows from one of its cycles by repeatedly adding
/// a path of new vertices that stops as soon as its end closes back onto the
/// set. All sets reachable that way from cycles of length at most `smax` are
/// scored. If no such set has ratio above 1, the answer is 1 when some cycle
/// fits and `(k-1)/k` otherwise, with `k = min(smax, largest component)`.
///
/// `budget` caps the elementary steps; exceeding it is an explicit refusal.
pub fn local_density_audit(g: &MultiGraph, c: f64, smax: usize, budget: u64) -> Result<DensityAudit> {
    if smax == 0 {
        return Err(Error::invalid("smax must be at least 1"));
    }
    if !c.is_finite() {
        return Err(Error::invalid(format!("ratio c = {c} is not finite")));
    }
    let local = Local::new(g);
    let n = g.n();
    let mut search = Search {
        local: &local,
        smax,
        budget,
        work: 0,
        in_set: vec![false; n],
        on_path: vec![false; n],
        scratch: vec![false; n],
        seen: HashSet::new(),
        pending: Vec::new(),
        best_edges: 0,
        best_size: 0,
        best: Vec::new(),
    };

    let largest = g.component_sizes(|_| true).first().copied().unwrap_or(0);
    let k = smax.min(largest);
    if k > 0 {
        let tree = tree_witness(g, &local, k);
        search.offer(&tree, k as u64 - 1);
    }
    for v in 0..n {
        if local.loops[v] > 0 {
            search.add(vec![v])?;
        }
        if smax >= 2 {
            for &(u, mult) in &local.nbrs[v] {
                if u > v && mult >= 2 {
                    search.add(vec![v, u])?;
                }
            }
        }
    }
    if smax >= 3 {
        for v in 0..n {
            search.on_path[v] = true;
            let mut path = vec![v];
            let r = search.cycles(&mut path);
            search.on_path[v] = false;
            r?;
        }
    }
    while let Some(base) = search.pending.pop() {
        search.expand(&base)?;
    }

    let mut witness = search.best;
    witness.sort_unstable();
    let worst_ratio = if search.best_size == 0 {
        0.0
    } else {
        search.best_edges as f64 / search.best_size as f64
    };
    Ok(DensityAudit {
        c,
        smax,
        worst_edges: search.best_edges,
        worst_size: search.best_size,
        worst_ratio,
        witness,
        sets_enumerated: search.seen.len() as u64 + u64::from(k > 0),
        passed: search.best_edges as f64 <= c * search.best_size as f64,
    })
}

/// `e(S)` for an arbitrary vertex set.
pub fn edges_within(g: &MultiGraph, set: &[usize]) -> u64 {
    let mut mark = vec![false; g.n()];
    for &v in set {
        mark[v] = true;
    }
    g.edges().iter().filter(|&&(u, v)| mark[u] && mark[v]).count() as u64
}

#[derive(Clone, Debug)]
pub struct Majority {
    pub color: u32,
    pub subgraph: Subgraph,
}

/// Subgraph of the most frequent color, ties toward the smallest color.
pub fn majority_subgraph(g: &MultiGraph, coloring: &EdgeColoring, r: u32) -> Result<Majority> {
    coloring.check_total(g)?;
    if r == 0 {
        return Err(Error::invalid("r must be at least 1"));
    }
    let mut counts = vec![0usize; r as usize];
    for (edge, &color) in coloring.colors().iter().enumerate() {
        if color > r {
            return Err(Error::ColorOutOfRange { edge, color, r });
        }
        counts[color as usize - 1] += 1;
    }
    let mut color = 1;
    for (i, &k) in counts.iter().enumerate() {
        if k > counts[color as usize - 1] {
            color = i as u32 + 1;
        }
    }
    Ok(Majority {
        color,
        subgraph: g.induced_subgraph(|e| coloring.color(e) == color),
    })
}

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::Seed;
use crate::graph::{EdgeId, MultiGraph};

/// Largest graph accepted by [`longest_cycle_exact`].
pub const EXACT_MAX_N: usize = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSearch {
    pub restarts: usize,
    /// Step budget per restart, as a multiple of the 2-core order.
    pub steps_per_vertex: usize,
}

impl Default for CycleSearch {
    fn default() -> Self {
        Self {
            restarts: 10,
            steps_per_vertex: 50,
        }
    }
}

/// A closed walk without repeated vertices: `edges[i]` joins `vertices[i]`
/// and `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<EdgeId>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks the cycle against `g` edge by edge.
    pub fn is_valid_in(&self, g: &MultiGraph) -> bool {
        let k = self.vertices.len();
        if k == 0 || self.edges.len() != k {
            return false;
        }
        let mut seen_v = vec![false; g.n()];
        for &v in &self.vertices {
            if v >= g.n() || std::mem::replace(&mut seen_v[v], true) {
                return false;
            }
        }
        let mut seen_e = vec![false; g.m()];
        for (i, &e) in self.edges.iter().enumerate() {
            if e >= g.m() || std::mem::replace(&mut seen_e[e], true) {
                return false;
            }
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % k]);
            let (u, v) = g.edge(e);
            if !((u == a && v == b) || (u == b && v == a)) {
                return false;
            }
        }
        true
    }
}

/// Distinct neighbours without loops, each with its smallest edge id.
fn simple_neighbors(g: &MultiGraph) -> Vec<Vec<(usize, EdgeId)>> {
    let mut nbrs: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); g.n()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if u != v {
            nbrs[u].push((v, e));
            nbrs[v].push((u, e));
        }
    }
    for list in &mut nbrs {
        list.sort_unstable();
        list.dedup_by_key(|x| x.0);
    }
    nbrs
}

/// Cycles of length 1 and 2: a loop, or two parallel edges.
fn short_cycle(g: &MultiGraph) -> Option<Cycle> {
    if let Some(e) = g.edges().iter().position(|&(u, v)| u == v) {
        let mut best = Cycle {
            vertices: vec![g.edge(e).0],
            edges: vec![e],
        };
        if let Some(two) = parallel_pair(g) {
            best = two;
        }
        return Some(best);
    }
    parallel_pair(g)
}

fn parallel_pair(g: &MultiGraph) -> Option<Cycle> {
    let mut keyed: Vec<((usize, usize), EdgeId)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| u != v)
        .map(|(e, &(u, v))| ((u.min(v), u.max(v)), e))
        .collect();
    keyed.sort_unstable();
    keyed.windows(2).find(|w| w[0].0 == w[1].0).map(|w| Cycle {
        vertices: vec![w[0].0 .0, w[0].0 .1],
        edges: vec![w[0].1, w[1].1],
    })
}

/// Vertices of the 2-core of the simple underlying graph, plus the order of
/// the core component containing each of them.
fn two_core(nbrs: &[Vec<(usize, EdgeId)>]) -> (Vec<bool>, Vec<usize>) {
    let n = nbrs.len();
    let mut deg: Vec<usize> = nbrs.iter().map(Vec::len).collect();
    let mut alive = vec![true; n];
    let mut queue: Vec<usize> = (0..n).filter(|&v| deg[v] < 2).collect();
    while let Some(v) = queue.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &(u, _) in &nbrs[v] {
            if alive[u] {
                deg[u] -= 1;
                if deg[u] == 1 {
                    queue.push(u);
                }
            }
        }
    }
    let mut comp_size = vec![0; n];
    let mut seen = vec![false; n];
    let mut members = Vec::new();
    for s in 0..n {
        if !alive[s] || seen[s] {
            continue;
        }
        members.clear();
        members.push(s);
        seen[s] = true;
        let mut head = 0;
        while head < members.len() {
            let v = members[head];
            head += 1;
            for &(u, _) in &nbrs[v] {
                if alive[u] && !seen[u] {
                    seen[u] = true;
                    members.push(u);
                }
            }
        }
        for &v in &members {
            comp_size[v] = members.len();
        }
    }
    (alive, comp_size)
}

const NONE: usize = usize::MAX;

struct Searcher<'a> {
    nbrs: Vec<Vec<(usize, EdgeId)>>,
    alive: &'a [bool],
    best: Vec<usize>,
}

impl Searcher<'_> {
    fn offer(&mut self, cycle: &[usize]) {
        if cycle.len() > self.best.len() {
            self.best = cycle.to_vec();
        }
    }

    /// Randomized DFS from `start`; records the longest back-edge cycle and
    /// returns the deepest root-to-vertex path.
    fn dfs(&mut self, start: usize, steps: &mut usize) -> Vec<usize> {
        let n = self.nbrs.len();
        let mut depth = vec![NONE; n];
        let mut parent = vec![NONE; n];
        let mut next = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack = vec![start];
        depth[start] = 0;
        on_stack[start] = true;
        let mut deepest = start;
        while let Some(&v) = stack.last() {
            if next[v] == self.nbrs[v].len() {
                on_stack[v] = false;
                stack.pop();
                continue;
            }
            let (u, _) = self.nbrs[v][next[v]];
            next[v] += 1;
            *steps += 1;
            if !self.alive[u] {
                continue;
            }
            if depth[u] == NONE {
                depth[u] = depth[v] + 1;
                parent[u] = v;
                on_stack[u] = true;
                stack.push(u);
                if depth[u] > depth[deepest] {
                    deepest = u;
                }
            } else if on_stack[u] && depth[u] + 2 <= depth[v] {
                let len = depth[v] - depth[u] + 1;
                if len > self.best.len() {
                    self.offer(&stack[depth[u]..]);
                }
            }
        }
        let mut path = vec![deepest];
        while parent[*path.last().unwrap()] != NONE {
            path.push(parent[*path.last().unwrap()]);
        }
        path.reverse();
        path
    }

    /// Pósa-style path growth: extend the tail to a fresh neighbour when
    /// possible, otherwise rotate on a random path neighbour. Every state
    /// offers its longest closing cycle.
    fn rotate<R: Rng>(&mut self, mut path: Vec<usize>, limit: usize, budget: usize, steps: &mut usize, rng: &mut R) {
        let n = self.nbrs.len();
        let mut pos = vec![NONE; n];
        for (i, &v) in path.iter().enumerate() {
            pos[v] = i;
        }
        let mut free = Vec::new();
        let mut pivots = Vec::new();
        while *steps < budget && self.best.len() < limit {
            let k = path.len();
            let t = path[k - 1];
            free.clear();
            pivots.clear();
            let mut earliest = NONE;
            for &(u, _) in &self.nbrs[t] {
                *steps += 1;
                if !self.alive[u] {
                    continue;
                }
                if pos[u] == NONE {
                    free.push(u);
                } else if pos[u] + 2 < k {
                    earliest = earliest.min(pos[u]);
                    pivots.push(pos[u]);
                }
            }
            if earliest != NONE && k - earliest > self.best.len() {
                self.offer(&path[earliest..]);
            }
            if let Some(&u) = free.choose(rng) {
                pos[u] = k;
                path.push(u);
            } else if let Some(&i) = pivots.choose(rng) {
                path[i + 1..].reverse();
                for (j, &v) in path.iter().enumerate().skip(i + 1) {
                    pos[v] = j;
                }
                *steps += k - i - 1;
            } else {
                break;
            }
        }
    }
}

/// Heuristic long-cycle search: randomized DFS back edges followed by
/// rotation-extension from the deepest DFS path, repeated from random
/// 2-core vertices. Loops and parallel pairs count as cycles of length 1
/// and 2. Deterministic given `seed`.
pub fn find_long_cycle(g: &MultiGraph, search: CycleSearch, seed: Seed) -> Option<Cycle> {
    let short = short_cycle(g);
    let nbrs = simple_neighbors(g);
    let (alive, comp_size) = two_core(&nbrs);
    let core: Vec<usize> = (0..g.n()).filter(|&v| alive[v]).collect();
    if core.is_empty() {
        return short;
    }
    let max_comp = comp_size.iter().copied().max().unwrap_or(0);
    let budget = search.steps_per_vertex.max(1) * core.len();
    let mut rng = seed.rng();
    let mut s = Searcher {
        nbrs,
        alive: &alive,
        best: Vec::new(),
    };
    for restart in 0..search.restarts.max(1) {
        if s.best.len() >= max_comp {
            break;
        }
        // restart 0 starts inside the largest core component
        let start = if restart == 0 {
            *core.iter().find(|&&v| comp_size[v] == max_comp).unwrap()
        } else {
            core[rng.random_range(0..core.len())]
        };
        for list in &mut s.nbrs {
            list.shuffle(&mut rng);
        }
        let mut steps = 0;
        let path = s.dfs(start, &mut steps);
        s.rotate(path, comp_size[start], budget, &mut steps, &mut rng);
    }

    if s.best.len() < 3 {
        return short;
    }
    // map back to edge ids, stable regardless of the shuffles above
    let fixed = simple_neighbors(g);
    let k = s.best.len();
    let edges = (0..k)
        .map(|i| {
            let (a, b) = (s.best[i], s.best[(i + 1) % k]);
            fixed[a].iter().find(|&&(u, _)| u == b).expect("consecutive vertices are adjacent").1
        })
        .collect();
    Some(Cycle {
        vertices: s.best,
        edges,
    })
}

/// Exact longest cycle length by subset dynamic programming; 0 when acyclic.
/// Refuses graphs with more than [`EXACT_MAX_N`] vertices.
pub fn longest_cycle_exact(g: &MultiGraph) -> Result<usize> {
    let n = g.n();
    if n > EXACT_MAX_N {
        return Err(Error::TooLarge { n, max: EXACT_MAX_N });
    }
    let mut best = short_cycle(g).map_or(0, |c| c.len());
    let mut adj = vec![0u32; n];
    for &(u, v) in g.edges() {
        if u != v {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    // ends[mask]: vertices at which a path from min(mask) covering exactly
    // mask can end
    let mut ends = vec![0u32; 1 << n];
    for s in 0..n {
        let above = !((1u32 << (s + 1)) - 1) & ((1u32 << n) - 1);
        ends.iter_mut().for_each(|x| *x = 0);
        ends[1 << s] = 1 << s;
        // masks containing s whose other bits exceed s, in increasing order
        let mut sub = 0u32;
        loop {
            let mask = (sub | (1 << s)) as usize;
            let mut e = ends[mask];
            let size = mask.count_ones() as usize;
            while e != 0 {
                let v = e.trailing_zeros() as usize;
                e &= e - 1;
                if size >= 3 && adj[v] & (1 << s) != 0 {
                    best = best.max(size);
                }
                let mut ext = adj[v] & above & !(mask as u32);
                while ext != 0 {
                    let w = ext.trailing_zeros();
                    ext &= ext - 1;
                    ends[mask | (1 << w)] |= 1 << w;
                }
            }
            if sub == above {
                break;
            }
            sub = (sub.wrapping_sub(above)) & above;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> MultiGraph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        MultiGraph::new(10, e).unwrap()
    }

    #[test]
    fn exact_small_graphs() {
        assert_eq!(longest_cycle_exact(&MultiGraph::complete(4)).unwrap(), 4);
        assert_eq!(longest_cycle_exact(&MultiGraph::path(6)).unwrap(), 0);
        assert_eq!(longest_cycle_exact(&MultiGraph::cycle(15)).unwrap(), 15);
        let bowtie = MultiGraph::new(5, vec![(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(longest_cycle_exact(&bowtie).unwrap(), 3);
        assert_eq!(longest_cycle_exact(&petersen()).unwrap(), 9);
        let multi = MultiGraph::new(3, vec![(0, 1), (1, 0), (2, 2)]).unwrap();
        assert_eq!(longest_cycle_exact(&multi).unwrap(), 2);
        assert!(matches!(
            longest_cycle_exact(&MultiGraph::cycle(16)),
            Err(Error::TooLarge { n: 16, max: 15 })
        ));
    }

    #[test]
    fn heuristic_trivial_inputs() {
        assert!(find_long_cycle(&MultiGraph::path(10), CycleSearch::default(), Seed(1)).is_none());
        let c = find_long_cycle(&MultiGraph::cycle(40), CycleSearch::default(), Seed(1)).unwrap();
        assert_eq!(c.len(), 40);
        assert!(c.is_valid_in(&MultiGraph::cycle(40)));
        let multi = MultiGraph::new(3, vec![(0, 1), (1, 2), (2, 1), (0, 0)]).unwrap();
        let c = find_long_cycle(&multi, CycleSearch::default(), Seed(1)).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.edges, vec![1, 2]);
        assert!(c.is_valid_in(&multi));
    }

    #[test]
    fn heuristic_petersen() {
        let g = petersen();
        let c = find_long_cycle(&g, CycleSearch::default(), Seed(3)).unwrap();
        assert!(c.is_valid_in(&g));
        assert_eq!(c.len(), 9);
    }

    #[test]
    fn validity_rejects_bad_cycles() {
        let g = MultiGraph::cycle(4);
        let ok = Cycle {
            vertices: vec![0, 1, 2, 3],
            edges: vec![0, 1, 2, 3],
        };
        assert!(ok.is_valid_in(&g));
        let repeated_edge = Cycle {
            vertices: vec![0, 1],
            edges: vec![0, 0],
        };
        assert!(!repeated_edge.is_valid_in(&g));
        let wrong = Cycle {
            vertices: vec![0, 2, 1, 3],
            edges: vec![0, 1, 2, 3],
        };
        assert!(!wrong.is_valid_in(&g));
    }
}

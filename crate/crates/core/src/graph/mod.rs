//! Multigraph, functional digraph, Hamilton decomposition and edge coloring
//! types, plus the traversal primitives built on them.
//!
//! Edges are identified by their position in generation order. Colorings and
//! subgraph predicates always refer to edge ids, never endpoint pairs, so two
//! parallel edges can be treated differently.

mod io;
mod union_find;

pub use io::{read_coloring, read_graph, write_coloring, write_graph};
pub use union_find::UnionFind;

use crate::error::{Error, Result};

/// Position of an edge in [`MultiGraph::edges`].
pub type EdgeId = usize;

/// Undirected multigraph on `0..n` with dense, stable edge ids.
///
/// Loops and parallel edges are separate edge records. A loop contributes 2
/// to the degree of its vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    loops_allowed: bool,
}

/// Edge-induced subgraph together with the id mapping back to its parent.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: MultiGraph,
    /// `original[new_id]` is the parent edge id.
    pub original: Vec<EdgeId>,
}

impl MultiGraph {
    /// Builds a multigraph that may contain loops.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::with_loop_policy(n, edges, true)
    }

    pub fn with_loop_policy(
        n: usize,
        edges: Vec<(usize, usize)>,
        loops_allowed: bool,
    ) -> Result<Self> {
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge {id} = ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if !loops_allowed && u == v {
                return Err(Error::invalid(format!("edge {id} is a loop at {u}")));
            }
        }
        Ok(Self {
            n,
            edges,
            loops_allowed,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            loops_allowed: true,
        }
    }

    /// The cycle `0-1-...-(n-1)-0`.
    pub fn cycle(n: usize) -> Self {
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, edges).expect("cycle endpoints are in range")
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, edges).expect("path endpoints are in range")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::new(n, edges).expect("complete graph endpoints are in range")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (usize, usize) {
        self.edges[id]
    }

    pub fn loops_allowed(&self) -> bool {
        self.loops_allowed
    }

    /// Degree of every vertex, loops counting twice.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// Number of non-loop edges that duplicate an earlier edge between the
    /// same endpoints.
    pub fn multi_edge_count(&self) -> usize {
        let mut pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|(u, v)| u != v)
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        pairs.windows(2).filter(|w| w[0] == w[1]).count()
    }

    pub fn is_simple(&self) -> bool {
        self.loop_count() == 0 && self.multi_edge_count() == 0
    }

    /// Union-find over the kept edges; every vertex of `0..n` is present.
    pub fn union_find<F>(&self, keep: F) -> UnionFind
    where
        F: Fn(EdgeId) -> bool,
    {
        let mut uf = UnionFind::new(self.n);
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if keep(id) {
                uf.union(u, v);
            }
        }
        uf
    }

    /// Component sizes of the subgraph spanned by the kept edges, isolated
    /// vertices included, largest first.
    pub fn component_sizes<F>(&self, keep: F) -> Vec<usize>
    where
        F: Fn(EdgeId) -> bool,
    {
        let mut sizes = self.union_find(keep).set_sizes();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// Vertex sets of the components spanned by the kept edges over the full
    /// vertex set. Sorted by size descending, ties by smallest vertex; each
    /// set is sorted ascending.
    pub fn components<F>(&self, keep: F) -> Vec<Vec<usize>>
    where
        F: Fn(EdgeId) -> bool,
    {
        let mut uf = self.union_find(keep);
        let mut slot = vec![usize::MAX; self.n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            let root = uf.find(v);
            if slot[root] == usize::MAX {
                slot[root] = comps.len();
                comps.push(Vec::new());
            }
            comps[slot[root]].push(v);
        }
        // Stable sort preserves ascending smallest-vertex order among ties.
        comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
        comps
    }

    /// Same vertex set, only the kept edges, ids re-densified in order.
    pub fn induced_subgraph<F>(&self, keep: F) -> Subgraph
    where
        F: Fn(EdgeId) -> bool,
    {
        let original: Vec<EdgeId> = (0..self.m()).filter(|&id| keep(id)).collect();
        let edges = original.iter().map(|&id| self.edges[id]).collect();
        Subgraph {
            graph: MultiGraph {
                n: self.n,
                edges,
                loops_allowed: self.loops_allowed,
            },
            original,
        }
    }

    pub fn adjacency(&self) -> Adjacency {
        Adjacency::new(self)
    }
}

/// Compressed incidence lists: for each vertex, its `(neighbor, edge id)`
/// pairs. A loop appears once in the list of its vertex.
#[derive(Clone, Debug)]
pub struct Adjacency {
    offsets: Vec<usize>,
    entries: Vec<(usize, EdgeId)>,
}

impl Adjacency {
    pub fn new(g: &MultiGraph) -> Self {
        let mut count = vec![0usize; g.n() + 1];
        for &(u, v) in g.edges() {
            count[u] += 1;
            if u != v {
                count[v] += 1;
            }
        }
        let mut offsets = Vec::with_capacity(g.n() + 1);
        let mut acc = 0;
        for c in &count[..g.n()] {
            offsets.push(acc);
            acc += c;
        }
        offsets.push(acc);
        let mut fill = offsets.clone();
        let mut entries = vec![(0, 0); acc];
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            entries[fill[u]] = (v, id);
            fill[u] += 1;
            if u != v {
                entries[fill[v]] = (u, id);
                fill[v] += 1;
            }
        }
        Self { offsets, entries }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.entries[self.offsets[v]..self.offsets[v + 1]]
    }
}

/// Digraph in which every vertex has exactly one out-arc `v -> succ(v)`,
/// with `succ(v) != v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalDigraph {
    succ: Vec<usize>,
}

impl FunctionalDigraph {
    pub fn new(succ: Vec<usize>) -> Result<Self> {
        let n = succ.len();
        for (v, &w) in succ.iter().enumerate() {
            if w >= n {
                return Err(Error::invalid(format!("succ({v}) = {w} is outside 0..{n}")));
            }
            if w == v {
                return Err(Error::invalid(format!("vertex {v} is a fixed point")));
            }
        }
        Ok(Self { succ })
    }

    pub fn n(&self) -> usize {
        self.succ.len()
    }

    pub fn succ(&self, v: usize) -> usize {
        self.succ[v]
    }

    pub fn successors(&self) -> &[usize] {
        &self.succ
    }

    /// Arcs `(v, succ(v))` in vertex order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ.iter().copied().enumerate()
    }

    /// Recovers the k digraphs from a multigraph laid out as produced by
    /// `kout_sum`: edge `i*n + v` is the arc `(v, succ_i(v))`.
    pub fn split_sum(g: &MultiGraph, k: usize) -> Result<Vec<Self>> {
        let n = g.n();
        if k == 0 || g.m() != k * n {
            return Err(Error::invalid(format!(
                "a sum of {k} functional digraphs on {n} vertices has {} edges, found {}",
                k * n,
                g.m()
            )));
        }
        (0..k)
            .map(|i| {
                let mut succ = Vec::with_capacity(n);
                for v in 0..n {
                    let (tail, head) = g.edge(i * n + v);
                    if tail != v {
                        return Err(Error::invalid(format!(
                            "edge {} does not leave vertex {v}",
                            i * n + v
                        )));
                    }
                    succ.push(head);
                }
                Self::new(succ)
            })
            .collect()
    }
}

/// `r` Hamilton cycles on `0..n`, each stored as one traversal direction of
/// its cyclic vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonDecomposition {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl HamiltonDecomposition {
    pub fn new(n: usize, cycles: Vec<Vec<usize>>) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("Hamilton cycles need n >= 3, got {n}")));
        }
        for (i, cycle) in cycles.iter().enumerate() {
            if cycle.len() != n {
                return Err(Error::invalid(format!(
                    "cycle {i} has {} vertices, expected {n}",
                    cycle.len()
                )));
            }
            let mut seen = vec![false; n];
            for &v in cycle {
                if v >= n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::invalid(format!(
                        "cycle {i} is not a permutation of 0..{n}"
                    )));
                }
            }
        }
        Ok(Self { n, cycles })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.cycles.len()
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Edge union; the edges of cycle `i` occupy ids `i*n..(i+1)*n`, with edge
    /// `i*n + j` joining positions `j` and `j+1 (mod n)` of that cycle.
    pub fn to_multigraph(&self) -> MultiGraph {
        let n = self.n;
        let mut edges = Vec::with_capacity(n * self.r());
        for cycle in &self.cycles {
            for j in 0..n {
                edges.push((cycle[j], cycle[(j + 1) % n]));
            }
        }
        MultiGraph::with_loop_policy(n, edges, false).expect("cycle vertices are in range")
    }

    /// Inverse of [`to_multigraph`](Self::to_multigraph).
    pub fn from_multigraph(g: &MultiGraph, r: usize) -> Result<Self> {
        let n = g.n();
        if r == 0 || g.m() != r * n {
            return Err(Error::invalid(format!(
                "a sum of {r} Hamilton cycles on {n} vertices has {} edges, found {}",
                r * n,
                g.m()
            )));
        }
        let mut cycles = Vec::with_capacity(r);
        for i in 0..r {
            let cycle: Vec<usize> = (0..n).map(|j| g.edge(i * n + j).0).collect();
            for j in 0..n {
                if g.edge(i * n + j).1 != cycle[(j + 1) % n] {
                    return Err(Error::invalid(format!(
                        "edges {}..{} do not trace a cycle",
                        i * n,
                        (i + 1) * n
                    )));
                }
            }
            cycles.push(cycle);
        }
        Self::new(n, cycles)
    }
}

/// Total map from edge id to a color in `1..=r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<u32>,
    r: u32,
}

impl EdgeColoring {
    pub fn new(colors: Vec<u32>, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::invalid("a coloring needs at least one color"));
        }
        if let Some((edge, &color)) = colors
            .iter()
            .enumerate()
            .find(|(_, &c)| c == 0 || c > r)
        {
            return Err(Error::ColorOutOfRange { edge, color, r });
        }
        Ok(Self { colors, r })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, edge: EdgeId) -> u32 {
        self.colors[edge]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Fails unless the coloring assigns exactly one color to every edge of `g`.
    pub fn check_total(&self, g: &MultiGraph) -> Result<()> {
        if self.colors.len() != g.m() {
            return Err(Error::NonTotalColoring {
                expected: g.m(),
                got: self.colors.len(),
            });
        }
        Ok(())
    }

    /// Edge count per color, index `i` holding color `i + 1`.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.r as usize];
        for &c in &self.colors {
            sizes[c as usize - 1] += 1;
        }
        sizes
    }
}

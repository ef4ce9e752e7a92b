use serde::{Deserialize, Serialize};

use super::{floor_index, BlockPartition};
use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, EdgeId, FunctionalDigraph};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct KoutParams {
    /// Target block size exponent (`n^0.9`); the block count is
    /// `n^(1 - block_exponent)`.
    pub block_exponent: f64,
    /// Arborescences larger than `n^peel_exponent` are peeled.
    pub peel_exponent: f64,
    /// Audit threshold exponent for directed path lengths in colors `>= 2`.
    pub path_exponent: f64,
    /// Audit threshold exponent for arborescence orders in colors `>= 2`.
    pub order_exponent: f64,
    /// Audit threshold exponent for `|E*|`.
    pub estar_exponent: f64,
}

impl Default for KoutParams {
    fn default() -> Self {
        Self {
            block_exponent: 0.9,
            peel_exponent: 0.85,
            path_exponent: 0.15,
            order_exponent: 0.7,
            estar_exponent: 0.2,
        }
    }
}

impl KoutParams {
    /// Integer peeling threshold `floor(n^peel_exponent)`, at least 1.
    pub fn peel_threshold(&self, n: usize) -> usize {
        floor_index((n as f64).powf(self.peel_exponent)).max(1)
    }
}

/// Vertex-disjoint in-arborescences: every non-root vertex has exactly one
/// out-arc `v -> parent(v)`, and following parents always ends at a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArborescenceForest {
    parent: Vec<Option<usize>>,
    roots: Vec<usize>,
    component: Vec<usize>,
}

impl ArborescenceForest {
    /// Validates acyclicity. Components are numbered by ascending root label.
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        let roots: Vec<usize> = (0..n).filter(|&v| parent[v].is_none()).collect();
        let mut component = vec![usize::MAX; n];
        for (c, &root) in roots.iter().enumerate() {
            component[root] = c;
        }
        let mut path = Vec::new();
        for start in 0..n {
            let mut v = start;
            while component[v] == usize::MAX {
                // usize::MAX - 1 marks "on the current walk"
                component[v] = usize::MAX - 1;
                path.push(v);
                v = match parent[v] {
                    Some(p) if p < n => p,
                    Some(p) => {
                        return Err(Error::invalid(format!("parent {p} outside 0..{n}")));
                    }
                    None => unreachable!("roots are labelled up front"),
                };
            }
            if component[v] == usize::MAX - 1 {
                return Err(Error::invalid(format!(
                    "parent pointers contain a cycle through {v}"
                )));
            }
            let c = component[v];
            for u in path.drain(..) {
                component[u] = c;
            }
        }
        Ok(Self {
            parent,
            roots,
            component,
        })
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn component(&self, v: usize) -> usize {
        self.component[v]
    }

    pub fn component_count(&self) -> usize {
        self.roots.len()
    }

    /// Vertex count per component.
    pub fn orders(&self) -> Vec<usize> {
        let mut orders = vec![0; self.roots.len()];
        for &c in &self.component {
            orders[c] += 1;
        }
        orders
    }

    pub fn max_order(&self) -> usize {
        self.orders().into_iter().max().unwrap_or(0)
    }

    /// Remaining arcs `(v, parent(v))` in vertex order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (v, p)))
    }

    fn children(&self) -> ChildLists {
        ChildLists::new(&self.parent)
    }
}

/// In-neighbour lists in CSR form; entries go stale when arcs are cut, so
/// readers re-check `parent[child] == Some(v)`.
struct ChildLists {
    offsets: Vec<usize>,
    children: Vec<usize>,
}

impl ChildLists {
    fn new(parent: &[Option<usize>]) -> Self {
        let n = parent.len();
        let mut offsets = vec![0usize; n + 1];
        for p in parent.iter().flatten() {
            offsets[p + 1] += 1;
        }
        for v in 0..n {
            offsets[v + 1] += offsets[v];
        }
        let mut fill = offsets.clone();
        let mut children = vec![0; offsets[n]];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                children[fill[p]] = v;
                fill[p] += 1;
            }
        }
        Self { offsets, children }
    }

    fn of<'a>(&'a self, v: usize, parent: &'a [Option<usize>]) -> impl Iterator<Item = usize> + 'a {
        self.children[self.offsets[v]..self.offsets[v + 1]]
            .iter()
            .copied()
            .filter(move |&c| parent[c] == Some(v))
    }
}

/// Removes one arc from every cycle of `d1`: the out-arc of the smallest
/// vertex on the cycle. Returns the forest and the removed arcs.
pub fn strip_cycles(d1: &FunctionalDigraph) -> (ArborescenceForest, Vec<(usize, usize)>) {
    const NEW: u8 = 0;
    const ACTIVE: u8 = 1;
    const DONE: u8 = 2;
    let n = d1.n();
    let mut parent: Vec<Option<usize>> = d1.successors().iter().map(|&w| Some(w)).collect();
    let mut state = vec![NEW; n];
    let mut removed = Vec::new();
    let mut walk = Vec::new();
    for start in 0..n {
        let mut v = start;
        while state[v] == NEW {
            state[v] = ACTIVE;
            walk.push(v);
            v = d1.succ(v);
        }
        if state[v] == ACTIVE {
            let at = walk.iter().position(|&u| u == v).expect("v is on the walk");
            let min = *walk[at..].iter().min().expect("cycle is nonempty");
            removed.push((min, d1.succ(min)));
            parent[min] = None;
        }
        for u in walk.drain(..) {
            state[u] = DONE;
        }
    }
    removed.sort_unstable();
    let forest = ArborescenceForest::from_parents(parent).expect("every cycle was cut");
    (forest, removed)
}

/// Result of [`peel_arborescences`].
#[derive(Clone, Debug)]
pub struct Peeling {
    pub forest: ArborescenceForest,
    /// Cut arcs `(child, v)` in cutting order.
    pub cut: Vec<(usize, usize)>,
    pub iterations: usize,
}

/// While some arborescence has more than `threshold` vertices, pick a vertex
/// `v` that is reached by at least `threshold` other vertices while none of
/// its in-neighbours is (the smallest such label), and cut all in-arcs of `v`.
///
/// Each cut-off subtree has at most `threshold` vertices, so on return every
/// arborescence has order at most `threshold`.
pub fn peel_arborescences(forest: &ArborescenceForest, threshold: usize) -> Result<Peeling> {
    if threshold == 0 {
        return Err(Error::invalid("peeling threshold must be at least 1"));
    }
    let n = forest.n();
    let mut parent = forest.parent.clone();
    let children = forest.children();
    let mut desc = vec![0usize; n];
    let mut order = Vec::new();
    let mut cut = Vec::new();
    let mut iterations = 0;

    for &root in forest.roots() {
        loop {
            // BFS over the current arborescence of `root`
            order.clear();
            order.push(root);
            let mut head = 0;
            while head < order.len() {
                let v = order[head];
                head += 1;
                order.extend(children.of(v, &parent));
            }
            if order.len() <= threshold {
                break;
            }
            // reverse BFS order is a valid post-order for subtree sizes
            let mut pick = usize::MAX;
            for &v in order.iter().rev() {
                let mut below = 0;
                let mut heavy_child = false;
                for c in children.of(v, &parent) {
                    below += desc[c] + 1;
                    heavy_child |= desc[c] >= threshold;
                }
                desc[v] = below;
                if below >= threshold && !heavy_child {
                    pick = pick.min(v);
                }
            }
            debug_assert!(pick != usize::MAX, "root qualifies or has a qualifying descendant");
            let severed: Vec<usize> = children.of(pick, &parent).collect();
            for c in severed {
                parent[c] = None;
                cut.push((c, pick));
            }
            iterations += 1;
        }
    }
    Ok(Peeling {
        forest: ArborescenceForest::from_parents(parent)?,
        cut,
        iterations,
    })
}

/// Groups whole arborescences, ordered by their smallest vertex, into blocks.
///
/// With `s = n^block_exponent` and `b = ceil(n^(1 - block_exponent))`,
/// `h_j` is the first arborescence index whose prefix union reaches `j * s`
/// vertices (`1 <= j < b`), `h_b` is the last one, and block `j` is the union
/// of arborescences `h_{j-1} < i <= h_j`.
pub fn partition_blocks(
    forest: &ArborescenceForest,
    n: usize,
    params: &KoutParams,
) -> Result<BlockPartition> {
    if forest.n() != n {
        return Err(Error::invalid(format!(
            "forest has {} vertices, expected {n}",
            forest.n()
        )));
    }
    let limit = params.peel_threshold(n);
    let orders = forest.orders();
    if let Some(&big) = orders.iter().find(|&&o| o > limit) {
        return Err(Error::Contract(format!(
            "arborescence of order {big} exceeds the peeling threshold {limit}"
        )));
    }

    // rank components by their smallest vertex
    let mut rank = vec![usize::MAX; forest.component_count()];
    let mut by_rank = Vec::with_capacity(rank.len());
    for v in 0..n {
        let c = forest.component(v);
        if rank[c] == usize::MAX {
            rank[c] = by_rank.len();
            by_rank.push(c);
        }
    }

    let block_size = (n as f64).powf(params.block_exponent);
    let block_count = ((n as f64).powf(1.0 - params.block_exponent).ceil() as usize).max(1);
    let mut block_of_component = vec![0usize; forest.component_count()];
    let mut current = 1usize;
    let mut prefix = 0usize;
    for &c in &by_rank {
        block_of_component[c] = current - 1;
        prefix += orders[c];
        while current < block_count && prefix as f64 >= current as f64 * block_size {
            current += 1;
        }
    }

    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); block_count];
    for v in 0..n {
        blocks[block_of_component[forest.component(v)]].push(v);
    }
    blocks.retain(|b| !b.is_empty());
    BlockPartition::new(n, blocks)
}

#[derive(Clone, Debug)]
pub struct KoutColoring {
    pub coloring: EdgeColoring,
    pub blocks: BlockPartition,
    /// Edge ids of the first digraph's removed arcs (stripped, then peeled),
    /// all colored 2. Arc `(v, succ_1(v))` has edge id `v`.
    pub estar: Vec<EdgeId>,
    pub stripped: usize,
    pub peeled: usize,
    pub peel_iterations: usize,
    /// Arborescences of the first digraph after peeling.
    pub forest: ArborescenceForest,
    pub params: KoutParams,
}

/// Colors the orientation-free union of `r` functional digraphs.
///
/// Edge `i*n + v` (the arc `(v, succ_i(v))`) gets color 1 when both ends lie
/// in one block, color `i + 1` otherwise; the removed arcs of the first digraph
/// are then colored 2.
pub fn color_kout(digraphs: &[FunctionalDigraph], r: usize, params: KoutParams) -> Result<KoutColoring> {
    if r < 2 {
        return Err(Error::invalid(format!("color_kout needs r >= 2, got {r}")));
    }
    if digraphs.len() != r {
        return Err(Error::invalid(format!(
            "expected {r} digraphs, got {}",
            digraphs.len()
        )));
    }
    let n = digraphs[0].n();
    if digraphs.iter().any(|d| d.n() != n) {
        return Err(Error::invalid("digraphs must share one vertex set"));
    }

    let (stripped_forest, stripped) = strip_cycles(&digraphs[0]);
    let peeling = peel_arborescences(&stripped_forest, params.peel_threshold(n))?;
    let blocks = partition_blocks(&peeling.forest, n, &params)?;

    let mut in_estar = vec![false; n];
    for &(tail, _) in stripped.iter().chain(&peeling.cut) {
        in_estar[tail] = true;
    }

    let mut colors = Vec::with_capacity(r * n);
    for (i, d) in digraphs.iter().enumerate() {
        for (v, w) in d.arcs() {
            let color = if blocks.same_block(v, w) {
                1
            } else if i == 0 {
                if !in_estar[v] {
                    return Err(Error::Contract(format!(
                        "arc ({v}, {w}) of the first digraph crosses blocks but was never removed"
                    )));
                }
                2
            } else {
                i as u32 + 1
            };
            colors.push(color);
        }
    }
    let estar: Vec<EdgeId> = (0..n).filter(|&v| in_estar[v]).collect();
    for &e in &estar {
        colors[e] = 2;
    }

    Ok(KoutColoring {
        coloring: EdgeColoring::new(colors, r as u32)?,
        blocks,
        estar,
        stripped: stripped.len(),
        peeled: peeling.cut.len(),
        peel_iterations: peeling.iterations,
        forest: peeling.forest,
        params,
    })
}

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// One arc `(tail, head)` per edge id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub arcs: Vec<(usize, usize)>,
    n: usize,
}

impl Orientation {
    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(_, h) in &self.arcs {
            d[h] += 1;
        }
        d
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(t, _) in &self.arcs {
            d[t] += 1;
        }
        d
    }

    pub fn max_in_degree(&self) -> usize {
        self.in_degrees().into_iter().max().unwrap_or(0)
    }
}

/// Orients every edge along an Euler circuit of its component, so in- and
/// out-degree are both `degree / 2` everywhere. A `2r`-regular graph thus
/// gets maximum in-degree `r`.
pub fn euler_orient(g: &MultiGraph) -> Result<Orientation> {
    let degree = g.degree_sequence();
    if let Some((vertex, &degree)) = degree.iter().enumerate().find(|(_, &d)| d % 2 == 1) {
        return Err(Error::OddDegree { vertex, degree });
    }
    let adj = g.adjacency();
    let mut used = vec![false; g.m()];
    let mut cursor = vec![0usize; g.n()];
    let mut arcs = vec![(0, 0); g.m()];
    let mut stack = Vec::new();
    for start in 0..g.n() {
        stack.push(start);
        while let Some(&v) = stack.last() {
            let list = adj.neighbors(v);
            while cursor[v] < list.len() && used[list[cursor[v]].1] {
                cursor[v] += 1;
            }
            match list.get(cursor[v]) {
                Some(&(w, e)) => {
                    used[e] = true;
                    arcs[e] = (v, w);
                    stack.push(w);
                }
                None => {
                    stack.pop();
                }
            }
        }
    }
    Ok(Orientation { arcs, n: g.n() })
}

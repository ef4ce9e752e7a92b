use proptest::prelude::*;
use ramsey_regular::generators::{pairing_model, Seed};
use ramsey_regular::graph::{read_coloring, read_graph, write_coloring, write_graph};
use ramsey_regular::{EdgeColoring, MultiGraph};

#[test]
fn component_examples() {
    let tri = MultiGraph::cycle(3);
    assert_eq!(tri.components(|_| true), vec![vec![0, 1, 2]]);
    let g = MultiGraph::complete(5);
    assert_eq!(g.components(|_| false).len(), 5);
    let p = MultiGraph::new(4, vec![(0, 1), (1, 2)]).unwrap();
    assert_eq!(p.components(|_| true), vec![vec![0, 1, 2], vec![3]]);
}

#[test]
fn induced_subgraph_examples() {
    let k4 = MultiGraph::complete(4);
    let all = k4.induced_subgraph(|_| true);
    assert_eq!(all.graph, k4);
    let none = k4.induced_subgraph(|_| false);
    assert_eq!((none.graph.n(), none.graph.m()), (4, 0));
    // a perfect matching of K4: {0,1} and {2,3}
    let matching: Vec<usize> = (0..k4.m())
        .filter(|&e| matches!(k4.edge(e), (0, 1) | (2, 3)))
        .collect();
    let sub = k4.induced_subgraph(|e| matching.contains(&e));
    assert_eq!(sub.graph.m(), 2);
    assert_eq!(sub.original, matching);
    assert_eq!(sub.graph.component_sizes(|_| true), vec![2, 2]);
}

#[test]
fn degree_examples() {
    assert_eq!(MultiGraph::new(1, vec![(0, 0)]).unwrap().degree_sequence(), vec![2]);
    assert_eq!(MultiGraph::cycle(5).degree_sequence(), vec![2; 5]);
}

fn arb_graph() -> impl Strategy<Value = MultiGraph> {
    (1usize..30).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..60)
            .prop_map(move |edges| MultiGraph::new(n, edges).unwrap())
    })
}

proptest! {
    #[test]
    fn components_partition_vertices(g in arb_graph(), mask in any::<u64>()) {
        let keep = |e: usize| mask >> (e % 64) & 1 == 1;
        let comps = g.components(keep);
        let mut all: Vec<usize> = comps.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.n()).collect::<Vec<_>>());
        prop_assert!(comps.windows(2).all(|w| w[0].len() >= w[1].len()));
        let sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
        prop_assert_eq!(sizes, g.component_sizes(keep));
    }

    #[test]
    fn induced_then_components_matches_predicate(g in arb_graph(), mask in any::<u64>()) {
        let keep = |e: usize| mask >> (e % 64) & 1 == 1;
        let sub = g.induced_subgraph(keep);
        prop_assert_eq!(sub.graph.components(|_| true), g.components(keep));
        for (new, &old) in sub.original.iter().enumerate() {
            prop_assert_eq!(sub.graph.edge(new), g.edge(old));
        }
    }

    #[test]
    fn degrees_sum_to_twice_edges(g in arb_graph()) {
        prop_assert_eq!(g.degree_sequence().iter().sum::<usize>(), 2 * g.m());
        let adj = g.adjacency();
        let loops = g.loop_count();
        let listed: usize = (0..g.n()).map(|v| adj.neighbors(v).len()).sum();
        prop_assert_eq!(listed, 2 * g.m() - loops);
    }

    #[test]
    fn text_round_trip(g in arb_graph(), seed in any::<u64>()) {
        let mut buf = Vec::new();
        write_graph(&mut buf, &g).unwrap();
        prop_assert_eq!(read_graph(&buf[..]).unwrap(), g.clone());
        let colors: Vec<u32> = (0..g.m()).map(|e| ((seed >> (e % 60)) & 3) as u32 + 1).collect();
        let c = EdgeColoring::new(colors, 4).unwrap();
        let mut buf = Vec::new();
        write_coloring(&mut buf, &c).unwrap();
        prop_assert_eq!(read_coloring(&buf[..], Some(4)).unwrap(), c);
    }

    #[test]
    fn pairing_components_cover(n in 2usize..200, d in 1usize..7, seed in any::<u64>()) {
        prop_assume!(n * d % 2 == 0);
        let g = pairing_model(n, d, Seed(seed)).unwrap();
        prop_assert_eq!(g.component_sizes(|_| true).iter().sum::<usize>(), n);
    }
}

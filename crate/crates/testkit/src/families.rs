//! Small reference graphs used across the test suites.

use centra_core::graph::{WeightKind, WeightedDigraph};
use centra_core::rng::Xoshiro256StarStar;

/// Builds an undirected graph from one entry per undirected edge.
pub fn undirected(n: usize, edges: &[(u32, u32, f64)], kind: WeightKind) -> WeightedDigraph {
    let mut directed = Vec::with_capacity(edges.len() * 2);
    for &(a, b, w) in edges {
        directed.push((a, b, w));
        directed.push((b, a, w));
    }
    WeightedDigraph::build(n, &directed, kind).expect("valid reference graph")
}

/// The 8-node two-route family.
///
/// Two hub nodes (2 and 3) are joined by two parallel 2-hop routes: one
/// through gate node 0 with edge weights `via_gate0`, one through gate
/// node 1 with edge weights `via_gate1`. Each hub carries two unit-weight
/// leaves (4, 5 on hub 2; 6, 7 on hub 3). All hub-to-opposite-side
/// traffic picks the cheaper gate, which makes the gates' betweenness
/// jump discontinuously as the weights cross.
pub fn two_route_gadget(via_gate0: f64, via_gate1: f64, kind: WeightKind) -> WeightedDigraph {
    undirected(
        8,
        &[
            (0, 2, via_gate0),
            (0, 3, via_gate0),
            (1, 2, via_gate1),
            (1, 3, via_gate1),
            (4, 2, 1.0),
            (5, 2, 1.0),
            (6, 3, 1.0),
            (7, 3, 1.0),
        ],
        kind,
    )
}

/// A single undirected edge of weight `w` between two nodes.
pub fn two_node_pair(w: f64, kind: WeightKind) -> WeightedDigraph {
    undirected(2, &[(0, 1, w)], kind)
}

/// Random directed graph on `n` nodes: each ordered pair becomes an edge
/// with probability `edge_prob`. Unit weights force shortest-path ties;
/// otherwise weights are uniform in `[0.5, 1.5]`.
pub fn random_digraph(
    n: usize,
    edge_prob: f64,
    unit_weights: bool,
    seed: u64,
    kind: WeightKind,
) -> WeightedDigraph {
    let mut rng = Xoshiro256StarStar::from_seed(seed);
    let mut edges = Vec::new();
    for i in 0..n as u32 {
        for j in 0..n as u32 {
            if i != j && rng.bernoulli(edge_prob) {
                let w = if unit_weights {
                    1.0
                } else {
                    rng.uniform(0.5, 1.5)
                };
                edges.push((i, j, w));
            }
        }
    }
    WeightedDigraph::build(n, &edges, kind).expect("generated edges are valid")
}

/// Random undirected graph on `n` nodes; see [`random_digraph`].
pub fn random_undirected(
    n: usize,
    edge_prob: f64,
    unit_weights: bool,
    seed: u64,
    kind: WeightKind,
) -> WeightedDigraph {
    let mut rng = Xoshiro256StarStar::from_seed(seed);
    let mut edges = Vec::new();
    for i in 0..n as u32 {
        for j in (i + 1)..n as u32 {
            if rng.bernoulli(edge_prob) {
                let w = if unit_weights {
                    1.0
                } else {
                    rng.uniform(0.5, 1.5)
                };
                edges.push((i, j, w));
            }
        }
    }
    undirected(n, &edges, kind)
}

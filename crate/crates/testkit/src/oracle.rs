//! Brute-force oracles by exhaustive simple-path enumeration.
//!
//! Strictly positive weights make every shortest path simple, so
//! enumerating all simple paths between a pair yields the exact shortest
//! length, the number of shortest paths, and how many pass through each
//! interior node. Feasible up to a handful of nodes; the oracles assert
//! `n <= 16`.

use centra_core::graph::WeightedDigraph;
use centra_core::shortest_paths::lengths_tie;

/// All simple paths from `s` to `t` as `(length, interior-node bitmask)`.
struct PathSet {
    paths: Vec<(f64, u16)>,
}

impl PathSet {
    fn min_length(&self) -> f64 {
        self.paths
            .iter()
            .map(|&(len, _)| len)
            .fold(f64::INFINITY, f64::min)
    }
}

/// Exhaustive-path oracle over one graph.
pub struct PathOracle<'g> {
    g: &'g WeightedDigraph,
    tol: f64,
}

impl<'g> PathOracle<'g> {
    pub fn new(g: &'g WeightedDigraph, tol: f64) -> Self {
        assert!(g.node_count() <= 16, "oracle is exponential in n");
        Self { g, tol }
    }

    fn enumerate(&self, s: u32, t: u32, forbidden: Option<u32>) -> PathSet {
        let mut paths = Vec::new();
        let mut visited: u16 = 1 << s;
        if let Some(x) = forbidden {
            visited |= 1 << x;
        }
        if forbidden == Some(s) || forbidden == Some(t) {
            return PathSet { paths };
        }
        self.dfs(s, t, 0.0, 0, &mut visited, &mut paths);
        PathSet { paths }
    }

    fn dfs(
        &self,
        node: u32,
        t: u32,
        length: f64,
        interior: u16,
        visited: &mut u16,
        paths: &mut Vec<(f64, u16)>,
    ) {
        if node == t {
            paths.push((length, interior));
            return;
        }
        for &(next, w) in self.g.out_edges(node) {
            let bit = 1u16 << next;
            if *visited & bit != 0 {
                continue;
            }
            *visited |= bit;
            let interior = if next == t { interior } else { interior | bit };
            self.dfs(next, t, length + w, interior, visited, paths);
            *visited &= !bit;
        }
    }

    /// Shortest path length from `s` to `t`; infinite when unreachable.
    pub fn shortest_length(&self, s: u32, t: u32) -> f64 {
        if s == t {
            return 0.0;
        }
        self.enumerate(s, t, None).min_length()
    }

    /// Shortest path length avoiding `forbidden` entirely.
    pub fn shortest_length_avoiding(&self, s: u32, t: u32, forbidden: u32) -> f64 {
        if s == t {
            return 0.0;
        }
        self.enumerate(s, t, Some(forbidden)).min_length()
    }

    /// `(sigma, sigma through x for each node)` for the ordered pair.
    fn shortest_path_counts(&self, s: u32, t: u32) -> (u64, Vec<u64>) {
        let n = self.g.node_count();
        let set = self.enumerate(s, t, None);
        let min = set.min_length();
        let mut sigma = 0u64;
        let mut through = vec![0u64; n];
        if min.is_finite() {
            for &(len, interior) in &set.paths {
                if lengths_tie(len, min, self.tol) {
                    sigma += 1;
                    for (x, count) in through.iter_mut().enumerate() {
                        if interior & (1 << x) != 0 {
                            *count += 1;
                        }
                    }
                }
            }
        }
        (sigma, through)
    }

    /// Betweenness of every node: sum over ordered pairs of other nodes
    /// of the fraction of shortest paths through the node.
    pub fn betweenness(&self) -> Vec<f64> {
        let n = self.g.node_count();
        let mut values = vec![0.0; n];
        for s in 0..n as u32 {
            for t in 0..n as u32 {
                if s == t {
                    continue;
                }
                let (sigma, through) = self.shortest_path_counts(s, t);
                if sigma == 0 {
                    continue;
                }
                for (x, &count) in through.iter().enumerate() {
                    if x as u32 != s && x as u32 != t && count > 0 {
                        values[x] += count as f64 / sigma as f64;
                    }
                }
            }
        }
        values
    }

    /// Sum of shortest path lengths from each node to all others.
    pub fn closeness_decentrality(&self) -> Vec<f64> {
        let n = self.g.node_count();
        (0..n as u32)
            .map(|s| {
                (0..n as u32)
                    .map(|t| self.shortest_length(s, t))
                    .sum::<f64>()
            })
            .collect()
    }

    /// Stable betweenness of every node: total shortest-path increase
    /// over ordered pairs when the node is removed, with `inf - inf = 0`.
    pub fn stable_betweenness(&self) -> Vec<f64> {
        let n = self.g.node_count();
        let mut values = vec![0.0; n];
        for x in 0..n as u32 {
            let mut acc = 0.0;
            for s in 0..n as u32 {
                for t in 0..n as u32 {
                    if s == t || s == x || t == x {
                        continue;
                    }
                    let with = self.shortest_length(s, t);
                    let without = self.shortest_length_avoiding(s, t, x);
                    match (without.is_finite(), with.is_finite()) {
                        (false, false) => {}
                        (false, true) => acc = f64::INFINITY,
                        (true, true) => acc += without - with,
                        (true, false) => unreachable!("removal cannot connect a pair"),
                    }
                }
            }
            values[x as usize] = acc;
        }
        values
    }
}

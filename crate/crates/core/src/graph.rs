//! Weighted directed graphs, the weight-space metric, and node deletion.
//!
//! A graph is a fixed node set `0..n`, a set of directed edges, and a
//! strictly positive weight per edge. Weights are tagged as similarities
//! (bigger = closer) or dissimilarities (bigger = farther); measures check
//! the tag so a graph is never fed to the wrong family. Undirected graphs
//! are represented as symmetric directed edge sets with equal weights in
//! both directions.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Interpretation of edge weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    /// Larger weight means more strongly connected (degree-family measures).
    Similarity,
    /// Larger weight means farther apart (path-based measures).
    Dissimilarity,
}

/// Weight-space conversion between the two interpretations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConversionRule {
    /// `w -> 2 - w`; requires every weight below 2. Dual of the random
    /// network model, which keeps `[0.5, 1.5]` weights inside `[0.5, 1.5]`.
    AffineTwoMinus,
    /// `w -> 1 / w`; the usual transformation for measured interaction data.
    Reciprocal,
}

/// Immutable weighted digraph without self-loops.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedDigraph {
    n: usize,
    // Out-adjacency, each list sorted by target id. Iterating sources in
    // order yields the canonical sorted edge order used everywhere
    // determinism matters.
    out: Vec<Vec<(u32, f64)>>,
    edge_count: usize,
    weight_kind: WeightKind,
}

impl WeightedDigraph {
    /// Builds a graph from a directed edge list.
    ///
    /// Insertion order is irrelevant: edges are stored sorted. Rejects
    /// self-loops, non-positive (or non-finite) weights, out-of-range node
    /// ids, and duplicate directed edges.
    pub fn build(n: usize, edges: &[(u32, u32, f64)], weight_kind: WeightKind) -> Result<Self> {
        let mut out: Vec<Vec<(u32, f64)>> = vec![Vec::new(); n];
        for &(src, dst, w) in edges {
            if src as usize >= n {
                return Err(Error::NodeOutOfRange { node: src, n });
            }
            if dst as usize >= n {
                return Err(Error::NodeOutOfRange { node: dst, n });
            }
            if src == dst {
                return Err(Error::SelfLoop { node: src });
            }
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::NonPositiveWeight { src, dst, weight: w });
            }
            out[src as usize].push((dst, w));
        }
        for (src, list) in out.iter_mut().enumerate() {
            list.sort_unstable_by_key(|&(dst, _)| dst);
            for pair in list.windows(2) {
                if pair[0].0 == pair[1].0 {
                    return Err(Error::DuplicateEdge {
                        src: src as u32,
                        dst: pair[0].0,
                    });
                }
            }
        }
        Ok(Self {
            n,
            out,
            edge_count: edges.len(),
            weight_kind,
        })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    /// Number of directed edges (a symmetric pair counts twice).
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn weight_kind(&self) -> WeightKind {
        self.weight_kind
    }

    /// Out-edges of `x`, sorted by target id.
    pub fn out_edges(&self, x: u32) -> &[(u32, f64)] {
        &self.out[x as usize]
    }

    /// Weight of the directed edge `(src, dst)` if present.
    pub fn weight(&self, src: u32, dst: u32) -> Option<f64> {
        let list = &self.out[src as usize];
        list.binary_search_by_key(&dst, |&(d, _)| d)
            .ok()
            .map(|i| list[i].1)
    }

    /// Directed edges in sorted `(src, dst)` order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32, f64)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(src, list)| list.iter().map(move |&(dst, w)| (src as u32, dst, w)))
    }

    pub(crate) fn check_kind(&self, expected: WeightKind) -> Result<()> {
        if self.weight_kind != expected {
            return Err(Error::WrongWeightKind {
                expected,
                found: self.weight_kind,
            });
        }
        Ok(())
    }

    /// True when every edge has a reverse edge of exactly equal weight,
    /// i.e. the graph is the directed encoding of an undirected graph.
    pub fn is_symmetric(&self) -> bool {
        self.edges()
            .all(|(src, dst, w)| self.weight(dst, src) == Some(w))
    }

    /// True when the underlying undirected skeleton is connected
    /// (every node reachable ignoring edge directions). Vacuously true
    /// for the empty graph and single nodes.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut parent: Vec<u32> = (0..self.n as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for (src, dst, _) in self.edges() {
            let a = find(&mut parent, src);
            let b = find(&mut parent, dst);
            if a != b {
                parent[a as usize] = b;
            }
        }
        let root = find(&mut parent, 0);
        (1..self.n as u32).all(|x| find(&mut parent, x) == root)
    }

    /// Same topology, converted weights, flipped weight kind.
    pub fn convert_weights(&self, rule: ConversionRule) -> Result<Self> {
        let mut out = self.out.clone();
        for (src, list) in out.iter_mut().enumerate() {
            for (dst, w) in list.iter_mut() {
                let converted = match rule {
                    ConversionRule::AffineTwoMinus => {
                        if *w >= 2.0 {
                            return Err(Error::WeightOutOfRange {
                                src: src as u32,
                                dst: *dst,
                                weight: *w,
                            });
                        }
                        2.0 - *w
                    }
                    ConversionRule::Reciprocal => 1.0 / *w,
                };
                *w = converted;
            }
        }
        Ok(Self {
            n: self.n,
            out,
            edge_count: self.edge_count,
            weight_kind: match self.weight_kind {
                WeightKind::Similarity => WeightKind::Dissimilarity,
                WeightKind::Dissimilarity => WeightKind::Similarity,
            },
        })
    }

    /// Deletes node `x` and every edge incident to it.
    ///
    /// Remaining node ids are compacted preserving order (`y` stays `y`
    /// below `x` and becomes `y - 1` above); the returned mapping relates
    /// new ids back to the original ones.
    pub fn remove_node(&self, x: u32) -> Result<NodeRemoval> {
        if x as usize >= self.n {
            return Err(Error::NodeOutOfRange { node: x, n: self.n });
        }
        let renumber = |y: u32| if y > x { y - 1 } else { y };
        let mut out: Vec<Vec<(u32, f64)>> = Vec::with_capacity(self.n - 1);
        let mut edge_count = 0;
        for (src, list) in self.out.iter().enumerate() {
            if src as u32 == x {
                continue;
            }
            let kept: Vec<(u32, f64)> = list
                .iter()
                .filter(|&&(dst, _)| dst != x)
                .map(|&(dst, w)| (renumber(dst), w))
                .collect();
            edge_count += kept.len();
            out.push(kept);
        }
        let old_to_new: Vec<Option<u32>> = (0..self.n as u32)
            .map(|y| if y == x { None } else { Some(renumber(y)) })
            .collect();
        let new_to_old: Vec<u32> = (0..self.n as u32).filter(|&y| y != x).collect();
        Ok(NodeRemoval {
            graph: Self {
                n: self.n - 1,
                out,
                edge_count,
                weight_kind: self.weight_kind,
            },
            removed: x,
            old_to_new,
            new_to_old,
        })
    }

    /// Dense adjacency matrix: `A[i][j]` is the weight of `(i, j)`, zero
    /// when the edge is absent; the diagonal is always zero.
    pub fn adjacency_matrix(&self) -> Matrix {
        let mut a = Matrix::zeros(self.n);
        for (src, dst, w) in self.edges() {
            a.set(src as usize, dst as usize, w);
        }
        a
    }
}

/// Result of deleting a node: the reduced graph plus the id mappings.
#[derive(Debug, Clone)]
pub struct NodeRemoval {
    pub graph: WeightedDigraph,
    pub removed: u32,
    /// Original id -> compacted id; `None` for the removed node.
    pub old_to_new: Vec<Option<u32>>,
    /// Compacted id -> original id.
    pub new_to_old: Vec<u32>,
}

/// Two graphs over identical node and edge sets, differing only in weights.
#[derive(Debug, Clone)]
pub struct GraphPair {
    g: WeightedDigraph,
    h: WeightedDigraph,
}

impl GraphPair {
    /// Validates that both graphs share node count, edge set, and weight kind.
    pub fn new(g: WeightedDigraph, h: WeightedDigraph) -> Result<Self> {
        if g.weight_kind() != h.weight_kind() {
            return Err(Error::WrongWeightKind {
                expected: g.weight_kind(),
                found: h.weight_kind(),
            });
        }
        if g.node_count() != h.node_count() || g.edge_count() != h.edge_count() {
            return Err(Error::TopologyMismatch);
        }
        let same_topology = g
            .edges()
            .zip(h.edges())
            .all(|((s1, d1, _), (s2, d2, _))| s1 == s2 && d1 == d2);
        if !same_topology {
            return Err(Error::TopologyMismatch);
        }
        Ok(Self { g, h })
    }

    pub fn g(&self) -> &WeightedDigraph {
        &self.g
    }

    pub fn h(&self) -> &WeightedDigraph {
        &self.h
    }
}

/// The weight-space metric: sum over directed edges of `|W(e) - W'(e)|`.
///
/// Symmetric pairs contribute both directions, so changing one undirected
/// edge by `eps` moves the pair `2 * eps` apart.
pub fn graph_distance(pair: &GraphPair) -> f64 {
    pair.g
        .edges()
        .zip(pair.h.edges())
        .map(|((_, _, w), (_, _, w2))| (w - w2).abs())
        .sum()
}

/// Convenience wrapper validating topology before measuring distance.
pub fn graph_distance_between(g: &WeightedDigraph, h: &WeightedDigraph) -> Result<f64> {
    let pair = GraphPair::new(g.clone(), h.clone())?;
    Ok(graph_distance(&pair))
}

//! Single-source and all-pairs shortest path lengths with shortest-path
//! multiplicity counting.
//!
//! Dijkstra with a binary heap; correct for the strictly positive weights
//! enforced at graph construction. Two path lengths count as tied when
//! they agree within a relative tolerance, which absorbs summation
//! round-off on unit-weight graphs without disturbing any deliberate
//! perturbation (experiment epsilons are many orders larger).

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{WeightKind, WeightedDigraph};
use crate::length::ExtendedLength;

/// Default relative tolerance for treating two path lengths as equal.
pub const DEFAULT_TIE_TOL: f64 = 1e-9;

/// True when `a` and `b` are equal within relative tolerance `tol`.
#[inline]
pub fn lengths_tie(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.max(b)
}

/// Distances and shortest-path counts from one source.
#[derive(Debug, Clone)]
pub struct SsspResult {
    pub source: u32,
    /// Shortest path length per target; infinite when unreachable.
    pub dist: Vec<ExtendedLength>,
    /// Number of distinct shortest paths per target; `sigma[source] = 1`,
    /// zero for unreachable targets.
    pub sigma: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct HeapItem {
    dist: f64,
    node: u32,
}

impl Eq for HeapItem {}

impl Ord for HeapItem {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed: BinaryHeap is a max-heap, we want the smallest distance.
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Dijkstra from `source` with shortest-path counting.
///
/// Requires dissimilarity weights. A candidate path within `tie_tol`
/// (relative) of the current best is counted as another shortest path;
/// a strictly better one resets the count.
pub fn sssp_with_counts(
    g: &WeightedDigraph,
    source: u32,
    tie_tol: f64,
) -> Result<SsspResult> {
    g.check_kind(WeightKind::Dissimilarity)?;
    let n = g.node_count();
    if source as usize >= n {
        return Err(Error::NodeOutOfRange { node: source, n });
    }

    let mut dist = vec![f64::INFINITY; n];
    let mut sigma = vec![0u64; n];
    let mut settled = vec![false; n];
    let mut heap = BinaryHeap::new();

    dist[source as usize] = 0.0;
    sigma[source as usize] = 1;
    heap.push(HeapItem {
        dist: 0.0,
        node: source,
    });

    while let Some(HeapItem { dist: d, node: u }) = heap.pop() {
        if settled[u as usize] {
            continue;
        }
        settled[u as usize] = true;
        for &(v, w) in g.out_edges(u) {
            if settled[v as usize] {
                continue;
            }
            let candidate = d + w;
            let current = dist[v as usize];
            if current.is_finite() && lengths_tie(candidate, current, tie_tol) {
                sigma[v as usize] = sigma[v as usize]
                    .checked_add(sigma[u as usize])
                    .ok_or(Error::CountOverflow)?;
            } else if candidate < current {
                dist[v as usize] = candidate;
                sigma[v as usize] = sigma[u as usize];
                heap.push(HeapItem {
                    dist: candidate,
                    node: v,
                });
            }
        }
    }

    let dist = dist
        .into_iter()
        .map(|d| {
            if d.is_finite() {
                ExtendedLength::finite(d)
            } else {
                ExtendedLength::INFINITY
            }
        })
        .collect();
    Ok(SsspResult {
        source,
        dist,
        sigma,
    })
}

/// Shortest-path runs from every source, in source order.
pub fn all_sssp(g: &WeightedDigraph, tie_tol: f64) -> Result<Vec<SsspResult>> {
    (0..g.node_count() as u32)
        .map(|s| sssp_with_counts(g, s, tie_tol))
        .collect()
}

/// All-pairs shortest path lengths.
#[derive(Debug, Clone)]
pub struct ApspResult {
    n: usize,
    dist: Vec<ExtendedLength>,
}

impl ApspResult {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dist(&self, i: usize, j: usize) -> ExtendedLength {
        self.dist[i * self.n + j]
    }
}

/// All-pairs shortest paths as independent single-source runs; no
/// reweighting is needed because weights are strictly positive.
pub fn apsp(g: &WeightedDigraph) -> Result<ApspResult> {
    let n = g.node_count();
    let mut dist = Vec::with_capacity(n * n);
    for s in 0..n as u32 {
        let run = sssp_with_counts(g, s, DEFAULT_TIE_TOL)?;
        dist.extend(run.dist);
    }
    Ok(ApspResult { n, dist })
}

//! Node centrality and decentrality measures.
//!
//! Degree-family measures consume similarity weights; path-based measures
//! consume dissimilarity weights. None of the measures normalize their
//! values: rankings are invariant to normalization and the raw values keep
//! hand-checkable examples exact.
//!
//! Closeness decentrality and stable betweenness stay defined on
//! disconnected graphs through the infinity conventions of
//! [`crate::length`]; eigenvector centrality instead requires a connected
//! symmetric graph, since positivity of the dominant eigenvector fails
//! without it.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{WeightKind, WeightedDigraph};
use crate::length::{extended_subtract, ExtendedLength};
use crate::linalg::l2_norm;
use crate::shortest_paths::{all_sssp, apsp, lengths_tie, sssp_with_counts, DEFAULT_TIE_TOL};

/// The measures implemented by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Measure {
    Degree,
    OutDegree,
    InDegree,
    ClosenessDecentrality,
    Closeness,
    Betweenness,
    Eigenvector,
    StableBetweenness,
    DegreeSquared,
    FloorDegree,
}

impl Measure {
    pub const ALL: [Measure; 10] = [
        Measure::Degree,
        Measure::OutDegree,
        Measure::InDegree,
        Measure::ClosenessDecentrality,
        Measure::Closeness,
        Measure::Betweenness,
        Measure::Eigenvector,
        Measure::StableBetweenness,
        Measure::DegreeSquared,
        Measure::FloorDegree,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Measure::Degree => "degree",
            Measure::OutDegree => "out_degree",
            Measure::InDegree => "in_degree",
            Measure::ClosenessDecentrality => "closeness_decentrality",
            Measure::Closeness => "closeness",
            Measure::Betweenness => "betweenness",
            Measure::Eigenvector => "eigenvector",
            Measure::StableBetweenness => "stable_betweenness",
            Measure::DegreeSquared => "degree_squared",
            Measure::FloorDegree => "floor_degree",
        }
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Measure::ALL
            .into_iter()
            .find(|m| m.label() == label)
            .ok_or_else(|| Error::UnknownMeasure(label.into()))
    }

    /// Which weight interpretation the measure consumes.
    pub fn required_kind(self) -> WeightKind {
        match self {
            Measure::Degree
            | Measure::OutDegree
            | Measure::InDegree
            | Measure::Eigenvector
            | Measure::DegreeSquared
            | Measure::FloorDegree => WeightKind::Similarity,
            Measure::ClosenessDecentrality
            | Measure::Closeness
            | Measure::Betweenness
            | Measure::StableBetweenness => WeightKind::Dissimilarity,
        }
    }

    pub fn orientation(self) -> Orientation {
        match self {
            Measure::ClosenessDecentrality => Orientation::LowerIsCentral,
            _ => Orientation::HigherIsCentral,
        }
    }
}

/// Whether large or small values mark central nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    HigherIsCentral,
    LowerIsCentral,
}

/// Per-node nonnegative scores produced by one measure.
///
/// Values may be infinite for closeness decentrality (a node with an
/// unreachable target) and stable betweenness (a cut node); infinities
/// sort like any other value.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityVector {
    pub measure: Measure,
    pub values: Vec<f64>,
    pub orientation: Orientation,
}

impl CentralityVector {
    fn new(measure: Measure, values: Vec<f64>) -> Self {
        debug_assert!(values.iter().all(|v| *v >= 0.0));
        Self {
            measure,
            values,
            orientation: measure.orientation(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Which incident edges a degree-family measure sums over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeMode {
    /// Sum of incident edge weights; requires a symmetric graph.
    Undirected,
    Out,
    In,
}

/// Tunable numerical parameters shared by the measures.
#[derive(Debug, Clone, Copy)]
pub struct MeasureParams {
    /// Relative tolerance for shortest-path ties.
    pub tie_tol: f64,
    /// Convergence threshold for the eigenvector iteration.
    pub eig_tol: f64,
    /// Iteration cap for the eigenvector iteration.
    pub eig_max_iter: usize,
}

impl Default for MeasureParams {
    fn default() -> Self {
        Self {
            tie_tol: DEFAULT_TIE_TOL,
            eig_tol: 1e-12,
            eig_max_iter: 100_000,
        }
    }
}

/// Weighted degree: sum of incident edge weights.
pub fn degree(g: &WeightedDigraph, mode: DegreeMode) -> Result<CentralityVector> {
    g.check_kind(WeightKind::Similarity)?;
    let n = g.node_count();
    let measure = match mode {
        DegreeMode::Undirected => {
            if !g.is_symmetric() {
                return Err(Error::NotSymmetric);
            }
            Measure::Degree
        }
        DegreeMode::Out => Measure::OutDegree,
        DegreeMode::In => Measure::InDegree,
    };
    let mut values = vec![0.0; n];
    for (src, dst, w) in g.edges() {
        match mode {
            // Symmetric storage makes the outgoing sum equal the incident sum.
            DegreeMode::Undirected | DegreeMode::Out => values[src as usize] += w,
            DegreeMode::In => values[dst as usize] += w,
        }
    }
    Ok(CentralityVector::new(measure, values))
}

/// Sum of squared incident edge weights (outgoing).
pub fn degree_squared(g: &WeightedDigraph) -> Result<CentralityVector> {
    g.check_kind(WeightKind::Similarity)?;
    let mut values = vec![0.0; g.node_count()];
    for (src, _, w) in g.edges() {
        values[src as usize] += w * w;
    }
    Ok(CentralityVector::new(Measure::DegreeSquared, values))
}

/// Sum of floored incident edge weights (outgoing).
pub fn floor_degree(g: &WeightedDigraph) -> Result<CentralityVector> {
    g.check_kind(WeightKind::Similarity)?;
    let mut values = vec![0.0; g.node_count()];
    for (src, _, w) in g.edges() {
        values[src as usize] += libm::floor(w);
    }
    Ok(CentralityVector::new(Measure::FloorDegree, values))
}

/// Closeness decentrality: the sum of shortest path lengths to every other
/// node. Lower is more central; a node with any unreachable target gets an
/// infinite value.
pub fn closeness_decentrality(g: &WeightedDigraph) -> Result<CentralityVector> {
    g.check_kind(WeightKind::Dissimilarity)?;
    let n = g.node_count();
    let mut values = Vec::with_capacity(n);
    for s in 0..n as u32 {
        let run = sssp_with_counts(g, s, DEFAULT_TIE_TOL)?;
        let total = run
            .dist
            .iter()
            .fold(ExtendedLength::ZERO, |acc, &d| acc + d);
        values.push(total.value());
    }
    Ok(CentralityVector::new(
        Measure::ClosenessDecentrality,
        values,
    ))
}

/// Closeness centrality: reciprocal of the decentrality sum. Only defined
/// on strongly connected graphs; errors otherwise. The induced ranking is
/// identical to the decentrality ranking.
pub fn closeness(g: &WeightedDigraph) -> Result<CentralityVector> {
    let decentrality = closeness_decentrality(g)?;
    let mut values = Vec::with_capacity(decentrality.len());
    for &v in &decentrality.values {
        if !v.is_finite() {
            return Err(Error::NotConnected);
        }
        // A single node has decentrality 0; its closeness is infinite but
        // that degenerate case never reaches here with n > 1 connected.
        values.push(if v == 0.0 { f64::INFINITY } else { 1.0 / v });
    }
    Ok(CentralityVector::new(Measure::Closeness, values))
}

/// Betweenness centrality: for every ordered pair of other nodes, the
/// fraction of shortest paths passing through the node.
///
/// Computed from per-source distance/count runs through the composition
/// rule: paths from `s` to `t` through `x` are exactly the products of
/// shortest paths `s -> x` and `x -> t` when `d(s,x) + d(x,t) = d(s,t)`.
pub fn betweenness(g: &WeightedDigraph, tie_tol: f64) -> Result<CentralityVector> {
    g.check_kind(WeightKind::Dissimilarity)?;
    let n = g.node_count();
    let runs = all_sssp(g, tie_tol)?;
    let mut values = vec![0.0; n];
    for x in 0..n {
        let mut acc = 0.0;
        for s in 0..n {
            if s == x {
                continue;
            }
            let run_s = &runs[s];
            let d_sx = run_s.dist[x];
            if d_sx.is_infinite() {
                continue;
            }
            let sigma_sx = run_s.sigma[x];
            let run_x = &runs[x];
            for t in 0..n {
                if t == x || t == s {
                    continue;
                }
                let d_st = run_s.dist[t];
                if d_st.is_infinite() || run_s.sigma[t] == 0 {
                    continue;
                }
                let d_xt = run_x.dist[t];
                if d_xt.is_infinite() {
                    continue;
                }
                let through = d_sx.value() + d_xt.value();
                if lengths_tie(through, d_st.value(), tie_tol) {
                    let through_count = sigma_sx as u128 * run_x.sigma[t] as u128;
                    acc += through_count as f64 / run_s.sigma[t] as f64;
                }
            }
        }
        values[x] = acc;
    }
    Ok(CentralityVector::new(Measure::Betweenness, values))
}

/// Stable betweenness: for every ordered pair of other nodes, the increase
/// in shortest path length caused by deleting the node.
///
/// Uses the `inf - inf = 0` convention, so no connectivity assumption is
/// needed; deleting a cut node yields an infinite value.
pub fn stable_betweenness(g: &WeightedDigraph) -> Result<CentralityVector> {
    g.check_kind(WeightKind::Dissimilarity)?;
    let n = g.node_count();
    let base = apsp(g)?;
    let mut values = vec![0.0; n];
    for x in 0..n as u32 {
        let removal = g.remove_node(x)?;
        let reduced = apsp(&removal.graph)?;
        let mut acc = 0.0;
        for a in 0..n - 1 {
            let orig_a = removal.new_to_old[a] as usize;
            for b in 0..n - 1 {
                if a == b {
                    continue;
                }
                let orig_b = removal.new_to_old[b] as usize;
                let increase = path_increase(reduced.dist(a, b), base.dist(orig_a, orig_b))?;
                acc += increase.value();
            }
        }
        values[x as usize] = acc;
    }
    Ok(CentralityVector::new(Measure::StableBetweenness, values))
}

/// `reduced - base` where deletion can only lengthen paths. A negative
/// difference within the shortest-path tie tolerance is a tie between two
/// float representatives of equal-length paths and counts as zero; a
/// larger one is a genuine inconsistency and propagates as an error.
fn path_increase(reduced: ExtendedLength, base: ExtendedLength) -> Result<ExtendedLength> {
    match extended_subtract(reduced, base) {
        Err(Error::NegativeDifference)
            if reduced.is_finite() && lengths_tie(reduced.value(), base.value(), DEFAULT_TIE_TOL) =>
        {
            Ok(ExtendedLength::ZERO)
        }
        other => other,
    }
}

/// Eigenvector centrality: the dominant eigenvector of the adjacency
/// matrix, normalized to unit Euclidean norm.
///
/// Power iteration on `A + I`; the shift leaves eigenvectors untouched and
/// guarantees convergence on bipartite graphs, where `A` alone has a
/// matching negative eigenvalue. Requires similarity weights and a
/// connected symmetric graph, so every entry is strictly positive and at
/// most 1.
pub fn eigenvector(g: &WeightedDigraph, tol: f64, max_iter: usize) -> Result<CentralityVector> {
    let (values, _) = eigenvector_with_value(g, tol, max_iter)?;
    Ok(values)
}

/// As [`eigenvector`], also returning the dominant eigenvalue of `A`.
pub fn eigenvector_with_value(
    g: &WeightedDigraph,
    tol: f64,
    max_iter: usize,
) -> Result<(CentralityVector, f64)> {
    g.check_kind(WeightKind::Similarity)?;
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.node_count();
    if n == 0 {
        return Ok((CentralityVector::new(Measure::Eigenvector, Vec::new()), 0.0));
    }
    if n == 1 {
        return Ok((CentralityVector::new(Measure::Eigenvector, vec![1.0]), 0.0));
    }

    let mut v = vec![1.0 / libm::sqrt(n as f64); n];
    let mut next = vec![0.0; n];
    for _ in 0..max_iter {
        for x in 0..n {
            let mut sum = v[x]; // identity shift
            for &(y, w) in g.out_edges(x as u32) {
                sum += w * v[y as usize];
            }
            next[x] = sum;
        }
        let norm = l2_norm(&next);
        for value in next.iter_mut() {
            *value /= norm;
        }
        let step: f64 = libm::sqrt(
            v.iter()
                .zip(next.iter())
                .map(|(a, b)| (a - b) * (a - b))
                .sum(),
        );
        core::mem::swap(&mut v, &mut next);
        if step <= tol {
            // Rayleigh quotient of A itself (undo the shift).
            let mut quotient = 0.0;
            for x in 0..n {
                let mut row = 0.0;
                for &(y, w) in g.out_edges(x as u32) {
                    row += w * v[y as usize];
                }
                quotient += v[x] * row;
            }
            return Ok((CentralityVector::new(Measure::Eigenvector, v), quotient));
        }
    }
    Err(Error::NoConvergence { max_iter })
}

/// Computes `measure` on a graph already carrying the weight kind the
/// measure consumes (the measure functions reject mismatches).
pub fn compute_on(
    measure: Measure,
    g: &WeightedDigraph,
    params: &MeasureParams,
) -> Result<CentralityVector> {
    match measure {
        Measure::Degree => degree(g, DegreeMode::Undirected),
        Measure::OutDegree => degree(g, DegreeMode::Out),
        Measure::InDegree => degree(g, DegreeMode::In),
        Measure::DegreeSquared => degree_squared(g),
        Measure::FloorDegree => floor_degree(g),
        Measure::Eigenvector => eigenvector(g, params.eig_tol, params.eig_max_iter),
        Measure::ClosenessDecentrality => closeness_decentrality(g),
        Measure::Closeness => closeness(g),
        Measure::Betweenness => betweenness(g, params.tie_tol),
        Measure::StableBetweenness => stable_betweenness(g),
    }
}

/// Computes `measure` on whichever of the two weight views it consumes.
///
/// `similarity` and `dissimilarity` must describe the same network; degree
/// and eigenvector family measures read the first, path-based measures the
/// second.
pub fn compute(
    measure: Measure,
    similarity: &WeightedDigraph,
    dissimilarity: &WeightedDigraph,
    params: &MeasureParams,
) -> Result<CentralityVector> {
    let g = match measure.required_kind() {
        WeightKind::Similarity => similarity,
        WeightKind::Dissimilarity => dissimilarity,
    };
    compute_on(measure, g, params)
}

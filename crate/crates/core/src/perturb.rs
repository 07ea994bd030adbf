//! Seeded multiplicative noise on edge weights.
//!
//! Noise never changes topology: each selected edge weight is multiplied
//! by a uniform draw from `[1 - delta, 1 + delta]`, so weights stay
//! strictly positive for `delta < 1`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::WeightedDigraph;
use crate::rng::{derive_seed, Xoshiro256StarStar};

/// A multiplicative noise model: perturb each edge with probability `p`,
/// scaling its weight by a uniform factor in `[1 - delta, 1 + delta]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseSpec {
    p: f64,
    delta: f64,
    seed: u64,
}

impl NoiseSpec {
    pub fn new(p: f64, delta: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) || !(0.0..1.0).contains(&delta) {
            return Err(Error::NoiseOutOfRange { p, delta });
        }
        Ok(Self { p, delta, seed })
    }

    /// Dense, small noise: every edge perturbed by at most 1%.
    pub fn type1(seed: u64) -> Self {
        Self {
            p: 1.0,
            delta: 0.01,
            seed,
        }
    }

    /// Sparse, larger noise: one in ten edges perturbed by up to 10%.
    pub fn type2(seed: u64) -> Self {
        Self {
            p: 0.1,
            delta: 0.1,
            seed,
        }
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        Self { seed, ..*self }
    }
}

/// Applies one noise realization, returning a same-topology graph.
///
/// Draws follow sorted edge order, so the result is independent of how
/// the input was assembled. A symmetric pair (reverse edge present with
/// exactly equal weight) receives a single joint draw, preserving
/// symmetry; any other directed edge draws independently.
pub fn perturb(g: &WeightedDigraph, spec: &NoiseSpec) -> WeightedDigraph {
    let mut rng = Xoshiro256StarStar::from_seed(spec.seed());
    let lo = 1.0 - spec.delta();
    let hi = 1.0 + spec.delta();
    let mut joint: BTreeMap<(u32, u32), f64> = BTreeMap::new();
    let mut edges: Vec<(u32, u32, f64)> = Vec::with_capacity(g.edge_count());
    for (src, dst, w) in g.edges() {
        let symmetric = g.weight(dst, src) == Some(w);
        let factor = if symmetric && src > dst {
            joint.remove(&(dst, src)).expect("mirror edge seen first")
        } else {
            let factor = if spec.p() > 0.0 && rng.bernoulli(spec.p()) {
                rng.uniform(lo, hi)
            } else {
                1.0
            };
            if symmetric {
                joint.insert((src, dst), factor);
            }
            factor
        };
        edges.push((src, dst, w * factor));
    }
    WeightedDigraph::build(g.node_count(), &edges, g.weight_kind())
        .expect("perturbation preserves validity")
}

/// For each amplitude, generates `trials` independent perturbed copies
/// with every edge perturbed (`p = 1`). Trial seeds are derived from
/// `seed`, so the whole sweep is reproducible.
pub fn magnitude_sweep(
    g: &WeightedDigraph,
    deltas: &[f64],
    trials: usize,
    seed: u64,
) -> Result<Vec<(f64, Vec<WeightedDigraph>)>> {
    let mut sweep = Vec::with_capacity(deltas.len());
    for (delta_index, &delta) in deltas.iter().enumerate() {
        let mut graphs = Vec::with_capacity(trials);
        for trial in 0..trials {
            let stream = (delta_index * trials + trial) as u64;
            let spec = NoiseSpec::new(1.0, delta, derive_seed(seed, stream))?;
            graphs.push(perturb(g, &spec));
        }
        sweep.push((delta, graphs));
    }
    Ok(sweep)
}

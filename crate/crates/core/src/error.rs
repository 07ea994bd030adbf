//! Error type shared by all graph and experiment operations.

use crate::graph::WeightKind;

/// Errors raised by graph construction, centrality measures, and experiments.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("self-loop ({node},{node}) is not allowed")]
    SelfLoop { node: u32 },

    #[error("edge ({src},{dst}) has non-positive or non-finite weight {weight}")]
    NonPositiveWeight { src: u32, dst: u32, weight: f64 },

    #[error("duplicate edge ({src},{dst})")]
    DuplicateEdge { src: u32, dst: u32 },

    #[error("node id {node} out of range for graph with {n} nodes")]
    NodeOutOfRange { node: u32, n: usize },

    #[error("graphs do not share the same node and edge sets")]
    TopologyMismatch,

    #[error("edge ({src},{dst}) weight {weight} outside the range of the conversion rule")]
    WeightOutOfRange { src: u32, dst: u32, weight: f64 },

    #[error("operation expects {expected:?} weights but graph carries {found:?} weights")]
    WrongWeightKind {
        expected: WeightKind,
        found: WeightKind,
    },

    #[error("operation requires a symmetric (undirected) graph")]
    NotSymmetric,

    #[error("operation requires a connected graph")]
    NotConnected,

    #[error("iteration did not converge within {max_iter} steps")]
    NoConvergence { max_iter: usize },

    #[error("subtraction of extended lengths would be negative")]
    NegativeDifference,

    #[error("shortest-path multiplicity exceeds the 64-bit counter")]
    CountOverflow,

    #[error("graph pair has zero distance; stability ratio is undefined")]
    ZeroDistance,

    #[error("random network needs at least {min} nodes, got {n}")]
    SizeTooSmall { n: usize, min: usize },

    #[error("rankings cover different node universes ({left} vs {right} nodes)")]
    UniverseMismatch { left: usize, right: usize },

    #[error("noise parameters out of range: p={p}, delta={delta}")]
    NoiseOutOfRange { p: f64, delta: f64 },

    #[error("unknown measure label `{0}`")]
    UnknownMeasure(alloc::string::String),
}

pub type Result<T> = core::result::Result<T, Error>;

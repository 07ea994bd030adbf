//! Weighted-digraph analytics: centrality and decentrality measures, the
//! `l1` weight-space metric, seeded multiplicative noise models, and the
//! ranking-robustness experiment protocol built on them.
//!
//! The crate is `no_std` (with `alloc`): everything here is pure
//! computation. File formats, CSV emission, and the command-line driver
//! live in the companion `centra-cli` crate.
//!
//! Quick tour:
//!
//! - [`graph`]: [`WeightedDigraph`], validation, the graph metric
//!   [`graph_distance`], weight-space conversions, node deletion.
//! - [`shortest_paths`]: Dijkstra with shortest-path counting and
//!   all-pairs runs.
//! - [`centrality`]: degree, in/out-degree, closeness (de)centrality,
//!   betweenness, eigenvector, stable betweenness, degree squared, and
//!   floor degree.
//! - [`perturb`](mod@perturb): seeded multiplicative noise producing
//!   same-topology graphs.
//! - [`experiments`]: random networks, rankings, robustness indicators,
//!   stability ratios against proven constants, and the experiment
//!   drivers.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod centrality;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod length;
pub mod linalg;
pub mod perturb;
pub mod rng;
pub mod shortest_paths;

pub use centrality::{
    betweenness, closeness, closeness_decentrality, compute, compute_on, degree, degree_squared,
    eigenvector, eigenvector_with_value, floor_degree, stable_betweenness, CentralityVector,
    DegreeMode, Measure, MeasureParams, Orientation,
};
pub use error::{Error, Result};
pub use experiments::{
    centrality_ranking, cross_measure_matrix, magnitude_sweep_experiment, random_network,
    rank_displacement, run_perturbation_experiment, stability_ratio, theoretical_stability_bound,
    top_k_retained, verify_stability_bounds, CrossMeasureMatrix, DualGraph, ExperimentConfig,
    ExperimentTable, IndicatorReport, Ranking, TrialIndicators, DEFAULT_SEED,
};
pub use graph::{
    graph_distance, graph_distance_between, ConversionRule, GraphPair, NodeRemoval, WeightKind,
    WeightedDigraph,
};
pub use length::{extended_abs_diff, extended_subtract, ExtendedLength};
pub use perturb::{magnitude_sweep, perturb, NoiseSpec};
pub use shortest_paths::{apsp, sssp_with_counts, ApspResult, SsspResult, DEFAULT_TIE_TOL};

//! Random network generation, rankings, robustness indicators, stability
//! ratios, and the perturbation experiment protocol.
//!
//! Every run is a pure function of its configuration, including the master
//! seed: trial seeds are derived per (size, trial) stream, so trials may
//! be computed in any order, or in parallel, without changing a single
//! output bit.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::centrality::{compute_on, CentralityVector, Measure, MeasureParams, Orientation};
use crate::error::{Error, Result};
use crate::graph::{
    graph_distance, ConversionRule, GraphPair, WeightKind, WeightedDigraph,
};
use crate::length::extended_abs_diff;
use crate::linalg::symmetric_eigen;
use crate::perturb::{perturb, NoiseSpec};
use crate::rng::{derive_seed, Xoshiro256StarStar};

/// Similarity and dissimilarity views of one network.
#[derive(Debug, Clone)]
pub struct DualGraph {
    pub similarity: WeightedDigraph,
    pub dissimilarity: WeightedDigraph,
}

impl DualGraph {
    /// Pairs a dissimilarity graph with its `2 - w` similarity twin
    /// (the random network duality; weights must stay below 2).
    pub fn via_affine(dissimilarity: WeightedDigraph) -> Result<Self> {
        dissimilarity.check_kind(WeightKind::Dissimilarity)?;
        let similarity = dissimilarity.convert_weights(ConversionRule::AffineTwoMinus)?;
        Ok(Self {
            similarity,
            dissimilarity,
        })
    }

    /// Pairs a graph of either kind with its reciprocal twin
    /// (the rule used for measured real-world data).
    pub fn via_reciprocal(base: WeightedDigraph) -> Result<Self> {
        let twin = base.convert_weights(ConversionRule::Reciprocal)?;
        Ok(match base.weight_kind() {
            WeightKind::Similarity => Self {
                similarity: base,
                dissimilarity: twin,
            },
            WeightKind::Dissimilarity => Self {
                similarity: twin,
                dissimilarity: base,
            },
        })
    }

    /// The view carrying the given weight kind.
    pub fn view(&self, kind: WeightKind) -> &WeightedDigraph {
        match kind {
            WeightKind::Similarity => &self.similarity,
            WeightKind::Dissimilarity => &self.dissimilarity,
        }
    }
}

/// Minimum node count for the random network model (edge probability is
/// `10 / n`).
pub const RANDOM_NETWORK_MIN_NODES: usize = 10;

/// Samples the random network model: each undirected edge appears with
/// probability `10 / n`, with weight uniform in `[0.5, 1.5]` read as a
/// dissimilarity; the similarity twin is its `2 - w` dual.
pub fn random_network(n: usize, seed: u64) -> Result<DualGraph> {
    if n < RANDOM_NETWORK_MIN_NODES {
        return Err(Error::SizeTooSmall {
            n,
            min: RANDOM_NETWORK_MIN_NODES,
        });
    }
    let q = 10.0 / n as f64;
    let mut rng = Xoshiro256StarStar::from_seed(seed);
    let mut edges = Vec::new();
    for i in 0..n as u32 {
        for j in (i + 1)..n as u32 {
            if rng.bernoulli(q) {
                let w = rng.uniform(0.5, 1.5);
                edges.push((i, j, w));
                edges.push((j, i, w));
            }
        }
    }
    let dissimilarity = WeightedDigraph::build(n, &edges, WeightKind::Dissimilarity)?;
    DualGraph::via_affine(dissimilarity)
}

/// Samples the random network model, rejecting disconnected draws so that
/// every measure (eigenvector included) is defined. Resampling uses seeds
/// derived from `seed`, keeping the result reproducible.
pub fn random_connected_network(n: usize, seed: u64) -> Result<DualGraph> {
    for attempt in 0..10_000u64 {
        let dual = random_network(n, derive_seed(seed, attempt))?;
        if dual.dissimilarity.is_connected() {
            return Ok(dual);
        }
    }
    Err(Error::NotConnected)
}

/// A centrality ranking: node ids ordered most-central first, ties broken
/// by ascending node id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranking {
    order: Vec<u32>,
    rank_of: Vec<u32>,
}

impl Ranking {
    pub fn from_centrality(cv: &CentralityVector) -> Self {
        let n = cv.len();
        let mut order: Vec<u32> = (0..n as u32).collect();
        match cv.orientation {
            Orientation::HigherIsCentral => order.sort_by(|&a, &b| {
                cv.values[b as usize]
                    .total_cmp(&cv.values[a as usize])
                    .then_with(|| a.cmp(&b))
            }),
            Orientation::LowerIsCentral => order.sort_by(|&a, &b| {
                cv.values[a as usize]
                    .total_cmp(&cv.values[b as usize])
                    .then_with(|| a.cmp(&b))
            }),
        }
        let mut rank_of = vec![0u32; n];
        for (position, &node) in order.iter().enumerate() {
            rank_of[node as usize] = position as u32 + 1;
        }
        Self { order, rank_of }
    }

    /// Node ids, most central first.
    pub fn order(&self) -> &[u32] {
        &self.order
    }

    /// 1-based rank of a node.
    pub fn rank_of(&self, node: u32) -> u32 {
        self.rank_of[node as usize]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Sorts nodes by centrality value; see [`Ranking::from_centrality`].
pub fn centrality_ranking(cv: &CentralityVector) -> Ranking {
    Ranking::from_centrality(cv)
}

/// Absolute per-node rank changes between two rankings.
#[derive(Debug, Clone, PartialEq)]
pub struct RankDisplacement {
    pub per_node: Vec<u32>,
    pub max: u32,
    pub mean: f64,
}

pub fn rank_displacement(a: &Ranking, b: &Ranking) -> Result<RankDisplacement> {
    if a.len() != b.len() {
        return Err(Error::UniverseMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let per_node: Vec<u32> = (0..a.len() as u32)
        .map(|x| a.rank_of(x).abs_diff(b.rank_of(x)))
        .collect();
    let max = per_node.iter().copied().max().unwrap_or(0);
    let mean = if per_node.is_empty() {
        0.0
    } else {
        per_node.iter().map(|&d| d as f64).sum::<f64>() / per_node.len() as f64
    };
    Ok(RankDisplacement { per_node, max, mean })
}

/// True when the first `k` positions of both rankings are identical,
/// element by element (position retention, not set retention).
pub fn top_k_retained(a: &Ranking, b: &Ranking, k: usize) -> bool {
    let k = k.min(a.len()).min(b.len());
    a.order[..k] == b.order[..k]
}

/// Empirical worst-node stability ratio `max_x |C_G(x) - C_H(x)| / d(G, H)`.
///
/// The pair must carry the weight kind the measure consumes. Differences
/// between two infinite values count as zero (they encode the same
/// topology-determined unreachability on both sides).
pub fn stability_ratio(measure: Measure, pair: &GraphPair, params: &MeasureParams) -> Result<f64> {
    let d = graph_distance(pair);
    if d == 0.0 {
        return Err(Error::ZeroDistance);
    }
    Ok(max_centrality_difference(measure, pair, params)? / d)
}

/// `max_x |C_G(x) - C_H(x)|` with the two-infinities-are-equal convention.
pub fn max_centrality_difference(
    measure: Measure,
    pair: &GraphPair,
    params: &MeasureParams,
) -> Result<f64> {
    let cv_g = compute_on(measure, pair.g(), params)?;
    let cv_h = compute_on(measure, pair.h(), params)?;
    let max_diff = cv_g
        .values
        .iter()
        .zip(cv_h.values.iter())
        .map(|(&x, &y)| {
            extended_abs_diff(
                crate::length::ExtendedLength::finite_or_infinite(x),
                crate::length::ExtendedLength::finite_or_infinite(y),
            )
            .value()
        })
        .fold(0.0f64, f64::max);
    Ok(max_diff)
}

/// The proven stability constant for a measure on graph `g`, or `None`
/// for measures with no such constant.
///
/// Degree-family constants are 1, closeness decentrality is `n`, stable
/// betweenness is `2 n^2`, and eigenvector centrality is `4` over the gap
/// between the two largest adjacency eigenvalues (computed by a dense
/// symmetric eigendecomposition, so `g` must be the symmetric similarity
/// view).
pub fn theoretical_stability_bound(measure: Measure, g: &WeightedDigraph) -> Result<Option<f64>> {
    let n = g.node_count();
    Ok(match measure {
        Measure::Degree | Measure::OutDegree | Measure::InDegree => Some(1.0),
        Measure::ClosenessDecentrality => Some(n as f64),
        Measure::StableBetweenness => Some(2.0 * (n as f64) * (n as f64)),
        Measure::Eigenvector => {
            g.check_kind(WeightKind::Similarity)?;
            if !g.is_symmetric() {
                return Err(Error::NotSymmetric);
            }
            let eigen = symmetric_eigen(&g.adjacency_matrix());
            Some(4.0 / eigen.dominant_gap())
        }
        Measure::Closeness
        | Measure::Betweenness
        | Measure::DegreeSquared
        | Measure::FloorDegree => None,
    })
}

/// Configuration of a perturbation experiment run.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub sizes: Vec<usize>,
    pub trials: usize,
    pub noise_p: f64,
    pub noise_delta: f64,
    pub measures: Vec<Measure>,
    pub thresholds: Vec<u32>,
    pub top_k: usize,
    pub seed: u64,
}

/// Documented default master seed used when none is supplied.
pub const DEFAULT_SEED: u64 = 42;

impl Default for ExperimentConfig {
    /// Desk-scale defaults: the five headline measures under dense small
    /// noise, 20 trials per size.
    fn default() -> Self {
        Self {
            sizes: vec![20, 40, 60, 80, 100],
            trials: 20,
            noise_p: 1.0,
            noise_delta: 0.01,
            measures: vec![
                Measure::Degree,
                Measure::ClosenessDecentrality,
                Measure::Betweenness,
                Measure::Eigenvector,
                Measure::StableBetweenness,
            ],
            thresholds: vec![3, 5, 10],
            top_k: 5,
            seed: DEFAULT_SEED,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        for &n in &self.sizes {
            if n < RANDOM_NETWORK_MIN_NODES {
                return Err(Error::SizeTooSmall {
                    n,
                    min: RANDOM_NETWORK_MIN_NODES,
                });
            }
        }
        NoiseSpec::new(self.noise_p, self.noise_delta, 0)?;
        Ok(())
    }
}

/// Robustness indicators of a single perturbation trial.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialIndicators {
    pub max_displacement: u32,
    pub mean_displacement: f64,
    /// One flag per configured threshold: max displacement exceeded it.
    pub exceeds: Vec<bool>,
    pub top_k_retained: bool,
}

/// Aggregated indicators for one (size, measure) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct IndicatorReport {
    pub thresholds: Vec<u32>,
    pub top_k: usize,
    pub trials: Vec<TrialIndicators>,
    /// Per-trial max displacement -> number of trials; totals the trial count.
    pub histogram: BTreeMap<u32, u32>,
}

impl IndicatorReport {
    pub fn from_trials(thresholds: Vec<u32>, top_k: usize, trials: Vec<TrialIndicators>) -> Self {
        let mut histogram = BTreeMap::new();
        for trial in &trials {
            *histogram.entry(trial.max_displacement).or_insert(0) += 1;
        }
        Self {
            thresholds,
            top_k,
            trials,
            histogram,
        }
    }

    pub fn trial_count(&self) -> usize {
        self.trials.len()
    }

    /// Mean over trials of the per-trial maximum displacement.
    pub fn mean_max_displacement(&self) -> f64 {
        mean(self.trials.iter().map(|t| t.max_displacement as f64))
    }

    /// Mean over trials of the per-trial mean displacement
    /// (mean over nodes first, then over trials).
    pub fn mean_avg_displacement(&self) -> f64 {
        mean(self.trials.iter().map(|t| t.mean_displacement))
    }

    /// Fraction of trials whose max displacement exceeded threshold `index`.
    pub fn exceedance_probability(&self, index: usize) -> f64 {
        mean(
            self.trials
                .iter()
                .map(|t| if t.exceeds[index] { 1.0 } else { 0.0 }),
        )
    }

    /// Fraction of trials where the top-k prefix kept its exact order.
    pub fn top_k_retention_rate(&self) -> f64 {
        mean(
            self.trials
                .iter()
                .map(|t| if t.top_k_retained { 1.0 } else { 0.0 }),
        )
    }
}

fn mean(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut count = 0usize;
    for v in values {
        sum += v;
        count += 1;
    }
    if count == 0 {
        0.0
    } else {
        sum / count as f64
    }
}

/// Indicator table keyed by (size, measure).
#[derive(Debug, Clone)]
pub struct ExperimentTable {
    pub sizes: Vec<usize>,
    pub measures: Vec<Measure>,
    pub reports: Vec<IndicatorReport>,
}

impl ExperimentTable {
    pub fn report(&self, size_index: usize, measure_index: usize) -> &IndicatorReport {
        &self.reports[size_index * self.measures.len() + measure_index]
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, Measure, &IndicatorReport)> + '_ {
        self.sizes.iter().enumerate().flat_map(move |(si, &size)| {
            self.measures
                .iter()
                .enumerate()
                .map(move |(mi, &m)| (size, m, self.report(si, mi)))
        })
    }
}

fn trial_indicators(
    baseline: &Ranking,
    perturbed: &Ranking,
    thresholds: &[u32],
    top_k: usize,
) -> Result<TrialIndicators> {
    let disp = rank_displacement(baseline, perturbed)?;
    Ok(TrialIndicators {
        max_displacement: disp.max,
        mean_displacement: disp.mean,
        exceeds: thresholds.iter().map(|&t| disp.max > t).collect(),
        top_k_retained: top_k_retained(baseline, perturbed, top_k),
    })
}

/// Runs one trial of the perturbation experiment: sample a connected
/// random network, rank it under every configured measure, perturb the
/// dissimilarity view once, re-derive the similarity twin so both views
/// describe the same perturbed network, re-rank, and report indicators
/// per measure.
pub fn perturbation_trial(
    config: &ExperimentConfig,
    size_index: usize,
    trial: usize,
    params: &MeasureParams,
) -> Result<Vec<TrialIndicators>> {
    let n = config.sizes[size_index];
    let trial_master = derive_seed(config.seed, ((size_index as u64) << 32) | trial as u64);
    let dual = random_connected_network(n, derive_seed(trial_master, 0))?;
    let noise = NoiseSpec::new(
        config.noise_p,
        config.noise_delta,
        derive_seed(trial_master, 1),
    )?;
    let perturbed = DualGraph::via_affine(perturb(&dual.dissimilarity, &noise))?;

    config
        .measures
        .iter()
        .map(|&measure| {
            let view = measure.required_kind();
            let base_rank =
                Ranking::from_centrality(&compute_on(measure, dual.view(view), params)?);
            let pert_rank =
                Ranking::from_centrality(&compute_on(measure, perturbed.view(view), params)?);
            trial_indicators(&base_rank, &pert_rank, &config.thresholds, config.top_k)
        })
        .collect()
}

/// Aggregates per-trial results (indexed `[size][trial][measure]`) into
/// the experiment table. Exposed so drivers may compute trials in
/// parallel and still assemble identical output.
pub fn assemble_experiment_table(
    config: &ExperimentConfig,
    trial_results: Vec<Vec<Vec<TrialIndicators>>>,
) -> ExperimentTable {
    let mut reports = Vec::with_capacity(config.sizes.len() * config.measures.len());
    for per_trial in trial_results {
        for measure_index in 0..config.measures.len() {
            let trials: Vec<TrialIndicators> = per_trial
                .iter()
                .map(|t| t[measure_index].clone())
                .collect();
            reports.push(IndicatorReport::from_trials(
                config.thresholds.clone(),
                config.top_k,
                trials,
            ));
        }
    }
    ExperimentTable {
        sizes: config.sizes.clone(),
        measures: config.measures.clone(),
        reports,
    }
}

/// Sequential driver for the full experiment; a pure function of the
/// configuration.
pub fn run_perturbation_experiment(
    config: &ExperimentConfig,
    params: &MeasureParams,
) -> Result<ExperimentTable> {
    config.validate()?;
    let mut trial_results = Vec::with_capacity(config.sizes.len());
    for size_index in 0..config.sizes.len() {
        let mut per_trial = Vec::with_capacity(config.trials);
        for trial in 0..config.trials {
            per_trial.push(perturbation_trial(config, size_index, trial, params)?);
        }
        trial_results.push(per_trial);
    }
    Ok(assemble_experiment_table(config, trial_results))
}

/// Rankings of one network under several measures.
pub fn measure_rankings(
    dual: &DualGraph,
    measures: &[Measure],
    params: &MeasureParams,
) -> Result<Vec<Ranking>> {
    measures
        .iter()
        .map(|&m| {
            Ok(Ranking::from_centrality(&compute_on(
                m,
                dual.view(m.required_kind()),
                params,
            )?))
        })
        .collect()
}

/// Cross-measure ranking variation averaged over graphs.
#[derive(Debug, Clone)]
pub struct CrossMeasureMatrix {
    pub measures: Vec<Measure>,
    pub graphs: usize,
    mean_avg: Vec<f64>,
    mean_max: Vec<f64>,
}

impl CrossMeasureMatrix {
    /// Assembles a matrix from already-averaged components (used by
    /// drivers that accumulate per-graph displacements themselves).
    pub fn from_parts(
        measures: Vec<Measure>,
        graphs: usize,
        mean_avg: Vec<f64>,
        mean_max: Vec<f64>,
    ) -> Self {
        assert_eq!(mean_avg.len(), measures.len() * measures.len());
        assert_eq!(mean_max.len(), measures.len() * measures.len());
        Self {
            measures,
            graphs,
            mean_avg,
            mean_max,
        }
    }

    /// Mean (over graphs) of the average rank displacement between the
    /// rankings of measures `i` and `j`.
    pub fn mean_avg(&self, i: usize, j: usize) -> f64 {
        self.mean_avg[i * self.measures.len() + j]
    }

    /// Mean (over graphs) of the maximum rank displacement.
    pub fn mean_max(&self, i: usize, j: usize) -> f64 {
        self.mean_max[i * self.measures.len() + j]
    }

    /// Table-style entry: average variation above the diagonal, maximum
    /// variation below, zero on it.
    pub fn table_entry(&self, row: usize, col: usize) -> f64 {
        use core::cmp::Ordering;
        match row.cmp(&col) {
            Ordering::Less => self.mean_avg(row, col),
            Ordering::Greater => self.mean_max(row, col),
            Ordering::Equal => 0.0,
        }
    }
}

/// Displacement statistics between the rankings of every measure pair on
/// one network: `(avg, max)` matrices in measure order.
pub fn cross_measure_displacements(rankings: &[Ranking]) -> Result<(Vec<f64>, Vec<f64>)> {
    let k = rankings.len();
    let mut avg = vec![0.0; k * k];
    let mut max = vec![0.0; k * k];
    for i in 0..k {
        for j in (i + 1)..k {
            let disp = rank_displacement(&rankings[i], &rankings[j])?;
            avg[i * k + j] = disp.mean;
            avg[j * k + i] = disp.mean;
            max[i * k + j] = disp.max as f64;
            max[j * k + i] = disp.max as f64;
        }
    }
    Ok((avg, max))
}

/// Compares the rankings of every pair of measures over a set of
/// networks, reporting the mean average and mean maximum variation.
pub fn cross_measure_matrix(
    duals: &[DualGraph],
    measures: &[Measure],
    params: &MeasureParams,
) -> Result<CrossMeasureMatrix> {
    assert!(!duals.is_empty(), "need at least one graph");
    let k = measures.len();
    let mut mean_avg = vec![0.0; k * k];
    let mut mean_max = vec![0.0; k * k];
    for dual in duals {
        let rankings = measure_rankings(dual, measures, params)?;
        let (avg, max) = cross_measure_displacements(&rankings)?;
        for idx in 0..k * k {
            mean_avg[idx] += avg[idx];
            mean_max[idx] += max[idx];
        }
    }
    let count = duals.len() as f64;
    for idx in 0..k * k {
        mean_avg[idx] /= count;
        mean_max[idx] /= count;
    }
    Ok(CrossMeasureMatrix {
        measures: measures.to_vec(),
        graphs: duals.len(),
        mean_avg,
        mean_max,
    })
}

/// One trial of the fixed-network magnitude sweep: perturb the base graph
/// with `p = 1` at the given amplitude, re-derive the twin view by the
/// reciprocal rule, and compare rankings against the baselines.
#[allow(clippy::too_many_arguments)]
pub fn sweep_trial(
    base: &WeightedDigraph,
    baselines: &[Ranking],
    measures: &[Measure],
    delta: f64,
    trial_seed: u64,
    thresholds: &[u32],
    top_k: usize,
    params: &MeasureParams,
) -> Result<Vec<TrialIndicators>> {
    let noise = NoiseSpec::new(1.0, delta, trial_seed)?;
    let perturbed = DualGraph::via_reciprocal(perturb(base, &noise))?;
    measures
        .iter()
        .zip(baselines.iter())
        .map(|(&measure, baseline)| {
            let ranking = Ranking::from_centrality(&compute_on(
                measure,
                perturbed.view(measure.required_kind()),
                params,
            )?)
            ;
            trial_indicators(baseline, &ranking, thresholds, top_k)
        })
        .collect()
}

/// Full magnitude sweep on a fixed network: for each amplitude, `trials`
/// perturbations, aggregated per measure.
#[allow(clippy::too_many_arguments)]
pub fn magnitude_sweep_experiment(
    base: &WeightedDigraph,
    deltas: &[f64],
    trials: usize,
    seed: u64,
    measures: &[Measure],
    thresholds: &[u32],
    top_k: usize,
    params: &MeasureParams,
) -> Result<Vec<(f64, Vec<IndicatorReport>)>> {
    let baselines = measure_rankings(&DualGraph::via_reciprocal(base.clone())?, measures, params)?;
    let mut table = Vec::with_capacity(deltas.len());
    for (delta_index, &delta) in deltas.iter().enumerate() {
        let mut per_trial = Vec::with_capacity(trials);
        for trial in 0..trials {
            let stream = (delta_index * trials + trial) as u64;
            per_trial.push(sweep_trial(
                base,
                &baselines,
                measures,
                delta,
                derive_seed(seed, stream),
                thresholds,
                top_k,
                params,
            )?);
        }
        let reports = (0..measures.len())
            .map(|mi| {
                IndicatorReport::from_trials(
                    thresholds.to_vec(),
                    top_k,
                    per_trial.iter().map(|t| t[mi].clone()).collect(),
                )
            })
            .collect();
        table.push((delta, reports));
    }
    Ok(table)
}

/// Measures with a proven stability constant, checked by the bound suite.
pub const BOUNDED_MEASURES: [Measure; 4] = [
    Measure::Degree,
    Measure::ClosenessDecentrality,
    Measure::Eigenvector,
    Measure::StableBetweenness,
];

/// One sampled pair's ratio against the proven constant.
#[derive(Debug, Clone, Copy)]
pub struct BoundSample {
    pub measure: Measure,
    pub ratio: f64,
    pub bound: f64,
}

/// Generates one bound-suite candidate pair and evaluates every bounded
/// measure on it. Returns `None` when the noise realization leaves the
/// graph untouched (zero distance, ratio undefined); candidates alternate
/// between the two noise types.
pub fn bound_suite_candidate(
    size: usize,
    master_seed: u64,
    candidate: u64,
    params: &MeasureParams,
) -> Result<Option<Vec<BoundSample>>> {
    let candidate_master = derive_seed(master_seed, candidate);
    let dual = random_connected_network(size, derive_seed(candidate_master, 0))?;
    let noise_seed = derive_seed(candidate_master, 1);
    let noise = if candidate.is_multiple_of(2) {
        NoiseSpec::type1(noise_seed)
    } else {
        NoiseSpec::type2(noise_seed)
    };
    let perturbed = DualGraph::via_affine(perturb(&dual.dissimilarity, &noise))?;

    let dissim_pair = GraphPair::new(dual.dissimilarity.clone(), perturbed.dissimilarity.clone())?;
    let sim_pair = GraphPair::new(dual.similarity.clone(), perturbed.similarity.clone())?;
    if graph_distance(&dissim_pair) == 0.0 || graph_distance(&sim_pair) == 0.0 {
        return Ok(None);
    }

    let mut samples = Vec::with_capacity(BOUNDED_MEASURES.len());
    for measure in BOUNDED_MEASURES {
        let pair = match measure.required_kind() {
            WeightKind::Similarity => &sim_pair,
            WeightKind::Dissimilarity => &dissim_pair,
        };
        let ratio = stability_ratio(measure, pair, params)?;
        let bound = theoretical_stability_bound(measure, pair.g())?
            .expect("bounded measure has a constant");
        samples.push(BoundSample {
            measure,
            ratio,
            bound,
        });
    }
    Ok(Some(samples))
}

/// Worst observed ratio per (measure, size) over a batch of candidates.
#[derive(Debug, Clone)]
pub struct BoundCheck {
    pub measure: Measure,
    pub size: usize,
    pub pairs_checked: usize,
    pub worst_ratio: f64,
    /// Bound of the pair attaining the worst margin.
    pub bound_at_worst: f64,
    /// Max over pairs of ratio / bound; at most 1 when the bound holds.
    pub worst_margin: f64,
    pub violations: usize,
}

/// Runs the stability bound suite: `candidates` pairs per size (half type
/// 1 noise, half type 2), checking every bounded measure.
pub fn verify_stability_bounds(
    sizes: &[usize],
    candidates: usize,
    seed: u64,
    params: &MeasureParams,
) -> Result<Vec<BoundCheck>> {
    let mut checks = Vec::new();
    for (size_index, &size) in sizes.iter().enumerate() {
        let size_seed = derive_seed(seed, size_index as u64);
        let mut batch: Vec<Vec<BoundSample>> = Vec::new();
        for candidate in 0..candidates as u64 {
            if let Some(samples) = bound_suite_candidate(size, size_seed, candidate, params)? {
                batch.push(samples);
            }
        }
        checks.extend(summarize_bound_samples(size, &batch));
    }
    Ok(checks)
}

/// Folds per-candidate samples into per-measure checks; exposed for
/// drivers that generate candidates in parallel.
pub fn summarize_bound_samples(size: usize, batch: &[Vec<BoundSample>]) -> Vec<BoundCheck> {
    BOUNDED_MEASURES
        .iter()
        .map(|&measure| {
            let mut check = BoundCheck {
                measure,
                size,
                pairs_checked: 0,
                worst_ratio: 0.0,
                bound_at_worst: f64::NAN,
                worst_margin: 0.0,
                violations: 0,
            };
            for samples in batch {
                for s in samples.iter().filter(|s| s.measure == measure) {
                    check.pairs_checked += 1;
                    check.worst_ratio = check.worst_ratio.max(s.ratio);
                    let margin = s.ratio / s.bound;
                    if margin > check.worst_margin {
                        check.worst_margin = margin;
                        check.bound_at_worst = s.bound;
                    }
                    if s.ratio > s.bound {
                        check.violations += 1;
                    }
                }
            }
            check
        })
        .collect()
}

//! Subcommand implementations.
//!
//! Heavy loops fan out over rayon; every parallel map collects in index
//! order and aggregates with the same order-fixed folds as the sequential
//! drivers in `centra-core`, so output bytes do not depend on `--jobs`.

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use rayon::prelude::*;

use centra_core::centrality::{compute_on, Measure, MeasureParams};
use centra_core::experiments::{
    assemble_experiment_table, bound_suite_candidate, cross_measure_displacements,
    magnitude_sweep_experiment, measure_rankings, perturbation_trial, random_connected_network,
    summarize_bound_samples, CrossMeasureMatrix, DualGraph, ExperimentConfig, IndicatorReport,
    Ranking, TrialIndicators,
};
use centra_core::graph::WeightKind;
use centra_core::rng::derive_seed;

use crate::csv_out::{
    fmt_value, write_centrality, write_cross_measure_matrix, write_histogram,
    write_scalar_indicator,
};
use crate::edge_list::parse_edge_list;

/// `centrality`: per-node values and ranking of one measure on one graph.
///
/// When the file's weight kind is not the kind the measure consumes, the
/// graph is converted through the reciprocal rule first.
pub fn centrality_command(
    graph_path: &Path,
    measure: Measure,
    file_kind: WeightKind,
    out: &mut impl Write,
) -> Result<()> {
    let parsed = parse_edge_list(graph_path, file_kind)
        .with_context(|| format!("reading {}", graph_path.display()))?;
    let graph = if measure.required_kind() == file_kind {
        parsed.graph.clone()
    } else {
        parsed
            .graph
            .convert_weights(centra_core::graph::ConversionRule::Reciprocal)?
    };
    let cv = compute_on(measure, &graph, &MeasureParams::default())?;
    let ranking = Ranking::from_centrality(&cv);
    write_centrality(out, &parsed.names, &cv.values, |node| ranking.rank_of(node))?;
    Ok(())
}

fn create_out_dir(out_dir: &Path) -> Result<()> {
    fs::create_dir_all(out_dir)
        .with_context(|| format!("creating output directory {}", out_dir.display()))
}

fn write_file(out_dir: &Path, name: &str, body: impl FnOnce(&mut Vec<u8>) -> Result<()>) -> Result<()> {
    let mut buffer = Vec::new();
    body(&mut buffer)?;
    let path = out_dir.join(name);
    fs::write(&path, buffer).with_context(|| format!("writing {}", path.display()))
}

type ReportRows<'a> = Vec<(String, Measure, &'a IndicatorReport)>;

fn write_indicator_files(
    out_dir: &Path,
    key_header: &str,
    rows: &ReportRows<'_>,
    thresholds: &[u32],
) -> Result<()> {
    write_file(out_dir, "mean_max_displacement.csv", |buf| {
        write_scalar_indicator(
            buf,
            key_header,
            rows.iter()
                .map(|(k, m, r)| (k.clone(), *m, r.mean_max_displacement())),
        )?;
        Ok(())
    })?;
    write_file(out_dir, "mean_avg_displacement.csv", |buf| {
        write_scalar_indicator(
            buf,
            key_header,
            rows.iter()
                .map(|(k, m, r)| (k.clone(), *m, r.mean_avg_displacement())),
        )?;
        Ok(())
    })?;
    for (index, &threshold) in thresholds.iter().enumerate() {
        write_file(out_dir, &format!("exceedance_gt{threshold}.csv"), |buf| {
            write_scalar_indicator(
                buf,
                key_header,
                rows.iter()
                    .map(|(k, m, r)| (k.clone(), *m, r.exceedance_probability(index))),
            )?;
            Ok(())
        })?;
    }
    write_file(out_dir, "top_k_retention.csv", |buf| {
        write_scalar_indicator(
            buf,
            key_header,
            rows.iter()
                .map(|(k, m, r)| (k.clone(), *m, r.top_k_retention_rate())),
        )?;
        Ok(())
    })?;
    write_file(out_dir, "max_displacement_histogram.csv", |buf| {
        write_histogram(
            buf,
            key_header,
            rows.iter().map(|(k, m, r)| (k.clone(), *m, (*r).clone())),
        )?;
        Ok(())
    })?;
    Ok(())
}

/// `perturb-experiment`: the full random-network protocol from a config
/// file, emitting one CSV per indicator.
pub fn perturb_experiment_command(config: &ExperimentConfig, out_dir: &Path) -> Result<()> {
    config.validate()?;
    let params = MeasureParams::default();

    let cells: Vec<(usize, usize)> = (0..config.sizes.len())
        .flat_map(|si| (0..config.trials).map(move |t| (si, t)))
        .collect();
    let results: Vec<Vec<TrialIndicators>> = cells
        .par_iter()
        .map(|&(size_index, trial)| perturbation_trial(config, size_index, trial, &params))
        .collect::<centra_core::Result<_>>()?;

    let mut by_size: Vec<Vec<Vec<TrialIndicators>>> =
        vec![Vec::with_capacity(config.trials); config.sizes.len()];
    for ((size_index, _), trial_result) in cells.into_iter().zip(results) {
        by_size[size_index].push(trial_result);
    }
    let table = assemble_experiment_table(config, by_size);

    create_out_dir(out_dir)?;
    let rows: ReportRows<'_> = table
        .rows()
        .map(|(size, measure, report)| (size.to_string(), measure, report))
        .collect();
    write_indicator_files(out_dir, "size", &rows, &config.thresholds)
}

/// `sweep`: fixed-network magnitude sweep, emitting the same indicator
/// CSV set keyed by amplitude.
#[allow(clippy::too_many_arguments)]
pub fn sweep_command(
    graph_path: &Path,
    file_kind: WeightKind,
    deltas: &[f64],
    trials: usize,
    seed: u64,
    measures: &[Measure],
    thresholds: &[u32],
    top_k: usize,
    out_dir: &Path,
) -> Result<()> {
    anyhow::ensure!(trials >= 1, "--trials must be at least 1");
    let parsed = parse_edge_list(graph_path, file_kind)
        .with_context(|| format!("reading {}", graph_path.display()))?;
    let params = MeasureParams::default();
    let table = parallel_sweep(
        &parsed.graph,
        deltas,
        trials,
        seed,
        measures,
        thresholds,
        top_k,
        &params,
    )?;

    create_out_dir(out_dir)?;
    let rows: ReportRows<'_> = table
        .iter()
        .flat_map(|(delta, reports)| {
            measures
                .iter()
                .zip(reports.iter())
                .map(move |(&m, r)| (fmt_value(*delta), m, r))
        })
        .collect();
    write_indicator_files(out_dir, "delta", &rows, thresholds)
}

#[allow(clippy::too_many_arguments)]
fn parallel_sweep(
    base: &centra_core::graph::WeightedDigraph,
    deltas: &[f64],
    trials: usize,
    seed: u64,
    measures: &[Measure],
    thresholds: &[u32],
    top_k: usize,
    params: &MeasureParams,
) -> Result<Vec<(f64, Vec<IndicatorReport>)>> {
    let baselines = measure_rankings(&DualGraph::via_reciprocal(base.clone())?, measures, params)?;
    let cells: Vec<(usize, usize)> = (0..deltas.len())
        .flat_map(|di| (0..trials).map(move |t| (di, t)))
        .collect();
    let results: Vec<Vec<TrialIndicators>> = cells
        .par_iter()
        .map(|&(delta_index, trial)| {
            centra_core::experiments::sweep_trial(
                base,
                &baselines,
                measures,
                deltas[delta_index],
                derive_seed(seed, (delta_index * trials + trial) as u64),
                thresholds,
                top_k,
                params,
            )
        })
        .collect::<centra_core::Result<_>>()?;

    let mut table = Vec::with_capacity(deltas.len());
    for (delta_index, &delta) in deltas.iter().enumerate() {
        let per_trial: Vec<&Vec<TrialIndicators>> = cells
            .iter()
            .zip(results.iter())
            .filter(|((di, _), _)| *di == delta_index)
            .map(|(_, r)| r)
            .collect();
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

/// `compare-measures`: cross-measure ranking variation matrices, one CSV
/// per network size.
pub fn compare_measures_command(
    sizes: &[usize],
    trials: usize,
    seed: u64,
    measures: &[Measure],
    out_dir: &Path,
) -> Result<()> {
    anyhow::ensure!(trials >= 1, "--trials must be at least 1");
    let params = MeasureParams::default();
    create_out_dir(out_dir)?;
    for (size_index, &n) in sizes.iter().enumerate() {
        let per_graph: Vec<(Vec<f64>, Vec<f64>)> = (0..trials as u64)
            .into_par_iter()
            .map(|i| {
                let dual = random_connected_network(
                    n,
                    derive_seed(seed, ((size_index as u64) << 32) | i),
                )?;
                let rankings = measure_rankings(&dual, measures, &params)?;
                cross_measure_displacements(&rankings)
            })
            .collect::<centra_core::Result<_>>()?;

        let k = measures.len();
        let mut mean_avg = vec![0.0; k * k];
        let mut mean_max = vec![0.0; k * k];
        for (avg, max) in &per_graph {
            for idx in 0..k * k {
                mean_avg[idx] += avg[idx];
                mean_max[idx] += max[idx];
            }
        }
        for idx in 0..k * k {
            mean_avg[idx] /= trials as f64;
            mean_max[idx] /= trials as f64;
        }
        let matrix = CrossMeasureMatrix::from_parts(measures.to_vec(), trials, mean_avg, mean_max);
        write_file(out_dir, &format!("compare_measures_n{n}.csv"), |buf| {
            write_cross_measure_matrix(buf, &matrix)?;
            Ok(())
        })?;
    }
    Ok(())
}

/// `verify-bounds`: empirical worst stability ratios against the proven
/// constants. Returns false when any sampled pair violates its bound.
pub fn verify_bounds_command(
    sizes: &[usize],
    trials: usize,
    seed: u64,
    out: &mut impl Write,
) -> Result<bool> {
    let params = MeasureParams::default();
    writeln!(out, "measure,size,pairs,worst_ratio,bound_at_worst,margin,status")?;
    let mut all_ok = true;
    for (size_index, &size) in sizes.iter().enumerate() {
        let size_seed = derive_seed(seed, size_index as u64);
        let batch: Vec<Option<Vec<centra_core::experiments::BoundSample>>> = (0..trials as u64)
            .into_par_iter()
            .map(|candidate| bound_suite_candidate(size, size_seed, candidate, &params))
            .collect::<centra_core::Result<_>>()?;
        let batch: Vec<_> = batch.into_iter().flatten().collect();
        for check in summarize_bound_samples(size, &batch) {
            let ok = check.violations == 0;
            all_ok &= ok;
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                check.measure.label(),
                check.size,
                check.pairs_checked,
                fmt_value(check.worst_ratio),
                fmt_value(check.bound_at_worst),
                fmt_value(check.worst_margin),
                if ok { "ok" } else { "violated" }
            )?;
        }
    }
    Ok(all_ok)
}

/// Convenience used by tests: run the sweep machinery sequentially via
/// the core driver (identical output to the parallel path).
pub fn sequential_sweep(
    base: &centra_core::graph::WeightedDigraph,
    deltas: &[f64],
    trials: usize,
    seed: u64,
    measures: &[Measure],
    thresholds: &[u32],
    top_k: usize,
) -> Result<Vec<(f64, Vec<IndicatorReport>)>> {
    Ok(magnitude_sweep_experiment(
        base,
        deltas,
        trials,
        seed,
        measures,
        thresholds,
        top_k,
        &MeasureParams::default(),
    )?)
}

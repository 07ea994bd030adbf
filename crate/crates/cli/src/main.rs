//! `centra` — weighted-graph centrality measures and ranking-robustness
//! experiments.
//!
//! Exit codes: 0 on success, 1 on data errors (and bound violations from
//! `verify-bounds`), 2 on usage errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

use centra_cli::commands;
use centra_core::centrality::Measure;
use centra_core::experiments::DEFAULT_SEED;
use centra_core::graph::WeightKind;

#[derive(Parser)]
#[command(
    name = "centra",
    version,
    about = "Centrality measures and ranking-robustness experiments on weighted digraphs"
)]
struct Cli {
    /// Worker threads for experiment loops (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Similarity,
    Dissimilarity,
}

impl From<KindArg> for WeightKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::Similarity => WeightKind::Similarity,
            KindArg::Dissimilarity => WeightKind::Dissimilarity,
        }
    }
}

fn parse_measure(label: &str) -> Result<Measure, String> {
    Measure::from_label(label).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Per-node values and ranking of one measure on an edge-list graph.
    Centrality {
        /// Edge-list file (`src,dst,weight[,directed]`).
        #[arg(long)]
        graph: PathBuf,
        /// Measure label, e.g. degree, betweenness, stable_betweenness.
        #[arg(long, value_parser = parse_measure)]
        measure: Measure,
        /// How the file's weights are interpreted; converted through the
        /// reciprocal rule when the measure needs the other kind.
        #[arg(long, value_enum, default_value_t = KindArg::Dissimilarity)]
        weight_kind: KindArg,
    },

    /// Random-network perturbation experiment from a config file.
    PerturbExperiment {
        /// Flat key=value config file; see the README for the grammar.
        #[arg(long)]
        config: PathBuf,
        /// Output directory for the indicator CSVs.
        #[arg(long)]
        out: PathBuf,
        /// Master seed; overrides the config file when given.
        #[arg(long, env = "CENTRA_SEED")]
        seed: Option<u64>,
    },

    /// Magnitude sweep on a fixed graph: exceedance and histogram CSVs.
    Sweep {
        #[arg(long)]
        graph: PathBuf,
        /// Perturbation amplitudes, e.g. --deltas 0.005,0.02,0.035.
        #[arg(long, value_delimiter = ',', required = true)]
        deltas: Vec<f64>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, env = "CENTRA_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = KindArg::Similarity)]
        weight_kind: KindArg,
        /// Measures to sweep (default: the five headline measures).
        #[arg(long, value_delimiter = ',', value_parser = parse_measure)]
        measures: Option<Vec<Measure>>,
        /// Rank-change thresholds for the exceedance CSVs.
        #[arg(long, value_delimiter = ',', default_values_t = [1u32, 3])]
        thresholds: Vec<u32>,
        #[arg(long, default_value_t = 5)]
        top_k: usize,
        #[arg(long)]
        out: PathBuf,
    },

    /// Cross-measure ranking variation matrices on random networks.
    CompareMeasures {
        #[arg(long, value_delimiter = ',', default_values_t = [100usize])]
        sizes: Vec<usize>,
        /// Random networks per size.
        #[arg(long, default_value_t = 30)]
        trials: usize,
        #[arg(long, env = "CENTRA_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_delimiter = ',', value_parser = parse_measure)]
        measures: Option<Vec<Measure>>,
        #[arg(long)]
        out: PathBuf,
    },

    /// Check empirical stability ratios against the proven constants;
    /// exits nonzero on any violation.
    VerifyBounds {
        #[arg(long, value_delimiter = ',', default_values_t = [10usize, 20, 40, 60])]
        sizes: Vec<usize>,
        /// Sampled pairs per size (half type 1 noise, half type 2).
        #[arg(long, default_value_t = 30)]
        trials: usize,
        #[arg(long, env = "CENTRA_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn default_measures() -> Vec<Measure> {
    vec![
        Measure::Degree,
        Measure::ClosenessDecentrality,
        Measure::Betweenness,
        Measure::Eigenvector,
        Measure::StableBetweenness,
    ]
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()?;
    }
    let stdout = std::io::stdout();
    match cli.command {
        Command::Centrality {
            graph,
            measure,
            weight_kind,
        } => {
            let mut out = stdout.lock();
            commands::centrality_command(&graph, measure, weight_kind.into(), &mut out)?;
            out.flush()?;
            Ok(true)
        }
        Command::PerturbExperiment { config, out, seed } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| anyhow::anyhow!("reading {}: {e}", config.display()))?;
            let mut experiment = centra_cli::parse_experiment_config(&text)?;
            if let Some(seed) = seed {
                experiment.seed = seed;
            }
            commands::perturb_experiment_command(&experiment, &out)?;
            Ok(true)
        }
        Command::Sweep {
            graph,
            deltas,
            trials,
            seed,
            weight_kind,
            measures,
            thresholds,
            top_k,
            out,
        } => {
            commands::sweep_command(
                &graph,
                weight_kind.into(),
                &deltas,
                trials,
                seed,
                &measures.unwrap_or_else(default_measures),
                &thresholds,
                top_k,
                &out,
            )?;
            Ok(true)
        }
        Command::CompareMeasures {
            sizes,
            trials,
            seed,
            measures,
            out,
        } => {
            let measures = measures.unwrap_or_else(|| {
                let mut m = default_measures();
                m.push(Measure::DegreeSquared);
                m
            });
            commands::compare_measures_command(&sizes, trials, seed, &measures, &out)?;
            Ok(true)
        }
        Command::VerifyBounds {
            sizes,
            trials,
            seed,
        } => {
            let mut out = stdout.lock();
            let ok = commands::verify_bounds_command(&sizes, trials, seed, &mut out)?;
            out.flush()?;
            if !ok {
                eprintln!("error: at least one sampled pair violates its stability bound");
            }
            Ok(ok)
        }
    }
}

fn is_broken_pipe(error: &anyhow::Error) -> bool {
    error
        .chain()
        .filter_map(|cause| cause.downcast_ref::<std::io::Error>())
        .any(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(error) if is_broken_pipe(&error) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error:#}");
            ExitCode::from(1)
        }
    }
}

//! Flat key-value experiment configuration files.
//!
//! One `key = value` pair per line; `#` starts a comment. Lists are
//! comma-separated. Unset keys fall back to the desk-scale defaults of
//! [`ExperimentConfig::default`]. Recognized keys:
//!
//! ```text
//! sizes       = 20,40,60,80,100
//! trials      = 20
//! noise_p     = 1.0
//! noise_delta = 0.01
//! measures    = degree,closeness_decentrality,betweenness,eigenvector,stable_betweenness
//! thresholds  = 3,5,10
//! top_k       = 5
//! seed        = 42
//! ```

use centra_core::centrality::Measure;
use centra_core::experiments::ExperimentConfig;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },

    #[error("line {line}: expected `key = value`, found `{text}`")]
    MissingEquals { line: usize, text: String },

    #[error("line {line}: invalid value for `{key}`: {message}")]
    BadValue {
        line: usize,
        key: String,
        message: String,
    },
}

pub fn parse_experiment_config(text: &str) -> Result<ExperimentConfig, ConfigError> {
    let mut config = ExperimentConfig::default();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, value) = trimmed
            .split_once('=')
            .ok_or_else(|| ConfigError::MissingEquals {
                line,
                text: trimmed.to_string(),
            })?;
        let key = key.trim();
        let value = value.trim();
        let bad = |message: String| ConfigError::BadValue {
            line,
            key: key.to_string(),
            message,
        };
        match key {
            "sizes" => config.sizes = parse_list(value).map_err(bad)?,
            "trials" => config.trials = value.parse().map_err(|e| bad(format!("{e}")))?,
            "noise_p" => config.noise_p = value.parse().map_err(|e| bad(format!("{e}")))?,
            "noise_delta" => config.noise_delta = value.parse().map_err(|e| bad(format!("{e}")))?,
            "measures" => {
                config.measures = value
                    .split(',')
                    .map(|m| Measure::from_label(m.trim()).map_err(|e| bad(format!("{e}"))))
                    .collect::<Result<_, _>>()?
            }
            "thresholds" => config.thresholds = parse_list(value).map_err(bad)?,
            "top_k" => config.top_k = value.parse().map_err(|e| bad(format!("{e}")))?,
            "seed" => config.seed = value.parse().map_err(|e| bad(format!("{e}")))?,
            _ => {
                return Err(ConfigError::UnknownKey {
                    line,
                    key: key.to_string(),
                })
            }
        }
    }
    Ok(config)
}

fn parse_list<T: std::str::FromStr>(value: &str) -> Result<Vec<T>, String>
where
    T::Err: std::fmt::Display,
{
    value
        .split(',')
        .map(|item| item.trim().parse().map_err(|e| format!("{e}")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_config_parses() {
        let text = "\
# experiment
sizes = 20, 40
trials = 5
noise_p = 0.1
noise_delta = 0.1
measures = degree, betweenness
thresholds = 3,5
top_k = 3
seed = 7
";
        let config = parse_experiment_config(text).unwrap();
        assert_eq!(config.sizes, vec![20, 40]);
        assert_eq!(config.trials, 5);
        assert_eq!(config.noise_p, 0.1);
        assert_eq!(config.noise_delta, 0.1);
        assert_eq!(config.measures, vec![Measure::Degree, Measure::Betweenness]);
        assert_eq!(config.thresholds, vec![3, 5]);
        assert_eq!(config.top_k, 3);
        assert_eq!(config.seed, 7);
    }

    #[test]
    fn defaults_fill_missing_keys() {
        let config = parse_experiment_config("trials = 3\n").unwrap();
        assert_eq!(config.trials, 3);
        assert_eq!(config.sizes, ExperimentConfig::default().sizes);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(
            parse_experiment_config("bogus_key = 1\n"),
            Err(ConfigError::UnknownKey { line: 1, .. })
        ));
        assert!(matches!(
            parse_experiment_config("\ntrials\n"),
            Err(ConfigError::MissingEquals { line: 2, .. })
        ));
        assert!(matches!(
            parse_experiment_config("trials = soon\n"),
            Err(ConfigError::BadValue { line: 1, .. })
        ));
        assert!(matches!(
            parse_experiment_config("measures = nonsense\n"),
            Err(ConfigError::BadValue { line: 1, .. })
        ));
    }
}

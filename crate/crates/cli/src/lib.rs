//! Command-line companion to `centra-core`: edge-list ingestion,
//! experiment configuration files, CSV emission, and the subcommand
//! implementations behind the `centra` binary.

pub mod commands;
pub mod config;
pub mod csv_out;
pub mod edge_list;

pub use config::parse_experiment_config;
pub use edge_list::{parse_edge_list, parse_edge_list_str, write_edge_list, ParsedGraph};

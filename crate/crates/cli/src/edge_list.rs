//! Edge-list files.
//!
//! Format: a header line `src,dst,weight` (optionally `src,dst,weight,directed`),
//! then one edge per line. Node names are arbitrary strings assigned ids
//! in order of first appearance. Lines starting with `#` and blank lines
//! are ignored. A `directed` value of `false` expands the row into a
//! symmetric pair of directed edges; the column defaults to `true`.

use std::collections::HashMap;
use std::collections::HashSet;
use std::fs;
use std::io::Write;
use std::path::Path;

use centra_core::graph::{WeightKind, WeightedDigraph};

#[derive(Debug, thiserror::Error)]
pub enum EdgeListError {
    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: {source}")]
    Data {
        line: usize,
        source: centra_core::Error,
    },

    #[error("{0}")]
    Graph(#[from] centra_core::Error),
}

/// A parsed edge list: the graph plus the label for each node id.
#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: WeightedDigraph,
    pub names: Vec<String>,
}

impl ParsedGraph {
    pub fn name(&self, node: u32) -> &str {
        &self.names[node as usize]
    }
}

pub fn parse_edge_list(path: &Path, weight_kind: WeightKind) -> Result<ParsedGraph, EdgeListError> {
    parse_edge_list_str(&fs::read_to_string(path)?, weight_kind)
}

pub fn parse_edge_list_str(
    text: &str,
    weight_kind: WeightKind,
) -> Result<ParsedGraph, EdgeListError> {
    let mut names: Vec<String> = Vec::new();
    let mut ids: HashMap<String, u32> = HashMap::new();
    let mut edges: Vec<(u32, u32, f64)> = Vec::new();
    let mut seen: HashSet<(u32, u32)> = HashSet::new();
    let mut header_done = false;

    let intern = |name: &str, names: &mut Vec<String>, ids: &mut HashMap<String, u32>| {
        if let Some(&id) = ids.get(name) {
            id
        } else {
            let id = names.len() as u32;
            names.push(name.to_string());
            ids.insert(name.to_string(), id);
            id
        }
    };

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if !header_done {
            let fields: Vec<&str> = trimmed.split(',').map(str::trim).collect();
            let ok = matches!(fields.as_slice(), ["src", "dst", "weight"])
                || matches!(fields.as_slice(), ["src", "dst", "weight", "directed"]);
            if !ok {
                return Err(EdgeListError::Syntax {
                    line,
                    message: format!(
                        "expected header `src,dst,weight[,directed]`, found `{trimmed}`"
                    ),
                });
            }
            header_done = true;
            continue;
        }

        let fields: Vec<&str> = trimmed.split(',').map(str::trim).collect();
        if fields.len() != 3 && fields.len() != 4 {
            return Err(EdgeListError::Syntax {
                line,
                message: format!("expected 3 or 4 fields, found {}", fields.len()),
            });
        }
        let src = intern(fields[0], &mut names, &mut ids);
        let dst = intern(fields[1], &mut names, &mut ids);
        let weight: f64 = fields[2].parse().map_err(|_| EdgeListError::Syntax {
            line,
            message: format!("invalid weight `{}`", fields[2]),
        })?;
        let directed = match fields.get(3) {
            None => true,
            Some(&"true") => true,
            Some(&"false") => false,
            Some(other) => {
                return Err(EdgeListError::Syntax {
                    line,
                    message: format!("invalid directed flag `{other}`"),
                })
            }
        };

        if src == dst {
            return Err(EdgeListError::Data {
                line,
                source: centra_core::Error::SelfLoop { node: src },
            });
        }
        if !(weight.is_finite() && weight > 0.0) {
            return Err(EdgeListError::Data {
                line,
                source: centra_core::Error::NonPositiveWeight { src, dst, weight },
            });
        }
        let rows: &[(u32, u32)] = if directed {
            &[(src, dst)]
        } else {
            &[(src, dst), (dst, src)]
        };
        for &(s, d) in rows {
            if !seen.insert((s, d)) {
                return Err(EdgeListError::Data {
                    line,
                    source: centra_core::Error::DuplicateEdge { src: s, dst: d },
                });
            }
            edges.push((s, d, weight));
        }
    }

    if !header_done {
        return Err(EdgeListError::Syntax {
            line: text.lines().count() + 1,
            message: "missing header `src,dst,weight[,directed]`".into(),
        });
    }

    let graph = WeightedDigraph::build(names.len(), &edges, weight_kind)?;
    Ok(ParsedGraph { graph, names })
}

/// Writes a graph back out, one directed edge per row in sorted order.
/// Re-parsing the output reproduces the same named graph (weights exact);
/// node ids may be renumbered, since parsing assigns them by first
/// appearance.
pub fn write_edge_list(
    out: &mut impl Write,
    graph: &WeightedDigraph,
    names: &[String],
) -> std::io::Result<()> {
    writeln!(out, "src,dst,weight")?;
    for (src, dst, w) in graph.edges() {
        writeln!(out, "{},{},{}", names[src as usize], names[dst as usize], w)?;
    }
    Ok(())
}

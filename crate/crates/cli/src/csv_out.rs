//! CSV emission.
//!
//! All files use `\n` newlines regardless of platform and format floats
//! with Rust's shortest round-trip representation, so identical inputs
//! produce byte-identical outputs. Infinite values are written as the
//! token `inf`.

use std::io::Write;

use centra_core::centrality::Measure;
use centra_core::experiments::{CrossMeasureMatrix, IndicatorReport};

/// Shortest round-trip float formatting with `inf` for infinities.
pub fn fmt_value(v: f64) -> String {
    if v.is_infinite() {
        "inf".to_string()
    } else {
        format!("{v}")
    }
}

/// `<key>,measure,value` rows, one per (key, measure) cell.
pub fn write_scalar_indicator(
    out: &mut impl Write,
    key_header: &str,
    rows: impl Iterator<Item = (String, Measure, f64)>,
) -> std::io::Result<()> {
    writeln!(out, "{key_header},measure,value")?;
    for (key, measure, value) in rows {
        writeln!(out, "{key},{},{}", measure.label(), fmt_value(value))?;
    }
    Ok(())
}

/// `<key>,measure,displacement,count` histogram rows.
pub fn write_histogram(
    out: &mut impl Write,
    key_header: &str,
    rows: impl Iterator<Item = (String, Measure, IndicatorReport)>,
) -> std::io::Result<()> {
    writeln!(out, "{key_header},measure,displacement,count")?;
    for (key, measure, report) in rows {
        for (&displacement, &count) in &report.histogram {
            writeln!(out, "{key},{},{displacement},{count}", measure.label())?;
        }
    }
    Ok(())
}

/// Square table with average variation above the diagonal and maximum
/// variation below it.
pub fn write_cross_measure_matrix(
    out: &mut impl Write,
    matrix: &CrossMeasureMatrix,
) -> std::io::Result<()> {
    let labels: Vec<&str> = matrix.measures.iter().map(|m| m.label()).collect();
    writeln!(out, "measure,{}", labels.join(","))?;
    for (row, label) in labels.iter().enumerate() {
        let cells: Vec<String> = (0..labels.len())
            .map(|col| fmt_value(matrix.table_entry(row, col)))
            .collect();
        writeln!(out, "{label},{}", cells.join(","))?;
    }
    Ok(())
}

/// Per-node centrality values with their 1-based rank.
pub fn write_centrality(
    out: &mut impl Write,
    names: &[String],
    values: &[f64],
    rank_of: impl Fn(u32) -> u32,
) -> std::io::Result<()> {
    writeln!(out, "node,value,rank")?;
    for (node, (name, &value)) in names.iter().zip(values.iter()).enumerate() {
        writeln!(out, "{name},{},{}", fmt_value(value), rank_of(node as u32))?;
    }
    Ok(())
}

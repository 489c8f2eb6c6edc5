//! File formats: the line-oriented and JSON graph/filtration inputs, labels
//! CSV, and the CSV/JSON output writers with their provenance header block.
//!
//! Every output carries a header (tool version, config echo, field
//! characteristic, input digests). Headers contain no timestamps or thread
//! counts, so identical configs and inputs produce byte-identical files.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::betti::{BettiTable, PersistentBettiTable};
use crate::bitset::VertexSet;
use crate::complexes::{HypergraphFiltration, MonomialIdeal};
use crate::covers::CoverBarcode;
use crate::error::{Error, Result};
use crate::pipelines::{EvalMetrics, FeatureVector, MoleculeCurves};
use crate::splitting::{PersistentSplittingReport, SplittingReport};

// ---------------------------------------------------------------------------
// Input parsing
// ---------------------------------------------------------------------------

/// Parses the line-oriented graph/filtration format:
///
/// ```text
/// n 3
/// t 0.5
/// e 1 2
/// t 1.0
/// e 1 2
/// e 2 3
/// ```
///
/// Each level lists its full edge set; monotonicity is validated. A file
/// with no `t` lines is a single graph at threshold 0.
pub fn parse_filtration_text(text: &str) -> Result<HypergraphFiltration> {
    let mut n: Option<usize> = None;
    let mut grid: Vec<f64> = Vec::new();
    let mut levels: Vec<Vec<VertexSet>> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().unwrap();
        match tag {
            "n" => {
                let value: usize = tokens
                    .next()
                    .ok_or_else(|| Error::parse(format!("line {}: n without a count", lineno + 1)))?
                    .parse()
                    .map_err(|_| Error::parse(format!("line {}: bad vertex count", lineno + 1)))?;
                n = Some(value);
            }
            "t" => {
                let value: f64 = tokens
                    .next()
                    .ok_or_else(|| Error::parse(format!("line {}: t without a value", lineno + 1)))?
                    .parse()
                    .map_err(|_| Error::parse(format!("line {}: bad threshold", lineno + 1)))?;
                grid.push(value);
                levels.push(Vec::new());
            }
            "e" => {
                let vertices: Vec<usize> = tokens
                    .map(|t| {
                        t.parse::<usize>().map_err(|_| {
                            Error::parse(format!("line {}: bad vertex label {t:?}", lineno + 1))
                        })
                    })
                    .collect::<Result<_>>()?;
                if vertices.len() < 2 {
                    return Err(Error::parse(format!(
                        "line {}: an edge needs at least 2 vertices",
                        lineno + 1
                    )));
                }
                if levels.is_empty() {
                    grid.push(0.0);
                    levels.push(Vec::new());
                }
                levels
                    .last_mut()
                    .unwrap()
                    .push(VertexSet::from_vertices(&vertices)?);
            }
            other => {
                return Err(Error::parse(format!(
                    "line {}: unknown directive {other:?}",
                    lineno + 1
                )))
            }
        }
    }

    let n = n.ok_or_else(|| Error::parse("missing `n <count>` header"))?;
    if levels.is_empty() {
        grid.push(0.0);
        levels.push(Vec::new());
    }
    HypergraphFiltration::new(n, grid, levels)
}

/// JSON form: `{"n": 3, "grid": [0.5, 1.0], "levels": [[[1,2]], [[1,2],[2,3]]]}`.
/// `grid` may be omitted for a single-level graph.
pub fn parse_filtration_json(bytes: &[u8]) -> Result<HypergraphFiltration> {
    #[derive(serde::Deserialize)]
    struct Raw {
        n: usize,
        #[serde(default)]
        grid: Option<Vec<f64>>,
        levels: Vec<Vec<Vec<usize>>>,
    }
    let raw: Raw =
        serde_json::from_slice(bytes).map_err(|e| Error::parse(format!("bad JSON: {e}")))?;
    let grid = raw
        .grid
        .unwrap_or_else(|| (0..raw.levels.len()).map(|i| i as f64).collect());
    let levels = raw
        .levels
        .iter()
        .map(|edges| {
            edges
                .iter()
                .map(|e| VertexSet::from_vertices(e))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    HypergraphFiltration::new(raw.n, grid, levels)
}

/// Dispatches on a `.json` extension, otherwise the text format.
pub fn parse_filtration_file(path: &std::path::Path) -> Result<HypergraphFiltration> {
    let bytes = std::fs::read(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        parse_filtration_json(&bytes)
    } else {
        let text =
            std::str::from_utf8(&bytes).map_err(|_| Error::parse("input is not UTF-8"))?;
        parse_filtration_text(text)
    }
}

/// Labels CSV: `id,label` per line; a leading `id,label` header is skipped.
pub fn parse_labels_csv(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if lineno == 0 && line.eq_ignore_ascii_case("id,label") {
            continue;
        }
        let (id, label) = line.split_once(',').ok_or_else(|| {
            Error::parse(format!("line {}: expected `id,label`", lineno + 1))
        })?;
        out.push((id.trim().to_string(), label.trim().to_string()));
    }
    if out.is_empty() {
        return Err(Error::parse("labels CSV contains no rows"));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Output header
// ---------------------------------------------------------------------------

/// Provenance block echoed into every output file.
#[derive(Clone, Debug)]
pub struct OutputHeader {
    pub tool_version: String,
    pub subcommand: String,
    pub field_characteristic: u64,
    pub config: BTreeMap<String, Value>,
    pub input_digests: Vec<(String, String)>,
}

impl OutputHeader {
    pub fn csv_comment_block(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# tool: edge-ideals {}\n", self.tool_version));
        out.push_str(&format!("# subcommand: {}\n", self.subcommand));
        out.push_str(&format!(
            "# field_characteristic: {}\n",
            self.field_characteristic
        ));
        let config = Value::Object(self.config.clone().into_iter().collect());
        out.push_str(&format!("# config: {config}\n"));
        for (name, digest) in &self.input_digests {
            out.push_str(&format!("# input_sha256: {name} {digest}\n"));
        }
        out
    }

    pub fn json_value(&self) -> Value {
        json!({
            "tool": format!("edge-ideals {}", self.tool_version),
            "subcommand": self.subcommand,
            "field_characteristic": self.field_characteristic,
            "config": Value::Object(self.config.clone().into_iter().collect()),
            "input_sha256": self.input_digests.iter()
                .map(|(name, digest)| json!({"name": name, "sha256": digest}))
                .collect::<Vec<_>>(),
        })
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

// ---------------------------------------------------------------------------
// Writers
// ---------------------------------------------------------------------------

fn fmt_f64(x: f64) -> String {
    format!("{x}")
}

pub fn betti_table_csv(table: &BettiTable, header: &OutputHeader) -> String {
    let mut out = header.csv_comment_block();
    out.push_str(&format!("# subject: {}\n", table.subject));
    out.push_str("i,j,count\n");
    for (&(i, j), &v) in &table.entries {
        out.push_str(&format!("{i},{j},{v}\n"));
    }
    out
}

pub fn betti_table_json(table: &BettiTable, header: &OutputHeader) -> Value {
    let entries: Vec<Value> = table
        .entries
        .iter()
        .map(|(&(i, j), &v)| json!({"i": i, "j": j, "count": v}))
        .collect();
    let mut value = json!({
        "header": header.json_value(),
        "subject": table.subject.to_string(),
        "entries": entries,
    });
    if let Some(multigraded) = &table.multigraded {
        let cells: Vec<Value> = multigraded
            .iter()
            .map(|(&(i, bits), &v)| {
                json!({
                    "i": i,
                    "w": VertexSet::from_bits(bits).vertices(),
                    "count": v,
                })
            })
            .collect();
        value["multigraded"] = Value::Array(cells);
    }
    value
}

pub fn persistent_table_csv(table: &PersistentBettiTable, header: &OutputHeader) -> String {
    let mut out = header.csv_comment_block();
    out.push_str(&format!("# subject: {}\n", table.subject));
    out.push_str(&format!(
        "# grid: {}\n",
        table
            .grid
            .iter()
            .map(|&g| fmt_f64(g))
            .collect::<Vec<_>>()
            .join(" ")
    ));
    out.push_str("a,b,i,j,count\n");
    for (&(a, b, i, j), &v) in &table.entries {
        out.push_str(&format!("{a},{b},{i},{j},{v}\n"));
    }
    out
}

pub fn persistent_table_json(table: &PersistentBettiTable, header: &OutputHeader) -> Value {
    let entries: Vec<Value> = table
        .entries
        .iter()
        .map(|(&(a, b, i, j), &v)| json!({"a": a, "b": b, "i": i, "j": j, "count": v}))
        .collect();
    json!({
        "header": header.json_value(),
        "subject": table.subject.to_string(),
        "grid": table.grid,
        "entries": entries,
    })
}

pub fn barcode_csv(barcode: &CoverBarcode, header: &OutputHeader) -> String {
    let mut out = header.csv_comment_block();
    out.push_str("cover,birth,death,size\n");
    for bar in barcode.bars() {
        let cover = bar
            .cover
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(";");
        let death = bar.death.map_or_else(|| "inf".to_string(), fmt_f64);
        out.push_str(&format!(
            "{cover},{},{death},{}\n",
            fmt_f64(bar.birth),
            bar.size()
        ));
    }
    out
}

pub fn pi_matrix_csv(barcode: &CoverBarcode, header: &OutputHeader) -> String {
    let mut out = header.csv_comment_block();
    out.push_str("a,b,t_a,t_b,pi\n");
    for (a, b, pi) in barcode.pi_matrix() {
        out.push_str(&format!(
            "{a},{b},{},{},{pi}\n",
            fmt_f64(barcode.grid()[a]),
            fmt_f64(barcode.grid()[b])
        ));
    }
    out
}

pub fn barcode_json(barcode: &CoverBarcode, header: &OutputHeader) -> Value {
    let bars: Vec<Value> = barcode
        .bars()
        .iter()
        .map(|bar| {
            json!({
                "cover": bar.cover.vertices(),
                "birth": bar.birth,
                "death": bar.death,
                "size": bar.size(),
            })
        })
        .collect();
    let pi: Vec<Value> = barcode
        .pi_matrix()
        .into_iter()
        .map(|(a, b, v)| json!({"a": a, "b": b, "pi": v}))
        .collect();
    json!({
        "header": header.json_value(),
        "grid": barcode.grid(),
        "bars": bars,
        "pi": pi,
    })
}

pub fn splitting_report_json(report: &SplittingReport, header: &OutputHeader) -> Value {
    let cells: Vec<Value> = report
        .cells
        .iter()
        .map(|c| {
            json!({
                "i": c.i, "j": c.j,
                "total": c.total, "left": c.left, "right": c.right,
                "intersection": c.intersection, "slack": c.slack,
            })
        })
        .collect();
    json!({
        "header": header.json_value(),
        "holds": report.holds,
        "cells": cells,
    })
}

pub fn persistent_splitting_json(
    report: &PersistentSplittingReport,
    header: &OutputHeader,
) -> Value {
    let cells: Vec<Value> = report
        .cells
        .iter()
        .map(|c| {
            json!({
                "a": c.a, "b": c.b, "i": c.i, "j": c.j,
                "total": c.total, "left": c.left, "right": c.right,
                "intersection": c.intersection, "slack": c.slack, "tight": c.tight,
            })
        })
        .collect();
    json!({
        "header": header.json_value(),
        "all_nonnegative": report.all_nonnegative,
        "cells": cells,
    })
}

/// Aligned text rendering of the persistent report; nonzero-slack cells are
/// marked (slack > 0 is expected away from the diagonal).
pub fn persistent_splitting_text(report: &PersistentSplittingReport) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>4} {:>4} {:>4} {:>4} {:>8} {:>8} {:>8} {:>10} {:>7}",
        "a", "b", "i", "j", "beta(I)", "beta(J)", "beta(K)", "beta(J^K)", "slack"
    );
    for c in &report.cells {
        let mark = if c.slack != 0 { " *" } else { "" };
        let _ = writeln!(
            out,
            "{:>4} {:>4} {:>4} {:>4} {:>8} {:>8} {:>8} {:>10} {:>7}{}",
            c.a, c.b, c.i, c.j, c.total, c.left, c.right, c.intersection, c.slack, mark
        );
    }
    let _ = writeln!(
        out,
        "persistent splitting inequality {}",
        if report.all_nonnegative {
            "holds"
        } else {
            "FAILS"
        }
    );
    out
}

/// Feature matrix CSV: one row per record, columns `kmer:radius` in layout
/// order (k-mers lexicographic, radii in grid order).
pub fn features_csv(
    ids: &[String],
    vectors: &[FeatureVector],
    header: &OutputHeader,
) -> Result<String> {
    let mut out = header.csv_comment_block();
    let Some(first) = vectors.first() else {
        return Err(Error::precondition("no feature vectors to write"));
    };
    let k = first.k;
    let radii = &first.radii;
    out.push_str("id");
    for rank in 0..4usize.pow(k as u32) {
        let kmer = kmer_from_rank(rank, k);
        for r in radii {
            out.push_str(&format!(",{kmer}:{}", fmt_f64(*r)));
        }
    }
    out.push('\n');
    for (id, fv) in ids.iter().zip(vectors) {
        out.push_str(id);
        for v in &fv.values {
            out.push_str(&format!(",{v}"));
        }
        out.push('\n');
    }
    Ok(out)
}

fn kmer_from_rank(mut rank: usize, k: usize) -> String {
    let alphabet = [b'A', b'C', b'G', b'T'];
    let mut bytes = vec![b'A'; k];
    for idx in (0..k).rev() {
        bytes[idx] = alphabet[rank % 4];
        rank /= 4;
    }
    String::from_utf8(bytes).expect("alphabet is ASCII")
}

/// Row-major little-endian u64 dump of the feature matrix.
pub fn features_binary(vectors: &[FeatureVector]) -> Vec<u8> {
    let mut out = Vec::new();
    for fv in vectors {
        for v in &fv.values {
            out.extend_from_slice(&v.to_le_bytes());
        }
    }
    out
}

/// Sidecar describing the binary layout.
pub fn features_sidecar_json(
    ids: &[String],
    vectors: &[FeatureVector],
    header: &OutputHeader,
) -> Value {
    let (k, radii, cols) = vectors
        .first()
        .map(|fv| (fv.k, fv.radii.clone(), fv.values.len()))
        .unwrap_or((0, Vec::new(), 0));
    json!({
        "header": header.json_value(),
        "k": k,
        "radii": radii,
        "rows": vectors.len(),
        "cols": cols,
        "dtype": "u64le",
        "layout": "row-major; kmers lexicographic, radii in grid order",
        "ids": ids,
    })
}

pub fn distances_csv(ids: &[String], matrix: &[Vec<f64>], header: &OutputHeader) -> String {
    let mut out = header.csv_comment_block();
    out.push_str("id");
    for id in ids {
        out.push_str(&format!(",{id}"));
    }
    out.push('\n');
    for (id, row) in ids.iter().zip(matrix) {
        out.push_str(id);
        for v in row {
            out.push_str(&format!(",{}", fmt_f64(*v)));
        }
        out.push('\n');
    }
    out
}

pub fn metrics_json(metrics: &EvalMetrics, header: &OutputHeader) -> Value {
    json!({
        "header": header.json_value(),
        "accuracy": metrics.accuracy,
        "f1": metrics.f1,
        "balanced_accuracy": metrics.balanced_accuracy,
        "recall": metrics.recall,
        "precision": metrics.precision,
    })
}

/// Curve table CSV with columns `(entity, i, j, r, value)`.
pub fn curves_csv(entity: &str, curves: &MoleculeCurves, header: &OutputHeader) -> String {
    let mut out = header.csv_comment_block();
    out.push_str("entity,i,j,r,value\n");
    for (&(i, d), curve) in &curves.curves {
        for (level, &v) in curve.iter().enumerate() {
            out.push_str(&format!(
                "{entity},{i},{},{},{v}\n",
                i + d,
                fmt_f64(curves.grid[level])
            ));
        }
    }
    out
}

/// A monomial ideal as a JSON list of exponent vectors.
pub fn monomial_ideal_json(ideal: &MonomialIdeal) -> Value {
    json!(ideal.generators())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_format_roundtrip() {
        let f = parse_filtration_text("n 3\nt 0.5\ne 1 2\nt 1.0\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.grid(), &[0.5, 1.0]);
        assert_eq!(f.level(0).edges().len(), 1);
        assert_eq!(f.level(1).edges().len(), 2);
    }

    #[test]
    fn text_format_single_graph() {
        let f = parse_filtration_text("n 3\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.grid(), &[0.0]);
    }

    #[test]
    fn text_format_errors() {
        assert!(parse_filtration_text("e 1 2\n").is_err());
        assert!(parse_filtration_text("n 3\ne 1\n").is_err());
        assert!(parse_filtration_text("n 3\nq 1 2\n").is_err());
    }

    #[test]
    fn json_format() {
        let f = parse_filtration_json(
            br#"{"n": 3, "grid": [0.5, 1.0], "levels": [[[1,2]], [[1,2],[2,3]]]}"#,
        )
        .unwrap();
        assert_eq!(f.len(), 2);
        let single = parse_filtration_json(br#"{"n": 2, "levels": [[[1,2]]]}"#).unwrap();
        assert_eq!(single.grid(), &[0.0]);
    }

    #[test]
    fn labels_csv() {
        let labels = parse_labels_csv("id,label\nA,1\nB,2\n").unwrap();
        assert_eq!(labels.len(), 2);
        assert_eq!(labels[0], ("A".to_string(), "1".to_string()));
        assert!(parse_labels_csv("").is_err());
    }

    #[test]
    fn kmer_rank_rendering() {
        assert_eq!(kmer_from_rank(0, 2), "AA");
        assert_eq!(kmer_from_rank(1, 2), "AC");
        assert_eq!(kmer_from_rank(15, 2), "TT");
    }

    #[test]
    fn digest_stable() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}

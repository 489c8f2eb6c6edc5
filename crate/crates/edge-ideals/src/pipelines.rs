//! End-to-end data applications: alignment-free genome featurization and
//! 1-NN classification from FASTA, and molecular Betti curves from 3D
//! coordinates.
//!
//! The genomic feature of a sequence is built per k-mer: occurrences become
//! vertices, two occurrences are joined when their positional distance is at
//! most `r`, and the tracked invariant `β_{n-2,n}(I(Ḡ_r))` equals the
//! component count of the positional graph minus one. Sweeping `r` over the
//! radius grid with an incremental union-find yields the persistent Betti
//! curve; concatenating curves over all `4^k` k-mers (lexicographic) gives
//! the fixed-length feature vector.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::{betti_table_ideal, persistent_betti_table, Subject};
use crate::bitset::VertexSet;
use crate::complexes::{edge_ideal, HypergraphFiltration};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::unionfind::UnionFind;

/// Upper bound on `k` so feature vectors stay addressable.
pub const MAX_KMER_LEN: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FastaRecord {
    pub id: String,
    pub sequence: String,
}

/// Parses FASTA bytes: headers are stripped at the first whitespace,
/// sequences are uppercased and concatenated across wrapped lines. Non-ACGT
/// symbols are retained here and masked during k-mer scanning.
pub fn parse_fasta(bytes: &[u8]) -> Result<Vec<FastaRecord>> {
    let text = std::str::from_utf8(bytes).map_err(|_| Error::parse("FASTA is not UTF-8"))?;
    let mut records: Vec<FastaRecord> = Vec::new();
    let mut current: Option<FastaRecord> = None;
    for line in text.lines() {
        let line = line.trim_end();
        if line.is_empty() {
            continue;
        }
        if let Some(header) = line.strip_prefix('>') {
            if let Some(rec) = current.take() {
                if rec.sequence.is_empty() {
                    return Err(Error::parse(format!("record {} has no sequence", rec.id)));
                }
                records.push(rec);
            }
            let id = header
                .split_whitespace()
                .next()
                .unwrap_or("")
                .to_string();
            if id.is_empty() {
                return Err(Error::parse("FASTA header with empty identifier"));
            }
            current = Some(FastaRecord {
                id,
                sequence: String::new(),
            });
        } else {
            match current.as_mut() {
                Some(rec) => rec.sequence.push_str(&line.to_ascii_uppercase()),
                None => return Err(Error::parse("sequence data before any FASTA header")),
            }
        }
    }
    if let Some(rec) = current.take() {
        if rec.sequence.is_empty() {
            return Err(Error::parse(format!("record {} has no sequence", rec.id)));
        }
        records.push(rec);
    }
    if records.is_empty() {
        return Err(Error::parse("FASTA contains no records"));
    }
    Ok(records)
}

/// Positions (1-based, strictly increasing) of one k-mer in a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KmerOccurrence {
    pub kmer: String,
    pub positions: Vec<usize>,
}

fn base_rank(b: u8) -> Option<usize> {
    match b {
        b'A' => Some(0),
        b'C' => Some(1),
        b'G' => Some(2),
        b'T' => Some(3),
        _ => None,
    }
}

/// All k-mers with at least one occurrence, sorted by k-mer, with their full
/// position sets from one linear scan. Windows containing a non-ACGT symbol
/// record nothing.
pub fn kmer_positions(sequence: &str, k: usize) -> Vec<KmerOccurrence> {
    let bytes = sequence.as_bytes();
    let mut by_kmer: BTreeMap<&[u8], Vec<usize>> = BTreeMap::new();
    if k == 0 || bytes.len() < k {
        return Vec::new();
    }
    for start in 0..=(bytes.len() - k) {
        let window = &bytes[start..start + k];
        if window.iter().all(|&b| base_rank(b).is_some()) {
            by_kmer.entry(window).or_default().push(start + 1);
        }
    }
    by_kmer
        .into_iter()
        .map(|(kmer, positions)| KmerOccurrence {
            kmer: String::from_utf8_lossy(kmer).into_owned(),
            positions,
        })
        .collect()
}

/// Lexicographic rank of a k-mer over the alphabet `A < C < G < T`.
pub fn kmer_rank(kmer: &str) -> Option<usize> {
    let mut rank = 0usize;
    for &b in kmer.as_bytes() {
        rank = rank * 4 + base_rank(b)?;
    }
    Some(rank)
}

fn validate_radii(radii: &[f64]) -> Result<()> {
    if radii.is_empty() {
        return Err(Error::precondition("radius grid is empty"));
    }
    if radii.iter().any(|r| !r.is_finite() || *r < 0.0) {
        return Err(Error::precondition("radii must be finite and nonnegative"));
    }
    if !radii.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::precondition("radii must be strictly increasing"));
    }
    Ok(())
}

/// The positional graph filtration of one k-mer: occurrence `a` and `b` are
/// adjacent at radius `r` when `|pos_a - pos_b| ≤ r`. Subject to the bitset
/// vertex capacity; the curve path below has no such bound.
pub fn kmer_graph_filtration(
    occ: &KmerOccurrence,
    radii: &[f64],
) -> Result<HypergraphFiltration> {
    validate_radii(radii)?;
    let m = occ.positions.len();
    VertexSet::check_capacity(m)?;
    let mut levels = Vec::with_capacity(radii.len());
    for &r in radii {
        let mut edges = Vec::new();
        for a in 0..m {
            for b in (a + 1)..m {
                let gap = occ.positions[b].abs_diff(occ.positions[a]);
                if gap as f64 <= r {
                    edges.push(VertexSet::singleton(a + 1).insert(b + 1));
                }
            }
        }
        levels.push(edges);
    }
    HypergraphFiltration::new(m, radii.to_vec(), levels)
}

/// The persistent Betti curve of one k-mer: `β_{n-2,n}(I(Ḡ_r))`, i.e. the
/// component count of the positional graph minus one, swept across the
/// radius grid with an incremental union-find. Zero for fewer than two
/// occurrences.
pub fn betti_curve_kmer(occ: &KmerOccurrence, radii: &[f64]) -> Vec<u64> {
    debug_assert!(radii.windows(2).all(|w| w[0] < w[1]));
    let m = occ.positions.len();
    if m <= 1 {
        return vec![0; radii.len()];
    }
    // Consecutive gaps carry all connectivity: positions are totally ordered,
    // so any edge {a, b} implies every in-between consecutive pair is also
    // within range.
    let mut gap_edges: Vec<(usize, usize, u64)> = occ
        .positions
        .windows(2)
        .enumerate()
        .map(|(idx, w)| (idx, idx + 1, (w[1] - w[0]) as u64))
        .collect();
    gap_edges.sort_by_key(|&(_, _, gap)| gap);

    let mut uf = UnionFind::new(m);
    let mut next_edge = 0;
    let mut curve = Vec::with_capacity(radii.len());
    for &r in radii {
        while next_edge < gap_edges.len() && gap_edges[next_edge].2 as f64 <= r {
            let (a, b, _) = gap_edges[next_edge];
            uf.union(a, b);
            next_edge += 1;
        }
        curve.push(uf.component_count() as u64 - 1);
    }
    curve
}

/// Fixed-length genome feature vector: curves of all `4^k` k-mers in
/// lexicographic order, radii in grid order; absent k-mers contribute
/// all-zero segments.
#[derive(Clone, Debug, PartialEq)]
pub struct FeatureVector {
    pub k: usize,
    pub radii: Vec<f64>,
    pub values: Vec<u64>,
}

impl FeatureVector {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

pub fn genome_feature_vector(sequence: &str, k: usize, radii: &[f64]) -> Result<FeatureVector> {
    validate_radii(radii)?;
    if k == 0 || k > MAX_KMER_LEN {
        return Err(Error::precondition(format!(
            "k must lie in 1..={MAX_KMER_LEN}, got {k}"
        )));
    }
    let t = radii.len();
    let mut values = vec![0u64; 4usize.pow(k as u32) * t];
    for occ in kmer_positions(sequence, k) {
        let rank = kmer_rank(&occ.kmer).expect("scanner only emits ACGT k-mers");
        let curve = betti_curve_kmer(&occ, radii);
        values[rank * t..(rank + 1) * t].copy_from_slice(&curve);
    }
    Ok(FeatureVector {
        k,
        radii: radii.to_vec(),
        values,
    })
}

/// Feature vectors for a batch of records, in input order.
pub fn genome_feature_matrix(
    records: &[FastaRecord],
    k: usize,
    radii: &[f64],
) -> Result<Vec<FeatureVector>> {
    records
        .par_iter()
        .map(|rec| genome_feature_vector(&rec.sequence, k, radii))
        .collect()
}

/// Symmetric Euclidean distance matrix between equal-length vectors.
pub fn pairwise_distances(vectors: &[FeatureVector]) -> Result<Vec<Vec<f64>>> {
    let n = vectors.len();
    if let Some(first) = vectors.first() {
        if vectors.iter().any(|v| v.len() != first.len()) {
            return Err(Error::precondition("feature vectors differ in length"));
        }
    }
    let mut matrix = vec![vec![0.0; n]; n];
    let rows: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = vec![0.0; n];
            for j in 0..n {
                if i == j {
                    continue;
                }
                let mut acc = 0.0f64;
                for (a, b) in vectors[i].values.iter().zip(&vectors[j].values) {
                    let d = *a as f64 - *b as f64;
                    acc += d * d;
                }
                row[j] = acc.sqrt();
            }
            row
        })
        .collect();
    for (i, row) in rows.into_iter().enumerate() {
        matrix[i] = row;
    }
    Ok(matrix)
}

/// Leave-one-out 1-NN classification metrics (macro averaging; balanced
/// accuracy is the macro recall). Equidistant neighbors resolve to the
/// smallest index.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalMetrics {
    pub accuracy: f64,
    pub f1: f64,
    pub balanced_accuracy: f64,
    pub recall: f64,
    pub precision: f64,
}

pub fn nn_evaluate(labels: &[String], distances: &[Vec<f64>]) -> Result<EvalMetrics> {
    let n = labels.len();
    if n < 2 {
        return Err(Error::precondition("need at least two items"));
    }
    if distances.len() != n || distances.iter().any(|row| row.len() != n) {
        return Err(Error::precondition(
            "distance matrix shape does not match the label count",
        ));
    }
    let mut classes: Vec<&String> = labels.iter().collect();
    classes.sort();
    classes.dedup();
    if classes.len() < 2 {
        return Err(Error::precondition(
            "degenerate single-class input: evaluation is meaningless",
        ));
    }

    let predictions: Vec<&String> = (0..n)
        .map(|i| {
            let mut best = usize::MAX;
            let mut best_d = f64::INFINITY;
            for j in 0..n {
                if j != i && distances[i][j] < best_d {
                    best_d = distances[i][j];
                    best = j;
                }
            }
            &labels[best]
        })
        .collect();

    let mut correct = 0usize;
    let mut recall_sum = 0.0;
    let mut precision_sum = 0.0;
    let mut f1_sum = 0.0;
    for class in &classes {
        let tp = (0..n)
            .filter(|&i| labels[i] == **class && predictions[i] == *class)
            .count() as f64;
        let support = labels.iter().filter(|l| *l == *class).count() as f64;
        let predicted = predictions.iter().filter(|p| **p == *class).count() as f64;
        let recall = tp / support;
        let precision = if predicted > 0.0 { tp / predicted } else { 0.0 };
        let f1 = if precision + recall > 0.0 {
            2.0 * precision * recall / (precision + recall)
        } else {
            0.0
        };
        recall_sum += recall;
        precision_sum += precision;
        f1_sum += f1;
    }
    for i in 0..n {
        if labels[i] == *predictions[i] {
            correct += 1;
        }
    }
    let c = classes.len() as f64;
    let recall = recall_sum / c;
    Ok(EvalMetrics {
        accuracy: correct as f64 / n as f64,
        f1: f1_sum / c,
        balanced_accuracy: recall,
        recall,
        precision: precision_sum / c,
    })
}

// ---------------------------------------------------------------------------
// Molecules
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
pub struct Atom {
    pub element: String,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PointCloud {
    pub atoms: Vec<Atom>,
}

/// Parses standard XYZ: count line, comment line (may be blank), then
/// `element x y z` rows. The declared count must match.
pub fn parse_xyz(bytes: &[u8]) -> Result<PointCloud> {
    let text = std::str::from_utf8(bytes).map_err(|_| Error::parse("XYZ is not UTF-8"))?;
    let mut lines = text.lines();
    let count: usize = lines
        .next()
        .ok_or_else(|| Error::parse("empty XYZ file"))?
        .trim()
        .parse()
        .map_err(|_| Error::parse("XYZ count line is not an integer"))?;
    let _comment = lines
        .next()
        .ok_or_else(|| Error::parse("XYZ file ends before the comment line"))?;

    let mut atoms = Vec::with_capacity(count);
    for line in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let element = tokens
            .next()
            .ok_or_else(|| Error::parse("XYZ atom row without an element"))?
            .to_string();
        let mut coord = |axis: &str| -> Result<f64> {
            tokens
                .next()
                .ok_or_else(|| Error::parse(format!("XYZ atom row missing {axis}")))?
                .parse::<f64>()
                .map_err(|_| Error::parse(format!("non-numeric {axis} coordinate: {line:?}")))
        };
        let (x, y, z) = (coord("x")?, coord("y")?, coord("z")?);
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::parse(format!("non-finite coordinate: {line:?}")));
        }
        atoms.push(Atom { element, x, y, z });
    }
    if atoms.len() != count {
        return Err(Error::parse(format!(
            "XYZ declares {count} atoms but contains {}",
            atoms.len()
        )));
    }
    if atoms.is_empty() {
        return Err(Error::parse("XYZ contains no atoms"));
    }
    Ok(PointCloud { atoms })
}

fn distance(a: &Atom, b: &Atom) -> f64 {
    ((a.x - b.x).powi(2) + (a.y - b.y).powi(2) + (a.z - b.z).powi(2)).sqrt()
}

/// The Vietoris–Rips graph filtration over a uniform radius grid:
/// `{a, b}` is an edge at level `r` iff the Euclidean distance is ≤ `r`.
pub fn vr_graph_filtration(
    points: &PointCloud,
    r_min: f64,
    r_max: f64,
    steps: usize,
) -> Result<HypergraphFiltration> {
    if steps == 0 {
        return Err(Error::precondition("steps must be at least 1"));
    }
    if r_min > r_max {
        return Err(Error::precondition("r_min must not exceed r_max"));
    }
    if steps > 1 && r_min == r_max {
        return Err(Error::precondition(
            "steps > 1 requires r_min < r_max for a strictly increasing grid",
        ));
    }
    let n = points.atoms.len();
    VertexSet::check_capacity(n)?;
    let grid: Vec<f64> = if steps == 1 {
        vec![r_max]
    } else {
        (0..steps)
            .map(|s| r_min + (r_max - r_min) * s as f64 / (steps - 1) as f64)
            .collect()
    };
    let mut levels = Vec::with_capacity(grid.len());
    for &r in &grid {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                if distance(&points.atoms[a], &points.atoms[b]) <= r {
                    edges.push(VertexSet::singleton(a + 1).insert(b + 1));
                }
            }
        }
        levels.push(edges);
    }
    HypergraphFiltration::new(n, grid, levels)
}

/// Per-level graded Betti curves of the edge ideals `I(G_r)` on the
/// requested diagonals `j = i + d`, keyed by `(i, d)`; only curves with a
/// nonzero value somewhere are retained. Optionally the ideal-side
/// persistent cells for adjacent grid pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct MoleculeCurves {
    pub grid: Vec<f64>,
    pub curves: BTreeMap<(u32, u32), Vec<u64>>,
    /// `(a, i, j) → β^{a,a+1}_{i,j}(I_•)` when requested.
    pub adjacent_persistent: Option<BTreeMap<(usize, u32, u32), u64>>,
}

pub fn molecule_betti_curves(
    filtration: &HypergraphFiltration,
    diagonals: &[u32],
    field: Field,
    budget: u64,
    with_persistent: bool,
) -> Result<MoleculeCurves> {
    let n = filtration.n() as u32;
    let tables: Vec<BTreeMap<(u32, u32), u64>> = filtration
        .levels()
        .par_iter()
        .map(|level| {
            let ideal = edge_ideal(level);
            betti_table_ideal(&ideal, field, n, n, budget, false).map(|t| t.entries)
        })
        .collect::<Result<_>>()?;

    let mut curves: BTreeMap<(u32, u32), Vec<u64>> = BTreeMap::new();
    for &d in diagonals {
        for i in 0..=n {
            let curve: Vec<u64> = tables
                .iter()
                .map(|t| t.get(&(i, i + d)).copied().unwrap_or(0))
                .collect();
            if curve.iter().any(|&v| v != 0) {
                curves.insert((i, d), curve);
            }
        }
    }

    let adjacent_persistent = if with_persistent {
        let table = persistent_betti_table(
            filtration,
            Subject::Ideal,
            field,
            n,
            n,
            budget.saturating_mul(filtration.len() as u64 * filtration.len() as u64),
        )?;
        let mut cells = BTreeMap::new();
        for a in 0..filtration.len().saturating_sub(1) {
            for &d in diagonals {
                for i in 0..=n {
                    let v = table.get(a, a + 1, i, i + d);
                    if v != 0 {
                        cells.insert((a, i, i + d), v);
                    }
                }
            }
        }
        Some(cells)
    } else {
        None
    };

    Ok(MoleculeCurves {
        grid: filtration.grid().to_vec(),
        curves,
        adjacent_persistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::DEFAULT_BUDGET;
    use crate::complexes::complement_graph;

    #[test]
    fn fasta_parsing() {
        let records = parse_fasta(b">s1 some description\nACGT\n").unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].id, "s1");
        assert_eq!(records[0].sequence, "ACGT");

        let wrapped = parse_fasta(b">a\nACG\nTAC\n>b\nggtt\n").unwrap();
        assert_eq!(wrapped[0].sequence, "ACGTAC");
        assert_eq!(wrapped[1].sequence, "GGTT");

        assert!(parse_fasta(b"").is_err());
        assert!(parse_fasta(b">empty\n>next\nAC\n").is_err());
    }

    #[test]
    fn kmer_scanning() {
        let occs = kmer_positions("ACACA", 2);
        let ac = occs.iter().find(|o| o.kmer == "AC").unwrap();
        assert_eq!(ac.positions, vec![1, 3]);
        let ca = occs.iter().find(|o| o.kmer == "CA").unwrap();
        assert_eq!(ca.positions, vec![2, 4]);

        let aa = kmer_positions("AAAA", 2);
        assert_eq!(aa[0].positions, vec![1, 2, 3]);

        let whole = kmer_positions("ACGT", 4);
        assert_eq!(whole.len(), 1);
        assert_eq!(whole[0].positions, vec![1]);

        // masking: windows containing N record nothing
        let masked = kmer_positions("ACNGT", 2);
        assert!(masked.iter().all(|o| !o.kmer.contains('N')));
        assert_eq!(masked.len(), 2); // AC and GT

        assert!(kmer_positions("ACG", 4).is_empty());
    }

    #[test]
    fn kmer_filtration_levels() {
        let occ = KmerOccurrence {
            kmer: "AC".into(),
            positions: vec![1, 3],
        };
        let f = kmer_graph_filtration(&occ, &[1.0, 2.0]).unwrap();
        assert!(f.level(0).edges().is_empty());
        assert_eq!(f.level(1).edges().len(), 1);

        let occ3 = KmerOccurrence {
            kmer: "AC".into(),
            positions: vec![1, 2, 3],
        };
        let f = kmer_graph_filtration(&occ3, &[10.0]).unwrap();
        assert_eq!(f.level(0).edges().len(), 3);

        let f = kmer_graph_filtration(&occ3, &[0.0]).unwrap();
        assert!(f.level(0).edges().is_empty());
    }

    #[test]
    fn betti_curves_by_components() {
        let occ = KmerOccurrence {
            kmer: "AAAA".into(),
            positions: vec![1, 5, 13],
        };
        assert_eq!(betti_curve_kmer(&occ, &[2.0, 4.0, 8.0]), vec![2, 1, 0]);

        // equal gaps merge simultaneously
        let occ = KmerOccurrence {
            kmer: "AAAA".into(),
            positions: vec![1, 5, 9],
        };
        assert_eq!(betti_curve_kmer(&occ, &[2.0, 4.0, 8.0]), vec![2, 0, 0]);

        let single = KmerOccurrence {
            kmer: "AAAA".into(),
            positions: vec![7],
        };
        assert_eq!(betti_curve_kmer(&single, &[1.0, 2.0]), vec![0, 0]);
    }

    #[test]
    fn curve_matches_hochster_on_complement() {
        let occ = KmerOccurrence {
            kmer: "AC".into(),
            positions: vec![1, 4, 6, 11],
        };
        let radii = [1.0, 2.0, 3.0, 5.0, 10.0];
        let curve = betti_curve_kmer(&occ, &radii);
        let filtration = kmer_graph_filtration(&occ, &radii).unwrap();
        for (level, &value) in curve.iter().enumerate() {
            let g = filtration.level(level);
            let complement = complement_graph(g).unwrap();
            let ideal = edge_ideal(&complement);
            let n = g.n() as u32;
            let table =
                betti_table_ideal(&ideal, Field::GF2, n, n, DEFAULT_BUDGET, false).unwrap();
            assert_eq!(table.get(n - 2, n), value, "level {level}");
        }
    }

    #[test]
    fn feature_vector_layout() {
        let sequence = "A".repeat(20);
        let fv = genome_feature_vector(&sequence, 4, &[1.0, 2.0]).unwrap();
        assert_eq!(fv.values.len(), 256 * 2);
        // AAAA has rank 0; 17 unit-spaced occurrences are one component
        assert_eq!(&fv.values[0..2], &[0, 0]);
        assert!(fv.values[2..].iter().all(|&v| v == 0));

        let short = genome_feature_vector("AC", 4, &[1.0]).unwrap();
        assert!(short.values.iter().all(|&v| v == 0));
        assert_eq!(short.values.len(), 256);
    }

    #[test]
    fn curves_non_increasing_in_r() {
        let occ = KmerOccurrence {
            kmer: "GG".into(),
            positions: vec![2, 3, 9, 20, 21, 40],
        };
        let curve = betti_curve_kmer(&occ, &[1.0, 3.0, 7.0, 12.0, 25.0]);
        assert!(curve.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn distances_basics() {
        let u = FeatureVector {
            k: 1,
            radii: vec![1.0],
            values: vec![0, 0],
        };
        let v = FeatureVector {
            k: 1,
            radii: vec![1.0],
            values: vec![3, 4],
        };
        let d = pairwise_distances(&[u.clone(), v]).unwrap();
        assert_eq!(d[0][1], 5.0);
        assert_eq!(d[1][0], 5.0);
        assert_eq!(d[0][0], 0.0);

        let w = FeatureVector {
            k: 1,
            radii: vec![1.0],
            values: vec![1],
        };
        assert!(pairwise_distances(&[u, w]).is_err());
    }

    #[test]
    fn nn_separated_clusters_are_perfect() {
        let labels: Vec<String> = ["a", "a", "b", "b"].iter().map(|s| s.to_string()).collect();
        let d = vec![
            vec![0.0, 1.0, 9.0, 9.0],
            vec![1.0, 0.0, 9.0, 9.0],
            vec![9.0, 9.0, 0.0, 1.0],
            vec![9.0, 9.0, 1.0, 0.0],
        ];
        let m = nn_evaluate(&labels, &d).unwrap();
        assert_eq!(m.accuracy, 1.0);
        assert_eq!(m.f1, 1.0);
        assert_eq!(m.balanced_accuracy, 1.0);
        assert_eq!(m.precision, 1.0);
    }

    #[test]
    fn nn_guards() {
        let labels: Vec<String> = ["a", "a"].iter().map(|s| s.to_string()).collect();
        let d = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        assert!(nn_evaluate(&labels, &d).is_err());
        assert!(nn_evaluate(&labels[..1], &d[..1]).is_err());
    }

    #[test]
    fn xyz_parsing() {
        let two = parse_xyz(b"2\ncomment\nH 0.0 0.0 0.0\nO 1.0 0.0 0.0\n").unwrap();
        assert_eq!(two.atoms.len(), 2);
        assert_eq!(two.atoms[1].element, "O");

        assert!(parse_xyz(b"3\nc\nH 0 0 0\nO 1 0 0\n").is_err());
        assert!(parse_xyz(b"1\nc\nH x 0 0\n").is_err());
        // blank comment line accepted
        assert!(parse_xyz(b"1\n\nH 0 0 0\n").is_ok());
    }

    #[test]
    fn vr_filtration_thresholds() {
        let points = PointCloud {
            atoms: vec![
                Atom {
                    element: "H".into(),
                    x: 0.0,
                    y: 0.0,
                    z: 0.0,
                },
                Atom {
                    element: "H".into(),
                    x: 1.0,
                    y: 0.0,
                    z: 0.0,
                },
            ],
        };
        let f = vr_graph_filtration(&points, 0.5, 1.5, 2).unwrap();
        assert!(f.level(0).edges().is_empty());
        assert_eq!(f.level(1).edges().len(), 1);

        let below = vr_graph_filtration(&points, 0.1, 0.9, 3).unwrap();
        assert!(below.levels().iter().all(|l| l.edges().is_empty()));

        let above = vr_graph_filtration(&points, 1.1, 2.0, 3).unwrap();
        assert!(above.levels().iter().all(|l| l.edges().len() == 1));
    }

    #[test]
    fn molecule_curves_triangle() {
        // equilateral triangle of side 1: at large r the graph is K_3, whose
        // edge ideal has β_{0,2} = 3, β_{1,3} = 2
        let h = 3f64.sqrt() / 2.0;
        let points = PointCloud {
            atoms: vec![
                Atom {
                    element: "C".into(),
                    x: 0.0,
                    y: 0.0,
                    z: 0.0,
                },
                Atom {
                    element: "C".into(),
                    x: 1.0,
                    y: 0.0,
                    z: 0.0,
                },
                Atom {
                    element: "C".into(),
                    x: 0.5,
                    y: h,
                    z: 0.0,
                },
            ],
        };
        let f = vr_graph_filtration(&points, 0.5, 1.5, 2).unwrap();
        let curves =
            molecule_betti_curves(&f, &[2, 3], Field::GF2, DEFAULT_BUDGET, false).unwrap();
        assert_eq!(curves.curves.get(&(0, 2)).unwrap(), &vec![0, 3]);
        assert_eq!(curves.curves.get(&(1, 2)).unwrap(), &vec![0, 2]);
        // edgeless level contributes an empty table (zeros in the curve)
        assert!(curves.curves.values().all(|c| c[0] == 0));
    }
}

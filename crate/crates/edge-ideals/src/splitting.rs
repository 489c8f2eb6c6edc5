//! Betti splitting verification: the classical cell-by-cell identity
//! `β_{i,j}(I) = β_{i,j}(J) + β_{i,j}(K) + β_{i-1,j}(J∩K)` for a
//! generator-disjoint decomposition `I = J + K`, the canonical vertex
//! splitting of edge ideals, and the persistent inequality
//! `β^{a,b}_{i,j}(I_•) ≥ β^{a,b}_{i,j}(J_•) + β^{a,b}_{i,j}(K_•) +
//! β^{a,b}_{i-1,j}((J∩K)_•)` across a filtration.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::betti::{
    betti_table_ideal, betti_table_ideal_koszul, persistent_betti_table_ideals, BettiTable,
    IdealFiltration, Subject,
};
use crate::complexes::{edge_ideal, vertex_split, Hypergraph, HypergraphFiltration, MonomialIdeal};
use crate::error::{Error, Result};
use crate::field::Field;

/// One checked cell of the classical splitting identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingCell {
    pub i: u32,
    pub j: u32,
    /// β_{i,j}(I)
    pub total: u64,
    /// β_{i,j}(J)
    pub left: u64,
    /// β_{i,j}(K)
    pub right: u64,
    /// β_{i-1,j}(J ∩ K)
    pub intersection: u64,
    /// total − (left + right + intersection); zero iff the identity holds here
    pub slack: i64,
}

/// Cell-by-cell report of a classical Betti splitting check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingReport {
    pub field: Field,
    pub cells: Vec<SplittingCell>,
    /// True iff every computed cell has slack zero.
    pub holds: bool,
}

impl SplittingReport {
    /// Aligned plain-text table; nonzero-slack cells are marked with `*`.
    pub fn to_text_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>4} {:>4} {:>8} {:>8} {:>8} {:>10} {:>7}",
            "i", "j", "beta(I)", "beta(J)", "beta(K)", "beta(J^K)", "slack"
        );
        for c in &self.cells {
            let mark = if c.slack != 0 { " *" } else { "" };
            let _ = writeln!(
                out,
                "{:>4} {:>4} {:>8} {:>8} {:>8} {:>10} {:>7}{}",
                c.i, c.j, c.total, c.left, c.right, c.intersection, c.slack, mark
            );
        }
        let _ = writeln!(
            out,
            "splitting {}",
            if self.holds { "holds" } else { "FAILS" }
        );
        out
    }
}

fn ideal_table(
    ideal: &MonomialIdeal,
    field: Field,
    i_max: u32,
    j_max: u32,
    budget: u64,
) -> Result<BettiTable> {
    if ideal.is_squarefree() {
        betti_table_ideal(ideal, field, i_max, j_max, budget, false)
    } else {
        betti_table_ideal_koszul(ideal, field, i_max, j_max, budget)
    }
}

fn generator_partition_check(
    ideal: &MonomialIdeal,
    left: &MonomialIdeal,
    right: &MonomialIdeal,
) -> Result<()> {
    if left.is_zero() || right.is_zero() {
        return Err(Error::precondition(
            "a Betti splitting needs two nonempty parts",
        ));
    }
    let gens: BTreeSet<&Vec<u32>> = ideal.generators().iter().collect();
    let left_gens: BTreeSet<&Vec<u32>> = left.generators().iter().collect();
    let right_gens: BTreeSet<&Vec<u32>> = right.generators().iter().collect();

    if let Some(shared) = left_gens.intersection(&right_gens).next() {
        return Err(Error::precondition(format!(
            "generator {} belongs to both parts",
            MonomialIdeal::monomial_string(shared)
        )));
    }
    for g in left_gens.iter().chain(right_gens.iter()) {
        if !gens.contains(*g) {
            return Err(Error::precondition(format!(
                "generator {} of a part is not a minimal generator of the ideal",
                MonomialIdeal::monomial_string(g)
            )));
        }
    }
    for g in &gens {
        if !left_gens.contains(*g) && !right_gens.contains(*g) {
            return Err(Error::precondition(format!(
                "generator {} of the ideal appears in neither part",
                MonomialIdeal::monomial_string(g)
            )));
        }
    }
    Ok(())
}

/// Verifies the classical Betti splitting identity for `I = J + K` with
/// disjoint minimal generators, reporting every cell in the window.
pub fn check_betti_splitting(
    ideal: &MonomialIdeal,
    left: &MonomialIdeal,
    right: &MonomialIdeal,
    field: Field,
    i_max: u32,
    j_max: u32,
    budget: u64,
) -> Result<SplittingReport> {
    generator_partition_check(ideal, left, right)?;
    let intersection = left.intersection(right);

    let t_total = ideal_table(ideal, field, i_max, j_max, budget)?;
    let t_left = ideal_table(left, field, i_max, j_max, budget)?;
    let t_right = ideal_table(right, field, i_max, j_max, budget)?;
    let t_meet = ideal_table(&intersection, field, i_max, j_max, budget)?;

    let mut keys: BTreeSet<(u32, u32)> = BTreeSet::new();
    keys.extend(t_total.entries.keys().copied());
    keys.extend(t_left.entries.keys().copied());
    keys.extend(t_right.entries.keys().copied());
    keys.extend(t_meet.entries.keys().map(|&(i, j)| (i + 1, j)));

    let mut cells = Vec::with_capacity(keys.len());
    for (i, j) in keys {
        if i > i_max || j > j_max {
            continue;
        }
        let total = t_total.get(i, j);
        let l = t_left.get(i, j);
        let r = t_right.get(i, j);
        let meet = if i >= 1 { t_meet.get(i - 1, j) } else { 0 };
        let slack = total as i64 - (l + r + meet) as i64;
        cells.push(SplittingCell {
            i,
            j,
            total,
            left: l,
            right: r,
            intersection: meet,
            slack,
        });
    }
    let holds = cells.iter().all(|c| c.slack == 0);
    Ok(SplittingReport {
        field,
        cells,
        holds,
    })
}

/// Verifies the vertex decomposition `I(G) = J + K` at the pivot `x`.
///
/// The identity is a theorem for every admissible pivot, so a failing
/// verdict signals an implementation bug, not a mathematical possibility.
pub fn check_vertex_splitting(
    g: &Hypergraph,
    x: usize,
    field: Field,
    i_max: u32,
    j_max: u32,
    budget: u64,
) -> Result<SplittingReport> {
    let split = vertex_split(g, x)?;
    let ideal = edge_ideal(g);
    check_betti_splitting(&ideal, &split.star, &split.deleted, field, i_max, j_max, budget)
}

/// One checked cell of the persistent splitting inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PersistentSplittingCell {
    pub a: usize,
    pub b: usize,
    pub i: u32,
    pub j: u32,
    pub total: u64,
    pub left: u64,
    pub right: u64,
    pub intersection: u64,
    /// total − (left + right + intersection); nonnegative when the
    /// per-level splitting hypotheses hold.
    pub slack: i64,
    /// Slack-zero cells, where the inequality is an equality.
    pub tight: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PersistentSplittingReport {
    pub field: Field,
    pub cells: Vec<PersistentSplittingCell>,
    pub all_nonnegative: bool,
}

/// Checks the persistent Betti splitting inequality over a filtration of
/// generator-disjoint decompositions `I_t = J_t + K_t`.
///
/// The classical splitting identity is verified at every level first; the
/// level where it fails, if any, is reported as a precondition error.
pub fn check_persistent_splitting(
    totals: &IdealFiltration,
    lefts: &IdealFiltration,
    rights: &IdealFiltration,
    field: Field,
    i_max: u32,
    j_max: u32,
    budget: u64,
) -> Result<PersistentSplittingReport> {
    if totals.grid() != lefts.grid() || totals.grid() != rights.grid() {
        return Err(Error::precondition(
            "the three filtrations must share one grid",
        ));
    }
    for (idx, t) in totals.grid().iter().enumerate() {
        let report = check_betti_splitting(
            totals.level(idx),
            lefts.level(idx),
            rights.level(idx),
            field,
            i_max,
            j_max,
            budget,
        )
        .map_err(|e| {
            Error::precondition(format!("splitting hypothesis fails at level t={t}: {e}"))
        })?;
        if !report.holds {
            return Err(Error::precondition(format!(
                "classical Betti splitting fails at level t={t}"
            )));
        }
    }

    let meet_levels: Vec<MonomialIdeal> = lefts
        .levels()
        .iter()
        .zip(rights.levels())
        .map(|(l, r)| l.intersection(r))
        .collect();
    let meets = IdealFiltration::new(totals.grid().to_vec(), meet_levels)?;

    let p_total = persistent_betti_table_ideals(totals, Subject::Ideal, field, i_max, j_max, budget)?;
    let p_left = persistent_betti_table_ideals(lefts, Subject::Ideal, field, i_max, j_max, budget)?;
    let p_right = persistent_betti_table_ideals(rights, Subject::Ideal, field, i_max, j_max, budget)?;
    let p_meet = persistent_betti_table_ideals(&meets, Subject::Ideal, field, i_max, j_max, budget)?;

    let mut keys: BTreeSet<(usize, usize, u32, u32)> = BTreeSet::new();
    keys.extend(p_total.entries.keys().copied());
    keys.extend(p_left.entries.keys().copied());
    keys.extend(p_right.entries.keys().copied());
    keys.extend(p_meet.entries.keys().map(|&(a, b, i, j)| (a, b, i + 1, j)));

    let mut cells = Vec::with_capacity(keys.len());
    for (a, b, i, j) in keys {
        if i > i_max || j > j_max {
            continue;
        }
        let total = p_total.get(a, b, i, j);
        let l = p_left.get(a, b, i, j);
        let r = p_right.get(a, b, i, j);
        let meet = if i >= 1 { p_meet.get(a, b, i - 1, j) } else { 0 };
        let slack = total as i64 - (l + r + meet) as i64;
        cells.push(PersistentSplittingCell {
            a,
            b,
            i,
            j,
            total,
            left: l,
            right: r,
            intersection: meet,
            slack,
            tight: slack == 0,
        });
    }
    let all_nonnegative = cells.iter().all(|c| c.slack >= 0);
    Ok(PersistentSplittingReport {
        field,
        cells,
        all_nonnegative,
    })
}

/// Builds the three ideal filtrations `I_•, J_•, K_•` of the vertex split at
/// `x` along a graph filtration; every level must admit the split.
pub fn vertex_split_filtration(
    filtration: &HypergraphFiltration,
    x: usize,
) -> Result<(IdealFiltration, IdealFiltration, IdealFiltration)> {
    let mut totals = Vec::with_capacity(filtration.len());
    let mut lefts = Vec::with_capacity(filtration.len());
    let mut rights = Vec::with_capacity(filtration.len());
    for (idx, level) in filtration.levels().iter().enumerate() {
        let split = vertex_split(level, x).map_err(|e| {
            Error::precondition(format!(
                "vertex split inadmissible at level t={}: {e}",
                filtration.grid()[idx]
            ))
        })?;
        totals.push(edge_ideal(level));
        lefts.push(split.star);
        rights.push(split.deleted);
    }
    let grid = filtration.grid().to_vec();
    Ok((
        IdealFiltration::new(grid.clone(), totals)?,
        IdealFiltration::new(grid.clone(), lefts)?,
        IdealFiltration::new(grid, rights)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::DEFAULT_BUDGET;
    use crate::bitset::VertexSet;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v).unwrap()
    }

    #[test]
    fn p3_splitting_cells() {
        let p3 = Hypergraph::path(3).unwrap();
        let report =
            check_vertex_splitting(&p3, 1, Field::GF2, 8, 8, DEFAULT_BUDGET).unwrap();
        assert!(report.holds);
        let cell02 = report.cells.iter().find(|c| (c.i, c.j) == (0, 2)).unwrap();
        assert_eq!((cell02.total, cell02.left, cell02.right, cell02.intersection), (2, 1, 1, 0));
        let cell13 = report.cells.iter().find(|c| (c.i, c.j) == (1, 3)).unwrap();
        assert_eq!((cell13.total, cell13.left, cell13.right, cell13.intersection), (1, 0, 0, 1));
    }

    #[test]
    fn star_leaf_split() {
        // I(star_3) = (x1x2) + (x1x3, x1x4), split off one leaf edge
        let star = Hypergraph::star(4, 1, &[2, 3, 4]).unwrap();
        let ideal = edge_ideal(&star);
        let left = MonomialIdeal::new(4, vec![vec![1, 1, 0, 0]]).unwrap();
        let right =
            MonomialIdeal::new(4, vec![vec![1, 0, 1, 0], vec![1, 0, 0, 1]]).unwrap();
        let report =
            check_betti_splitting(&ideal, &left, &right, Field::GF2, 8, 8, DEFAULT_BUDGET)
                .unwrap();
        assert!(report.holds);
        // the star closed form: β_{i,i+2}(I) = C(3, i+1)
        for (i, expected) in [(0u32, 3u64), (1, 3), (2, 1)] {
            let cell = report
                .cells
                .iter()
                .find(|c| (c.i, c.j) == (i, i + 2))
                .unwrap();
            assert_eq!(cell.total, expected);
        }
    }

    #[test]
    fn partition_guards() {
        let p3 = Hypergraph::path(3).unwrap();
        let ideal = edge_ideal(&p3);
        let zero = MonomialIdeal::zero(3);
        assert!(
            check_betti_splitting(&ideal, &ideal, &zero, Field::GF2, 4, 4, DEFAULT_BUDGET)
                .is_err()
        );
        let overlapping = MonomialIdeal::new(3, vec![vec![1, 1, 0]]).unwrap();
        assert!(check_betti_splitting(
            &ideal,
            &overlapping,
            &ideal,
            Field::GF2,
            4,
            4,
            DEFAULT_BUDGET
        )
        .is_err());
    }

    #[test]
    fn persistent_constant_filtration_all_tight() {
        let p4 = Hypergraph::path(4).unwrap();
        let f = HypergraphFiltration::constant(p4, vec![0.0, 1.0]).unwrap();
        let (totals, lefts, rights) = vertex_split_filtration(&f, 1).unwrap();
        let report = check_persistent_splitting(
            &totals,
            &lefts,
            &rights,
            Field::GF2,
            6,
            6,
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert!(report.all_nonnegative);
        assert!(report.cells.iter().all(|c| c.slack == 0));
    }

    #[test]
    fn persistent_growing_paths() {
        // P3 ⊂ P4 ⊂ P5 on 5 vertices, pivot x = 1
        let f = HypergraphFiltration::new(
            5,
            vec![0.0, 1.0, 2.0],
            vec![
                vec![vs(&[1, 2]), vs(&[2, 3])],
                vec![vs(&[1, 2]), vs(&[2, 3]), vs(&[3, 4])],
                vec![vs(&[1, 2]), vs(&[2, 3]), vs(&[3, 4]), vs(&[4, 5])],
            ],
        )
        .unwrap();
        let (totals, lefts, rights) = vertex_split_filtration(&f, 1).unwrap();
        let report = check_persistent_splitting(
            &totals,
            &lefts,
            &rights,
            Field::GF2,
            6,
            6,
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert!(report.all_nonnegative);
        // diagonal cells reduce to the classical identity
        assert!(report
            .cells
            .iter()
            .filter(|c| c.a == c.b)
            .all(|c| c.slack == 0));
    }

    #[test]
    fn persistent_guard_reports_level() {
        // at level 0 the pivot's star is the whole graph: inadmissible split
        let f = HypergraphFiltration::new(
            3,
            vec![0.0, 1.0],
            vec![vec![vs(&[1, 2])], vec![vs(&[1, 2]), vs(&[2, 3])]],
        )
        .unwrap();
        let err = vertex_split_filtration(&f, 1).unwrap_err();
        assert!(err.to_string().contains("t=0"));
    }
}

//! Graded, multigraded, and persistent Betti numbers of Stanley–Reisner
//! rings and monomial ideals.
//!
//! Two independent computational routes are exposed:
//!
//! * the Hochster route — `β_{i,1_W}(k[Δ]) = dim H̃_{|W|-i-1}(Δ_W; k)`,
//!   aggregated over vertex subsets `W` for graded tables; and
//! * the upper-Koszul route — `β_{i,α}(I) = dim H̃_{i-1}(K^α(I); k)` for an
//!   arbitrary monomial ideal, where `K^α(I)` consists of the squarefree
//!   `σ ≤ α` with `x^{α-σ} ∈ I`.
//!
//! For squarefree ideals the two must agree through the shift
//! `β_{i,j}(S/I) = β_{i-1,j}(I)`, which is what the cross-validation suites
//! pin down.
//!
//! Persistent cells are keyed by the ordered pair of filtration indices of
//! the underlying ideal filtration (`I_a ⊆ I_b`). Ranks are evaluated in the
//! homology direction: the quotient-side cell `(a, b, i, j)` is the sum over
//! `|W| = j` of the ranks of `H̃_{j-i-1}((Δ_b)_W) → H̃_{j-i-1}((Δ_a)_W)`,
//! where `Δ_t` is the independence (Stanley–Reisner) complex of level `t`
//! and the inclusion goes from the smaller complex (more edges) into the
//! larger. Ideal-side cells are the quotient-side cells at `i + 1`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::{binomial, count_subsets_up_to, subsets_of_size, VertexSet};
use crate::complexes::{
    independence_complex, stanley_reisner_complex, Hypergraph, HypergraphFiltration,
    MonomialIdeal, SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::{homology_dims, induced_rank_at, FaceLevels};
use crate::unionfind::UnionFind;

/// Default ceiling on the number of evaluated subsets per table request.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// Whether a table describes the quotient ring `S/I` or the ideal `I`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subject {
    Quotient,
    Ideal,
}

impl std::fmt::Display for Subject {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Subject::Quotient => write!(f, "quotient"),
            Subject::Ideal => write!(f, "ideal"),
        }
    }
}

/// A graded Betti table with an optional multigraded refinement.
///
/// Only nonzero cells are stored. The multigraded map is keyed by
/// `(i, W.bits())`; summing it over `|W| = j` reproduces the graded entry.
#[derive(Clone, Debug, PartialEq)]
pub struct BettiTable {
    pub subject: Subject,
    pub field: Field,
    pub entries: BTreeMap<(u32, u32), u64>,
    pub multigraded: Option<BTreeMap<(u32, u64), u64>>,
}

impl BettiTable {
    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn multigraded_get(&self, i: u32, w: VertexSet) -> u64 {
        self.multigraded
            .as_ref()
            .and_then(|m| m.get(&(i, w.bits())).copied())
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_i(&self) -> u32 {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn max_j(&self) -> u32 {
        self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }
}

fn check_subset_budget(n: usize, j_cap: usize, budget: u64) -> Result<()> {
    let needed = count_subsets_up_to(n, j_cap);
    if needed > budget {
        return Err(Error::Budget { needed, budget });
    }
    Ok(())
}

fn subsets_up_to(n: usize, j_cap: usize) -> Vec<VertexSet> {
    (0..=j_cap.min(n))
        .flat_map(|k| subsets_of_size(n, k))
        .collect()
}

/// `β_{i,1_W}(k[Δ]) = dim H̃_{|W|-i-1}(Δ_W; k)`.
pub fn hochster_multigraded(
    complex: &SimplicialComplex,
    i: u32,
    w: VertexSet,
    field: Field,
) -> u64 {
    let q = w.card() as i64 - i as i64 - 1;
    if q < -1 {
        return 0;
    }
    let levels = FaceLevels::from_complex_within(complex, w);
    *homology_dims(&levels, field, q)
        .last()
        .expect("dims cover q = -1..=q_max")
}

/// Graded Betti table of the Stanley–Reisner quotient `k[Δ]`, by summing
/// Hochster contributions over all `W` with `|W| ≤ j_max`.
pub fn betti_table_quotient(
    complex: &SimplicialComplex,
    field: Field,
    i_max: u32,
    j_max: u32,
    budget: u64,
    keep_multigraded: bool,
) -> Result<BettiTable> {
    let n = complex.n();
    let j_cap = (j_max as usize).min(n);
    check_subset_budget(n, j_cap, budget)?;
    let subsets = subsets_up_to(n, j_cap);
    let per_w: Vec<(VertexSet, Vec<u64>)> = subsets
        .par_iter()
        .map(|&w| {
            let levels = FaceLevels::from_complex_within(complex, w);
            let dims = homology_dims(&levels, field, w.card() as i64 - 1);
            (w, dims)
        })
        .collect();

    let mut entries = BTreeMap::new();
    let mut multigraded = keep_multigraded.then(BTreeMap::new);
    for (w, dims) in per_w {
        let j = w.card() as u32;
        for (qi, &d) in dims.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let q = qi as i64 - 1;
            let i = w.card() as i64 - q - 1;
            debug_assert!(i >= 0);
            if i > i_max as i64 {
                continue;
            }
            *entries.entry((i as u32, j)).or_insert(0) += d;
            if let Some(m) = multigraded.as_mut() {
                *m.entry((i as u32, w.bits())).or_insert(0) += d;
            }
        }
    }
    Ok(BettiTable {
        subject: Subject::Quotient,
        field,
        entries,
        multigraded,
    })
}

/// Graded Betti table of a squarefree monomial ideal via the Stanley–Reisner
/// complex and the shift `β_{i,j}(I) = β_{i+1,j}(S/I)`.
pub fn betti_table_ideal(
    ideal: &MonomialIdeal,
    field: Field,
    i_max: u32,
    j_max: u32,
    budget: u64,
    keep_multigraded: bool,
) -> Result<BettiTable> {
    if !ideal.is_squarefree() {
        return Err(Error::precondition(
            "Hochster-path ideal tables require a squarefree ideal; use the upper-Koszul table for general monomial ideals",
        ));
    }
    let complex = stanley_reisner_complex(ideal)?;
    let quotient = betti_table_quotient(
        &complex,
        field,
        i_max.saturating_add(1),
        j_max,
        budget,
        keep_multigraded,
    )?;
    Ok(shift_to_ideal(quotient))
}

fn shift_to_ideal(quotient: BettiTable) -> BettiTable {
    let entries = quotient
        .entries
        .into_iter()
        .filter_map(|((i, j), v)| (i >= 1).then(|| ((i - 1, j), v)))
        .collect();
    let multigraded = quotient.multigraded.map(|m| {
        m.into_iter()
            .filter_map(|((i, w), v)| (i >= 1).then(|| ((i - 1, w), v)))
            .collect()
    });
    BettiTable {
        subject: Subject::Ideal,
        field: quotient.field,
        entries,
        multigraded,
    }
}

/// Ceiling on faces visited while building one upper-Koszul complex.
const KOSZUL_FACE_CAP: u64 = 1 << 25;

/// The upper-Koszul complex `K^α(I)`: squarefree `σ ⊆ supp(α)` with
/// `x^{α-σ} ∈ I`. Its reduced homology computes multigraded Betti numbers of
/// an arbitrary monomial ideal, independent of the Hochster route.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, alpha: &[u32]) -> Result<SimplicialComplex> {
    let n = ideal.n();
    if alpha.len() != n {
        return Err(Error::precondition(format!(
            "multidegree has {} coordinates, expected {n}",
            alpha.len()
        )));
    }
    let support: Vec<usize> = alpha
        .iter()
        .enumerate()
        .filter_map(|(idx, &e)| (e > 0).then_some(idx + 1))
        .collect();

    let member = |sigma: VertexSet| -> bool {
        let mut exps = alpha.to_vec();
        for v in sigma.iter() {
            exps[v - 1] -= 1;
        }
        ideal.contains_monomial(&exps)
    };

    if !member(VertexSet::EMPTY) {
        // x^α itself is outside I: K^α has no empty face, hence is void
        // unless some deletion re-enters, which downward closure forbids.
        return Ok(SimplicialComplex::void(n));
    }

    let mut faces = vec![VertexSet::EMPTY];
    let mut frontier = vec![VertexSet::EMPTY];
    let mut visited: u64 = 1;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &face in &frontier {
            let floor = face.max_vertex().unwrap_or(0);
            for &v in support.iter().filter(|&&v| v > floor) {
                let candidate = face.insert(v);
                if member(candidate) {
                    next.push(candidate);
                    visited += 1;
                    if visited > KOSZUL_FACE_CAP {
                        return Err(Error::Budget {
                            needed: visited,
                            budget: KOSZUL_FACE_CAP,
                        });
                    }
                }
            }
        }
        faces.extend_from_slice(&next);
        frontier = next;
    }
    SimplicialComplex::from_facets(n, faces)
}

/// `β_{i,α}(I) = dim H̃_{i-1}(K^α(I); k)` — the oracle route for arbitrary
/// monomial ideals.
pub fn upper_koszul_betti(
    ideal: &MonomialIdeal,
    i: u32,
    alpha: &[u32],
    field: Field,
) -> Result<u64> {
    let complex = upper_koszul_complex(ideal, alpha)?;
    let q = i as i64 - 1;
    let levels = FaceLevels::from_complex_within(&complex, VertexSet::full(complex.n()));
    Ok(*homology_dims(&levels, field, q)
        .last()
        .expect("dims cover q = -1..=q_max"))
}

/// Graded Betti table of an arbitrary monomial ideal through the upper-Koszul
/// route, summing `β_{i,α}` over all multidegrees `α ≤ lcm(generators)` of
/// total degree at most `j_max`.
pub fn betti_table_ideal_koszul(
    ideal: &MonomialIdeal,
    field: Field,
    i_max: u32,
    j_max: u32,
    budget: u64,
) -> Result<BettiTable> {
    let lcm = ideal.generator_lcm();
    let mut needed: u64 = 1;
    for &e in &lcm {
        needed = needed.saturating_mul(e as u64 + 1);
        if needed > budget {
            return Err(Error::Budget { needed, budget });
        }
    }

    let mut alphas: Vec<Vec<u32>> = Vec::new();
    let mut current = vec![0u32; lcm.len()];
    collect_multidegrees(&lcm, 0, 0, j_max, &mut current, &mut alphas);

    let per_alpha: Vec<(u64, Vec<u64>)> = alphas
        .par_iter()
        .map(|alpha| {
            let degree: u64 = alpha.iter().map(|&e| e as u64).sum();
            let dims = match upper_koszul_complex(ideal, alpha) {
                Ok(complex) => {
                    let levels =
                        FaceLevels::from_complex_within(&complex, VertexSet::full(complex.n()));
                    homology_dims(&levels, field, i_max as i64 - 1)
                }
                Err(_) => Vec::new(),
            };
            (degree, dims)
        })
        .collect();

    let mut entries = BTreeMap::new();
    for (degree, dims) in per_alpha {
        for (qi, &d) in dims.iter().enumerate() {
            if d == 0 {
                continue;
            }
            // H̃_{i-1} sits at index i in the q = -1.. listing
            let i = qi as u32;
            if i <= i_max {
                *entries.entry((i, degree as u32)).or_insert(0) += d;
            }
        }
    }
    Ok(BettiTable {
        subject: Subject::Ideal,
        field,
        entries,
        multigraded: None,
    })
}

fn collect_multidegrees(
    lcm: &[u32],
    idx: usize,
    degree: u32,
    j_max: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if idx == lcm.len() {
        out.push(current.clone());
        return;
    }
    for e in 0..=lcm[idx] {
        if degree + e > j_max {
            break;
        }
        current[idx] = e;
        collect_multidegrees(lcm, idx + 1, degree + e, j_max, current, out);
    }
    current[idx] = 0;
}

// ---------------------------------------------------------------------------
// Persistent Betti numbers
// ---------------------------------------------------------------------------

/// Persistent graded Betti numbers over a filtration, keyed by
/// `(a, b, i, j)` with `a ≤ b` grid indices of the ideal filtration.
#[derive(Clone, Debug, PartialEq)]
pub struct PersistentBettiTable {
    pub subject: Subject,
    pub field: Field,
    pub grid: Vec<f64>,
    pub entries: BTreeMap<(usize, usize, u32, u32), u64>,
}

impl PersistentBettiTable {
    pub fn get(&self, a: usize, b: usize, i: u32, j: u32) -> u64 {
        self.entries.get(&(a, b, i, j)).copied().unwrap_or(0)
    }

    /// The classical table at level `a` (the diagonal cells).
    pub fn diagonal(&self, a: usize) -> BTreeMap<(u32, u32), u64> {
        self.entries
            .iter()
            .filter_map(|(&(x, y, i, j), &v)| (x == a && y == a).then_some(((i, j), v)))
            .collect()
    }
}

/// A filtration of monomial ideals, increasing by ideal containment.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealFiltration {
    n: usize,
    grid: Vec<f64>,
    levels: Vec<MonomialIdeal>,
}

impl IdealFiltration {
    pub fn new(grid: Vec<f64>, levels: Vec<MonomialIdeal>) -> Result<Self> {
        if grid.is_empty() || grid.len() != levels.len() {
            return Err(Error::precondition(
                "grid and level counts must match and be nonempty",
            ));
        }
        if !grid.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::precondition(
                "filtration grid is not strictly increasing",
            ));
        }
        let n = levels[0].n();
        if levels.iter().any(|i| i.n() != n) {
            return Err(Error::precondition(
                "all levels must live in the same polynomial ring",
            ));
        }
        for s in 0..levels.len() - 1 {
            for g in levels[s].generators() {
                if !levels[s + 1].contains_monomial(g) {
                    return Err(Error::precondition(format!(
                        "monotonicity violated: generator {} of level t={} is not in level t={}",
                        MonomialIdeal::monomial_string(g),
                        grid[s],
                        grid[s + 1],
                    )));
                }
            }
        }
        Ok(IdealFiltration { n, grid, levels })
    }

    pub fn from_hypergraphs(f: &HypergraphFiltration) -> Self {
        let levels: Vec<MonomialIdeal> = f
            .levels()
            .iter()
            .map(crate::complexes::edge_ideal)
            .collect();
        IdealFiltration {
            n: f.n(),
            grid: f.grid().to_vec(),
            levels,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn levels(&self) -> &[MonomialIdeal] {
        &self.levels
    }

    pub fn level(&self, index: usize) -> &MonomialIdeal {
        &self.levels[index]
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Stanley–Reisner complexes of the levels (a decreasing family).
    pub fn sr_complexes(&self) -> Result<Vec<SimplicialComplex>> {
        self.levels.iter().map(stanley_reisner_complex).collect()
    }
}

/// Quotient-side cells `(i, j) → rank` for one ordered pair of levels, where
/// `small ⊆ large` are the complexes at the later and earlier level.
fn quotient_pair_cells(
    small: &SimplicialComplex,
    large: &SimplicialComplex,
    field: Field,
    i_cap: u32,
    j_cap: usize,
) -> BTreeMap<(u32, u32), u64> {
    let n = large.n();
    let subsets = subsets_up_to(n, j_cap);
    let per_w: Vec<(u32, Vec<u64>)> = subsets
        .par_iter()
        .map(|&w| {
            let small_levels = FaceLevels::from_complex_within(small, w);
            let large_levels = FaceLevels::from_complex_within(large, w);
            let q_max = w.card() as i64 - 1;
            let ranks: Vec<u64> = (-1..=q_max)
                .map(|q| induced_rank_at(&small_levels, &large_levels, q, field))
                .collect();
            (w.card() as u32, ranks)
        })
        .collect();

    let mut cells = BTreeMap::new();
    for (j, ranks) in per_w {
        for (qi, &r) in ranks.iter().enumerate() {
            if r == 0 {
                continue;
            }
            let q = qi as i64 - 1;
            let i = j as i64 - q - 1;
            if i >= 0 && i <= i_cap as i64 {
                *cells.entry((i as u32, j)).or_insert(0) += r;
            }
        }
    }
    cells
}

fn persistent_table_from_complexes(
    complexes: &[SimplicialComplex],
    grid: Vec<f64>,
    n: usize,
    subject: Subject,
    field: Field,
    i_max: u32,
    j_max: u32,
    budget: u64,
) -> Result<PersistentBettiTable> {
    let j_cap = (j_max as usize).min(n);
    check_subset_budget(n, j_cap, budget)?;
    let iq_cap = match subject {
        Subject::Quotient => i_max,
        Subject::Ideal => i_max.saturating_add(1),
    };
    let mut entries = BTreeMap::new();
    for a in 0..complexes.len() {
        for b in a..complexes.len() {
            let cells = quotient_pair_cells(&complexes[b], &complexes[a], field, iq_cap, j_cap);
            for ((iq, j), v) in cells {
                let i_store = match subject {
                    Subject::Quotient => iq,
                    Subject::Ideal => {
                        if iq == 0 {
                            continue;
                        }
                        iq - 1
                    }
                };
                if i_store <= i_max {
                    entries.insert((a, b, i_store, j), v);
                }
            }
        }
    }
    Ok(PersistentBettiTable {
        subject,
        field,
        grid,
        entries,
    })
}

/// Full persistent table of a hypergraph filtration over all grid pairs.
pub fn persistent_betti_table(
    filtration: &HypergraphFiltration,
    subject: Subject,
    field: Field,
    i_max: u32,
    j_max: u32,
    budget: u64,
) -> Result<PersistentBettiTable> {
    let complexes: Vec<SimplicialComplex> =
        filtration.levels().iter().map(independence_complex).collect();
    persistent_table_from_complexes(
        &complexes,
        filtration.grid().to_vec(),
        filtration.n(),
        subject,
        field,
        i_max,
        j_max,
        budget,
    )
}

/// Full persistent table of a squarefree monomial ideal filtration.
pub fn persistent_betti_table_ideals(
    filtration: &IdealFiltration,
    subject: Subject,
    field: Field,
    i_max: u32,
    j_max: u32,
    budget: u64,
) -> Result<PersistentBettiTable> {
    let complexes = filtration.sr_complexes()?;
    persistent_table_from_complexes(
        &complexes,
        filtration.grid().to_vec(),
        filtration.n(),
        subject,
        field,
        i_max,
        j_max,
        budget,
    )
}

/// A single persistent cell `β^{a,b}_{i,j}` of a hypergraph filtration.
pub fn persistent_betti(
    filtration: &HypergraphFiltration,
    a: usize,
    b: usize,
    i: u32,
    j: u32,
    subject: Subject,
    field: Field,
    budget: u64,
) -> Result<u64> {
    if a > b {
        return Err(Error::precondition(format!(
            "persistent indices must satisfy a <= b, got a={a}, b={b}"
        )));
    }
    if b >= filtration.len() {
        return Err(Error::precondition(format!(
            "level index {b} out of range for a {}-level filtration",
            filtration.len()
        )));
    }
    let n = filtration.n();
    if j as usize > n {
        return Ok(0);
    }
    let needed = binomial(n as u64, j as u64);
    if needed > budget {
        return Err(Error::Budget { needed, budget });
    }
    let iq = match subject {
        Subject::Quotient => i as i64,
        Subject::Ideal => i as i64 + 1,
    };
    let q = j as i64 - iq - 1;
    if q < -1 {
        return Ok(0);
    }
    let large = independence_complex(filtration.level(a));
    let small = independence_complex(filtration.level(b));
    let total: u64 = subsets_of_size(n, j as usize)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&w| {
            let small_levels = FaceLevels::from_complex_within(&small, w);
            let large_levels = FaceLevels::from_complex_within(&large, w);
            induced_rank_at(&small_levels, &large_levels, q, field)
        })
        .sum();
    Ok(total)
}

// ---------------------------------------------------------------------------
// Connected-component fast path
// ---------------------------------------------------------------------------

/// `β_{n-2,n}(I(Ḡ))` by the top-multidegree Hochster evaluation: the number
/// of connected components of `G` minus one (`0` when `n ≤ 1`).
pub fn component_betti_fast(g: &Hypergraph) -> Result<u64> {
    if !g.is_graph() {
        return Err(Error::precondition(
            "the component fast path is defined for graphs",
        ));
    }
    let n = g.n();
    if n <= 1 {
        return Ok(0);
    }
    let mut uf = UnionFind::new(n);
    for e in g.edges() {
        let vs = e.vertices();
        uf.union(vs[0] - 1, vs[1] - 1);
    }
    Ok(uf.component_count() as u64 - 1)
}

/// The component curve of a graph filtration: one union-find instance swept
/// across the levels, so the whole curve costs near-linear total time.
pub fn component_betti_curve(filtration: &HypergraphFiltration) -> Result<Vec<u64>> {
    if !filtration.is_graph_filtration() {
        return Err(Error::precondition(
            "the component fast path is defined for graph filtrations",
        ));
    }
    let n = filtration.n();
    if n <= 1 {
        return Ok(vec![0; filtration.len()]);
    }
    let mut uf = UnionFind::new(n);
    let mut curve = Vec::with_capacity(filtration.len());
    for level in filtration.levels() {
        for e in level.edges() {
            let vs = e.vertices();
            uf.union(vs[0] - 1, vs[1] - 1);
        }
        curve.push(uf.component_count() as u64 - 1);
    }
    Ok(curve)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{complement_graph, edge_ideal};

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v).unwrap()
    }

    fn quotient_table(g: &Hypergraph, field: Field) -> BettiTable {
        let ind = independence_complex(g);
        betti_table_quotient(&ind, field, 32, 32, DEFAULT_BUDGET, true).unwrap()
    }

    #[test]
    fn p3_quotient_table() {
        let table = quotient_table(&Hypergraph::path(3).unwrap(), Field::GF2);
        let expected: BTreeMap<(u32, u32), u64> =
            [((0, 0), 1), ((1, 2), 2), ((2, 3), 1)].into_iter().collect();
        assert_eq!(table.entries, expected);
    }

    #[test]
    fn hochster_multigraded_examples() {
        let ind_p3 = independence_complex(&Hypergraph::path(3).unwrap());
        assert_eq!(
            hochster_multigraded(&ind_p3, 2, VertexSet::full(3), Field::GF2),
            1
        );
        assert_eq!(
            hochster_multigraded(&ind_p3, 0, VertexSet::EMPTY, Field::GF2),
            1
        );

        let ind_k4 = independence_complex(&Hypergraph::complete(4).unwrap());
        for pair in subsets_of_size(4, 2) {
            assert_eq!(hochster_multigraded(&ind_k4, 1, pair, Field::GF2), 1);
        }
    }

    #[test]
    fn k4_quotient_closed_form() {
        let table = quotient_table(&Hypergraph::complete(4).unwrap(), Field::GF2);
        let expected: BTreeMap<(u32, u32), u64> =
            [((0, 0), 1), ((1, 2), 6), ((2, 3), 8), ((3, 4), 3)]
                .into_iter()
                .collect();
        assert_eq!(table.entries, expected);
    }

    #[test]
    fn star_tables_both_sides() {
        // star with 3 leaves: ideal side has β_{i,i+2} = C(3, i+1)
        let star = Hypergraph::star(4, 1, &[2, 3, 4]).unwrap();
        let ideal = edge_ideal(&star);
        let table = betti_table_ideal(&ideal, Field::GF2, 8, 8, DEFAULT_BUDGET, false).unwrap();
        let expected: BTreeMap<(u32, u32), u64> =
            [((0, 2), 3), ((1, 3), 3), ((2, 4), 1)].into_iter().collect();
        assert_eq!(table.entries, expected);

        // quotient side is the same data shifted
        let quotient = quotient_table(&star, Field::GF2);
        let expected_q: BTreeMap<(u32, u32), u64> =
            [((0, 0), 1), ((1, 2), 3), ((2, 3), 3), ((3, 4), 1)]
                .into_iter()
                .collect();
        assert_eq!(quotient.entries, expected_q);
    }

    #[test]
    fn ideal_table_p3_resolution() {
        let ideal = edge_ideal(&Hypergraph::path(3).unwrap());
        let table = betti_table_ideal(&ideal, Field::GF2, 8, 8, DEFAULT_BUDGET, false).unwrap();
        let expected: BTreeMap<(u32, u32), u64> = [((0, 2), 2), ((1, 3), 1)].into_iter().collect();
        assert_eq!(table.entries, expected);
    }

    #[test]
    fn zero_ideal_tables_empty() {
        let zero = MonomialIdeal::zero(3);
        let table = betti_table_ideal(&zero, Field::GF2, 8, 8, DEFAULT_BUDGET, false).unwrap();
        assert!(table.is_zero());
        let koszul = betti_table_ideal_koszul(&zero, Field::GF2, 8, 8, DEFAULT_BUDGET).unwrap();
        assert!(koszul.is_zero());
    }

    #[test]
    fn graded_equals_multigraded_sum() {
        let table = quotient_table(&Hypergraph::path(4).unwrap(), Field::GF2);
        let multigraded = table.multigraded.as_ref().unwrap();
        let mut recovered: BTreeMap<(u32, u32), u64> = BTreeMap::new();
        for (&(i, bits), &v) in multigraded {
            let j = VertexSet::from_bits(bits).card() as u32;
            *recovered.entry((i, j)).or_insert(0) += v;
        }
        assert_eq!(recovered, table.entries);
    }

    #[test]
    fn upper_koszul_examples() {
        let ideal = edge_ideal(&Hypergraph::path(3).unwrap());
        assert_eq!(
            upper_koszul_betti(&ideal, 1, &[1, 1, 1], Field::GF2).unwrap(),
            1
        );
        // multidegree not in the ideal: void complex, all Betti numbers zero
        assert_eq!(
            upper_koszul_betti(&ideal, 0, &[1, 0, 1], Field::GF2).unwrap(),
            0
        );
        let principal = MonomialIdeal::new(3, vec![vec![1, 1, 1]]).unwrap();
        assert_eq!(
            upper_koszul_betti(&principal, 0, &[1, 1, 1], Field::GF2).unwrap(),
            1
        );
    }

    #[test]
    fn koszul_table_matches_hochster_for_squarefree() {
        let ideal = edge_ideal(&Hypergraph::path(4).unwrap());
        let hochster = betti_table_ideal(&ideal, Field::GF2, 8, 8, DEFAULT_BUDGET, false).unwrap();
        let koszul = betti_table_ideal_koszul(&ideal, Field::GF2, 8, 8, DEFAULT_BUDGET).unwrap();
        assert_eq!(hochster.entries, koszul.entries);
    }

    #[test]
    fn koszul_table_non_squarefree() {
        // I = (x^2, xy) = x*(x, y): Taylor/Koszul resolution gives
        // β_{0,2} = 2, β_{1,3} = 1.
        let ideal = MonomialIdeal::new(2, vec![vec![2, 0], vec![1, 1]]).unwrap();
        assert!(betti_table_ideal(&ideal, Field::GF2, 4, 4, DEFAULT_BUDGET, false).is_err());
        let table = betti_table_ideal_koszul(&ideal, Field::GF2, 4, 6, DEFAULT_BUDGET).unwrap();
        let expected: BTreeMap<(u32, u32), u64> = [((0, 2), 2), ((1, 3), 1)].into_iter().collect();
        assert_eq!(table.entries, expected);
    }

    fn two_level_filtration() -> HypergraphFiltration {
        HypergraphFiltration::new(
            3,
            vec![0.0, 1.0],
            vec![vec![vs(&[1, 2])], vec![vs(&[1, 2]), vs(&[2, 3])]],
        )
        .unwrap()
    }

    #[test]
    fn persistent_single_edge_to_p3() {
        let f = two_level_filtration();
        let cell =
            persistent_betti(&f, 0, 1, 0, 2, Subject::Ideal, Field::GF2, DEFAULT_BUDGET).unwrap();
        assert_eq!(cell, 1);
    }

    #[test]
    fn persistent_diagonal_recovers_classical() {
        let f = two_level_filtration();
        let table = persistent_betti_table(
            &f,
            Subject::Quotient,
            Field::GF2,
            8,
            8,
            DEFAULT_BUDGET,
        )
        .unwrap();
        for (level, g) in f.levels().iter().enumerate() {
            let classical = quotient_table(g, Field::GF2);
            assert_eq!(table.diagonal(level), classical.entries, "level {level}");
        }
    }

    #[test]
    fn persistent_monotone_bound() {
        let f = two_level_filtration();
        let table =
            persistent_betti_table(&f, Subject::Ideal, Field::GF2, 8, 8, DEFAULT_BUDGET).unwrap();
        for (&(a, b, i, j), &v) in &table.entries {
            assert!(v <= table.get(a, a, i, j).min(table.get(b, b, i, j)));
        }
    }

    #[test]
    fn persistent_index_errors() {
        let f = two_level_filtration();
        assert!(persistent_betti(&f, 1, 0, 0, 2, Subject::Ideal, Field::GF2, 1 << 10).is_err());
        assert!(persistent_betti(&f, 0, 5, 0, 2, Subject::Ideal, Field::GF2, 1 << 10).is_err());
    }

    #[test]
    fn budget_errors_loudly() {
        let ind = independence_complex(&Hypergraph::complete(10).unwrap());
        let err = betti_table_quotient(&ind, Field::GF2, 10, 10, 16, false);
        assert!(matches!(err, Err(Error::Budget { .. })));
    }

    #[test]
    fn component_fast_path_examples() {
        let connected = Hypergraph::path(4).unwrap();
        assert_eq!(component_betti_fast(&connected).unwrap(), 0);

        let isolated = Hypergraph::graph(3, &[]).unwrap();
        assert_eq!(component_betti_fast(&isolated).unwrap(), 2);

        let single = Hypergraph::graph(1, &[]).unwrap();
        assert_eq!(component_betti_fast(&single).unwrap(), 0);
    }

    #[test]
    fn component_fast_path_matches_hochster() {
        // β_{n-2,n}(I(Ḡ)) for a 2-component graph on 4 vertices.
        let g = Hypergraph::graph(4, &[(1, 2), (3, 4)]).unwrap();
        let complement = complement_graph(&g).unwrap();
        let ideal = edge_ideal(&complement);
        let table = betti_table_ideal(&ideal, Field::GF2, 8, 8, DEFAULT_BUDGET, false).unwrap();
        assert_eq!(table.get(2, 4), component_betti_fast(&g).unwrap());
    }

    #[test]
    fn component_curve_matches_levels() {
        let f = HypergraphFiltration::new(
            4,
            vec![0.0, 1.0, 2.0],
            vec![
                vec![],
                vec![vs(&[1, 2])],
                vec![vs(&[1, 2]), vs(&[3, 4]), vs(&[2, 3])],
            ],
        )
        .unwrap();
        assert_eq!(component_betti_curve(&f).unwrap(), vec![3, 2, 0]);
    }
}

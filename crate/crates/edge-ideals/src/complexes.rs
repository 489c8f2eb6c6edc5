//! Core combinatorial objects: graphs, hypergraphs, simplicial complexes,
//! filtrations, monomial ideals, and the constructions connecting them.
//!
//! Conventions pinned here and relied on everywhere else:
//!
//! * Vertices are 1-indexed in every public API and serialization.
//! * Hypergraph edge sets are inclusion-antichains (dominated hyperedges are
//!   dropped at construction, mirroring minimal generating sets of ideals).
//! * The void complex (no faces at all) is distinct from `{∅}`; reduced
//!   homology conventions in [`crate::homology`] depend on the distinction.
//! * All types are immutable after construction and safe to share across
//!   threads.

use std::fmt;
use std::sync::OnceLock;

use crate::bitset::{antichain_maximal, antichain_minimal, VertexSet};
use crate::error::{Error, Result};
use crate::transversal::minimal_transversals;

// ---------------------------------------------------------------------------
// Hypergraph
// ---------------------------------------------------------------------------

/// A hypergraph on `{1, ..., n}` whose edge set is an inclusion-antichain of
/// sets of cardinality at least 2. Simple graphs are the 2-uniform case.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
    is_graph: bool,
}

impl Hypergraph {
    /// Builds a hypergraph, minimizing the edge family.
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        VertexSet::check_capacity(n)?;
        let full = VertexSet::full(n);
        for e in &edges {
            if !e.is_subset_of(full) {
                return Err(Error::precondition(format!(
                    "edge {e} is not contained in {{1..{n}}}"
                )));
            }
            if e.card() < 2 {
                return Err(Error::precondition(format!(
                    "edge {e} has fewer than 2 vertices"
                )));
            }
        }
        let edges = antichain_minimal(edges);
        let is_graph = edges.iter().all(|e| e.card() == 2);
        Ok(Hypergraph { n, edges, is_graph })
    }

    /// Convenience constructor from 1-indexed vertex lists.
    pub fn from_edge_lists(n: usize, edges: &[Vec<usize>]) -> Result<Self> {
        let sets = edges
            .iter()
            .map(|e| VertexSet::from_vertices(e))
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(n, sets)
    }

    /// A simple graph from vertex pairs.
    pub fn graph(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b {
                return Err(Error::precondition(format!("loop edge at vertex {a}")));
            }
            edges.push(VertexSet::from_vertices(&[a, b])?);
        }
        Hypergraph::new(n, edges)
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        Hypergraph::graph(n, &pairs)
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let mut pairs = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                pairs.push((i, j));
            }
        }
        Hypergraph::graph(n, &pairs)
    }

    /// A star with the given center and leaves.
    pub fn star(n: usize, center: usize, leaves: &[usize]) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = leaves.iter().map(|&l| (center, l)).collect();
        Hypergraph::graph(n, &pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn is_graph(&self) -> bool {
        self.is_graph
    }

    pub fn has_edge(&self, e: VertexSet) -> bool {
        self.edges.contains(&e)
    }

    /// Neighbors of `x` in a 2-uniform hypergraph.
    pub fn neighbors(&self, x: usize) -> VertexSet {
        let mut nb = VertexSet::EMPTY;
        for e in &self.edges {
            if e.contains(x) {
                nb = nb.union(e.remove(x));
            }
        }
        nb
    }

    /// Vertex-deleted subgraph `H \ {x}` on the same labeled vertex set.
    pub fn delete_vertex(&self, x: usize) -> Hypergraph {
        let edges: Vec<VertexSet> = self
            .edges
            .iter()
            .copied()
            .filter(|e| !e.contains(x))
            .collect();
        Hypergraph {
            n: self.n,
            edges,
            is_graph: self.is_graph,
        }
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

// ---------------------------------------------------------------------------
// SimplicialComplex
// ---------------------------------------------------------------------------

/// A simplicial complex stored as its facet list.
///
/// `facets` empty encodes the void complex (no faces, not even `∅`);
/// `facets == [∅]` is the complex whose only face is the empty face.
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
    face_memo: OnceLock<Vec<VertexSet>>,
}

impl SimplicialComplex {
    pub fn from_facets(n: usize, facets: Vec<VertexSet>) -> Result<Self> {
        VertexSet::check_capacity(n)?;
        let full = VertexSet::full(n);
        for f in &facets {
            if !f.is_subset_of(full) {
                return Err(Error::precondition(format!(
                    "facet {f} is not contained in {{1..{n}}}"
                )));
            }
        }
        Ok(SimplicialComplex {
            n,
            facets: antichain_maximal(facets),
            face_memo: OnceLock::new(),
        })
    }

    /// The void complex: no faces at all.
    pub fn void(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: Vec::new(),
            face_memo: OnceLock::new(),
        }
    }

    /// The complex `{∅}` whose only face is the empty face.
    pub fn empty_face_only(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::EMPTY],
            face_memo: OnceLock::new(),
        }
    }

    /// The full simplex on `{1, ..., n}`.
    pub fn simplex(n: usize) -> Result<Self> {
        VertexSet::check_capacity(n)?;
        Ok(SimplicialComplex {
            n,
            facets: vec![VertexSet::full(n)],
            face_memo: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension of the complex; `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<i64> {
        self.facets
            .iter()
            .map(|f| f.card() as i64 - 1)
            .max()
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// Every face, memoized on first use, grouped by nothing (flat list).
    pub fn faces(&self) -> &[VertexSet] {
        self.face_memo.get_or_init(|| {
            self.faces_within(VertexSet::full(self.n))
        })
    }

    /// All faces contained in `w`, in lexicographic order by vertex list.
    ///
    /// Downward closure makes depth-first extension complete: every face is
    /// reached by inserting vertices in increasing order.
    pub fn faces_within(&self, w: VertexSet) -> Vec<VertexSet> {
        if self.is_void() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut frontier = vec![VertexSet::EMPTY];
        out.push(VertexSet::EMPTY);
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &face in &frontier {
                let floor = face.max_vertex().unwrap_or(0);
                for v in w.iter() {
                    if v <= floor {
                        continue;
                    }
                    let candidate = face.insert(v);
                    if self.contains(candidate) {
                        next.push(candidate);
                    }
                }
            }
            out.extend_from_slice(&next);
            frontier = next;
        }
        out
    }

    /// Number of faces of each cardinality, the f-vector indexed from card 0.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut counts = Vec::new();
        for face in self.faces() {
            let c = face.card();
            if counts.len() <= c {
                counts.resize(c + 1, 0);
            }
            counts[c] += 1;
        }
        counts
    }
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex {
            n: self.n,
            facets: self.facets.clone(),
            face_memo: OnceLock::new(),
        }
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, facets=[", self.n)?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, "])")
    }
}

// ---------------------------------------------------------------------------
// MonomialIdeal
// ---------------------------------------------------------------------------

/// A monomial ideal given by its minimal generating exponent vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Vec<u32>>,
    squarefree: bool,
}

impl MonomialIdeal {
    /// Builds an ideal from generator exponent vectors, minimizing the set
    /// (no generator divides another).
    pub fn new(n: usize, generators: Vec<Vec<u32>>) -> Result<Self> {
        for g in &generators {
            if g.len() != n {
                return Err(Error::precondition(format!(
                    "generator has {} exponents, expected {n}",
                    g.len()
                )));
            }
        }
        let generators = minimize_generators(generators);
        let squarefree = generators.iter().all(|g| g.iter().all(|&e| e <= 1));
        Ok(MonomialIdeal {
            n,
            generators,
            squarefree,
        })
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: Vec::new(),
            squarefree: true,
        }
    }

    /// Squarefree ideal from generator supports.
    pub fn from_supports(n: usize, supports: &[VertexSet]) -> Self {
        let generators = antichain_minimal(supports.to_vec())
            .into_iter()
            .map(|s| support_to_exponents(n, s))
            .collect();
        MonomialIdeal {
            n,
            generators: sort_generators(generators),
            squarefree: true,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.squarefree
    }

    /// Generator supports as vertex sets (for squarefree ideals these are the
    /// hyperedges of the associated hypergraph).
    pub fn supports(&self) -> Vec<VertexSet> {
        self.generators
            .iter()
            .map(|g| exponents_to_support(g))
            .collect()
    }

    /// Membership test: some generator divides the monomial.
    pub fn contains_monomial(&self, exponents: &[u32]) -> bool {
        debug_assert_eq!(exponents.len(), self.n);
        self.generators
            .iter()
            .any(|g| divides(g, exponents))
    }

    /// The monomial-lattice intersection: minimized pairwise lcms.
    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        debug_assert_eq!(self.n, other.n);
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for g in &self.generators {
            for h in &other.generators {
                gens.push(lcm_exponents(g, h));
            }
        }
        let generators = minimize_generators(gens);
        let squarefree = generators.iter().all(|g| g.iter().all(|&e| e <= 1));
        MonomialIdeal {
            n: self.n,
            generators,
            squarefree,
        }
    }

    /// The ideal sum `I + J` with re-minimized generators.
    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        debug_assert_eq!(self.n, other.n);
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        let generators = minimize_generators(gens);
        let squarefree = generators.iter().all(|g| g.iter().all(|&e| e <= 1));
        MonomialIdeal {
            n: self.n,
            generators,
            squarefree,
        }
    }

    /// Componentwise lcm of all generators; the zero vector for unit/empty cases.
    pub fn generator_lcm(&self) -> Vec<u32> {
        let mut acc = vec![0u32; self.n];
        for g in &self.generators {
            for (a, &e) in acc.iter_mut().zip(g) {
                *a = (*a).max(e);
            }
        }
        acc
    }

    /// Human-readable monomial, e.g. `x1*x2^2` (or `1` for the empty vector).
    pub fn monomial_string(exponents: &[u32]) -> String {
        let mut parts = Vec::new();
        for (idx, &e) in exponents.iter().enumerate() {
            if e == 1 {
                parts.push(format!("x{}", idx + 1));
            } else if e > 1 {
                parts.push(format!("x{}^{}", idx + 1, e));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal(")?;
        if self.is_zero() {
            write!(f, "0")?;
        } else {
            for (i, g) in self.generators.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", MonomialIdeal::monomial_string(g))?;
            }
        }
        write!(f, ")")
    }
}

fn divides(g: &[u32], m: &[u32]) -> bool {
    g.iter().zip(m).all(|(a, b)| a <= b)
}

fn lcm_exponents(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| (*x).max(*y)).collect()
}

fn support_to_exponents(n: usize, s: VertexSet) -> Vec<u32> {
    let mut exps = vec![0u32; n];
    for v in s.iter() {
        exps[v - 1] = 1;
    }
    exps
}

fn exponents_to_support(g: &[u32]) -> VertexSet {
    let mut s = VertexSet::EMPTY;
    for (idx, &e) in g.iter().enumerate() {
        if e > 0 {
            s = s.insert(idx + 1);
        }
    }
    s
}

fn sort_generators(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort_by(|a, b| {
        let da: u64 = a.iter().map(|&e| e as u64).sum();
        let db: u64 = b.iter().map(|&e| e as u64).sum();
        da.cmp(&db).then_with(|| a.cmp(b))
    });
    gens
}

fn minimize_generators(gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let mut sorted = sort_generators(gens);
    sorted.dedup();
    let mut kept: Vec<Vec<u32>> = Vec::with_capacity(sorted.len());
    for g in sorted {
        if !kept.iter().any(|k| divides(k, &g)) {
            kept.push(g);
        }
    }
    kept
}

// ---------------------------------------------------------------------------
// HypergraphFiltration
// ---------------------------------------------------------------------------

/// A monotone family of hypergraphs over a strictly increasing threshold grid.
///
/// Monotonicity is validated at construction as containment of the generated
/// edge ideals: every edge at level `s` must contain some edge at any later
/// level. For 2-uniform levels this is literally `E_s ⊆ E_t`.
#[derive(Clone, Debug, PartialEq)]
pub struct HypergraphFiltration {
    n: usize,
    grid: Vec<f64>,
    levels: Vec<Hypergraph>,
}

impl HypergraphFiltration {
    pub fn new(n: usize, grid: Vec<f64>, level_edges: Vec<Vec<VertexSet>>) -> Result<Self> {
        if grid.is_empty() {
            return Err(Error::precondition("filtration grid is empty"));
        }
        if grid.len() != level_edges.len() {
            return Err(Error::precondition(format!(
                "{} grid values but {} levels",
                grid.len(),
                level_edges.len()
            )));
        }
        if !grid.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::precondition(
                "filtration grid is not strictly increasing",
            ));
        }
        let levels: Vec<Hypergraph> = level_edges
            .into_iter()
            .map(|edges| Hypergraph::new(n, edges))
            .collect::<Result<_>>()?;
        for s in 0..levels.len().saturating_sub(1) {
            for e in levels[s].edges() {
                let covered = levels[s + 1].edges().iter().any(|f| f.is_subset_of(*e));
                if !covered {
                    return Err(Error::precondition(format!(
                        "monotonicity violated: edge {e} at t={} has no successor at t={}",
                        levels_grid(&grid, s),
                        levels_grid(&grid, s + 1),
                    )));
                }
            }
        }
        Ok(HypergraphFiltration { n, grid, levels })
    }

    /// Builds a filtration by accumulating newly appearing edges per level.
    pub fn cumulative(n: usize, grid: Vec<f64>, new_edges: Vec<Vec<VertexSet>>) -> Result<Self> {
        let mut acc: Vec<VertexSet> = Vec::new();
        let mut levels = Vec::with_capacity(new_edges.len());
        for batch in new_edges {
            acc.extend(batch);
            levels.push(acc.clone());
        }
        HypergraphFiltration::new(n, grid, levels)
    }

    /// A single-level filtration at threshold 0.
    pub fn constant(h: Hypergraph, grid: Vec<f64>) -> Result<Self> {
        let levels = vec![h.edges().to_vec(); grid.len()];
        HypergraphFiltration::new(h.n(), grid, levels)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn levels(&self) -> &[Hypergraph] {
        &self.levels
    }

    pub fn level(&self, index: usize) -> &Hypergraph {
        &self.levels[index]
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn is_graph_filtration(&self) -> bool {
        self.levels.iter().all(|h| h.is_graph())
    }
}

fn levels_grid(grid: &[f64], idx: usize) -> f64 {
    grid[idx]
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// The independence complex `Ind(H)`: faces are the sets containing no edge.
///
/// Facets are the maximal independent sets, obtained as complements of the
/// minimal transversals of the edge family.
pub fn independence_complex(h: &Hypergraph) -> SimplicialComplex {
    let transversals = minimal_transversals(h.n(), h.edges(), u64::MAX)
        .expect("unbounded transversal enumeration cannot exceed its budget");
    let full = VertexSet::full(h.n());
    let facets = transversals.into_iter().map(|t| full.difference(t)).collect();
    SimplicialComplex {
        n: h.n(),
        facets: antichain_maximal(facets),
        face_memo: OnceLock::new(),
    }
}

/// The induced subcomplex `Δ_W = {σ ∈ Δ : σ ⊆ W}` on the same labeled
/// vertex set.
pub fn induced_subcomplex(complex: &SimplicialComplex, w: VertexSet) -> SimplicialComplex {
    if complex.is_void() {
        return SimplicialComplex::void(complex.n());
    }
    let restricted: Vec<VertexSet> = complex
        .facets()
        .iter()
        .map(|f| f.intersect(w))
        .collect();
    SimplicialComplex {
        n: complex.n(),
        facets: antichain_maximal(restricted),
        face_memo: OnceLock::new(),
    }
}

/// The complement graph: `{i, j}` is an edge iff it is not one in `g`.
pub fn complement_graph(g: &Hypergraph) -> Result<Hypergraph> {
    if !g.is_graph() {
        return Err(Error::precondition(
            "complement is defined for 2-uniform hypergraphs only",
        ));
    }
    let n = g.n();
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let e = VertexSet::singleton(i).insert(j);
            if !g.has_edge(e) {
                edges.push(e);
            }
        }
    }
    Hypergraph::new(n, edges)
}

/// The edge ideal `I(H) = (x_F : F an edge)`.
pub fn edge_ideal(h: &Hypergraph) -> MonomialIdeal {
    MonomialIdeal::from_supports(h.n(), h.edges())
}

/// The Stanley–Reisner complex of a squarefree monomial ideal: faces are the
/// supports of monomials outside the ideal. Inverse to taking the ideal of
/// nonfaces; in particular `stanley_reisner_complex(edge_ideal(H)) = Ind(H)`.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::precondition(
            "Stanley-Reisner complex requires a squarefree ideal",
        ));
    }
    let supports = ideal.supports();
    let transversals = minimal_transversals(ideal.n(), &supports, u64::MAX)?;
    let full = VertexSet::full(ideal.n());
    let facets = transversals.into_iter().map(|t| full.difference(t)).collect();
    Ok(SimplicialComplex {
        n: ideal.n(),
        facets: antichain_maximal(facets),
        face_memo: OnceLock::new(),
    })
}

/// The three ideals of the vertex decomposition at `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSplit {
    /// `J = (x·x_1, ..., x·x_t)` over the neighborhood of `x`.
    pub star: MonomialIdeal,
    /// `K = I(G \ {x})`.
    pub deleted: MonomialIdeal,
    /// `J ∩ K`, produced by the explicit decomposition formula and verified
    /// against the monomial-lattice intersection.
    pub intersection: MonomialIdeal,
}

/// Splits `I(G) = J + K` at a vertex with the explicit intersection formula
/// `J ∩ K = x·I(G(x)) + Σ_i x·x_i·I(G_i)`, where `G(x)` keeps the edges of
/// `G \ {x}` meeting `N(x)` and `G_i = G \ (N(x) ∪ N(x_i))`.
pub fn vertex_split(g: &Hypergraph, x: usize) -> Result<VertexSplit> {
    if !g.is_graph() {
        return Err(Error::precondition(
            "vertex splitting is defined for graphs only",
        ));
    }
    if x == 0 || x > g.n() {
        return Err(Error::precondition(format!(
            "vertex {x} is outside {{1..{}}}",
            g.n()
        )));
    }
    let neighborhood = g.neighbors(x);
    if neighborhood.is_empty() {
        return Err(Error::precondition(format!(
            "vertex {x} has degree 0, the star ideal would be empty"
        )));
    }
    let deleted_graph = g.delete_vertex(x);
    if deleted_graph.edges().is_empty() {
        return Err(Error::precondition(format!(
            "G minus {{{x}}} is a graph of isolated vertices"
        )));
    }

    let n = g.n();
    let star_supports: Vec<VertexSet> = neighborhood
        .iter()
        .map(|y| VertexSet::singleton(x).insert(y))
        .collect();
    let star = MonomialIdeal::from_supports(n, &star_supports);
    let deleted = edge_ideal(&deleted_graph);

    // x * I(G(x))
    let mut intersection_supports: Vec<VertexSet> = Vec::new();
    for e in deleted_graph.edges() {
        if e.intersects(neighborhood) {
            intersection_supports.push(e.insert(x));
        }
    }
    // x * x_i * I(G_i)
    for xi in neighborhood.iter() {
        let removed = neighborhood.union(g.neighbors(xi));
        for e in g.edges() {
            if !e.intersects(removed) {
                intersection_supports.push(e.insert(x).insert(xi));
            }
        }
    }
    let intersection = MonomialIdeal::from_supports(n, &intersection_supports);

    let lattice = star.intersection(&deleted);
    assert_eq!(
        intersection, lattice,
        "vertex-split intersection formula disagrees with the lattice intersection"
    );

    Ok(VertexSplit {
        star,
        deleted,
        intersection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v).unwrap()
    }

    #[test]
    fn independence_complex_p3() {
        let g = Hypergraph::path(3).unwrap();
        let ind = independence_complex(&g);
        assert_eq!(ind.facets(), &[vs(&[2]), vs(&[1, 3])]);
        let mut faces = ind.faces_within(VertexSet::full(3));
        faces.sort();
        assert_eq!(
            faces,
            vec![VertexSet::EMPTY, vs(&[1]), vs(&[2]), vs(&[3]), vs(&[1, 3])]
        );
    }

    #[test]
    fn independence_complex_complete() {
        let g = Hypergraph::complete(4).unwrap();
        let ind = independence_complex(&g);
        let facets: Vec<VertexSet> = (1..=4).map(|v| vs(&[v])).collect();
        assert_eq!(ind.facets(), facets.as_slice());
    }

    #[test]
    fn independence_complex_edgeless() {
        let g = Hypergraph::graph(3, &[]).unwrap();
        let ind = independence_complex(&g);
        assert_eq!(ind.facets(), &[VertexSet::full(3)]);
        assert_eq!(ind.faces().len(), 8);
    }

    #[test]
    fn induced_subcomplex_examples() {
        let ind = independence_complex(&Hypergraph::path(3).unwrap());
        let sub = induced_subcomplex(&ind, vs(&[1, 3]));
        assert_eq!(sub.facets(), &[vs(&[1, 3])]);

        let same = induced_subcomplex(&ind, VertexSet::full(3));
        assert_eq!(same, ind);

        let k4 = independence_complex(&Hypergraph::complete(4).unwrap());
        let two_points = induced_subcomplex(&k4, vs(&[1, 2]));
        assert_eq!(two_points.facets(), &[vs(&[1]), vs(&[2])]);
    }

    #[test]
    fn complement_examples() {
        let k3 = Hypergraph::complete(3).unwrap();
        assert!(complement_graph(&k3).unwrap().edges().is_empty());

        let p3 = Hypergraph::path(3).unwrap();
        assert_eq!(complement_graph(&p3).unwrap().edges(), &[vs(&[1, 3])]);

        let h = Hypergraph::new(3, vec![vs(&[1, 2, 3])]).unwrap();
        assert!(complement_graph(&h).is_err());
    }

    #[test]
    fn edge_ideal_examples() {
        let p3 = Hypergraph::path(3).unwrap();
        let i = edge_ideal(&p3);
        assert_eq!(i.generators(), &[vec![0, 1, 1], vec![1, 1, 0]]);
        assert!(i.is_squarefree());

        let star = Hypergraph::star(4, 1, &[2, 3, 4]).unwrap();
        assert_eq!(edge_ideal(&star).generators().len(), 3);

        let edgeless = Hypergraph::graph(3, &[]).unwrap();
        assert!(edge_ideal(&edgeless).is_zero());
    }

    #[test]
    fn stanley_reisner_inverse_to_edge_ideal() {
        let p3 = Hypergraph::path(3).unwrap();
        let sr = stanley_reisner_complex(&edge_ideal(&p3)).unwrap();
        assert_eq!(sr, independence_complex(&p3));
    }

    #[test]
    fn stanley_reisner_degenerate() {
        let zero = MonomialIdeal::zero(3);
        let sr = stanley_reisner_complex(&zero).unwrap();
        assert_eq!(sr.facets(), &[VertexSet::full(3)]);

        let principal = MonomialIdeal::new(2, vec![vec![1, 0]]).unwrap();
        let sr = stanley_reisner_complex(&principal).unwrap();
        assert_eq!(sr.facets(), &[vs(&[2])]);

        let non_squarefree = MonomialIdeal::new(2, vec![vec![2, 0]]).unwrap();
        assert!(stanley_reisner_complex(&non_squarefree).is_err());

        let unit = MonomialIdeal::new(2, vec![vec![0, 0]]).unwrap();
        let sr = stanley_reisner_complex(&unit).unwrap();
        assert!(sr.is_void());
    }

    #[test]
    fn vertex_split_p3() {
        let p3 = Hypergraph::path(3).unwrap();
        let split = vertex_split(&p3, 1).unwrap();
        assert_eq!(split.star.generators(), &[vec![1, 1, 0]]);
        assert_eq!(split.deleted.generators(), &[vec![0, 1, 1]]);
        assert_eq!(split.intersection.generators(), &[vec![1, 1, 1]]);
    }

    #[test]
    fn vertex_split_p4() {
        let p4 = Hypergraph::path(4).unwrap();
        let split = vertex_split(&p4, 1).unwrap();
        assert_eq!(split.star.generators(), &[vec![1, 1, 0, 0]]);
        assert_eq!(
            split.deleted.generators(),
            &[vec![0, 0, 1, 1], vec![0, 1, 1, 0]]
        );
        assert_eq!(split.intersection.generators(), &[vec![1, 1, 1, 0]]);
    }

    #[test]
    fn vertex_split_guards() {
        let star = Hypergraph::star(4, 1, &[2, 3, 4]).unwrap();
        assert!(vertex_split(&star, 1).is_err());

        let p3 = Hypergraph::path(3).unwrap();
        assert!(vertex_split(&p3, 2).is_err());
    }

    #[test]
    fn filtration_monotonicity_enforced() {
        let bad = HypergraphFiltration::new(
            3,
            vec![0.0, 1.0],
            vec![vec![vs(&[1, 2])], vec![vs(&[2, 3])]],
        );
        assert!(bad.is_err());

        let good = HypergraphFiltration::new(
            3,
            vec![0.0, 1.0],
            vec![vec![vs(&[1, 2])], vec![vs(&[1, 2]), vs(&[2, 3])]],
        );
        assert!(good.is_ok());
    }

    #[test]
    fn filtration_allows_dominating_refinement() {
        // A 3-edge refined by one of its sub-pairs keeps ideal containment.
        let f = HypergraphFiltration::new(
            3,
            vec![0.0, 1.0],
            vec![vec![vs(&[1, 2, 3])], vec![vs(&[1, 2])]],
        );
        assert!(f.is_ok());
    }

    #[test]
    fn ideal_lattice_intersection() {
        let a = MonomialIdeal::new(3, vec![vec![1, 1, 0]]).unwrap();
        let b = MonomialIdeal::new(3, vec![vec![0, 1, 1]]).unwrap();
        let c = a.intersection(&b);
        assert_eq!(c.generators(), &[vec![1, 1, 1]]);
    }

    #[test]
    fn generator_minimization() {
        let i = MonomialIdeal::new(2, vec![vec![1, 0], vec![1, 1], vec![1, 0]]).unwrap();
        assert_eq!(i.generators(), &[vec![1, 0]]);
        assert!(i.contains_monomial(&[2, 1]));
        assert!(!i.contains_monomial(&[0, 3]));
    }

    #[test]
    fn capacity_guard() {
        assert!(Hypergraph::from_edge_lists(64, &[vec![1, 2]]).is_err());
    }
}

//! Shared oracles and fixture generators for the integration suites.
//!
//! Everything here recomputes spec quantities along routes disjoint from the
//! library implementation: Tor via explicit Koszul-complex slices with a
//! local GF(2) elimination, covers by exhaustive subset enumeration,
//! components by BFS, and monomial-ideal membership by divisibility scans.

#![allow(dead_code)]

use edge_ideals::bitset::VertexSet;
use edge_ideals::complexes::{Hypergraph, HypergraphFiltration, MonomialIdeal, SimplicialComplex};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Fixture generators
// ---------------------------------------------------------------------------

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Hypergraph {
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            if rng.gen_bool(p) {
                pairs.push((i, j));
            }
        }
    }
    Hypergraph::graph(n, &pairs).expect("generated pairs are valid")
}

/// A monotone graph filtration built by adding random edge batches.
pub fn random_graph_filtration(
    rng: &mut ChaCha8Rng,
    n: usize,
    levels: usize,
    p_new: f64,
) -> HypergraphFiltration {
    let mut all_pairs = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            all_pairs.push((i, j));
        }
    }
    let mut current: Vec<VertexSet> = Vec::new();
    let mut level_edges = Vec::with_capacity(levels);
    for _ in 0..levels {
        for &(i, j) in &all_pairs {
            let e = VertexSet::from_vertices(&[i, j]).unwrap();
            if !current.contains(&e) && rng.gen_bool(p_new) {
                current.push(e);
            }
        }
        level_edges.push(current.clone());
    }
    let grid: Vec<f64> = (0..levels).map(|i| i as f64).collect();
    HypergraphFiltration::new(n, grid, level_edges).expect("cumulative edges are monotone")
}

/// A random complex as the downward closure of random facets.
pub fn random_complex(rng: &mut ChaCha8Rng, n: usize, facets: usize) -> SimplicialComplex {
    let mut sets = Vec::with_capacity(facets);
    for _ in 0..facets {
        let bits: u64 = rng.gen_range(0..(1u64 << n));
        sets.push(VertexSet::from_bits(bits));
    }
    SimplicialComplex::from_facets(n, sets).expect("facet sets fit the vertex range")
}

/// A random subcomplex: the closure of a random subset of the faces.
pub fn random_subcomplex(rng: &mut ChaCha8Rng, complex: &SimplicialComplex) -> SimplicialComplex {
    let faces: Vec<VertexSet> = complex
        .faces()
        .iter()
        .copied()
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    SimplicialComplex::from_facets(complex.n(), faces).expect("faces fit the vertex range")
}

// ---------------------------------------------------------------------------
// Small independent linear algebra over GF(2)
// ---------------------------------------------------------------------------

pub fn gf2_rank(mut rows: Vec<Vec<u8>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] == 1 {
                for k in 0..cols {
                    rows[r][k] ^= rows[rank][k];
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Kernel basis of the matrix (rows x cols) over GF(2).
pub fn gf2_kernel(rows: &[Vec<u8>], cols: usize) -> Vec<Vec<u8>> {
    // reduce [Mᵀ | I]
    let r = rows.len();
    let mut aug: Vec<Vec<u8>> = (0..cols)
        .map(|c| {
            let mut row = vec![0u8; r + cols];
            for (idx, m_row) in rows.iter().enumerate() {
                row[idx] = m_row[c];
            }
            row[r + c] = 1;
            row
        })
        .collect();
    let mut next = 0;
    for c in 0..r {
        let Some(p) = (next..aug.len()).find(|&row| aug[row][c] == 1) else {
            continue;
        };
        aug.swap(next, p);
        for row in 0..aug.len() {
            if row != next && aug[row][c] == 1 {
                for k in 0..r + cols {
                    aug[row][k] ^= aug[next][k];
                }
            }
        }
        next += 1;
    }
    aug.into_iter()
        .filter(|row| row[..r].iter().all(|&x| x == 0))
        .map(|row| row[r..].to_vec())
        .collect()
}

// ---------------------------------------------------------------------------
// Koszul-complex Tor oracle (quotient side, multidegree 1_W, GF(2))
// ---------------------------------------------------------------------------
//
// For a squarefree ideal given by generator supports, the multidegree-1_W
// slice of S/I ⊗ Koszul has basis {F ⊆ W : W∖F independent}, graded by |F|,
// with differential dropping one element of F when the enlarged complement
// stays independent. Tor_i is H_i of this complex; the level-to-level map
// kills basis elements whose complement stops being independent.

fn independent(sigma: u64, supports: &[u64]) -> bool {
    // no generator support is contained in sigma
    supports.iter().all(|&s| s & !sigma != 0)
}

fn subsets_of(w: u64) -> Vec<u64> {
    // all subsets of the bitmask w
    let mut out = Vec::new();
    let mut s = w;
    loop {
        out.push(s);
        if s == 0 {
            break;
        }
        s = (s - 1) & w;
    }
    out.reverse();
    out
}

struct KoszulSlice {
    /// bases[i] = bitmasks F with |F| = i and W∖F independent, sorted
    bases: Vec<Vec<u64>>,
    w: u64,
}

impl KoszulSlice {
    fn new(w: u64, supports: &[u64]) -> Self {
        let card = w.count_ones() as usize;
        let mut bases: Vec<Vec<u64>> = vec![Vec::new(); card + 1];
        for f in subsets_of(w) {
            let sigma = w & !f;
            if independent(sigma, supports) {
                bases[f.count_ones() as usize].push(f);
            }
        }
        for level in &mut bases {
            level.sort_unstable();
        }
        KoszulSlice { bases, w }
    }

    fn basis(&self, i: i64) -> &[u64] {
        if i < 0 || i as usize >= self.bases.len() {
            &[]
        } else {
            &self.bases[i as usize]
        }
    }

    /// Differential from position i to i-1 as GF(2) rows (target x source).
    fn differential(&self, i: i64, supports: &[u64]) -> Vec<Vec<u8>> {
        let source = self.basis(i);
        let target = self.basis(i - 1);
        let mut rows = vec![vec![0u8; source.len()]; target.len()];
        for (col, &f) in source.iter().enumerate() {
            let mut bits = f;
            while bits != 0 {
                let j = bits & bits.wrapping_neg();
                bits &= bits - 1;
                let f_minus = f & !j;
                let sigma_plus = (self.w & !f) | j;
                if independent(sigma_plus, supports) {
                    if let Ok(row) = target.binary_search(&f_minus) {
                        rows[row][col] ^= 1;
                    }
                }
            }
        }
        rows
    }
}

/// `dim_k Tor_i(S/I, k)_{1_W}` over GF(2), through the Koszul slice.
pub fn koszul_quotient_betti(supports: &[u64], i: i64, w: u64) -> u64 {
    let slice = KoszulSlice::new(w, supports);
    let faces = slice.basis(i).len();
    if faces == 0 {
        return 0;
    }
    let rank_down = gf2_rank(slice.differential(i, supports));
    let rank_up = gf2_rank(slice.differential(i + 1, supports));
    (faces - rank_down - rank_up) as u64
}

/// Rank of `Tor_i(S/I_a, k)_{1_W} → Tor_i(S/I_b, k)_{1_W}` over GF(2) for
/// nested squarefree ideals `I_a ⊆ I_b` given by generator supports.
pub fn koszul_persistent_rank(supports_a: &[u64], supports_b: &[u64], i: i64, w: u64) -> u64 {
    let slice_a = KoszulSlice::new(w, supports_a);
    let slice_b = KoszulSlice::new(w, supports_b);
    let basis_a = slice_a.basis(i);
    let basis_b = slice_b.basis(i);
    if basis_a.is_empty() {
        return 0;
    }

    let d_a = slice_a.differential(i, supports_a);
    let kernel = gf2_kernel(&d_a, basis_a.len());
    let d_b_up = slice_b.differential(i + 1, supports_b);
    let boundary_rank = gf2_rank(d_b_up.clone());

    // image of the kernel under the projection onto surviving basis elements,
    // stacked with the boundaries of the target complex
    let mut stacked: Vec<Vec<u8>> = Vec::new();
    for vec in &kernel {
        let mut row = vec![0u8; basis_b.len()];
        for (idx, &f) in basis_a.iter().enumerate() {
            if vec[idx] == 1 {
                if let Ok(pos) = basis_b.binary_search(&f) {
                    row[pos] ^= 1;
                }
            }
        }
        stacked.push(row);
    }
    // columns of d_b_up live in basis_b coordinates
    let cols_b = slice_b.basis(i + 1).len();
    for col in 0..cols_b {
        let mut row = vec![0u8; basis_b.len()];
        for (target_idx, d_row) in d_b_up.iter().enumerate() {
            row[target_idx] = d_row[col];
        }
        stacked.push(row);
    }
    (gf2_rank(stacked) - boundary_rank) as u64
}

pub fn supports_of(ideal: &MonomialIdeal) -> Vec<u64> {
    ideal.supports().iter().map(|s| s.bits()).collect()
}

pub fn edge_masks(h: &Hypergraph) -> Vec<u64> {
    h.edges().iter().map(|e| e.bits()).collect()
}

// ---------------------------------------------------------------------------
// Exhaustive oracles
// ---------------------------------------------------------------------------

/// Minimal transversals by scanning all 2^n subsets.
pub fn exhaustive_minimal_covers(n: usize, edges: &[u64]) -> Vec<u64> {
    let covers: Vec<u64> = (0u64..(1 << n))
        .filter(|c| edges.iter().all(|&e| e & c != 0))
        .collect();
    let mut minimal: Vec<u64> = covers
        .iter()
        .copied()
        .filter(|&c| {
            !covers
                .iter()
                .any(|&d| d != c && d & !c == 0)
        })
        .collect();
    minimal.sort_unstable();
    minimal
}

/// Connected components by BFS over an adjacency list.
pub fn bfs_components(n: usize, pairs: &[(usize, usize)]) -> usize {
    let mut adjacency = vec![Vec::new(); n + 1];
    for &(a, b) in pairs {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    let mut seen = vec![false; n + 1];
    let mut components = 0;
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut queue = vec![start];
        seen[start] = true;
        while let Some(v) = queue.pop() {
            for &u in &adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push(u);
                }
            }
        }
    }
    components
}

/// Checks `m ∈ J ∩ K ⟺ m ∈ L` for every monomial of total degree ≤ `max_degree`.
pub fn intersection_matches_exhaustively(
    left: &MonomialIdeal,
    right: &MonomialIdeal,
    claimed: &MonomialIdeal,
    max_degree: u32,
) -> bool {
    let n = left.n();
    let mut exponents = vec![0u32; n];
    fn walk(
        exponents: &mut Vec<u32>,
        idx: usize,
        remaining: u32,
        left: &MonomialIdeal,
        right: &MonomialIdeal,
        claimed: &MonomialIdeal,
    ) -> bool {
        if idx == exponents.len() {
            let in_both =
                left.contains_monomial(exponents) && right.contains_monomial(exponents);
            return in_both == claimed.contains_monomial(exponents);
        }
        for e in 0..=remaining {
            exponents[idx] = e;
            if !walk(exponents, idx + 1, remaining - e, left, right, claimed) {
                return false;
            }
        }
        exponents[idx] = 0;
        true
    }
    walk(&mut exponents, 0, max_degree, left, right, claimed)
}

/// All admissible vertex-split pivots of a graph.
pub fn admissible_pivots(g: &Hypergraph) -> Vec<usize> {
    (1..=g.n())
        .filter(|&x| {
            !g.neighbors(x).is_empty()
                && g.edges().iter().any(|e| !e.contains(x))
        })
        .collect()
}

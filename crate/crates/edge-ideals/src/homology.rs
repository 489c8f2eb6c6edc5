//! Reduced simplicial homology over a field and ranks of maps induced by
//! inclusions — the engine behind the Hochster and persistent Hochster
//! computations.
//!
//! Conventions (load-bearing for the Betti layer):
//!
//! * The chain complex is augmented: `C_{-1}` is spanned by the empty face,
//!   and the boundary of a vertex is the empty face with coefficient `+1`.
//! * `H̃_{-1}({∅}) = k`; the void complex has zero homology in all degrees.
//! * Signs follow the position of the dropped vertex in the increasing
//!   vertex ordering of the face.
//!
//! For an inclusion `A ⊆ B`, the rank of `H̃_q(A) → H̃_q(B)` equals
//! `dim(Z_q(A) + B_q(B)) - dim B_q(B)`: the image of a cycle basis of `A`
//! together with the boundaries of `B`, modulo those boundaries. Over a
//! field the same number is the rank of the cohomology restriction map in
//! the opposite direction, which is what the rank-duality cross-checks
//! exercise.

use crate::bitset::VertexSet;
use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{mapped_kernel_plus_image_rank, rank, IntMatrix};

/// Faces of a complex (restricted to some `W`), grouped by cardinality and
/// sorted lexicographically within each group.
pub(crate) struct FaceLevels {
    levels: Vec<Vec<VertexSet>>,
}

impl FaceLevels {
    pub fn from_complex_within(complex: &SimplicialComplex, w: VertexSet) -> FaceLevels {
        let faces = complex.faces_within(w);
        let mut levels: Vec<Vec<VertexSet>> = Vec::new();
        for face in faces {
            let c = face.card();
            if levels.len() <= c {
                levels.resize(c + 1, Vec::new());
            }
            levels[c].push(face);
        }
        for level in &mut levels {
            level.sort_by(|a, b| a.lex_cmp(*b));
        }
        FaceLevels { levels }
    }

    /// Number of faces of cardinality `c` (i.e. dimension `c - 1`).
    pub fn count(&self, c: i64) -> usize {
        if c < 0 || c as usize >= self.levels.len() {
            0
        } else {
            self.levels[c as usize].len()
        }
    }

    fn level(&self, c: i64) -> &[VertexSet] {
        if c < 0 || c as usize >= self.levels.len() {
            &[]
        } else {
            &self.levels[c as usize]
        }
    }

    fn position(&self, c: i64, face: VertexSet) -> Option<usize> {
        self.level(c)
            .binary_search_by(|probe| probe.lex_cmp(face))
            .ok()
    }

    /// The boundary matrix from cardinality-`c` faces to cardinality-`c-1`
    /// faces. For `c = 0` this is the (empty) map out of `C_{-1}`.
    pub fn boundary(&self, c: i64) -> IntMatrix {
        let cols = self.count(c);
        let rows = self.count(c - 1);
        let mut m = IntMatrix::zeros(rows, cols);
        if c <= 0 {
            return m;
        }
        for (col, &face) in self.level(c).iter().enumerate() {
            for (position, v) in face.iter().enumerate() {
                let sub = face.remove(v);
                let row = self
                    .position(c - 1, sub)
                    .expect("downward closure: subface must be present");
                let sign = if position % 2 == 0 { 1 } else { -1 };
                m.set(row, col, sign);
            }
        }
        m
    }
}

/// Dimensions of the reduced homology `H̃_q` for `q = -1, 0, ..., q_max`.
///
/// Index `0` of the result holds `q = -1`.
pub fn reduced_homology_dims(
    complex: &SimplicialComplex,
    field: Field,
    q_max: i64,
) -> Vec<u64> {
    let levels = FaceLevels::from_complex_within(complex, VertexSet::full(complex.n()));
    homology_dims(&levels, field, q_max)
}

pub(crate) fn homology_dims(levels: &FaceLevels, field: Field, q_max: i64) -> Vec<u64> {
    let mut dims = Vec::with_capacity((q_max + 2).max(0) as usize);
    let mut rank_cache: Vec<Option<usize>> = Vec::new();
    let rank_at = |c: i64, cache: &mut Vec<Option<usize>>| -> usize {
        if c < 0 || levels.count(c) == 0 {
            return 0;
        }
        let idx = c as usize;
        if idx >= cache.len() {
            cache.resize(idx + 1, None);
        }
        *cache[idx].get_or_insert_with(|| rank(&levels.boundary(c), field))
    };
    for q in -1..=q_max {
        let c = q + 1;
        let faces = levels.count(c) as i64;
        if faces == 0 {
            dims.push(0);
            continue;
        }
        let rank_down = rank_at(c, &mut rank_cache) as i64;
        let rank_up = rank_at(c + 1, &mut rank_cache) as i64;
        dims.push((faces - rank_down - rank_up).max(0) as u64);
    }
    dims
}

fn ensure_subcomplex(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::precondition(format!(
            "complexes live on different vertex sets ({} vs {})",
            a.n(),
            b.n()
        )));
    }
    for facet in a.facets() {
        if !b.contains(*facet) {
            return Err(Error::precondition(format!(
                "inclusion violated: facet {facet} is not a face of the larger complex"
            )));
        }
    }
    Ok(())
}

/// Rank of `H̃_q(A) → H̃_q(B)` induced by an inclusion `A ⊆ B`.
pub fn induced_map_rank(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    q: i64,
    field: Field,
) -> Result<u64> {
    ensure_subcomplex(a, b)?;
    let small = FaceLevels::from_complex_within(a, VertexSet::full(a.n()));
    let large = FaceLevels::from_complex_within(b, VertexSet::full(b.n()));
    Ok(induced_rank_at(&small, &large, q, field))
}

/// Rank of the map at a single degree `q`, on prepared face levels.
pub(crate) fn induced_rank_at(
    small: &FaceLevels,
    large: &FaceLevels,
    q: i64,
    field: Field,
) -> u64 {
    let c = q + 1;
    if small.count(c) == 0 {
        return 0;
    }
    let bd_small = small.boundary(c);
    let bd_large_up = large.boundary(c + 1);
    let ambient = large.count(c);
    let coord_map: Vec<Option<usize>> = small
        .level(c)
        .iter()
        .map(|&face| {
            Some(
                large
                    .position(c, face)
                    .expect("inclusion: every face of the subcomplex lies in the supercomplex"),
            )
        })
        .collect();
    let total = mapped_kernel_plus_image_rank(&bd_small, &coord_map, ambient, &bd_large_up, field);
    let boundaries = rank(&bd_large_up, field);
    (total - boundaries) as u64
}

/// Rank of the cohomology restriction `H̃^q(B) → H̃^q(A)` for `A ⊆ B`.
///
/// Over a field this equals [`induced_map_rank`] in the homology direction;
/// the two are computed from transposed matrices and cross-checked in the
/// test suite.
pub fn cohomology_restriction_rank(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    q: i64,
    field: Field,
) -> Result<u64> {
    ensure_subcomplex(a, b)?;
    let small = FaceLevels::from_complex_within(a, VertexSet::full(a.n()));
    let large = FaceLevels::from_complex_within(b, VertexSet::full(b.n()));
    let c = q + 1;
    if large.count(c) == 0 {
        return Ok(0);
    }
    // Z^q(B) = ker of the coboundary out of degree q, i.e. ker ∂_{q+1}ᵀ.
    let coboundary_large = large.boundary(c + 1).transpose();
    // B^q(A) = image of the coboundary into degree q, i.e. columns of ∂_qᵀ.
    let bd_small = small.boundary(c);
    let coboundary_in_small = bd_small.transpose();
    let ambient = small.count(c);
    let coord_map: Vec<Option<usize>> = large
        .level(c)
        .iter()
        .map(|&face| small.position(c, face))
        .collect();
    let total = mapped_kernel_plus_image_rank(
        &coboundary_large,
        &coord_map,
        ambient,
        &coboundary_in_small,
        field,
    );
    let coboundaries = rank(&bd_small, field);
    Ok((total - coboundaries) as u64)
}

/// Plain-text triplet dump `row col value` of the boundary matrix from
/// cardinality-`c` faces, for debugging behind a verbosity flag.
pub fn boundary_matrix_triplets(complex: &SimplicialComplex, c: i64) -> String {
    let levels = FaceLevels::from_complex_within(complex, VertexSet::full(complex.n()));
    let m = levels.boundary(c);
    let mut out = String::new();
    out.push_str(&format!(
        "# boundary from cardinality {c}: {} x {}\n",
        m.rows, m.cols
    ));
    for r in 0..m.rows {
        for col in 0..m.cols {
            let v = m.get(r, col);
            if v != 0 {
                out.push_str(&format!("{r} {col} {v}\n"));
            }
        }
    }
    out
}

//! Dense elimination backends for the three supported coefficient fields.
//!
//! All matrices entering this module have small integer entries (simplicial
//! incidence signs), so the public surface takes [`IntMatrix`] and each
//! backend converts internally. Matrices here are tiny — faces of induced
//! subcomplexes — hence dense elimination throughout.

mod exact;
mod gf2;
mod modp;

use crate::field::Field;

/// Row-major dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        self.data[r * self.cols + c] = value;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }
}

/// Rank of `m` over `field`.
pub(crate) fn rank(m: &IntMatrix, field: Field) -> usize {
    match field {
        Field::Prime(2) => gf2::rank(m),
        Field::Prime(p) => modp::rank(m, p),
        Field::Rational => exact::rank(m),
    }
}

/// Dimension of `f(ker M) + col(B)` inside the ambient space.
///
/// `coord_map[i]` sends coordinate `i` of `ker M` (length `ker_of.cols`) to
/// an ambient coordinate, or drops it; `im_of` has `ambient` rows and its
/// columns span the second summand. This is the one primitive the induced
/// homology/cohomology map ranks need beyond plain rank.
pub(crate) fn mapped_kernel_plus_image_rank(
    ker_of: &IntMatrix,
    coord_map: &[Option<usize>],
    ambient: usize,
    im_of: &IntMatrix,
    field: Field,
) -> usize {
    debug_assert_eq!(coord_map.len(), ker_of.cols);
    debug_assert_eq!(im_of.rows, ambient);
    match field {
        Field::Prime(2) => gf2::mapped_kernel_plus_image_rank(ker_of, coord_map, ambient, im_of),
        Field::Prime(p) => {
            modp::mapped_kernel_plus_image_rank(ker_of, coord_map, ambient, im_of, p)
        }
        Field::Rational => exact::mapped_kernel_plus_image_rank(ker_of, coord_map, ambient, im_of),
    }
}

//! Exact rank computations over the rationals.
//!
//! Fraction-free (Bareiss) elimination keeps every intermediate entry an
//! integer: each update is `(pivot * a[i][j] - a[i][col] * a[pivot][j]) /
//! previous_pivot`, and Sylvester's identity makes the division exact. The
//! kernel basis comes from reducing `[Mᵀ | I]`: rows whose `Mᵀ`-block
//! vanishes carry integer kernel vectors of `M` in the identity block.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntMatrix;

struct ExactMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl ExactMat {
    fn zeros(rows: usize, cols: usize) -> Self {
        ExactMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    #[inline]
    fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    #[inline]
    fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Bareiss row echelon form, pivots restricted to the first
    /// `pivot_cols` columns. Returns the rank of that block.
    fn echelon(&mut self, pivot_cols: usize) -> usize {
        let mut next_row = 0;
        let mut prev_pivot = BigInt::one();
        for col in 0..pivot_cols.min(self.cols) {
            let Some(pr) = (next_row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(next_row, pr);
            let pivot = self.get(next_row, col).clone();
            for r in next_row + 1..self.rows {
                let factor = self.get(r, col).clone();
                for c in 0..self.cols {
                    let val = &pivot * self.get(r, c) - &factor * self.get(next_row, c);
                    debug_assert!((&val % &prev_pivot).is_zero());
                    self.set(r, c, val / &prev_pivot);
                }
            }
            prev_pivot = pivot;
            next_row += 1;
            if next_row == self.rows {
                break;
            }
        }
        next_row
    }

    fn row_zero_in(&self, r: usize, cols: usize) -> bool {
        (0..cols).all(|c| self.get(r, c).is_zero())
    }
}

fn from_int(m: &IntMatrix) -> ExactMat {
    let mut out = ExactMat::zeros(m.rows, m.cols);
    for r in 0..m.rows {
        for c in 0..m.cols {
            out.set(r, c, BigInt::from(m.get(r, c)));
        }
    }
    out
}

pub(super) fn rank(m: &IntMatrix) -> usize {
    from_int(m).echelon(m.cols)
}

pub(super) fn mapped_kernel_plus_image_rank(
    ker_of: &IntMatrix,
    coord_map: &[Option<usize>],
    ambient: usize,
    im_of: &IntMatrix,
) -> usize {
    let (r, c) = (ker_of.rows, ker_of.cols);
    let mut aug = ExactMat::zeros(c, r + c);
    for row in 0..c {
        for col in 0..r {
            aug.set(row, col, BigInt::from(ker_of.get(col, row)));
        }
        aug.set(row, r + row, BigInt::one());
    }
    aug.echelon(r);

    let mut kernel_rows = Vec::new();
    for row in 0..c {
        if aug.row_zero_in(row, r) {
            kernel_rows.push(row);
        }
    }

    let mut stacked = ExactMat::zeros(kernel_rows.len() + im_of.cols, ambient.max(1));
    for (i, &row) in kernel_rows.iter().enumerate() {
        for src in 0..c {
            if let Some(dst) = coord_map[src] {
                stacked.set(i, dst, aug.get(row, r + src).clone());
            }
        }
    }
    for col in 0..im_of.cols {
        for row in 0..ambient {
            stacked.set(
                kernel_rows.len() + col,
                row,
                BigInt::from(im_of.get(row, col)),
            );
        }
    }
    stacked.echelon(ambient)
}

//! Bit-packed elimination over GF(2): rows are word vectors, a row operation
//! is one XOR sweep.

use super::IntMatrix;

struct BitMat {
    rows: usize,
    width: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMat {
    fn zeros(rows: usize, width: usize) -> Self {
        let words = width.div_ceil(64).max(1);
        BitMat {
            rows,
            width,
            words,
            data: vec![0; rows * words],
        }
    }

    #[inline]
    fn set(&mut self, r: usize, c: usize) {
        self.data[r * self.words + c / 64] |= 1u64 << (c % 64);
    }

    #[inline]
    fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 != 0
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.words {
            self.data.swap(a * self.words + w, b * self.words + w);
        }
    }

    fn xor_row(&mut self, target: usize, source: usize) {
        let (t, s) = (target * self.words, source * self.words);
        for w in 0..self.words {
            self.data[t + w] ^= self.data[s + w];
        }
    }

    /// Row echelon form with pivots restricted to the first `pivot_cols`
    /// columns. Returns the rank of that block.
    fn echelon(&mut self, pivot_cols: usize) -> usize {
        let mut next_row = 0;
        for col in 0..pivot_cols.min(self.width) {
            let Some(p) = (next_row..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(next_row, p);
            for r in 0..self.rows {
                if r != next_row && self.get(r, col) {
                    self.xor_row(r, next_row);
                }
            }
            next_row += 1;
            if next_row == self.rows {
                break;
            }
        }
        next_row
    }

    fn row_zero_in(&self, r: usize, cols: usize) -> bool {
        (0..cols).all(|c| !self.get(r, c))
    }
}

fn from_int(m: &IntMatrix) -> BitMat {
    let mut b = BitMat::zeros(m.rows, m.cols);
    for r in 0..m.rows {
        for c in 0..m.cols {
            if m.get(r, c).rem_euclid(2) == 1 {
                b.set(r, c);
            }
        }
    }
    b
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
    // Kernel basis via [Mᵀ | I]: rows whose Mᵀ-part vanishes after
    // elimination carry a kernel vector in the identity part.
    let mut aug = BitMat::zeros(c, r + c);
    for row in 0..c {
        for col in 0..r {
            if ker_of.get(col, row).rem_euclid(2) == 1 {
                aug.set(row, col);
            }
        }
        aug.set(row, r + row);
    }
    aug.echelon(r);

    let im_cols = im_of.cols;
    let mut kernel_rows = Vec::new();
    for row in 0..c {
        if aug.row_zero_in(row, r) {
            kernel_rows.push(row);
        }
    }

    let mut stacked = BitMat::zeros(kernel_rows.len() + im_cols, ambient.max(1));
    for (i, &row) in kernel_rows.iter().enumerate() {
        for src in 0..c {
            if aug.get(row, r + src) {
                if let Some(dst) = coord_map[src] {
                    stacked.set(i, dst);
                }
            }
        }
    }
    for col in 0..im_cols {
        for row in 0..ambient {
            if im_of.get(row, col).rem_euclid(2) == 1 {
                stacked.set(kernel_rows.len() + col, row);
            }
        }
    }
    stacked.echelon(ambient)
}

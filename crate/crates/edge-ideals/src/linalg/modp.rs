//! Plain dense elimination over GF(p) for odd primes (cross-check fields).

use super::IntMatrix;

#[inline]
fn reduce(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

#[inline]
fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        exp >>= 1;
    }
    acc
}

#[inline]
fn inv(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

struct ModMat {
    rows: usize,
    cols: usize,
    p: u64,
    data: Vec<u64>,
}

impl ModMat {
    fn zeros(rows: usize, cols: usize, p: u64) -> Self {
        ModMat {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    #[inline]
    fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    fn set(&mut self, r: usize, c: usize, v: u64) {
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

    /// Row echelon form, pivots restricted to the first `pivot_cols` columns.
    fn echelon(&mut self, pivot_cols: usize) -> usize {
        let p = self.p;
        let mut next_row = 0;
        for col in 0..pivot_cols.min(self.cols) {
            let Some(pr) = (next_row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            self.swap_rows(next_row, pr);
            let pivot_inv = inv(self.get(next_row, col), p);
            for r in 0..self.rows {
                if r == next_row || self.get(r, col) == 0 {
                    continue;
                }
                let factor = mul(self.get(r, col), pivot_inv, p);
                for c in 0..self.cols {
                    let sub = mul(factor, self.get(next_row, c), p);
                    let v = (self.get(r, c) + p - sub) % p;
                    self.set(r, c, v);
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
        (0..cols).all(|c| self.get(r, c) == 0)
    }
}

fn from_int(m: &IntMatrix, p: u64) -> ModMat {
    let mut out = ModMat::zeros(m.rows, m.cols, p);
    for r in 0..m.rows {
        for c in 0..m.cols {
            out.set(r, c, reduce(m.get(r, c), p));
        }
    }
    out
}

pub(super) fn rank(m: &IntMatrix, p: u64) -> usize {
    from_int(m, p).echelon(m.cols)
}

pub(super) fn mapped_kernel_plus_image_rank(
    ker_of: &IntMatrix,
    coord_map: &[Option<usize>],
    ambient: usize,
    im_of: &IntMatrix,
    p: u64,
) -> usize {
    let (r, c) = (ker_of.rows, ker_of.cols);
    let mut aug = ModMat::zeros(c, r + c, p);
    for row in 0..c {
        for col in 0..r {
            aug.set(row, col, reduce(ker_of.get(col, row), p));
        }
        aug.set(row, r + row, 1);
    }
    aug.echelon(r);

    let mut kernel_rows = Vec::new();
    for row in 0..c {
        if aug.row_zero_in(row, r) {
            kernel_rows.push(row);
        }
    }

    let mut stacked = ModMat::zeros(kernel_rows.len() + im_of.cols, ambient.max(1), p);
    for (i, &row) in kernel_rows.iter().enumerate() {
        for src in 0..c {
            if let Some(dst) = coord_map[src] {
                stacked.set(i, dst, aug.get(row, r + src));
            }
        }
    }
    for col in 0..im_of.cols {
        for row in 0..ambient {
            stacked.set(kernel_rows.len() + col, row, reduce(im_of.get(row, col), p));
        }
    }
    stacked.echelon(ambient)
}

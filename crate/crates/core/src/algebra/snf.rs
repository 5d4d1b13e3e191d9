//! Smith normal form over the integers, with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// `rows` must all have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, v) in r.iter().enumerate() {
                m.data[i * cols + j] = BigInt::from(*v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    fn at(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * rhs.get(k, j);
                }
                *out.at(i, j) = acc;
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(src, j) * q;
            *self.at(dst, j) -= v;
        }
    }

    /// col[dst] -= q * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, src) * q;
            *self.at(i, dst) -= v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            *self.at(i, j) = v;
        }
    }
}

/// `left * m * right = diag(factors, 0, ...)` with `left`, `right` unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Invariant factors `d_1 | d_2 | ...`, positive, one per pivot; zeros
    /// on the remaining diagonal are not listed.
    pub factors: Vec<BigInt>,
    pub rank: usize,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries `min(rows, cols)` long, zeros included.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.left.rows().min(self.right.rows());
        (0..n).map(|i| self.factors.get(i).cloned().unwrap_or_default()).collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let mut rank = 0;

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a.get(i, j).is_zero())
            .min_by_key(|&(i, j)| a.get(i, j).abs());
        let Some((pi, pj)) = pivot else { break };
        a.swap_rows(t, pi);
        left.swap_rows(t, pi);
        a.swap_cols(t, pj);
        right.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).div_floor(a.get(t, t));
                a.row_axpy(i, t, &q);
                left.row_axpy(i, t, &q);
                if !a.get(i, t).is_zero() {
                    a.swap_rows(t, i);
                    left.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j).div_floor(a.get(t, t));
                a.col_axpy(j, t, &q);
                right.col_axpy(j, t, &q);
                if !a.get(t, j).is_zero() {
                    a.swap_cols(t, j);
                    right.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // the pivot must divide the whole trailing block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a.get(i, j).is_multiple_of(a.get(t, t)));
            match bad {
                Some((i, _)) => {
                    // row[t] += row[i]
                    a.row_axpy(t, i, &-BigInt::one());
                    left.row_axpy(t, i, &-BigInt::one());
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
        rank += 1;
    }

    let factors = (0..rank).map(|i| a.get(i, i).clone()).collect();
    SmithForm { factors, rank, left, right }
}

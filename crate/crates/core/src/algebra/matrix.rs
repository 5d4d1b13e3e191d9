use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::dense::{self, Arith};
use super::field::{Field, FieldElement, Scalar};
use super::laurent::LaurentPoly;
use super::AlgebraError;

/// Dense matrix over a [`Field`], row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl FieldMatrix {
    pub fn new(field: &Field, rows: usize, cols: usize, entries: Vec<FieldElement>) -> Result<Self, AlgebraError> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::DimensionMismatch);
        }
        if entries.iter().any(|e| e.field() != field) {
            return Err(AlgebraError::FieldMismatch);
        }
        let data = entries.into_iter().map(|e| e.value).collect();
        Ok(FieldMatrix { field: field.clone(), rows, cols, data })
    }

    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&v| field.from_int(v))
            })
            .collect();
        Self::new(field, rows.len(), cols, entries).expect("shape checked")
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut data = vec![Arith::zero(field); n * n];
        for i in 0..n {
            data[i * n + i] = Arith::one(field);
        }
        FieldMatrix { field: field.clone(), rows: n, cols: n, data }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.field.wrap(self.data[i * self.cols + j].clone())
    }

    pub(crate) fn raw(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.data.iter().map(|s| self.field.wrap(s.clone()))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn trace(&self) -> FieldElement {
        let f = &self.field;
        let t = (0..self.rows.min(self.cols)).fold(Arith::zero(f), |acc, i| f.add(&acc, self.raw(i, i)));
        f.wrap(t)
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        let data = self.data.iter().map(|v| self.field.mul(v, &c.value)).collect();
        FieldMatrix { data, ..self.clone() }
    }

    pub fn try_mul(&self, rhs: &FieldMatrix) -> Result<FieldMatrix, AlgebraError> {
        if self.field != rhs.field {
            return Err(AlgebraError::FieldMismatch);
        }
        if self.cols != rhs.rows {
            return Err(AlgebraError::DimensionMismatch);
        }
        let f = &self.field;
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Arith::zero(f);
                for k in 0..self.cols {
                    acc = f.add(&acc, &f.mul(self.raw(i, k), rhs.raw(k, j)));
                }
                data.push(acc);
            }
        }
        Ok(FieldMatrix { field: f.clone(), rows: self.rows, cols: rhs.cols, data })
    }

    /// Row-reduces a copy; returns the determinant. Errors if not square.
    pub fn det(&self) -> Result<FieldElement, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let f = &self.field;
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = Arith::one(f);
        for k in 0..n {
            let Some(piv) = (k..n).find(|&i| !f.is_zero(&m[i * n + k])) else {
                return Ok(self.field.zero());
            };
            if piv != k {
                for j in 0..n {
                    m.swap(k * n + j, piv * n + j);
                }
                det = f.neg(&det);
            }
            let p = m[k * n + k].clone();
            det = f.mul(&det, &p);
            let p_inv = f.inv(&p).expect("nonzero pivot");
            for i in k + 1..n {
                let factor = f.mul(&m[i * n + k], &p_inv);
                if f.is_zero(&factor) {
                    continue;
                }
                for j in k..n {
                    let v = f.mul(&factor, &m[k * n + j]);
                    m[i * n + j] = f.sub(&m[i * n + j], &v);
                }
            }
        }
        Ok(f.wrap(det))
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<FieldMatrix, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let f = &self.field;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut inv = FieldMatrix::identity(f, n).data;
        for k in 0..n {
            let piv = (k..n).find(|&i| !f.is_zero(&a[i * n + k])).ok_or(AlgebraError::DivisionByZero)?;
            for j in 0..n {
                a.swap(k * n + j, piv * n + j);
                inv.swap(k * n + j, piv * n + j);
            }
            let p_inv = f.inv(&a[k * n + k]).expect("nonzero pivot");
            for j in 0..n {
                a[k * n + j] = f.mul(&a[k * n + j], &p_inv);
                inv[k * n + j] = f.mul(&inv[k * n + j], &p_inv);
            }
            for i in (0..n).filter(|&i| i != k) {
                let factor = a[i * n + k].clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in 0..n {
                    let va = f.mul(&factor, &a[k * n + j]);
                    a[i * n + j] = f.sub(&a[i * n + j], &va);
                    let vi = f.mul(&factor, &inv[k * n + j]);
                    inv[i * n + j] = f.sub(&inv[i * n + j], &vi);
                }
            }
        }
        Ok(FieldMatrix { field: f.clone(), rows: n, cols: n, data: inv })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == FieldMatrix::identity(&self.field, self.rows)
    }

    /// `t^k * self` as a polynomial matrix.
    pub fn to_poly(&self, k: i64) -> PolyMatrix {
        let entries = self.entries().map(|c| LaurentPoly::monomial(&c, k)).collect();
        PolyMatrix { field: self.field.clone(), rows: self.rows, cols: self.cols, entries }
    }
}

impl Mul<&FieldMatrix> for &FieldMatrix {
    type Output = FieldMatrix;
    fn mul(self, rhs: &FieldMatrix) -> FieldMatrix {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub<&FieldMatrix> for &FieldMatrix {
    type Output = FieldMatrix;
    fn sub(self, rhs: &FieldMatrix) -> FieldMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch");
        let f = &self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f.sub(a, b)).collect();
        FieldMatrix { data, ..self.clone() }
    }
}

impl fmt::Display for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Dense matrix of Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn new(field: &Field, rows: usize, cols: usize, entries: Vec<LaurentPoly>) -> Result<Self, AlgebraError> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::DimensionMismatch);
        }
        if entries.iter().any(|e| e.field() != field) {
            return Err(AlgebraError::FieldMismatch);
        }
        Ok(PolyMatrix { field: field.clone(), rows, cols, entries })
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        PolyMatrix { field: field.clone(), rows, cols, entries: vec![LaurentPoly::zero(field); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = LaurentPoly::one(field);
        }
        m
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let entries = (0..rows * cols).map(|idx| f(idx / cols, idx % cols)).collect();
        PolyMatrix::new(field, rows, cols, entries).expect("shape by construction")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        assert!(v.field() == &self.field, "entry from a different field");
        self.entries[i * self.cols + j] = v;
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let entries = self.entries.iter().map(|e| e * c).collect();
        PolyMatrix { entries, ..self.clone() }
    }

    /// Assembles a `block_rows × block_cols` grid of `n × n` blocks given in
    /// row-major order.
    pub fn from_blocks(
        field: &Field,
        block_rows: usize,
        block_cols: usize,
        n: usize,
        blocks: &[PolyMatrix],
    ) -> Result<Self, AlgebraError> {
        if blocks.len() != block_rows * block_cols || blocks.iter().any(|b| b.rows != n || b.cols != n) {
            return Err(AlgebraError::DimensionMismatch);
        }
        Ok(Self::from_fn(field, block_rows * n, block_cols * n, |i, j| {
            blocks[(i / n) * block_cols + j / n].get(i % n, j % n).clone()
        }))
    }

    /// The `n × n` block at block position `(bi, bj)`.
    pub fn block(&self, bi: usize, bj: usize, n: usize) -> PolyMatrix {
        Self::from_fn(&self.field, n, n, |i, j| self.get(bi * n + i, bj * n + j).clone())
    }

    /// Drops the `j`-th block column of width `n`.
    pub fn remove_block_column(&self, j: usize, n: usize) -> PolyMatrix {
        let keep: Vec<usize> = (0..self.cols).filter(|c| c / n != j).collect();
        Self::from_fn(&self.field, self.rows, keep.len(), |r, c| self.get(r, keep[c]).clone())
    }

    pub fn try_mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix, AlgebraError> {
        if self.field != rhs.field {
            return Err(AlgebraError::FieldMismatch);
        }
        if self.cols != rhs.rows {
            return Err(AlgebraError::DimensionMismatch);
        }
        Ok(Self::from_fn(&self.field, self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(LaurentPoly::zero(&self.field), |acc, k| &acc + &(self.get(i, k) * rhs.get(k, j)))
        }))
    }

    /// Exact determinant. Each row's t-power content is factored out so the
    /// matrix becomes polynomial, then fraction-free (Bareiss) elimination
    /// runs with exact polynomial division, and the t-power is restored.
    pub fn det(&self) -> Result<LaurentPoly, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let f = &self.field;
        let mut shift = 0i64;
        let mut m: Vec<Vec<Vec<Scalar>>> = Vec::with_capacity(n);
        for i in 0..n {
            let row = &self.entries[i * n..(i + 1) * n];
            let Some(lo) = row.iter().filter_map(LaurentPoly::min_degree).min() else {
                return Ok(LaurentPoly::zero(f));
            };
            shift += lo;
            m.push(
                row.iter()
                    .map(|e| {
                        let (elo, mut coeffs) = e.to_dense();
                        if coeffs.is_empty() {
                            return coeffs;
                        }
                        let mut padded = vec![Arith::zero(f); (elo - lo) as usize];
                        padded.append(&mut coeffs);
                        padded
                    })
                    .collect(),
            );
        }
        let Some(det) = bareiss(f, m) else {
            return Ok(LaurentPoly::zero(f));
        };
        Ok(LaurentPoly::from_dense(f, shift, det))
    }
}

/// Fraction-free elimination over `F[t]`; `None` when singular.
fn bareiss(f: &Field, mut m: Vec<Vec<Vec<Scalar>>>) -> Option<Vec<Scalar>> {
    let n = m.len();
    if n == 0 {
        return Some(vec![Arith::one(f)]);
    }
    let mut negate = false;
    let mut prev: Vec<Scalar> = vec![Arith::one(f)];
    for k in 0..n {
        if m[k][k].is_empty() {
            let piv = (k + 1..n).find(|&i| !m[i][k].is_empty())?;
            m.swap(k, piv);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = dense::mul(f, &m[i][j], &m[k][k]);
                let rhs = dense::mul(f, &m[i][k], &m[k][j]);
                let num = dense::sub(f, &lhs, &rhs);
                m[i][j] = dense::exact_div(f, &num, &prev).expect("Bareiss division is exact");
            }
            m[i][k] = Vec::new();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    Some(if negate { det.iter().map(|c| f.neg(c)).collect() } else { det })
}

impl Add<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        PolyMatrix { entries, ..self.clone() }
    }
}

impl Sub<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        PolyMatrix { entries, ..self.clone() }
    }
}

impl Mul<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

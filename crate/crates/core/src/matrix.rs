//! Dense exact linear algebra over ℚ and GF(p): reduced row echelon form,
//! rank, kernels, inverses, determinants, and minors.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// A dense matrix with all entries in one field.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, field: FieldSpec) -> Self {
        Matrix { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, field: FieldSpec, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let s = f(i, j);
                assert_eq!(s.field(), field, "entry field mismatch");
                data.push(s);
            }
        }
        Matrix { rows, cols, field, data }
    }

    /// Integer-literal constructor, handy in tests.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        Matrix::from_fn(r, c, field, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "entry field mismatch");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn from_rows(field: FieldSpec, rows: &[Vec<Scalar>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        Matrix::from_fn(r, c, field, |i, j| rows[i][j].clone())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| -self.get(i, j))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| self.get(i, j) * s)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        Matrix::from_fn(self.rows, other.cols, self.field, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                acc += self.get(i, k) * other.get(k, j);
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * &v[k];
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Horizontal concatenation (A | B).
    pub fn hcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hcat row mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, self.field, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// 2x2 block matrix [[a, b], [c, d]].
    pub fn block2x2(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let top = a.hcat(b);
        let bot = c.hcat(d);
        Matrix::from_fn(top.rows + bot.rows, top.cols, a.field, |i, j| {
            if i < top.rows {
                top.get(i, j).clone()
            } else {
                bot.get(i - top.rows, j).clone()
            }
        })
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Matrix {
        Matrix::from_fn(row_idx.len(), col_idx.len(), self.field, |i, j| {
            self.get(row_idx[i], col_idx[j]).clone()
        })
    }

    /// Reduced row echelon form together with the rank and pivot columns.
    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let pivot_row = (r..m.rows).find(|&i| !m.get(i, col).is_zero());
            let Some(p) = pivot_row else { continue };
            m.swap_rows(r, p);
            let inv = m.get(r, col).inv().expect("nonzero pivot");
            for j in col..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, col).is_zero() {
                    let factor = m.get(i, col).clone();
                    for j in col..m.cols {
                        let v = m.get(i, j) - &(m.get(r, j) * &factor);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, r, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// A basis of the right null space {v : Mv = 0}.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, _, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Determinant by Gaussian elimination (square matrices only).
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let mut det = self.field.one();
        for col in 0..m.cols {
            let pivot_row = (col..m.rows).find(|&i| !m.get(i, col).is_zero());
            let Some(p) = pivot_row else { return self.field.zero() };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= pivot.clone();
            let inv = pivot.inv().expect("nonzero pivot");
            for i in col + 1..m.rows {
                if m.get(i, col).is_zero() {
                    continue;
                }
                let factor = m.get(i, col) * &inv;
                for j in col..m.cols {
                    let v = m.get(i, j) - &(m.get(col, j) * &factor);
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// The minor indexed by a set of rows and an equally large set of columns;
    /// the empty minor is 1 by convention.
    pub fn minor(&self, row_set: &[usize], col_set: &[usize]) -> Scalar {
        assert_eq!(row_set.len(), col_set.len(), "minor needs |rows| = |cols|");
        if row_set.is_empty() {
            return self.field.one();
        }
        self.submatrix(row_set, col_set).det()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let aug = self.hcat(&Matrix::identity(self.rows, self.field));
        let (r, _, pivots) = aug.rref();
        if pivots.iter().take_while(|&&c| c < self.cols).count() < self.rows {
            return Err(Error::Singular);
        }
        let idx: Vec<usize> = (self.cols..2 * self.cols).collect();
        let all: Vec<usize> = (0..self.rows).collect();
        Ok(r.submatrix(&all, &idx))
    }

    /// Solves Mx = b; returns None when inconsistent. When the system is
    /// underdetermined an arbitrary solution (free variables = 0) is returned.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len(), "rhs length mismatch");
        let rhs = Matrix::from_fn(self.rows, 1, self.field, |i, _| b[i].clone());
        let aug = self.hcat(&rhs);
        let (r, _, pivots) = aug.rref();
        // Inconsistent iff some pivot lands in the rhs column.
        if pivots.iter().any(|&c| c == self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Kronecker product; block (i1, j1) is a[i1, j1] * b.
    pub fn kron(&self, b: &Matrix) -> Matrix {
        Matrix::from_fn(self.rows * b.rows, self.cols * b.cols, self.field, |i, j| {
            self.get(i / b.rows, j / b.cols) * b.get(i % b.rows, j % b.cols)
        })
    }

    /// Row spaces compared via canonical RREF.
    pub fn row_space_eq(&self, other: &Matrix) -> bool {
        if self.cols != other.cols {
            return false;
        }
        row_space_canonical(self) == row_space_canonical(other)
    }
}

/// Canonical representative of a row space: the nonzero rows of the RREF.
pub fn row_space_canonical(m: &Matrix) -> Matrix {
    let (r, rank, _) = m.rref();
    let rows: Vec<usize> = (0..rank).collect();
    let cols: Vec<usize> = (0..m.cols()).collect();
    r.submatrix(&rows, &cols)
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len(), "dot length mismatch");
    let field = a.first().map(Scalar::field).unwrap_or(FieldSpec::Rational);
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

//! Dense row-major matrices over a [`Scalar`], and the validated symmetric
//! wrapper used for component matrices.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::{Scalar, Tolerance};

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_diagonal(diag: &[T]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { expected: c, found: row.len() });
            }
            for v in &row {
                v.check_finite()?;
            }
            data.extend(row);
        }
        Ok(Self { rows: r, cols: c, data })
    }

    /// Convenience constructor from integer rows; panics on ragged input.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let c = rows.first().map_or(0, |r| r.len());
        Self::from_fn(rows.len(), c, |i, j| T::from_i64(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn to_f64(&self) -> Matrix<f64> {
        self.map(T::to_f64)
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|v| v.clone() * c.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    /// Matrix product; zero entries of the left factor are skipped, which
    /// matters for the sparse integer matrices that dominate exact mode.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.clone() * b.clone();
                    let slot = &mut out[(i, j)];
                    *slot = slot.clone() + prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.to_f64().abs()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Entry of largest magnitude, kept in the matrix's own arithmetic.
    pub fn max_abs_entry(&self) -> T {
        self.data.iter().map(Scalar::abs).fold(T::zero(), |best, v| if v > best { v } else { best })
    }

    /// Block-diagonal stacking `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        out
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            self[(i / other.rows, j / other.cols)].clone() * other[(i % other.rows, j % other.cols)].clone()
        })
    }

    /// `|| self^t self - I ||_max <= tol`, exact in exact mode.
    pub fn is_orthogonal(&self, tol: Tolerance) -> bool {
        if !self.is_square() {
            return false;
        }
        let residual = self.transpose().mul(self).sub(&Self::identity(self.rows));
        let bound = tol.bound(1.0);
        residual.data.iter().all(|v| v.is_negligible(bound))
    }

    /// Exact-when-possible rank by Gaussian elimination with partial pivoting.
    ///
    /// In float mode a pivot is zero when it falls below `tol` relative to the
    /// largest entry.
    pub fn rank(&self, tol: Tolerance) -> usize {
        let mut a = self.clone();
        let scale = self.max_abs();
        let bound = tol.bound(scale);
        let mut rank = 0;
        for col in 0..a.cols {
            if rank == a.rows {
                break;
            }
            let pivot = if T::EXACT {
                (rank..a.rows).find(|&r| !a[(r, col)].is_zero())
            } else {
                (rank..a.rows)
                    .max_by(|&x, &y| a[(x, col)].to_f64().abs().total_cmp(&a[(y, col)].to_f64().abs()))
                    .filter(|&p| !a[(p, col)].is_negligible(bound))
            };
            let Some(pivot) = pivot else { continue };
            a.swap_rows(rank, pivot);
            let p = a[(rank, col)].clone();
            for r in rank + 1..a.rows {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone() / p.clone();
                for c in col..a.cols {
                    let v = a[(r, c)].clone() - factor.clone() * a[(rank, c)].clone();
                    a[(r, c)] = v;
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Characteristic polynomial `det(xI - A)` by the Faddeev–LeVerrier
    /// recursion; coefficients are returned from `x^0` up to the monic `x^m`.
    pub fn char_poly(&self) -> Vec<T> {
        assert!(self.is_square());
        let m = self.rows;
        let mut coeffs = vec![T::zero(); m + 1];
        coeffs[m] = T::one();
        let id = Self::identity(m);
        let mut mk = Self::zeros(m, m);
        for k in 1..=m {
            mk = self.mul(&mk).add(&id.scale(&coeffs[m - k + 1]));
            let c = -(self.mul(&mk).trace()) / T::from_i64(k as i64);
            coeffs[m - k] = c;
        }
        coeffs
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.data[i * self.cols + j])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn norm_sq<T: Scalar>(v: &[T]) -> T {
    dot(v, v)
}

/// A square symmetric matrix; the carrier of one component `A_i`.
///
/// Exact input must be symmetric entry-for-entry. Float input may deviate by
/// at most `1e-9 * max|entry|` and is then replaced by `(A + A^t)/2`.
#[derive(Clone, PartialEq)]
pub struct SymMatrix<T>(Matrix<T>);

impl<T: Scalar> SymMatrix<T> {
    pub fn new(m: Matrix<T>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        for v in m.as_slice() {
            v.check_finite()?;
        }
        let bound = Tolerance::default().rel * m.max_abs();
        let n = m.rows();
        for i in 0..n {
            for j in i + 1..n {
                let diff = m[(i, j)].clone() - m[(j, i)].clone();
                let ok = if T::EXACT { diff.is_zero() } else { diff.to_f64().abs() <= bound };
                if !ok {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        if T::EXACT {
            return Ok(Self(m));
        }
        let half = T::one() / T::from_i64(2);
        let sym = Matrix::from_fn(n, n, |i, j| (m[(i, j)].clone() + m[(j, i)].clone()) * half.clone());
        Ok(Self(sym))
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::new(Matrix::from_i64_rows(rows))
    }

    pub fn zeros(dim: usize) -> Self {
        Self(Matrix::zeros(dim, dim))
    }

    pub fn identity(dim: usize) -> Self {
        Self(Matrix::identity(dim))
    }

    pub fn diagonal(diag: &[T]) -> Self {
        Self(Matrix::from_diagonal(diag))
    }

    /// `[[0, B], [B^t, 0]]` for a square or rectangular `B`.
    pub fn off_diagonal(block: &Matrix<T>) -> Self {
        let (p, q) = (block.rows(), block.cols());
        let mut m = Matrix::zeros(p + q, p + q);
        m.set_block(0, p, block);
        m.set_block(p, 0, &block.transpose());
        Self(m)
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.0
    }

    pub fn to_f64(&self) -> SymMatrix<f64> {
        SymMatrix(self.0.to_f64())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self(self.0.scale(c))
    }

    pub fn trace(&self) -> T {
        self.0.trace()
    }

    /// `X^t A X`.
    pub fn quadratic_form(&self, x: &[T]) -> T {
        dot(x, &self.0.mul_vec(x))
    }

    /// `Q^t A Q`, symmetric again whenever `Q` is square.
    pub fn congruence(&self, q: &Matrix<T>) -> Self {
        Self(q.transpose().mul(&self.0).mul(q))
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self(self.0.direct_sum(&other.0))
    }
}

impl<T> Index<(usize, usize)> for SymMatrix<T> {
    type Output = T;
    fn index(&self, idx: (usize, usize)) -> &T {
        &self.0[idx]
    }
}

impl<T: fmt::Display> fmt::Debug for SymMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

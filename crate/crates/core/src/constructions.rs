//! Generators of quadratic harmonic morphisms: the Hopf construction on the
//! real, complex, quaternionic and octonionic multiplications, and complete
//! lifts.

use crate::error::{Error, Result};
use crate::map::QuadraticMap;
use crate::matrix::{Matrix, SymMatrix};
use crate::scalar::Scalar;
use crate::verify::require_morphism;

/// Bilinear multiplication `R^n × R^n → R^n` given by an integer structure
/// tensor: `f(x, y)_k = Σ c[i][j][k] x_i y_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalMultiplication {
    n: usize,
    tensor: Vec<i64>,
}

/// Cayley–Dickson product on coordinate vectors of length `2^k`:
/// `(a, b)(c, d) = (ac − d̄b, da + bc̄)`, starting from the reals.
fn cayley_dickson(x: &[i64], y: &[i64]) -> Vec<i64> {
    let n = x.len();
    if n == 1 {
        return vec![x[0] * y[0]];
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let ac = cayley_dickson(a, c);
    let db = cayley_dickson(&conj(d), b);
    let da = cayley_dickson(d, a);
    let bc = cayley_dickson(b, &conj(c));
    ac.iter().zip(&db).map(|(p, q)| p - q).chain(da.iter().zip(&bc).map(|(p, q)| p + q)).collect()
}

fn conj(x: &[i64]) -> Vec<i64> {
    x.iter().enumerate().map(|(i, &v)| if i == 0 { v } else { -v }).collect()
}

fn basis(n: usize, i: usize) -> Vec<i64> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

impl OrthogonalMultiplication {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> i64 {
        self.tensor[(i * self.n + j) * self.n + k]
    }

    pub fn apply<T: Scalar>(&self, x: &[T], y: &[T]) -> Vec<T> {
        let n = self.n;
        let mut out = vec![T::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.coefficient(i, j, k);
                    if c != 0 {
                        *slot = slot.clone() + T::from_i64(c) * xi.clone() * yj.clone();
                    }
                }
            }
        }
        out
    }

    /// `C_k[i][j] = c[i][j][k]`, so that `f(x, y)_k = xᵗC_k y`.
    pub fn slice<T: Scalar>(&self, k: usize) -> Matrix<T> {
        Matrix::from_fn(self.n, self.n, |i, j| T::from_i64(self.coefficient(i, j, k)))
    }

    /// Matrix of left multiplication `y ↦ f(e_a, y)` by a basis element.
    pub fn left_mul<T: Scalar>(&self, a: usize) -> Matrix<T> {
        Matrix::from_fn(self.n, self.n, |k, j| T::from_i64(self.coefficient(a, j, k)))
    }
}

/// Standard multiplication of the reals, complex numbers, quaternions or
/// octonions (`n = 1, 2, 4, 8`), all built by Cayley–Dickson doubling.
pub fn orth_mult(n: usize) -> Result<OrthogonalMultiplication> {
    if !matches!(n, 1 | 2 | 4 | 8) {
        return Err(Error::UnsupportedDimension(n));
    }
    let mut tensor = vec![0; n * n * n];
    for i in 0..n {
        for j in 0..n {
            let prod = cayley_dickson(&basis(n, i), &basis(n, j));
            for (k, v) in prod.into_iter().enumerate() {
                tensor[(i * n + j) * n + k] = v;
            }
        }
    }
    Ok(OrthogonalMultiplication { n, tensor })
}

/// Hopf construction `F(X, Y) = (‖X‖² − ‖Y‖², 2f(X, Y))`, a map
/// `R^{2n} → R^{n+1}`.
pub fn hopf_construction<T: Scalar>(n: usize) -> Result<QuadraticMap<T>> {
    let f = orth_mult(n)?;
    let mut first = vec![T::one(); n];
    first.extend(vec![-T::one(); n]);
    let mut comps = vec![SymMatrix::diagonal(&first)];
    comps.extend((0..n).map(|k| SymMatrix::off_diagonal(&f.slice(k))));
    QuadraticMap::new(comps)
}

/// Complete lift `φ̄(X, Y) = J(φ(X))·Y = (2XᵗA_iY)_i`, a map `R^{2m} → R^n`
/// with components `[[0, A_i], [A_i, 0]]`.
pub fn complete_lift<T: Scalar>(map: &QuadraticMap<T>) -> Result<QuadraticMap<T>> {
    require_morphism(map)?;
    let comps = map.components().iter().map(|a| SymMatrix::off_diagonal(a.matrix())).collect();
    QuadraticMap::new(comps)
}

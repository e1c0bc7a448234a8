//! Quadratic maps `φ(X) = (XᵗA₁X, …, XᵗAₙX)` and their first derivatives.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, SymMatrix};
use crate::scalar::{Rational, Scalar};

/// A quadratic map `R^m -> R^n` given by its `n` symmetric component matrices.
///
/// The whole map lives in one arithmetic: `QuadraticMap<Rational>` is exact,
/// `QuadraticMap<f64>` is floating point.
#[derive(Clone, PartialEq)]
pub struct QuadraticMap<T> {
    m: usize,
    components: Vec<SymMatrix<T>>,
}

impl<T: std::fmt::Display> std::fmt::Debug for QuadraticMap<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("QuadraticMap").field("m", &self.m).field("components", &self.components).finish()
    }
}

pub type ExactMap = QuadraticMap<Rational>;
pub type FloatMap = QuadraticMap<f64>;

impl<T: Scalar> QuadraticMap<T> {
    pub fn new(components: Vec<SymMatrix<T>>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::EmptyMap);
        };
        let m = first.dim();
        if m == 0 {
            return Err(Error::EmptyMap);
        }
        if let Some(bad) = components.iter().find(|c| c.dim() != m) {
            return Err(Error::DimensionMismatch { expected: m, found: bad.dim() });
        }
        Ok(Self { m, components })
    }

    /// Build from integer component matrices (test and catalog helper).
    pub fn from_i64(components: &[&[&[i64]]]) -> Result<Self> {
        components.iter().map(|rows| SymMatrix::from_i64_rows(rows)).collect::<Result<Vec<_>>>().and_then(Self::new)
    }

    /// Domain dimension `m`.
    pub fn domain_dim(&self) -> usize {
        self.m
    }

    /// Codomain dimension `n`.
    pub fn codomain_dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[SymMatrix<T>] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &SymMatrix<T> {
        &self.components[i]
    }

    /// All components vanish; such a map is representable but never a
    /// harmonic morphism.
    pub fn is_constant(&self) -> bool {
        self.components.iter().all(|c| c.matrix().is_zero())
    }

    pub fn to_f64(&self) -> FloatMap {
        QuadraticMap { m: self.m, components: self.components.iter().map(SymMatrix::to_f64).collect() }
    }

    fn check_point(&self, x: &[T]) -> Result<()> {
        if x.len() != self.m {
            return Err(Error::DimensionMismatch { expected: self.m, found: x.len() });
        }
        Ok(())
    }

    pub fn evaluate(&self, x: &[T]) -> Result<Vec<T>> {
        self.check_point(x)?;
        Ok(self.components.iter().map(|a| a.quadratic_form(x)).collect())
    }

    /// Jacobian `J(X)` with rows `2XᵗA_i`.
    pub fn jacobian(&self, x: &[T]) -> Result<Matrix<T>> {
        self.check_point(x)?;
        let two = T::from_i64(2);
        let rows: Vec<Vec<T>> = self
            .components
            .iter()
            .map(|a| a.matrix().mul_vec(x).into_iter().map(|v| v * two.clone()).collect())
            .collect();
        Matrix::from_rows(rows)
    }

    /// Gram matrix of the component gradients, `J(X)·J(X)ᵗ`, whose entries
    /// are `4XᵗA_iA_jX`.
    pub fn gram_gradients(&self, x: &[T]) -> Result<SymMatrix<T>> {
        let j = self.jacobian(x)?;
        SymMatrix::new(j.mul(&j.transpose()))
    }

    /// `φ ∘ Q`: components become `QᵗA_iQ`. `Q` may be rectangular
    /// (`m × p`), giving a map on `R^p`.
    pub fn precompose(&self, q: &Matrix<T>) -> Result<Self> {
        if q.rows() != self.m {
            return Err(Error::DimensionMismatch { expected: self.m, found: q.rows() });
        }
        let comps = self
            .components
            .iter()
            .map(|a| SymMatrix::new(q.transpose().mul(a.matrix()).mul(q)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }

    /// `G ∘ φ` for a linear map `G` on the codomain (`k × n`).
    pub fn postcompose(&self, g: &Matrix<T>) -> Result<Self> {
        let n = self.codomain_dim();
        if g.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: g.cols() });
        }
        let comps = (0..g.rows())
            .map(|r| {
                let mut acc = Matrix::zeros(self.m, self.m);
                for (c, a) in self.components.iter().enumerate() {
                    if !g[(r, c)].is_zero() {
                        acc = acc.add(&a.matrix().scale(&g[(r, c)]));
                    }
                }
                SymMatrix::new(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self { m: self.m, components: self.components.iter().map(|a| a.scale(c)).collect() }
    }

    /// Precompose with the orthogonal projection `R^{m+extra} -> R^m` that
    /// forgets the last `extra` coordinates.
    pub fn zero_pad(&self, extra: usize) -> Self {
        let z = SymMatrix::zeros(extra);
        let components = self.components.iter().map(|a| a.direct_sum(&z)).collect();
        Self { m: self.m + extra, components }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_i64(x)).collect()
    }

    #[test]
    fn evaluate_standard_hopf_at_first_axis() {
        let hopf = catalog::standard_hopf();
        assert_eq!(hopf.evaluate(&q(&[1, 0, 0, 0])).unwrap(), q(&[1, 0, 0]));
        assert_eq!(hopf.evaluate(&q(&[0, 0, 0, 0])).unwrap(), q(&[0, 0, 0]));
    }

    #[test]
    fn evaluate_non_umbilical_example_at_all_ones() {
        // By hand: (2+2+3+3-2-2-3-3, 4+4+6-6, -4+4+6+6).
        let map = catalog::non_umbilical_8_3();
        assert_eq!(map.evaluate(&q(&[1; 8])).unwrap(), q(&[0, 8, 12]));
    }

    #[test]
    fn jacobian_of_standard_hopf() {
        let hopf = catalog::standard_hopf();
        let j = hopf.jacobian(&q(&[1, 0, 0, 0])).unwrap();
        let expect = Matrix::from_i64_rows(&[&[2, 0, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, -2]]);
        assert_eq!(j, expect);
        assert!(hopf.jacobian(&q(&[0; 4])).unwrap().is_zero());
    }

    #[test]
    fn gram_of_standard_hopf_is_scalar() {
        let hopf = catalog::standard_hopf();
        let g = hopf.gram_gradients(&q(&[1, 0, 0, 0])).unwrap();
        assert_eq!(g.matrix(), &Matrix::identity(3).scale(&Rational::from_i64(4)));
        assert!(hopf.gram_gradients(&q(&[0; 4])).unwrap().matrix().is_zero());
    }

    #[test]
    fn dimension_errors() {
        let hopf = catalog::standard_hopf();
        assert!(matches!(hopf.evaluate(&q(&[1, 0])), Err(Error::DimensionMismatch { .. })));
        assert!(hopf.jacobian(&q(&[1])).is_err());
        assert!(hopf.gram_gradients(&q(&[1; 5])).is_err());
        let a = SymMatrix::<Rational>::identity(2);
        let b = SymMatrix::<Rational>::identity(3);
        assert!(QuadraticMap::new(vec![a, b]).is_err());
        assert_eq!(QuadraticMap::<f64>::new(vec![]).unwrap_err(), Error::EmptyMap);
    }

    #[test]
    fn zero_map_is_constant() {
        let z = QuadraticMap::new(vec![SymMatrix::<Rational>::zeros(3); 2]).unwrap();
        assert!(z.is_constant());
        assert!(!catalog::standard_hopf::<Rational>().is_constant());
    }

    #[test]
    fn postcompose_and_precompose() {
        let hopf = catalog::standard_hopf();
        let swap = Matrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let g = hopf.postcompose(&swap).unwrap();
        assert_eq!(g.component(0), hopf.component(1));
        let id = Matrix::identity(4);
        assert_eq!(hopf.precompose(&id).unwrap(), hopf);
        let padded = hopf.zero_pad(2);
        assert_eq!(padded.domain_dim(), 6);
        assert_eq!(padded.evaluate(&q(&[1, 0, 0, 0, 7, 9])).unwrap(), q(&[1, 0, 0]));
    }
}

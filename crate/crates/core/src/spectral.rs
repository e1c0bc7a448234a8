//! Spectral structure of quadratic harmonic morphisms: Q-rank, component
//! spectra, the block normal form, the singular splitting and the umbilical
//! test.
//!
//! For a harmonic morphism all components share one even rank and one
//! spectrum, symmetric under `λ ↦ −λ`. Diagonalising `A₁` with positive
//! eigenvalues first, their negatives second and the kernel last puts every
//! other component in off-diagonal block form:
//!
//! ```text
//! PᵗA₁P = diag(D, −D, 0_r)        PᵗA_{i+1}P = [[0, B_i, 0], [B_iᵗ, 0, 0], [0, 0, 0_r]]
//! DB_i = B_iD,   B_iᵗB_i = D²,   B_iᵗB_j = −B_jᵗB_i  (i ≠ j)
//! ```
//!
//! Inside a repeated eigenvalue the solver's basis is arbitrary, so the
//! `B_i` are only determined up to a block-orthogonal change commuting with
//! `D`; `(k, r, D)` are canonical.

use std::cmp::Ordering;

use crate::eigen::{jacobi_eigen, sorted_eigenvalues};
use crate::error::{Error, Result};
use crate::map::{FloatMap, QuadraticMap};
use crate::matrix::{Matrix, SymMatrix};
use crate::scalar::{Scalar, Tolerance};
use crate::verify::require_morphism;

/// An eigenvalue is zero when `|λ| <= RANK_RTOL · max|λ|`.
pub const RANK_RTOL: f64 = 1e-8;

/// Largest dimension for which exact maps get characteristic-polynomial
/// checks of spectrum equality and `±λ` pairing.
pub const EXACT_CHAR_POLY_MAX_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    /// Sorted (ascending) eigenvalues of each component.
    pub eigenvalues: Vec<Vec<f64>>,
    pub ranks: Vec<usize>,
    /// The shared rank when all components agree.
    pub common_rank: Option<usize>,
    pub rank_is_even: bool,
    pub spectra_equal: bool,
    pub plus_minus_paired: bool,
    /// `true` when the flags above were decided in exact arithmetic.
    pub exact: bool,
}

fn rank_from_eigenvalues(values: &[f64]) -> usize {
    let max = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    values.iter().filter(|v| v.abs() > RANK_RTOL * max).count()
}

fn component_rank<T: Scalar>(a: &SymMatrix<T>, eigenvalues: &[f64]) -> usize {
    if T::EXACT {
        a.matrix().rank(Tolerance::default())
    } else {
        rank_from_eigenvalues(eigenvalues)
    }
}

fn lists_close(a: &[f64], b: &[f64], scale: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= RANK_RTOL * scale.max(1e-300))
}

/// Characteristic polynomial is even or odd, i.e. the spectrum is symmetric.
fn char_poly_is_paired<T: Scalar>(coeffs: &[T]) -> bool {
    let m = coeffs.len() - 1;
    coeffs.iter().enumerate().all(|(j, c)| (m - j).is_multiple_of(2) || c.is_zero())
}

pub fn spectrum_report<T: Scalar>(map: &QuadraticMap<T>) -> Result<SpectrumReport> {
    let eigenvalues = map.components().iter().map(|a| sorted_eigenvalues(&a.to_f64())).collect::<Result<Vec<_>>>()?;
    let ranks: Vec<usize> = map.components().iter().zip(&eigenvalues).map(|(a, ev)| component_rank(a, ev)).collect();
    let common_rank = ranks.iter().all(|&r| r == ranks[0]).then_some(ranks[0]);
    let rank_is_even = ranks.iter().all(|r| r % 2 == 0);

    let exact = T::EXACT && map.domain_dim() <= EXACT_CHAR_POLY_MAX_DIM;
    let (spectra_equal, plus_minus_paired) = if exact {
        let polys: Vec<Vec<T>> = map.components().iter().map(|a| a.matrix().char_poly()).collect();
        (polys.iter().all(|p| *p == polys[0]), polys.iter().all(|p| char_poly_is_paired(p)))
    } else {
        let scale = eigenvalues.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs()));
        let equal = eigenvalues.iter().all(|ev| lists_close(ev, &eigenvalues[0], scale));
        let paired = eigenvalues.iter().all(|ev| {
            let mirrored: Vec<f64> = ev.iter().rev().map(|v| -v).collect();
            lists_close(ev, &mirrored, scale)
        });
        (equal, paired)
    };

    Ok(SpectrumReport { eigenvalues, ranks, common_rank, rank_is_even, spectra_equal, plus_minus_paired, exact })
}

/// Common rank of the components of a harmonic morphism.
pub fn q_rank<T: Scalar>(map: &QuadraticMap<T>) -> Result<usize> {
    require_morphism(map)?;
    let a = map.component(0);
    if T::EXACT {
        Ok(a.matrix().rank(Tolerance::default()))
    } else {
        Ok(rank_from_eigenvalues(&sorted_eigenvalues(&a.to_f64())?))
    }
}

/// Block normal form of a harmonic morphism.
#[derive(Debug, Clone)]
pub struct NormalForm {
    /// Orthogonal change of basis; its columns are the ordered eigenvectors
    /// of `A₁`.
    pub p: Matrix<f64>,
    /// Half the Q-rank.
    pub k: usize,
    /// Kernel dimension, `m = 2k + r`.
    pub r: usize,
    /// Positive eigenvalues of `A₁`, descending.
    pub d: Vec<f64>,
    /// `B₁ … B_{n−1}`, each `k × k`.
    pub blocks: Vec<Matrix<f64>>,
}

impl NormalForm {
    pub fn dim(&self) -> usize {
        2 * self.k + self.r
    }

    /// The canonical component matrices `diag(D, −D, 0)` and
    /// `[[0, B_i, 0], [B_iᵗ, 0, 0], [0, 0, 0]]` in normal-form coordinates.
    pub fn canonical_components(&self) -> Vec<SymMatrix<f64>> {
        let (k, m) = (self.k, self.dim());
        let mut first = Matrix::zeros(m, m);
        for (i, &d) in self.d.iter().enumerate() {
            first[(i, i)] = d;
            first[(k + i, k + i)] = -d;
        }
        let mut out = vec![SymMatrix::new(first).expect("diagonal")];
        for b in &self.blocks {
            let mut a = Matrix::zeros(m, m);
            a.set_block(0, k, b);
            a.set_block(k, 0, &b.transpose());
            out.push(SymMatrix::new(a).expect("block symmetric"));
        }
        out
    }

    /// Largest residual over `DB_i − B_iD`, `B_iᵗB_i − D²` and
    /// `B_iᵗB_j + B_jᵗB_i`, divided by `max(D)²`.
    pub fn constraint_residual(&self) -> f64 {
        let dmax = self.d.iter().fold(0.0f64, |m, v| m.max(*v));
        if self.k == 0 {
            return 0.0;
        }
        let dm = Matrix::from_diagonal(&self.d);
        let d2 = dm.mul(&dm);
        let mut worst: f64 = 0.0;
        for (i, bi) in self.blocks.iter().enumerate() {
            worst = worst.max(dm.mul(bi).sub(&bi.mul(&dm)).max_abs() / dmax);
            worst = worst.max(bi.transpose().mul(bi).sub(&d2).max_abs());
            for bj in &self.blocks[i + 1..] {
                worst = worst.max(bi.transpose().mul(bj).add(&bj.transpose().mul(bi)).max_abs());
            }
        }
        worst / (dmax * dmax)
    }

    /// `PᵗP = I` within `tol`.
    pub fn is_orthogonal(&self, tol: Tolerance) -> bool {
        self.p.is_orthogonal(tol)
    }
}

fn normal_form_f64(map: &FloatMap) -> Result<NormalForm> {
    let m = map.domain_dim();
    let eig = jacobi_eigen(map.component(0))?;
    let max = eig.values.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let zero = RANK_RTOL * max;

    let by_magnitude_desc =
        |a: &usize, b: &usize| -> Ordering { eig.values[*b].abs().total_cmp(&eig.values[*a].abs()).then(a.cmp(b)) };
    let mut pos: Vec<usize> = (0..m).filter(|&i| eig.values[i] > zero).collect();
    let mut neg: Vec<usize> = (0..m).filter(|&i| eig.values[i] < -zero).collect();
    let kernel: Vec<usize> = (0..m).filter(|&i| eig.values[i].abs() <= zero).collect();
    pos.sort_by(by_magnitude_desc);
    neg.sort_by(by_magnitude_desc);
    if pos.len() != neg.len() {
        return Err(Error::Invariant(format!(
            "{} positive vs {} negative eigenvalues in a harmonic morphism",
            pos.len(),
            neg.len()
        )));
    }

    let order: Vec<usize> = pos.iter().chain(&neg).chain(&kernel).copied().collect();
    let p = Matrix::from_fn(m, m, |i, j| eig.vectors[(i, order[j])]);
    let k = pos.len();
    let d: Vec<f64> = pos.iter().map(|&i| eig.values[i]).collect();
    let blocks = map.components()[1..].iter().map(|a| a.congruence(&p).matrix().block(0, k, k, k)).collect();
    Ok(NormalForm { p, k, r: kernel.len(), d, blocks })
}

pub fn normal_form<T: Scalar>(map: &QuadraticMap<T>) -> Result<NormalForm> {
    require_morphism(map)?;
    normal_form_f64(&map.to_f64())
}

/// Assemble the map whose components are `P·N_i·Pᵗ` from a normal form.
pub fn reconstruct(nf: &NormalForm, n: usize) -> Result<FloatMap> {
    let m = nf.dim();
    if n == 0 || nf.blocks.len() != n - 1 {
        return Err(Error::DimensionMismatch { expected: n.saturating_sub(1), found: nf.blocks.len() });
    }
    if nf.d.len() != nf.k {
        return Err(Error::DimensionMismatch { expected: nf.k, found: nf.d.len() });
    }
    if nf.p.rows() != m || nf.p.cols() != m {
        return Err(Error::DimensionMismatch { expected: m, found: nf.p.rows() });
    }
    if let Some(b) = nf.blocks.iter().find(|b| b.rows() != nf.k || b.cols() != nf.k) {
        return Err(Error::DimensionMismatch { expected: nf.k, found: b.rows().max(b.cols()) });
    }
    let pt = nf.p.transpose();
    let comps = nf.canonical_components().into_iter().map(|c| c.congruence(&pt)).collect();
    QuadraticMap::new(comps)
}

/// `φ = core ∘ projection` with `projection` an orthogonal projection onto
/// the complement of the common kernel and `core` Q-nonsingular.
#[derive(Debug, Clone)]
pub struct SingularSplit {
    /// `2k × m` matrix with orthonormal rows.
    pub projection: Matrix<f64>,
    pub core: FloatMap,
}

pub fn split_singular<T: Scalar>(map: &QuadraticMap<T>) -> Result<SingularSplit> {
    let nf = normal_form(map)?;
    let fmap = map.to_f64();
    let rank = 2 * nf.k;
    let basis = nf.p.block(0, 0, nf.dim(), rank);
    let core = fmap.precompose(&basis)?;
    Ok(SingularSplit { projection: basis.transpose(), core })
}

/// Whether all positive eigenvalues of `A₁` coincide; returns them as well
/// (descending).
pub fn is_umbilical<T: Scalar>(map: &QuadraticMap<T>) -> Result<(bool, Vec<f64>)> {
    require_morphism(map)?;
    let a = map.component(0);
    let values = sorted_eigenvalues(&a.to_f64())?;
    let max = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut positives: Vec<f64> = values.into_iter().filter(|&v| v > RANK_RTOL * max).collect();
    positives.reverse();

    let umbilical = if T::EXACT {
        // All nonzero eigenvalues are ±λ exactly when A³ = λ²A, and then
        // λ² = tr(A²)/rank A.
        let am = a.matrix();
        let a2 = am.mul(am);
        let rank = am.rank(Tolerance::default());
        let lambda2 = a2.trace() / T::from_i64(rank as i64);
        a2.mul(am) == am.scale(&lambda2)
    } else {
        let top = positives.first().copied().unwrap_or(0.0);
        positives.iter().all(|v| (top - v).abs() <= RANK_RTOL * top)
    };
    Ok((umbilical, positives))
}

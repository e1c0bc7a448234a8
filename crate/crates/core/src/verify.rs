//! Deciding the harmonic-morphism property from the component matrices.
//!
//! A quadratic map is harmonic iff every `tr A_i` vanishes, and horizontally
//! weakly conformal iff `A_iA_j + A_jA_i = 0` for `i ≠ j` and all `A_i²`
//! coincide. Exact maps are decided with zero tolerance; float maps compare
//! residuals against the relative tolerance scaled by the entry magnitudes.
//!
//! [`conformality_oracle`] is a sampling check of the pointwise conformality
//! condition that never looks at the matrix identities, so it can be used to
//! cross-check [`check_hwc`].

use crate::error::{Error, Result};
use crate::map::QuadraticMap;
use crate::matrix::Matrix;
use crate::random::sample_points;
use crate::scalar::{Scalar, Tolerance};

/// A component whose trace does not vanish (0-based index).
#[derive(Debug, Clone, PartialEq)]
pub struct TraceViolation<T> {
    pub index: usize,
    pub trace: T,
}

/// A failing pair of components (0-based, `i < j`) together with the
/// largest-magnitude entry of the residual matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct PairViolation<T> {
    pub i: usize,
    pub j: usize,
    pub residual: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HmReport<T> {
    pub is_harmonic: bool,
    pub is_hwc: bool,
    pub is_harmonic_morphism: bool,
    pub is_constant: bool,
    pub trace_violations: Vec<TraceViolation<T>>,
    /// Pairs with `A_iA_j + A_jA_i ≠ 0`.
    pub anticommute_violations: Vec<PairViolation<T>>,
    /// Pairs with `A_i² ≠ A_j²`.
    pub square_violations: Vec<PairViolation<T>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HwcCheck<T> {
    pub holds: bool,
    pub anticommute_violations: Vec<PairViolation<T>>,
    pub square_violations: Vec<PairViolation<T>>,
}

fn entry_scale<T: Scalar>(map: &QuadraticMap<T>) -> f64 {
    map.components().iter().map(|a| a.matrix().max_abs()).fold(0.0, f64::max)
}

pub fn check_harmonic<T: Scalar>(map: &QuadraticMap<T>) -> (bool, Vec<TraceViolation<T>>) {
    check_harmonic_with(map, Tolerance::default())
}

pub fn check_harmonic_with<T: Scalar>(map: &QuadraticMap<T>, tol: Tolerance) -> (bool, Vec<TraceViolation<T>>) {
    let bound = tol.bound(entry_scale(map));
    let violations: Vec<_> = map
        .components()
        .iter()
        .enumerate()
        .filter_map(|(index, a)| {
            let trace = a.trace();
            (!trace.is_negligible(bound)).then_some(TraceViolation { index, trace })
        })
        .collect();
    (violations.is_empty(), violations)
}

pub fn check_hwc<T: Scalar>(map: &QuadraticMap<T>) -> HwcCheck<T> {
    check_hwc_with(map, Tolerance::default())
}

pub fn check_hwc_with<T: Scalar>(map: &QuadraticMap<T>, tol: Tolerance) -> HwcCheck<T> {
    let s = entry_scale(map);
    let bound = tol.bound(s * s);
    let mats: Vec<&Matrix<T>> = map.components().iter().map(|a| a.matrix()).collect();
    let squares: Vec<Matrix<T>> = mats.iter().map(|a| a.mul(a)).collect();
    let mut anticommute = Vec::new();
    let mut square = Vec::new();
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            let anti = mats[i].mul(mats[j]).add(&mats[j].mul(mats[i]));
            let r = anti.max_abs_entry();
            if !r.is_negligible(bound) {
                anticommute.push(PairViolation { i, j, residual: r });
            }
            let r = squares[i].sub(&squares[j]).max_abs_entry();
            if !r.is_negligible(bound) {
                square.push(PairViolation { i, j, residual: r });
            }
        }
    }
    HwcCheck {
        holds: anticommute.is_empty() && square.is_empty(),
        anticommute_violations: anticommute,
        square_violations: square,
    }
}

pub fn check_harmonic_morphism<T: Scalar>(map: &QuadraticMap<T>) -> HmReport<T> {
    check_harmonic_morphism_with(map, Tolerance::default())
}

pub fn check_harmonic_morphism_with<T: Scalar>(map: &QuadraticMap<T>, tol: Tolerance) -> HmReport<T> {
    let (is_harmonic, trace_violations) = check_harmonic_with(map, tol);
    let hwc = check_hwc_with(map, tol);
    let is_constant = map.is_constant();
    HmReport {
        is_harmonic,
        is_hwc: hwc.holds,
        is_harmonic_morphism: is_harmonic && hwc.holds && !is_constant,
        is_constant,
        trace_violations,
        anticommute_violations: hwc.anticommute_violations,
        square_violations: hwc.square_violations,
    }
}

/// Gate used by the operations whose hypotheses require a harmonic morphism.
pub(crate) fn require_morphism<T: Scalar>(map: &QuadraticMap<T>) -> Result<()> {
    let report = check_harmonic_morphism(map);
    if report.is_harmonic_morphism {
        return Ok(());
    }
    let reason = if report.is_constant {
        "map is constant".to_string()
    } else {
        format!(
            "{} trace, {} anticommutator and {} square violation(s)",
            report.trace_violations.len(),
            report.anticommute_violations.len(),
            report.square_violations.len()
        )
    };
    Err(Error::NotHarmonicMorphism(reason))
}

/// Dilation `λ²(X) = |∇φ¹(X)|² = 4XᵗA₁²X` of a horizontally weakly
/// conformal map.
pub fn dilation<T: Scalar>(map: &QuadraticMap<T>, x: &[T]) -> Result<T> {
    if !check_hwc(map).holds {
        return Err(Error::NotConformal);
    }
    let a = map.component(0).matrix();
    if x.len() != map.domain_dim() {
        return Err(Error::DimensionMismatch { expected: map.domain_dim(), found: x.len() });
    }
    let ax = a.mul_vec(x);
    Ok(T::from_i64(4) * crate::matrix::dot(&ax, &ax))
}

/// Sampling check that the gradient Gram matrix is `λ²(X)·I` at
/// `sample_count` points drawn from `seed`.
///
/// `λ²(X)` is estimated as the mean of the Gram diagonal; off-diagonal
/// entries and diagonal deviations must stay below `tol.rel·(1 + λ²)`
/// (relative to the squared entry scale of the map).
pub fn conformality_oracle<T: Scalar>(map: &QuadraticMap<T>, sample_count: usize, seed: u64) -> bool {
    conformality_oracle_with(map, sample_count, seed, Tolerance::default())
}

pub fn conformality_oracle_with<T: Scalar>(
    map: &QuadraticMap<T>,
    sample_count: usize,
    seed: u64,
    tol: Tolerance,
) -> bool {
    let fmap = map.to_f64();
    let s = entry_scale(map).max(f64::MIN_POSITIVE);
    let n = fmap.codomain_dim();
    sample_points(fmap.domain_dim(), sample_count.max(1), seed).iter().all(|x| {
        let gram = fmap.gram_gradients(x).expect("sample has domain dimension");
        let g = gram.matrix();
        let lambda2 = (0..n).map(|i| g[(i, i)]).sum::<f64>() / n as f64;
        if lambda2 < 0.0 {
            return false;
        }
        let bound = tol.rel * (s * s + lambda2);
        (0..n).all(|i| {
            (0..n).all(|j| {
                let target = if i == j { lambda2 } else { 0.0 };
                (g[(i, j)] - target).abs() <= bound
            })
        })
    })
}

//! Quadratic harmonic morphisms `R⁴ → R³`.
//!
//! Every such map is umbilical and Q-nonsingular, and precomposing with an
//! orthogonal change of coordinates brings it to
//!
//! ```text
//! φ_t = λ(x₁² + x₂² − x₃² − x₄²,
//!         2x₁x₃ cos t + 2x₁x₄ sin t − 2x₂x₃ sin t + 2x₂x₄ cos t,
//!         2x₁x₃ sin t − 2x₁x₄ cos t + 2x₂x₃ cos t + 2x₂x₄ sin t)
//! ```
//!
//! possibly with the last component negated. Since `G(t)·φ_t = λφ₀`, each
//! map is `Gᵗ ∘ λφ₀ ∘ P` for orthogonal `P` and `G`.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::map::{FloatMap, QuadraticMap};
use crate::matrix::{norm_sq, Matrix, SymMatrix};
use crate::random::sample_points;
use crate::scalar::{Scalar, Tolerance};
use crate::spectral::{normal_form, RANK_RTOL};
use crate::verify::require_morphism;

/// A point `(cos t, sin t)` on the unit circle.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitPhase<T> {
    pub cos: T,
    pub sin: T,
}

impl UnitPhase<f64> {
    pub fn from_angle(t: f64) -> Self {
        Self { cos: t.cos(), sin: t.sin() }
    }
}

impl<T: Scalar> UnitPhase<T> {
    /// The rational point `((1 − u²)/(1 + u²), 2u/(1 + u²))`, i.e. the angle
    /// `t = 2·atan(u)`.
    pub fn from_half_tangent(u: T) -> Self {
        let one = T::one();
        let denom = one.clone() + u.clone() * u.clone();
        Self { cos: (one - u.clone() * u.clone()) / denom.clone(), sin: T::from_i64(2) * u / denom }
    }

    pub fn identity() -> Self {
        Self { cos: T::one(), sin: T::zero() }
    }

    /// The angle in `[0, 2π)`.
    pub fn angle(&self) -> f64 {
        normalize_angle(self.sin.to_f64().atan2(self.cos.to_f64()))
    }
}

/// Reduce an angle to `[0, 2π)`.
pub fn normalize_angle(t: f64) -> f64 {
    let r = t.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

fn components<T: Scalar>(lambda: &T, phase: &UnitPhase<T>, third_sign: i64) -> Vec<SymMatrix<T>> {
    let (c, s) = (phase.cos.clone(), phase.sin.clone());
    let l = lambda.clone();
    let first = SymMatrix::diagonal(&[l.clone(), l.clone(), -l.clone(), -l.clone()]);
    let second = SymMatrix::off_diagonal(
        &Matrix::from_rows(vec![
            vec![l.clone() * c.clone(), l.clone() * s.clone()],
            vec![-(l.clone() * s.clone()), l.clone() * c.clone()],
        ])
        .expect("finite entries"),
    );
    let sign = T::from_i64(third_sign);
    let ls = sign * l;
    let third = SymMatrix::off_diagonal(
        &Matrix::from_rows(vec![vec![ls.clone() * s.clone(), -(ls.clone() * c.clone())], vec![ls.clone() * c, ls * s]])
            .expect("finite entries"),
    );
    vec![first, second, third]
}

/// `φ_t` scaled by `λ`.
pub fn phi_t<T: Scalar>(lambda: T, phase: &UnitPhase<T>) -> Result<QuadraticMap<T>> {
    if lambda.is_zero() {
        return Err(Error::ZeroScale);
    }
    QuadraticMap::new(components(&lambda, phase, 1))
}

/// `φ_t` with the third component negated.
pub fn phi_t_flipped<T: Scalar>(lambda: T, phase: &UnitPhase<T>) -> Result<QuadraticMap<T>> {
    if lambda.is_zero() {
        return Err(Error::ZeroScale);
    }
    QuadraticMap::new(components(&lambda, phase, -1))
}

/// `λφ₀ = λ(x₁² + x₂² − x₃² − x₄², 2x₁x₃ + 2x₂x₄, −2x₁x₄ + 2x₂x₃)`.
pub fn hopf_standard<T: Scalar>(lambda: T) -> Result<QuadraticMap<T>> {
    phi_t(lambda, &UnitPhase::identity())
}

/// `G(t) = [[1, 0, 0], [0, cos t, sin t], [0, −sin t, cos t]]`.
#[allow(non_snake_case)]
pub fn rotation_G<T: Scalar>(phase: &UnitPhase<T>) -> Matrix<T> {
    let (c, s) = (phase.cos.clone(), phase.sin.clone());
    Matrix::from_rows(vec![
        vec![T::one(), T::zero(), T::zero()],
        vec![T::zero(), c.clone(), s.clone()],
        vec![T::zero(), -s, c],
    ])
    .expect("finite entries")
}

/// Witnesses exhibiting a map as `Gᵗ ∘ λφ₀ ∘ P`.
#[derive(Debug, Clone)]
pub struct Classification43 {
    pub lambda: f64,
    /// Angle in `[0, 2π)`; a representative, since rotations of the
    /// `(x₁, x₂)` and `(x₃, x₄)` planes shift it.
    pub t: f64,
    /// Domain witness.
    pub p: Matrix<f64>,
    /// Codomain witness: `G(t)`, times `diag(1, 1, −1)` when flipped.
    pub g: Matrix<f64>,
    /// The map reduced to `φ_t` with its last component negated.
    pub orientation_flipped: bool,
}

impl Classification43 {
    /// `Gᵗ ∘ λφ₀ ∘ P`.
    pub fn reconstruct(&self) -> FloatMap {
        hopf_standard(self.lambda)
            .and_then(|h| h.precompose(&self.p))
            .and_then(|h| h.postcompose(&self.g.transpose()))
            .expect("witness shapes are fixed")
    }

    /// Largest of `‖φ(X) − (Gᵗ ∘ λφ₀ ∘ P)(X)‖ / (λ‖X‖²)` over `samples`
    /// seeded points.
    pub fn residual<T: Scalar>(&self, map: &QuadraticMap<T>, samples: usize, seed: u64) -> f64 {
        let fmap = map.to_f64();
        let rec = self.reconstruct();
        sample_points(4, samples, seed)
            .iter()
            .map(|x| {
                let a = fmap.evaluate(x).expect("domain is R^4");
                let b = rec.evaluate(x).expect("domain is R^4");
                let diff: Vec<f64> = a.iter().zip(&b).map(|(u, v)| u - v).collect();
                norm_sq(&diff).sqrt() / (self.lambda * norm_sq(x)).max(f64::MIN_POSITIVE)
            })
            .fold(0.0, f64::max)
    }

    /// Witness invariants: both matrices orthogonal and the reconstruction
    /// matching `map` to `tol` at 50 sample points.
    pub fn is_valid_for<T: Scalar>(&self, map: &QuadraticMap<T>, tol: f64) -> bool {
        let t = Tolerance::relative(tol);
        self.p.is_orthogonal(t) && self.g.is_orthogonal(t) && self.residual(map, 50, 0) < tol
    }
}

fn check_shape<T: Scalar>(map: &QuadraticMap<T>) -> Result<()> {
    let (m, n) = (map.domain_dim(), map.codomain_dim());
    if (m, n) != (4, 3) {
        return Err(Error::WrongShape { expected_m: 4, expected_n: 3, m, n });
    }
    require_morphism(map)
}

pub fn classify<T: Scalar>(map: &QuadraticMap<T>) -> Result<Classification43> {
    check_shape(map)?;
    let nf = normal_form(map)?;
    if nf.k != 2 {
        return Err(Error::QSingular { rank: 2 * nf.k, dim: 4 });
    }
    let (d0, d1) = (nf.d[0], nf.d[1]);
    if (d0 - d1).abs() > RANK_RTOL * d0 {
        return Err(Error::Invariant(format!("R^4 -> R^3 morphism with eigenvalues {d0} and {d1}")));
    }
    let lambda = 0.5 * (d0 + d1);

    let mut p = nf.p.clone();
    let mut b1 = nf.blocks[0].scale(&(1.0 / lambda));
    let mut b2 = nf.blocks[1].scale(&(1.0 / lambda));
    if b1[(0, 0)] * b1[(1, 1)] - b1[(0, 1)] * b1[(1, 0)] < 0.0 {
        // Swap x₃ and x₄: columns of P and of each block.
        for i in 0..4 {
            let tmp = p[(i, 2)];
            p[(i, 2)] = p[(i, 3)];
            p[(i, 3)] = tmp;
        }
        for b in [&mut b1, &mut b2] {
            *b = Matrix::from_fn(2, 2, |i, j| b[(i, 1 - j)]);
        }
    }

    let t = normalize_angle(b1[(0, 1)].atan2(b1[(0, 0)]));
    let j = Matrix::from_rows(vec![vec![0.0, -1.0], vec![1.0, 0.0]]).expect("finite");
    let b1j = b1.mul(&j);
    let plus = b2.sub(&b1j).max_abs();
    let minus = b2.add(&b1j).max_abs();
    let orientation_flipped = minus < plus;
    if plus.min(minus) > 1e-6 {
        return Err(Error::Invariant(format!("second block is not ±B₁J (residual {})", plus.min(minus))));
    }

    let mut g = rotation_G(&UnitPhase::from_angle(t));
    if orientation_flipped {
        g = g.mul(&Matrix::from_diagonal(&[1.0, 1.0, -1.0]));
    }
    Ok(Classification43 { lambda, t, p: p.transpose(), g, orientation_flipped })
}

/// Whether `‖φ(X)‖ = λ‖X‖²` at 100 seeded sample points, with
/// `λ² = tr(A₁²)/4`; then `φ/λ` maps the unit sphere `S³` to `S²`.
pub fn sphere_restriction_check<T: Scalar>(map: &QuadraticMap<T>) -> Result<bool> {
    check_shape(map)?;
    let fmap = map.to_f64();
    let a = fmap.component(0).matrix();
    let lambda = (a.mul(a).trace() / 4.0).sqrt();
    let tol = Tolerance::default();
    Ok(sample_points(4, 100, 0).iter().all(|x| {
        let expected = lambda * norm_sq(x);
        let got = norm_sq(&fmap.evaluate(x).expect("domain is R^4")).sqrt();
        (got - expected).abs() <= tol.bound(expected)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::map::ExactMap;
    use crate::random::{random_orthogonal, rng};
    use crate::scalar::Rational;
    use crate::verify::check_harmonic_morphism;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    type Q = Rational;

    fn close(a: &Matrix<f64>, b: &Matrix<f64>, eps: f64) -> bool {
        a.sub(b).max_abs() < eps
    }

    #[test]
    fn phi_zero_is_the_standard_map() {
        let one: ExactMap = hopf_standard(Q::from_i64(1)).unwrap();
        assert_eq!(one, catalog::standard_hopf());
        assert_eq!(phi_t(Q::from_i64(1), &UnitPhase::identity()).unwrap(), one);
        assert_eq!(hopf_standard(0.0).unwrap_err(), Error::ZeroScale);
        let e1 = [1, 0, 0, 0].map(Q::from_i64);
        let five = hopf_standard(Q::from_i64(5)).unwrap();
        assert_eq!(five.evaluate(&e1).unwrap(), vec![Q::from_i64(5), Q::from_i64(0), Q::from_i64(0)]);
    }

    #[test]
    fn phi_at_quarter_turn() {
        let m = phi_t(2.0, &UnitPhase::from_angle(FRAC_PI_2)).unwrap();
        for x in sample_points(4, 10, 3) {
            let v = m.evaluate(&x).unwrap();
            let (x1, x2, x3, x4) = (x[0], x[1], x[2], x[3]);
            assert!((v[1] - 2.0 * (2.0 * x1 * x4 - 2.0 * x2 * x3)).abs() < 1e-12);
            assert!((v[2] - 2.0 * (2.0 * x1 * x3 + 2.0 * x2 * x4)).abs() < 1e-12);
        }
    }

    #[test]
    fn family_verifies_for_sweep() {
        for i in 0..63 {
            let m = phi_t(1.0, &UnitPhase::from_angle(0.1 * i as f64)).unwrap();
            assert!(check_harmonic_morphism(&m).is_harmonic_morphism);
            assert!(sphere_restriction_check(&m).unwrap());
        }
        for u in [-3, -1, 0, 1, 2, 7] {
            let ph = UnitPhase::from_half_tangent(Q::from_ratio(u, 3));
            assert!(check_harmonic_morphism(&phi_t(Q::from_i64(1), &ph).unwrap()).is_harmonic_morphism);
            assert!(check_harmonic_morphism(&phi_t_flipped(Q::from_i64(2), &ph).unwrap()).is_harmonic_morphism);
        }
    }

    #[test]
    fn rotation_identities() {
        let id = Matrix::<f64>::identity(3);
        assert_eq!(rotation_G(&UnitPhase::from_angle(0.0)), id);
        let g = rotation_G(&UnitPhase::from_angle(PI));
        assert!(close(&g.mul(&g), &id, 1e-15));
        let (s, t) = (0.7, 2.1);
        let lhs = rotation_G(&UnitPhase::from_angle(s)).mul(&rotation_G(&UnitPhase::from_angle(t)));
        assert!(close(&lhs, &rotation_G(&UnitPhase::from_angle(s + t)), 1e-14));
    }

    #[test]
    fn rotation_undoes_phase_exactly() {
        let ph = UnitPhase::from_half_tangent(Q::from_ratio(2, 5));
        let lambda = Q::from_ratio(3, 2);
        let g = rotation_G(&ph);
        let lhs = phi_t(lambda.clone(), &ph).unwrap().postcompose(&g).unwrap();
        assert_eq!(lhs, hopf_standard(lambda).unwrap());
    }

    #[test]
    fn classify_standard() {
        let c = classify(&hopf_standard(Q::from_i64(3)).unwrap()).unwrap();
        assert!((c.lambda - 3.0).abs() < 1e-12);
        assert!(c.t.abs() < 1e-12);
        assert!(!c.orientation_flipped);
        assert!(close(&c.p, &Matrix::identity(4), 1e-12));
        assert!(close(&c.g, &Matrix::identity(3), 1e-12));
    }

    #[test]
    fn classify_rotated_family_member() {
        let base = phi_t(2.0, &UnitPhase::from_angle(FRAC_PI_3)).unwrap();
        let q = random_orthogonal(4, &mut rng(11));
        let map = base.precompose(&q).unwrap();
        let c = classify(&map).unwrap();
        assert!((c.lambda - 2.0).abs() < 1e-9);
        assert!(c.is_valid_for(&map, 1e-9));
        let c0 = classify(&base).unwrap();
        assert!((c0.t - FRAC_PI_3).abs() < 1e-9);
    }

    #[test]
    fn classify_flipped_family() {
        let map = phi_t_flipped(1.5, &UnitPhase::from_angle(1.0)).unwrap();
        let c = classify(&map).unwrap();
        assert!(c.orientation_flipped);
        assert!((c.t - 1.0).abs() < 1e-9);
        assert!(c.is_valid_for(&map, 1e-9));
    }

    #[test]
    fn reflected_first_block_is_normalized() {
        // Swapping x₃ and x₄ puts B₁ into O(2) \ SO(2).
        let swap = Matrix::from_i64_rows(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        let map = hopf_standard(Q::from_i64(1)).unwrap().precompose(&swap).unwrap();
        let c = classify(&map).unwrap();
        assert!(c.is_valid_for(&map, 1e-9));
    }

    #[test]
    fn classify_rejections() {
        let err = classify(&catalog::non_umbilical_8_3::<Q>()).unwrap_err();
        assert_eq!(err, Error::WrongShape { expected_m: 4, expected_n: 3, m: 8, n: 3 });
        let not_hm: ExactMap = QuadraticMap::from_i64(&[
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]],
            &[&[0; 4], &[0; 4], &[0; 4], &[0; 4]],
            &[&[0; 4], &[0; 4], &[0; 4], &[0; 4]],
        ])
        .unwrap();
        assert!(matches!(classify(&not_hm), Err(Error::NotHarmonicMorphism(_))));
        assert!(sphere_restriction_check(&not_hm).is_err());
    }

    #[test]
    fn sphere_norm_identity_scales() {
        assert!(sphere_restriction_check(&hopf_standard(5.0).unwrap()).unwrap());
        assert!(sphere_restriction_check(&hopf_standard(Q::from_i64(5)).unwrap()).unwrap());
    }
}

//! Hand-entered reference maps used throughout the tests, examples and CLI
//! fixtures. Every entry is an integer, so each map is available in exact
//! and in floating-point arithmetic.

use crate::map::QuadraticMap;
use crate::matrix::{Matrix, SymMatrix};
use crate::scalar::Scalar;

/// Symmetric matrix from its diagonal and a list of upper-triangle entries
/// `(row, col, value)`; each off-diagonal `value` appears at `(row, col)` and
/// `(col, row)`, so `XᵗAX` picks up `2·value·x_row·x_col`.
fn sym<T: Scalar>(dim: usize, diag: &[i64], off: &[(usize, usize, i64)]) -> SymMatrix<T> {
    let mut m = Matrix::zeros(dim, dim);
    for (i, &d) in diag.iter().enumerate() {
        m[(i, i)] = T::from_i64(d);
    }
    for &(i, j, v) in off {
        m[(i, j)] = T::from_i64(v);
        m[(j, i)] = T::from_i64(v);
    }
    SymMatrix::new(m).expect("catalog matrices are symmetric")
}

fn build<T: Scalar>(components: Vec<SymMatrix<T>>) -> QuadraticMap<T> {
    QuadraticMap::new(components).expect("catalog maps are well formed")
}

/// `(x₁²+x₂²−x₃²−x₄², 2x₁x₃+2x₂x₄, −2x₁x₄+2x₂x₃)`, the standard Hopf map
/// `R⁴ → R³`.
pub fn standard_hopf<T: Scalar>() -> QuadraticMap<T> {
    build(vec![
        sym(4, &[1, 1, -1, -1], &[]),
        sym(4, &[], &[(0, 2, 1), (1, 3, 1)]),
        sym(4, &[], &[(0, 3, -1), (1, 2, 1)]),
    ])
}

/// A harmonic morphism `R⁸ → R³` whose components have the two distinct
/// positive eigenvalues 2 and 3:
///
/// ```text
/// ( 2x₁²+2x₂²+3x₃²+3x₄²−2x₅²−2x₆²−3x₇²−3x₈²,
///   4x₁x₅+4x₂x₆+6x₃x₈−6x₄x₇,
///  −4x₁x₆+4x₂x₅+6x₃x₇+6x₄x₈ )
/// ```
pub fn non_umbilical_8_3<T: Scalar>() -> QuadraticMap<T> {
    build(vec![
        sym(8, &[2, 2, 3, 3, -2, -2, -3, -3], &[]),
        sym(8, &[], &[(0, 4, 2), (1, 5, 2), (2, 7, 3), (3, 6, -3)]),
        sym(8, &[], &[(0, 5, -2), (1, 4, 2), (2, 6, 3), (3, 7, 3)]),
    ])
}

/// An umbilical harmonic morphism `R⁸ → R⁵` with every positive eigenvalue
/// equal to 3, in coordinates `(x₁..x₄, y₁..y₄)`:
///
/// ```text
/// ( 3|x|²−3|y|²,
///   6x₁y₁−6x₂y₂−6x₃y₃−6x₄y₄,
///   6x₁y₂+6x₂y₁+6x₃y₄−6x₄y₃,
///   6x₁y₃+6x₃y₁+6x₄y₂−6x₂y₄,
///   6x₁y₄+6x₄y₁+6x₂y₃−6x₃y₂ )
/// ```
pub fn umbilical_8_5<T: Scalar>() -> QuadraticMap<T> {
    umbilical_8_5_with(3)
}

/// [`umbilical_8_5`] with the `x₂y₃` sign of the last component reversed.
/// The last component then anticommutes with none of the three before it,
/// so the map is not horizontally weakly conformal.
pub fn umbilical_8_5_sign_variant<T: Scalar>() -> QuadraticMap<T> {
    umbilical_8_5_with(-3)
}

fn umbilical_8_5_with<T: Scalar>(x2y3: i64) -> QuadraticMap<T> {
    build(vec![
        sym(8, &[3, 3, 3, 3, -3, -3, -3, -3], &[]),
        sym(8, &[], &[(0, 4, 3), (1, 5, -3), (2, 6, -3), (3, 7, -3)]),
        sym(8, &[], &[(0, 5, 3), (1, 4, 3), (2, 7, 3), (3, 6, -3)]),
        sym(8, &[], &[(0, 6, 3), (2, 4, 3), (3, 5, 3), (1, 7, -3)]),
        sym(8, &[], &[(0, 7, 3), (3, 4, 3), (1, 6, x2y3), (2, 5, -3)]),
    ])
}

/// The standard Hopf map precomposed with the projection `R⁶ → R⁴`.
pub fn padded_hopf<T: Scalar>() -> QuadraticMap<T> {
    standard_hopf().zero_pad(2)
}

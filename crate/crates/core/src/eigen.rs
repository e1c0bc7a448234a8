//! Cyclic Jacobi eigensolver for real symmetric matrices.
//!
//! Sweeps visit the pairs `(p, q)`, `p < q`, in row order and annihilate each
//! off-diagonal entry with one plane rotation. Iteration stops once the
//! off-diagonal Frobenius norm drops below `1e-12·‖A‖_F`.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, SymMatrix};

const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_RTOL: f64 = 1e-12;

/// Eigenvalues with the matching orthonormal eigenvectors stored as the
/// columns of `vectors`, in the order the solver produced them.
#[derive(Debug, Clone)]
pub struct SymEigen {
    pub values: Vec<f64>,
    pub vectors: Matrix<f64>,
}

fn off_diagonal_norm(a: &Matrix<f64>) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)] * a[(i, j)];
            }
        }
    }
    s.sqrt()
}

pub fn jacobi_eigen(sym: &SymMatrix<f64>) -> Result<SymEigen> {
    let n = sym.dim();
    let mut a = sym.matrix().clone();
    let mut v = Matrix::<f64>::identity(n);
    let total = a.as_slice().iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = OFF_DIAGONAL_RTOL * total;

    let mut sweeps = 0;
    while off_diagonal_norm(&a) > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                // Rotation angle from the stable tangent formula.
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;

                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }

    Ok(SymEigen { values: (0..n).map(|i| a[(i, i)]).collect(), vectors: v })
}

/// Eigenvalues sorted ascending.
pub fn sorted_eigenvalues(sym: &SymMatrix<f64>) -> Result<Vec<f64>> {
    let mut values = jacobi_eigen(sym)?.values;
    values.sort_by(f64::total_cmp);
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Tolerance;

    #[test]
    fn diagonal_input_needs_no_rotation() {
        let d = SymMatrix::diagonal(&[3.0, -1.0, 0.0]);
        let e = jacobi_eigen(&d).unwrap();
        assert_eq!(e.values, vec![3.0, -1.0, 0.0]);
        assert_eq!(e.vectors, Matrix::identity(3));
    }

    #[test]
    fn two_by_two() {
        let a = SymMatrix::new(Matrix::from_rows(vec![vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap()).unwrap();
        let vals = sorted_eigenvalues(&a).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-14 && (vals[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn decomposition_reconstructs() {
        let a = SymMatrix::new(
            Matrix::from_rows(vec![
                vec![4.0, 1.0, -2.0, 0.5],
                vec![1.0, 0.0, 3.0, 1.0],
                vec![-2.0, 3.0, -1.0, 2.0],
                vec![0.5, 1.0, 2.0, 5.0],
            ])
            .unwrap(),
        )
        .unwrap();
        let e = jacobi_eigen(&a).unwrap();
        assert!(e.vectors.is_orthogonal(Tolerance::relative(1e-12)));
        let back = e.vectors.mul(&Matrix::from_diagonal(&e.values)).mul(&e.vectors.transpose());
        assert!(back.sub(a.matrix()).max_abs() < 1e-12);
    }
}

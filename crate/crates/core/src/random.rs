//! Seeded random inputs: sample points, orthogonal matrices and symmetric
//! matrices. All generators are deterministic in their seed or RNG state.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::matrix::{Matrix, SymMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` points of `R^dim` with coordinates uniform on `[-1, 1]`.
pub fn sample_points(dim: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = rng(seed);
    (0..count).map(|_| (0..dim).map(|_| rng.random_range(-1.0..=1.0)).collect()).collect()
}

/// Haar-distributed orthogonal matrix: Gram–Schmidt on a Gaussian matrix,
/// column signs fixed by the diagonal of the implied `R` factor.
pub fn random_orthogonal<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Matrix<f64> {
    loop {
        let g = Matrix::from_fn(dim, dim, |_, _| rng.sample::<f64, _>(StandardNormal));
        let mut q: Vec<Vec<f64>> = Vec::with_capacity(dim);
        let mut degenerate = false;
        for j in 0..dim {
            let mut v = g.column(j);
            // two passes of modified Gram–Schmidt
            for _ in 0..2 {
                for u in &q {
                    let proj: f64 = u.iter().zip(&v).map(|(a, b)| a * b).sum();
                    v.iter_mut().zip(u).for_each(|(x, y)| *x -= proj * y);
                }
            }
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm < 1e-8 {
                degenerate = true;
                break;
            }
            v.iter_mut().for_each(|x| *x /= norm);
            q.push(v);
        }
        if !degenerate {
            return Matrix::from_fn(dim, dim, |i, j| q[j][i]);
        }
    }
}

/// Symmetric matrix with entries uniform on `[-1, 1]`.
pub fn random_symmetric<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> SymMatrix<f64> {
    let mut m = Matrix::zeros(dim, dim);
    for i in 0..dim {
        for j in i..dim {
            let v: f64 = rng.random_range(-1.0..=1.0);
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    SymMatrix::new(m).expect("constructed symmetric")
}

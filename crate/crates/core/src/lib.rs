//! Quadratic harmonic morphisms between Euclidean spaces.
//!
//! A quadratic map `φ: R^m → R^n` is stored as symmetric component matrices
//! `A_i` with `φ^i(X) = XᵗA_iX`. Every algorithm is generic over [`Scalar`],
//! implemented for exact [`Rational`] arithmetic and for `f64`.

pub mod catalog;
pub mod classify43;
pub mod cli;
pub mod clifford;
pub mod constructions;
pub mod eigen;
pub mod error;
pub mod map;
pub mod mapfile;
pub mod matrix;
pub mod random;
pub mod report;
pub mod scalar;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use map::{ExactMap, FloatMap, QuadraticMap};
pub use matrix::{Matrix, SymMatrix};
pub use scalar::{Rational, Scalar, Tolerance};

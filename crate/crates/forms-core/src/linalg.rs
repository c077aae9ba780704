//! Thin wrappers over nalgebra for the small row-major complex matrices
//! passed around as flat slices.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::FormsError;

fn to_matrix(n: usize, a: &[Complex64]) -> DMatrix<Complex64> {
    DMatrix::from_row_slice(n, n, a)
}

fn to_row_major(m: &DMatrix<Complex64>) -> Vec<Complex64> {
    m.transpose().as_slice().to_vec()
}

pub fn det(n: usize, a: &[Complex64]) -> Complex64 {
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    to_matrix(n, a).determinant()
}

pub fn inverse(n: usize, a: &[Complex64]) -> Result<Vec<Complex64>, FormsError> {
    to_matrix(n, a).try_inverse().map(|m| to_row_major(&m)).ok_or(FormsError::Singular)
}

pub fn matmul(n: usize, a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    to_row_major(&(to_matrix(n, a) * to_matrix(n, b)))
}

pub fn identity(n: usize) -> Vec<Complex64> {
    to_row_major(&DMatrix::identity(n, n))
}

pub fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Max deviation from Hermitian symmetry.
pub fn hermitian_residual(n: usize, a: &[Complex64]) -> f64 {
    let m = to_matrix(n, a);
    max_abs_diff(m.as_slice(), m.adjoint().as_slice())
}

/// Whether a Hermitian matrix is positive definite (Cholesky succeeds).
pub fn is_positive_definite(n: usize, a: &[Complex64]) -> bool {
    to_matrix(n, a).cholesky().is_some()
}

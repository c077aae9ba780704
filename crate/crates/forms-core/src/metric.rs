//! Hermitian metrics `g = Σ g_{μν̄} dz_μ dz̄_ν` with closed-form inverse and
//! determinant.

use num_complex::Complex64;

use crate::field::{Evaluator, ScalarField};
use crate::linalg;
use crate::point::{ChartPoint, TangentVector};

/// `g[μ][ν]` is the coefficient of `dz_μ ⊗ dz̄_ν`; `g_inv` is the matrix
/// inverse (`g · g_inv = I`) and `det` the determinant `v_g`.
#[derive(Clone, Debug)]
pub struct HermitianMetricField {
    dim: usize,
    g: Vec<Vec<ScalarField>>,
    g_inv: Vec<Vec<ScalarField>>,
    det: ScalarField,
}

impl HermitianMetricField {
    pub fn new(
        g: Vec<Vec<ScalarField>>,
        g_inv: Vec<Vec<ScalarField>>,
        det: ScalarField,
    ) -> Self {
        let dim = g.len();
        assert!(g.iter().chain(&g_inv).all(|row| row.len() == dim) && g_inv.len() == dim);
        Self { dim, g, g_inv, det }
    }

    /// The flat metric `Σ |dz_μ|²`.
    pub fn flat(dim: usize) -> Self {
        let id: Vec<Vec<ScalarField>> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { ScalarField::one() } else { ScalarField::zero() })
                    .collect()
            })
            .collect();
        Self::new(id.clone(), id, ScalarField::one())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn g(&self, mu: usize, nu: usize) -> &ScalarField {
        &self.g[mu][nu]
    }

    pub fn g_inv(&self, mu: usize, nu: usize) -> &ScalarField {
        &self.g_inv[mu][nu]
    }

    pub fn det(&self) -> &ScalarField {
        &self.det
    }

    fn eval_matrix(rows: &[Vec<ScalarField>], p: &ChartPoint) -> Vec<Complex64> {
        let mut ev = Evaluator::new(p);
        rows.iter().flat_map(|row| row.iter().map(|c| ev.eval(c)).collect::<Vec<_>>()).collect()
    }

    /// `g_{μν̄}` at a point, row-major.
    pub fn matrix_at(&self, p: &ChartPoint) -> Vec<Complex64> {
        Self::eval_matrix(&self.g, p)
    }

    /// Closed-form inverse at a point, row-major.
    pub fn inverse_at(&self, p: &ChartPoint) -> Vec<Complex64> {
        Self::eval_matrix(&self.g_inv, p)
    }

    pub fn det_at(&self, p: &ChartPoint) -> f64 {
        self.det.eval(p).re
    }

    /// `max |g · g_inv − I|` at a point.
    pub fn inverse_residual(&self, p: &ChartPoint) -> f64 {
        let prod = linalg::matmul(self.dim, &self.matrix_at(p), &self.inverse_at(p));
        linalg::max_abs_diff(&prod, &linalg::identity(self.dim))
    }

    /// Relative deviation of the closed-form determinant from the numerical one.
    pub fn det_residual(&self, p: &ChartPoint) -> f64 {
        let numeric = linalg::det(self.dim, &self.matrix_at(p));
        (numeric - Complex64::new(self.det_at(p), 0.0)).norm() / numeric.norm().max(1e-300)
    }

    /// `g(u, v) = Re Σ g_{μν̄} u_μ conj(v_ν)` for real tangent vectors.
    pub fn on_vectors(&self, p: &ChartPoint, u: &TangentVector, v: &TangentVector) -> f64 {
        let m = self.matrix_at(p);
        let n = self.dim;
        let mut acc = Complex64::new(0.0, 0.0);
        for mu in 0..n {
            for nu in 0..n {
                acc += m[mu * n + nu] * u.components()[mu] * v.components()[nu].conj();
            }
        }
        acc.re
    }
}

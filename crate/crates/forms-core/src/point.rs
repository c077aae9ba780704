//! Chart points, tangent vectors and seeded sampling of test points.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::FormsError;

/// A point of ℂ^{n+1} in the symmetric coordinates `z_1 … z_{n+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChartPoint {
    coords: Vec<Complex64>,
}

impl ChartPoint {
    pub fn new(coords: Vec<Complex64>) -> Result<Self, FormsError> {
        if coords.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(FormsError::NonFinite);
        }
        Ok(Self { coords })
    }

    /// Convenience constructor from `(re, im)` pairs.
    pub fn from_parts(parts: &[(f64, f64)]) -> Result<Self, FormsError> {
        Self::new(parts.iter().map(|&(re, im)| Complex64::new(re, im)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> Complex64 {
        self.coords[i]
    }

    /// `s = Σ |z_μ|²`.
    pub fn s(&self) -> f64 {
        self.coords.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Real coordinates `(x_1, y_1, x_2, y_2, …)`.
    pub fn real_coords(&self) -> Vec<f64> {
        self.coords.iter().flat_map(|c| [c.re, c.im]).collect()
    }

    pub fn from_real_coords(x: &[f64]) -> Result<Self, FormsError> {
        Self::new(x.chunks(2).map(|c| Complex64::new(c[0], c[1])).collect())
    }

    /// The point moved by `t·v` along a tangent vector.
    pub fn translate(&self, v: &TangentVector, t: f64) -> Self {
        let coords = self
            .coords
            .iter()
            .zip(v.components())
            .map(|(z, dz)| z + dz * t)
            .collect();
        Self { coords }
    }
}

/// A real tangent vector written through its holomorphic components
/// `v_μ = dz_μ(v)`; the antiholomorphic components are `conj(v_μ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentVector {
    components: Vec<Complex64>,
}

impl TangentVector {
    pub fn new(components: Vec<Complex64>) -> Self {
        Self { components }
    }

    pub fn components(&self) -> &[Complex64] {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    /// The vector `J v` for the standard complex structure.
    pub fn rotate(&self) -> Self {
        Self::new(self.components.iter().map(|c| c * Complex64::i()).collect())
    }
}

/// Region used for property sweeps.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleDomain {
    pub s_min: f64,
    pub s_max: f64,
    pub min_modulus: f64,
}

impl Default for SampleDomain {
    fn default() -> Self {
        Self { s_min: 0.2, s_max: 20.0, min_modulus: 1e-3 }
    }
}

impl SampleDomain {
    /// Draws `count` points of ℂ^{dim} with `s` log-uniform in
    /// `[s_min, s_max]`, an isotropic direction and every `|z_μ| ≥ min_modulus`.
    pub fn sample(&self, dim: usize, count: usize, seed: u64) -> Vec<ChartPoint> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let p = self.draw(dim, &mut rng);
            if p.coords.iter().all(|c| c.norm() >= self.min_modulus) {
                out.push(p);
            }
        }
        out
    }

    fn draw(&self, dim: usize, rng: &mut ChaCha8Rng) -> ChartPoint {
        let log_s = rng.random_range(self.s_min.ln()..=self.s_max.ln());
        let radius = log_s.exp().sqrt();
        let raw: Vec<Complex64> = (0..dim)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let norm = raw.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        ChartPoint { coords: raw.iter().map(|c| c * (radius / norm)).collect() }
    }
}

/// Seeded random tangent vectors with Gaussian components.
pub fn sample_tangents(dim: usize, count: usize, seed: u64) -> Vec<TangentVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            TangentVector::new(
                (0..dim)
                    .map(|_| {
                        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
                    })
                    .collect(),
            )
        })
        .collect()
}

/// Seeded Haar-random unitary matrices (row-major), from the QR
/// decomposition of a complex Gaussian matrix with the phases of `R`'s
/// diagonal folded back into `Q`.
pub fn sample_unitaries(dim: usize, count: usize, seed: u64) -> Vec<Vec<Complex64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let m = nalgebra::DMatrix::from_fn(dim, dim, |_, _| {
                Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
            });
            let qr = m.qr();
            let (mut q, r) = (qr.q(), qr.r());
            for j in 0..dim {
                let d = r[(j, j)];
                let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
                for i in 0..dim {
                    q[(i, j)] *= phase;
                }
            }
            q.transpose().as_slice().to_vec()
        })
        .collect()
}

/// `U·z` for a row-major unitary `U`.
pub fn apply_matrix(u: &[Complex64], z: &[Complex64]) -> Vec<Complex64> {
    let n = z.len();
    (0..n).map(|i| (0..n).map(|j| u[i * n + j] * z[j]).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_respect_domain() {
        let dom = SampleDomain::default();
        let pts = dom.sample(3, 200, 11);
        assert_eq!(pts.len(), 200);
        for p in &pts {
            let s = p.s();
            assert!(s >= 0.2 - 1e-12 && s <= 20.0 + 1e-12);
            assert!(p.coords().iter().all(|c| c.norm() >= 1e-3));
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let dom = SampleDomain::default();
        assert_eq!(dom.sample(2, 10, 5), dom.sample(2, 10, 5));
        assert_ne!(dom.sample(2, 10, 5), dom.sample(2, 10, 6));
    }

    #[test]
    fn rejects_nan() {
        assert!(ChartPoint::from_parts(&[(f64::NAN, 0.0)]).is_err());
    }

    #[test]
    fn unitaries_are_unitary() {
        for u in sample_unitaries(3, 5, 9) {
            let ut: Vec<Complex64> =
                (0..9).map(|k| u[(k % 3) * 3 + k / 3].conj()).collect();
            let prod = crate::linalg::matmul(3, &u, &ut);
            assert!(crate::linalg::max_abs_diff(&prod, &crate::linalg::identity(3)) < 1e-13);
        }
    }
}

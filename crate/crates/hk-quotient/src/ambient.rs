use forms_core::Complex64;

use crate::quaternion::Quaternion;

/// A point `(Z, W)` of `ℂ⁴`, identified with `q_a = Z_a + W_a j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AmbientPoint {
    pub z_big: [Complex64; 2],
    pub w_big: [Complex64; 2],
}

impl AmbientPoint {
    pub fn quaternions(&self) -> [Quaternion; 2] {
        [0, 1].map(|a| Quaternion::from_pair(self.z_big[a], self.w_big[a]))
    }

    /// Real coordinates `(Re Z₁, Im Z₁, …, Re W₂, Im W₂)`.
    pub fn real_coords(&self) -> [f64; 8] {
        let c = [self.z_big[0], self.z_big[1], self.w_big[0], self.w_big[1]];
        std::array::from_fn(|i| if i % 2 == 0 { c[i / 2].re } else { c[i / 2].im })
    }

    pub fn distance(&self, other: &Self) -> f64 {
        let (a, b) = (self.real_coords(), other.real_coords());
        a.iter().zip(&b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
    }
}

/// `μ_R = |Z|² − |W|² − 2√κ` and `μ_C = Z₁W₁ + Z₂W₂`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentMaps {
    pub real: f64,
    pub complex: Complex64,
}

impl MomentMaps {
    /// `(μ_R/2) i + Im μ_C j − Re μ_C k`, the quaternionic packaging.
    pub fn as_quaternion(&self) -> Quaternion {
        Quaternion::new(0.0, 0.5 * self.real, self.complex.im, -self.complex.re)
    }

    pub fn residual(&self) -> f64 {
        self.real.abs().max(self.complex.norm())
    }
}

pub fn moment_maps(p: &AmbientPoint, kappa: f64) -> MomentMaps {
    let sq = |c: &[Complex64; 2]| c[0].norm_sqr() + c[1].norm_sqr();
    MomentMaps {
        real: sq(&p.z_big) - sq(&p.w_big) - 2.0 * kappa.sqrt(),
        complex: p.z_big[0] * p.w_big[0] + p.z_big[1] * p.w_big[1],
    }
}

/// `½ Σ_a q_a i q̄_a − √κ i` by direct quaternion arithmetic.
pub fn quaternion_moment(p: &AmbientPoint, kappa: f64) -> Quaternion {
    p.quaternions()
        .iter()
        .fold(Quaternion::default(), |acc, &q| acc + (q * Quaternion::I * q.conj()).scale(0.5))
        - Quaternion::I.scale(kappa.sqrt())
}

/// `(Z, W) ↦ (e^{it} Z, e^{−it} W)`.
pub fn right_u1(p: &AmbientPoint, t: f64) -> AmbientPoint {
    let ph = Complex64::from_polar(1.0, t);
    AmbientPoint { z_big: p.z_big.map(|c| c * ph), w_big: p.w_big.map(|c| c / ph) }
}

/// `h·(Z, W) = (hZ, h̄W)` for a row-major 2×2 matrix `h`.
pub fn left_u2(h: &[Complex64; 4], p: &AmbientPoint) -> AmbientPoint {
    let mul = |m: [Complex64; 4], v: [Complex64; 2]| {
        [m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]]
    };
    AmbientPoint { z_big: mul(*h, p.z_big), w_big: mul(h.map(|c| c.conj()), p.w_big) }
}

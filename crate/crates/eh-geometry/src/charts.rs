use std::f64::consts::{PI, TAU};

use forms_core::{ChartPoint, Complex64};

use crate::error::EhError;
use crate::metric::EhParams;

const MIN_Z2: f64 = 1e-12;
const CUT_MARGIN: f64 = 1e-12;

/// Line-bundle chart: base coordinate `w = z₁/z₂`, fibre `ζ = s z₂/z̄₂`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BundlePoint {
    pub w: Complex64,
    pub zeta: Complex64,
}

impl BundlePoint {
    pub fn from_z(p: &ChartPoint) -> Result<Self, EhError> {
        let (z1, z2) = (p.coord(0), p.coord(1));
        if z2.norm() < MIN_Z2 {
            return Err(EhError::ChartSingular("bundle chart needs z2 != 0".into()));
        }
        Ok(Self { w: z1 / z2, zeta: p.s() * z2 / z2.conj() })
    }

    /// `(z₁, z₂) = √ζ (w, 1)/√(1+|w|²)` with the principal square root.
    /// Points whose `ζ` sits on the negative real axis are refused rather
    /// than assigned a sheet.
    pub fn to_z(&self) -> Result<ChartPoint, EhError> {
        if self.zeta.norm() == 0.0 {
            return Err(EhError::ChartSingular("zeta = 0 is the zero section".into()));
        }
        if (self.zeta.arg().abs() - PI).abs() < CUT_MARGIN {
            return Err(EhError::BranchCut(format!("arg zeta = {}", self.zeta.arg())));
        }
        let k = self.zeta.sqrt() / (1.0 + self.w.norm_sqr()).sqrt();
        Ok(ChartPoint::new(vec![k * self.w, k])?)
    }

    /// `|ζ|`, which equals `s`.
    pub fn fibre_modulus(&self) -> f64 {
        self.zeta.norm()
    }

    /// Whether `to_z ∘ from_z` returns the original point rather than its
    /// antipode `−z`: the principal root picks `arg z₂ ∈ (−π/2, π/2]`.
    pub fn on_principal_sheet(p: &ChartPoint) -> bool {
        let a = p.coord(1).arg();
        a > -PI / 2.0 && a <= PI / 2.0
    }
}

/// Bi-axial coordinates: `r = (s² + κ)^{1/4}`, `w = cot(θ/2)e^{iφ}`,
/// `arg ζ = ψ − φ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BiaxialPoint {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
    pub psi: f64,
}

impl BiaxialPoint {
    pub fn from_z(params: EhParams, p: &ChartPoint) -> Result<Self, EhError> {
        let b = BundlePoint::from_z(p)?;
        let s = b.fibre_modulus();
        let r = (s * s + params.kappa()).powf(0.25);
        let theta = 2.0 * 1f64.atan2(b.w.norm());
        let phi = b.w.arg().rem_euclid(TAU);
        let psi = (b.zeta.arg() + phi).rem_euclid(TAU);
        Ok(Self { r, theta, phi, psi })
    }

    /// Back to `(z₁, z₂)`, determined up to the ℤ₂ sign `z ↦ −z` that the
    /// `ψ ∈ [0, 2π)` range identifies.
    pub fn to_z(&self, params: EhParams) -> Result<ChartPoint, EhError> {
        let r4 = self.r.powi(4);
        if r4 <= params.kappa() {
            return Err(EhError::ChartSingular(format!("r = {} is not above the bolt", self.r)));
        }
        if self.theta <= 0.0 || self.theta >= PI {
            return Err(EhError::ChartSingular("theta at a pole".into()));
        }
        let big_r = (r4 - params.kappa()).sqrt();
        let w = Complex64::from_polar(1.0 / (self.theta / 2.0).tan(), self.phi);
        let chi = (self.psi - self.phi + PI).rem_euclid(TAU) - PI;
        BundlePoint { w, zeta: Complex64::from_polar(big_r, chi) }.to_z()
    }

    /// `∂(z₁, z₂)/∂(r, θ, φ, ψ)` by fourth-order central differences; the
    /// radial step shrinks near the bolt where `√(r⁴ − κ)` branches.
    pub fn jacobian(&self, params: EhParams) -> Result<[[Complex64; 2]; 4], EhError> {
        let base = self.as_array();
        let gap = self.r - params.kappa().powf(0.25);
        let mut out = [[Complex64::new(0.0, 0.0); 2]; 4];
        for (k, col) in out.iter_mut().enumerate() {
            let h = if k == 0 { 1e-3 * gap.min(1.0) } else { 1e-3 };
            let at = |t: f64| {
                let mut x = base;
                x[k] += t;
                Self::from_array(x).to_z(params)
            };
            let (p2, p1, m1, m2) = (at(2.0 * h)?, at(h)?, at(-h)?, at(-2.0 * h)?);
            for (i, c) in col.iter_mut().enumerate() {
                *c = (-p2.coord(i) + 8.0 * p1.coord(i) - 8.0 * m1.coord(i) + m2.coord(i)) / (12.0 * h);
            }
        }
        Ok(out)
    }

    /// Distance of `ψ − φ` from the branch cut of `√ζ`.
    pub fn cut_distance(&self) -> f64 {
        let chi = (self.psi - self.phi + PI).rem_euclid(TAU) - PI;
        PI - chi.abs()
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.r, self.theta, self.phi, self.psi]
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        Self { r: a[0], theta: a[1], phi: a[2], psi: a[3] }
    }
}

/// Left-invariant 1-forms on SU(2) with components along `(dθ, dφ, dψ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EtaForms {
    pub eta1: [f64; 3],
    pub eta2: [f64; 3],
    pub eta3: [f64; 3],
}

impl EtaForms {
    pub fn at(theta: f64, psi: f64) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = psi.sin_cos();
        Self {
            eta1: [sp, -cp * st, 0.0],
            eta2: [-cp, -sp * st, 0.0],
            eta3: [0.0, ct, 1.0],
        }
    }

    pub fn get(&self, i: usize) -> [f64; 3] {
        [self.eta1, self.eta2, self.eta3][i]
    }
}

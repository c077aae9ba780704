use eh_geometry::{eh_metric, EhParams};
use forms_core::{ChartPoint, Complex64, HermitianMetricField, TangentVector};

use crate::ambient::{left_u2, moment_maps, right_u1, AmbientPoint};
use crate::error::HkError;

/// `(z₁, z₂, ψ)` on the level set `μ = 0` for modulus `κ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LevelSetCoords {
    pub z: [Complex64; 2],
    pub psi: f64,
    kappa: f64,
}

impl LevelSetCoords {
    pub fn new(z: [Complex64; 2], psi: f64, kappa: f64) -> Result<Self, HkError> {
        if !(kappa >= 0.0 && kappa.is_finite()) {
            return Err(HkError::NegativeKappa(kappa));
        }
        let s = z[0].norm_sqr() + z[1].norm_sqr();
        if !(s > 0.0 && s.is_finite()) {
            return Err(HkError::NonPositiveS(s));
        }
        Ok(Self { z, psi, kappa })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn s(&self) -> f64 {
        self.z[0].norm_sqr() + self.z[1].norm_sqr()
    }

    fn params(&self) -> EhParams {
        EhParams::new(self.kappa).expect("kappa validated")
    }

    fn chart_point(&self) -> ChartPoint {
        ChartPoint::new(self.z.to_vec()).expect("finite coordinates")
    }

    fn real(&self) -> [f64; 5] {
        [self.z[0].re, self.z[0].im, self.z[1].re, self.z[1].im, self.psi]
    }

    fn from_real(x: [f64; 5], kappa: f64) -> Result<Self, HkError> {
        Self::new([Complex64::new(x[0], x[1]), Complex64::new(x[2], x[3])], x[4], kappa)
    }
}

/// A tangent vector `(dz₁, dz₂, dψ)` to the level-set coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LevelTangent {
    pub dz: [Complex64; 2],
    pub dpsi: f64,
}

impl LevelTangent {
    pub fn psi_direction() -> Self {
        Self { dz: [Complex64::new(0.0, 0.0); 2], dpsi: 1.0 }
    }

    fn real(&self) -> [f64; 5] {
        [self.dz[0].re, self.dz[0].im, self.dz[1].re, self.dz[1].im, self.dpsi]
    }
}

/// `Z = z e^{iψ} f^{1/2}`, `W = (−z₂, z₁) e^{−iψ} f^{−1/2}`.
pub fn embed(c: &LevelSetCoords) -> Result<AmbientPoint, HkError> {
    let f = c.params().profiles().small_f(c.s())?;
    let up = Complex64::from_polar(f.sqrt(), c.psi);
    let down = Complex64::from_polar(1.0 / f.sqrt(), -c.psi);
    Ok(AmbientPoint {
        z_big: [c.z[0] * up, c.z[1] * up],
        w_big: [-c.z[1] * down, c.z[0] * down],
    })
}

/// Central finite-difference stencils for the embedding Jacobian.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FdScheme {
    Central2 { step: f64 },
    Central4 { step: f64 },
}

impl Default for FdScheme {
    fn default() -> Self {
        FdScheme::Central2 { step: 1e-6 }
    }
}

impl FdScheme {
    fn step(&self) -> f64 {
        match *self {
            FdScheme::Central2 { step } | FdScheme::Central4 { step } => step,
        }
    }
}

/// `∂(Re Z₁, Im Z₁, …, Im W₂)/∂(Re z₁, Im z₁, Re z₂, Im z₂, ψ)`, row per
/// ambient coordinate.
pub fn embed_jacobian(c: &LevelSetCoords, scheme: FdScheme) -> Result<[[f64; 5]; 8], HkError> {
    let step = scheme.step();
    if 4.0 * step >= 0.1 * c.s().sqrt() {
        return Err(HkError::FdTooClose { s: c.s(), step });
    }
    let at = |j: usize, t: f64| -> Result<[f64; 8], HkError> {
        let mut x = c.real();
        x[j] += t;
        Ok(embed(&LevelSetCoords::from_real(x, c.kappa)?)?.real_coords())
    };
    let mut jac = [[0.0; 5]; 8];
    for j in 0..5 {
        let col: [f64; 8] = match scheme {
            FdScheme::Central2 { step: h } => {
                let (p, m) = (at(j, h)?, at(j, -h)?);
                std::array::from_fn(|i| (p[i] - m[i]) / (2.0 * h))
            }
            FdScheme::Central4 { step: h } => {
                let (p1, m1, p2, m2) = (at(j, h)?, at(j, -h)?, at(j, 2.0 * h)?, at(j, -2.0 * h)?);
                std::array::from_fn(|i| (8.0 * (p1[i] - m1[i]) - (p2[i] - m2[i])) / (12.0 * h))
            }
        };
        for (row, v) in jac.iter_mut().zip(col) {
            row[j] = v;
        }
    }
    Ok(jac)
}

/// Half the flat `ℂ⁴` metric pulled back along [`embed`], on a pair of tangents.
pub fn pulled_back_metric(
    c: &LevelSetCoords,
    u: &LevelTangent,
    v: &LevelTangent,
    scheme: FdScheme,
) -> Result<f64, HkError> {
    let jac = embed_jacobian(c, scheme)?;
    let push = |t: &LevelTangent| {
        let r = t.real();
        jac.map(|row| row.iter().zip(&r).map(|(a, b)| a * b).sum::<f64>())
    };
    let (pu, pv) = (push(u), push(v));
    Ok(0.5 * pu.iter().zip(&pv).map(|(a, b)| a * b).sum::<f64>())
}

/// Components `a_i` of `A = Σ a_i dz̄_i = √κ (z·dz̄) / (2 s² F)`.
pub fn quotient_potential(c: &LevelSetCoords) -> Result<[Complex64; 2], HkError> {
    let s = c.s();
    let coeff = c.kappa.sqrt() / (2.0 * s * s * c.params().profiles().big_f(s)?);
    Ok(c.z.map(|z| z * coeff))
}

fn eh_on(g: &HermitianMetricField, c: &LevelSetCoords, v: &LevelTangent) -> f64 {
    let t = TangentVector::new(v.dz.to_vec());
    g.on_vectors(&c.chart_point(), &t, &t)
}

/// `g_EH(v, v) + sF (dψ + i(A − Ā))(v)²`.
pub fn completed_square(c: &LevelSetCoords, v: &LevelTangent) -> Result<f64, HkError> {
    let g = eh_metric(c.params());
    completed_square_with(&g, c, v)
}

fn completed_square_with(
    g: &HermitianMetricField,
    c: &LevelSetCoords,
    v: &LevelTangent,
) -> Result<f64, HkError> {
    let a = quotient_potential(c)?;
    let a_of_v: Complex64 = a.iter().zip(&v.dz).map(|(ai, vi)| ai * vi.conj()).sum();
    let vertical = v.dpsi - 2.0 * a_of_v.im;
    let sf = c.s() * c.params().profiles().big_f(c.s())?;
    Ok(eh_on(g, c, v) + sf * vertical * vertical)
}

/// Recovers `A` from the `dψ`-cross terms of the pulled-back metric:
/// `i(A − Ā)(v) = ⟨∂_ψ, v⟩ / (sF)` for horizontal coordinate directions.
pub fn extracted_potential(
    c: &LevelSetCoords,
    scheme: FdScheme,
) -> Result<[Complex64; 2], HkError> {
    let sf = c.s() * c.params().profiles().big_f(c.s())?;
    let psi = LevelTangent::psi_direction();
    let one_form = |dz: [Complex64; 2]| -> Result<f64, HkError> {
        Ok(pulled_back_metric(c, &psi, &LevelTangent { dz, dpsi: 0.0 }, scheme)? / sf)
    };
    let mut out = [Complex64::new(0.0, 0.0); 2];
    for (i, slot) in out.iter_mut().enumerate() {
        let mut e = [Complex64::new(0.0, 0.0); 2];
        e[i] = Complex64::new(1.0, 0.0);
        let along_real = one_form(e)?;
        e[i] = Complex64::new(0.0, 1.0);
        let along_imag = one_form(e)?;
        // i(A − Ā)(v) = −2 Im A(v) with A(v) = Σ a_i conj(v_i)
        *slot = Complex64::new(0.5 * along_imag, -0.5 * along_real);
    }
    Ok(out)
}

/// Worst deviation between the pulled-back metric and the completed square.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct PullbackRecord {
    pub samples: usize,
    pub max_abs_error: f64,
    pub max_rel_error: f64,
}

pub fn pullback_check(
    c: &LevelSetCoords,
    tangents: &[LevelTangent],
    scheme: FdScheme,
) -> Result<PullbackRecord, HkError> {
    let g = eh_metric(c.params());
    let mut rec = PullbackRecord { samples: tangents.len(), ..Default::default() };
    for v in tangents {
        let lhs = pulled_back_metric(c, v, v, scheme)?;
        let rhs = completed_square_with(&g, c, v)?;
        let err = (lhs - rhs).abs();
        rec.max_abs_error = rec.max_abs_error.max(err);
        rec.max_rel_error = rec.max_rel_error.max(err / rhs.abs().max(f64::MIN_POSITIVE));
    }
    Ok(rec)
}

/// Compares `embed(h z, ψ)` with `h · embed(z, ψ)` up to the best right-`U(1)`
/// phase, and records the moment residuals of `h · embed(z, ψ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct U2Check {
    pub moment_before: f64,
    pub moment_after: f64,
    pub phase: f64,
    pub alignment: f64,
}

pub fn u2_equivariance(h: &[Complex64; 4], c: &LevelSetCoords) -> Result<U2Check, HkError> {
    let p = embed(c)?;
    let acted = left_u2(h, &p);
    let hz = [h[0] * c.z[0] + h[1] * c.z[1], h[2] * c.z[0] + h[3] * c.z[1]];
    let direct = embed(&LevelSetCoords::new(hz, c.psi, c.kappa)?)?;
    // maximise Re(e^{it} S) over the phase t
    let overlap: Complex64 = (0..2)
        .map(|i| acted.z_big[i] * direct.z_big[i].conj() + acted.w_big[i].conj() * direct.w_big[i])
        .sum();
    let phase = -overlap.arg();
    Ok(U2Check {
        moment_before: moment_maps(&p, c.kappa).residual(),
        moment_after: moment_maps(&acted, c.kappa).residual(),
        phase,
        alignment: right_u1(&acted, phase).distance(&direct),
    })
}

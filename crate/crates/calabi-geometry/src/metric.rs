use forms_core::{HermitianMetricField, ScalarField};

use crate::profile::CalabiParams;

/// `g_{μν̄} = F′ z̄_μ z_ν + F δ_{μν}` with unit determinant.
pub fn calabi_metric(params: CalabiParams) -> HermitianMetricField {
    let pr = params.profile();
    let (f, fp) = (pr.big_f_field(), pr.big_f_prime_field());
    let dim = params.dim();
    let g = (0..dim)
        .map(|mu| {
            (0..dim)
                .map(|nu| {
                    let off = &fp * ScalarField::zbar(mu) * ScalarField::z(nu);
                    if mu == nu {
                        off + &f
                    } else {
                        off
                    }
                })
                .collect()
        })
        .collect();
    HermitianMetricField::new(g, calabi_inverse(params), ScalarField::one())
}

/// `g^{ρν̄} = δ/F + κ z̄_ρ z_ν / (s^{n+2} F)`.
pub fn calabi_inverse(params: CalabiParams) -> Vec<Vec<ScalarField>> {
    let inv_f = params.profile().big_f_field().recip();
    let dim = params.dim();
    let s = ScalarField::s(dim);
    let k = params.kappa() * &inv_f * s.powi(-(params.n() as i32 + 2));
    (0..dim)
        .map(|rho| {
            (0..dim)
                .map(|nu| {
                    let off = &k * ScalarField::zbar(rho) * ScalarField::z(nu);
                    if rho == nu {
                        off + &inv_f
                    } else {
                        off
                    }
                })
                .collect()
        })
        .collect()
}

/// Closed form `Tr g⁻¹ = n/F + F^n`.
pub fn trace_inverse(params: CalabiParams, s: f64) -> f64 {
    let f = params.profile().big_f(s).unwrap_or(f64::NAN);
    params.n() as f64 / f + f.powi(params.n() as i32)
}

/// Closed form `z̄_μ z_ν g^{νμ̄} = s F^n`.
pub fn radial_contraction(params: CalabiParams, s: f64) -> f64 {
    s * params.profile().big_f(s).unwrap_or(f64::NAN).powi(params.n() as i32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use forms_core::ChartPoint;

    #[test]
    fn pinned_metric_n2() {
        let pa = CalabiParams::new(2, 7.0).unwrap();
        let g = calabi_metric(pa);
        let p = ChartPoint::from_parts(&[(1.0, 0.0), (0.0, 0.0), (0.0, 0.0)]).unwrap();
        let m = g.matrix_at(&p);
        for (k, want) in [(0, 0.25), (4, 2.0), (8, 2.0)] {
            assert!((m[k].re - want).abs() < 1e-15);
        }
        assert!((trace_inverse(pa, 1.0) - 5.0).abs() < 1e-14);
        assert!((radial_contraction(pa, 1.0) - 4.0).abs() < 1e-14);
    }
}

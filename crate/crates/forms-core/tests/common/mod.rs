#![allow(dead_code)]

use forms_core::{ChartPoint, Complex64, HermitianMetricField, SampleDomain, ScalarField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Two-dimensional EH-type metric written out inline so the engine can be
/// tested without the geometry crates.
pub fn eh(kappa: f64) -> HermitianMetricField {
    let s = ScalarField::s(2);
    let big_f = (ScalarField::one() + kappa * s.powi(-2)).sqrt();
    let f_prime = (big_f.recip() - &big_f) / &s;
    let mut g = vec![vec![ScalarField::zero(); 2]; 2];
    let mut ginv = vec![vec![ScalarField::zero(); 2]; 2];
    for mu in 0..2 {
        for nu in 0..2 {
            let zz = ScalarField::zbar(mu) * ScalarField::z(nu);
            g[mu][nu] = &f_prime * &zz;
            ginv[mu][nu] = kappa * &zz / (s.powi(3) * &big_f);
            if mu == nu {
                g[mu][nu] = &g[mu][nu] + &big_f;
                ginv[mu][nu] = &ginv[mu][nu] + big_f.recip();
            }
        }
    }
    HermitianMetricField::new(g, ginv, ScalarField::one())
}

pub fn points(count: usize, seed: u64) -> Vec<ChartPoint> {
    SampleDomain::default().sample(2, count, seed)
}

fn rc(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

/// A random smooth coefficient: low-degree polynomial in z, z̄ plus a
/// non-polynomial factor so chain rules get exercised.
pub fn random_coefficient(rng: &mut ChaCha8Rng) -> ScalarField {
    let mut acc = ScalarField::zero();
    for _ in 0..4 {
        let mut term = ScalarField::constant(rc(rng));
        for mu in 0..2 {
            term = term * ScalarField::z(mu).powi(rng.random_range(0..3));
            term = term * ScalarField::zbar(mu).powi(rng.random_range(0..3));
        }
        acc = acc + term;
    }
    let wobble = (ScalarField::constant(rc(rng) * 0.3) * ScalarField::z(0) * ScalarField::zbar(1)).exp();
    acc * wobble / ScalarField::s(2)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

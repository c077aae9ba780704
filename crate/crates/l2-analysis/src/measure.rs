use forms_core::{linalg, par, ChartPoint, Complex64, HermitianMetricField, TangentVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// Monte Carlo Riemannian volume of the Euclidean ball `|z − center| < radius`:
/// uniform samples in the ball weighted by `√det` of the real Gram matrix of
/// `g` on `{e_j, i e_j}`. Returns the estimate and its standard error.
pub fn coordinate_ball_volume(
    g: &HermitianMetricField,
    center: &ChartPoint,
    radius: f64,
    samples: usize,
    seed: u64,
) -> (f64, f64) {
    let m = center.dim();
    let real_dim = 2 * m;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<ChartPoint> = (0..samples)
        .map(|_| {
            let dir: Vec<f64> = (0..real_dim).map(|_| rng.sample(StandardNormal)).collect();
            let norm = dir.iter().map(|x| x * x).sum::<f64>().sqrt();
            let r = radius * rng.random::<f64>().powf(1.0 / real_dim as f64);
            let coords = (0..m)
                .map(|j| center.coord(j) + Complex64::new(dir[2 * j], dir[2 * j + 1]) * (r / norm))
                .collect();
            ChartPoint::new(coords).expect("finite sample")
        })
        .collect();
    let basis: Vec<TangentVector> = (0..real_dim)
        .map(|k| {
            let mut v = vec![Complex64::new(0.0, 0.0); m];
            v[k / 2] = if k % 2 == 0 { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 1.0) };
            TangentVector::new(v)
        })
        .collect();
    let weights = par::map(&pts, |p| {
        let gram: Vec<Complex64> = basis
            .iter()
            .flat_map(|u| basis.iter().map(|v| Complex64::new(g.on_vectors(p, u, v), 0.0)).collect::<Vec<_>>())
            .collect();
        linalg::det(real_dim, &gram).re.sqrt()
    });
    let flat = std::f64::consts::PI.powi(m as i32) * radius.powi(real_dim as i32)
        / (1..=m).map(|k| k as f64).product::<f64>();
    let mean = weights.iter().sum::<f64>() / samples as f64;
    let var = weights.iter().map(|w| (w - mean).powi(2)).sum::<f64>() / (samples as f64 - 1.0).max(1.0);
    (flat * mean, flat * (var / samples as f64).sqrt())
}

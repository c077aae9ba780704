//! Central finite differences, used only as a test oracle.

use num_complex::Complex64;

use crate::point::ChartPoint;

/// Step for a real coordinate of magnitude `x`.
pub fn fd_step(x: f64) -> f64 {
    1e-5 * x.abs().max(1.0)
}

/// Wirtinger derivatives `(∂_{z_μ}, ∂_{z̄_μ})` of `f` at `p` from central
/// differences in the real and imaginary directions.
pub fn fd_wirtinger<F>(f: F, p: &ChartPoint) -> (Vec<Complex64>, Vec<Complex64>)
where
    F: Fn(&ChartPoint) -> Complex64,
{
    let x = p.real_coords();
    let mut grad = vec![Complex64::new(0.0, 0.0); x.len()];
    for (k, g) in grad.iter_mut().enumerate() {
        let h = fd_step(x[k]);
        let mut xp = x.clone();
        let mut xm = x.clone();
        xp[k] += h;
        xm[k] -= h;
        let fp = f(&ChartPoint::from_real_coords(&xp).expect("finite"));
        let fm = f(&ChartPoint::from_real_coords(&xm).expect("finite"));
        *g = (fp - fm) / (2.0 * h);
    }
    let half = Complex64::new(0.5, 0.0);
    let i = Complex64::i();
    let dz = grad.chunks(2).map(|c| half * (c[0] - i * c[1])).collect();
    let dzb = grad.chunks(2).map(|c| half * (c[0] + i * c[1])).collect();
    (dz, dzb)
}

/// Central difference of a real function of one variable.
pub fn fd_derivative<F: Fn(f64) -> f64>(f: F, x: f64) -> f64 {
    let h = fd_step(x);
    (f(x + h) - f(x - h)) / (2.0 * h)
}

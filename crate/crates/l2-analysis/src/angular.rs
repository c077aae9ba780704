fn ln_factorial(k: u32) -> f64 {
    (1..=k).map(|j| (j as f64).ln()).sum()
}

/// Mean of `Π |z_i|^{2a_i} / s^{Σa}` over the unit sphere `S^{2n+1} ⊂ ℂ^{n+1}`:
/// `n! Π a_i! / (n + Σa)!`.
pub fn angular_average_multi(exponents: &[u32]) -> f64 {
    let n = exponents.len().saturating_sub(1) as u32;
    let total: u32 = exponents.iter().sum();
    let ln = ln_factorial(n) + exponents.iter().map(|&a| ln_factorial(a)).sum::<f64>()
        - ln_factorial(n + total);
    ln.exp()
}

/// The `ℂ²` case, `a! b! / (a + b + 1)!`.
pub fn angular_average(a: u32, b: u32) -> f64 {
    angular_average_multi(&[a, b])
}

/// `π^m / (m−1)!` with `m = dim`: `∫_{ℂ^m} G = π^m/(m−1)! ∫₀^∞ s^{m−1} ⟨G⟩(s) ds`.
pub fn sphere_constant(dim: usize) -> f64 {
    std::f64::consts::PI.powi(dim as i32) / ln_factorial(dim as u32 - 1).exp()
}

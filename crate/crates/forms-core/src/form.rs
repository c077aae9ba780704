//! Complex differential forms with canonical increasing multi-indices.
//!
//! A basis element is `dz_I ∧ dz̄_J` with `I`, `J` strictly increasing and the
//! holomorphic block written first. Every constructor normalises signs on
//! insertion, so two forms are equal exactly when their coefficient maps are.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;

use crate::error::FormsError;
use crate::field::{Evaluator, ScalarField, Wirtinger};
use crate::point::{ChartPoint, TangentVector};

/// Increasing holomorphic and antiholomorphic index lists (0-based).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisKey {
    pub holo: Vec<usize>,
    pub anti: Vec<usize>,
}

impl BasisKey {
    pub fn new(holo: Vec<usize>, anti: Vec<usize>) -> Self {
        Self { holo, anti }
    }

    pub fn degree(&self) -> (usize, usize) {
        (self.holo.len(), self.anti.len())
    }
}

/// Sorts `idx` in place and returns the permutation sign, or `None` when an
/// index repeats.
fn sort_with_sign(idx: &mut [usize]) -> Option<f64> {
    let mut sign = 1.0;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// `(dz_I ∧ dz̄_J) ∧ (dz_K ∧ dz̄_L)` as a signed canonical key.
fn wedge_keys(a: &BasisKey, b: &BasisKey) -> Option<(f64, BasisKey)> {
    // moving dz_K past dz̄_J
    let mut sign = if (a.anti.len() * b.holo.len()) % 2 == 0 { 1.0 } else { -1.0 };
    let mut holo: Vec<usize> = a.holo.iter().chain(&b.holo).copied().collect();
    let mut anti: Vec<usize> = a.anti.iter().chain(&b.anti).copied().collect();
    sign *= sort_with_sign(&mut holo)?;
    sign *= sort_with_sign(&mut anti)?;
    Some((sign, BasisKey { holo, anti }))
}

#[derive(Clone, Debug)]
pub struct FormField {
    dim: usize,
    terms: BTreeMap<BasisKey, ScalarField>,
}

/// A form evaluated at a point.
pub type FormValue = BTreeMap<BasisKey, Complex64>;

impl FormField {
    pub fn zero(dim: usize) -> Self {
        Self { dim, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, f: ScalarField) -> Self {
        let mut out = Self::zero(dim);
        out.insert(BasisKey::new(vec![], vec![]), f);
        out
    }

    /// `dz_μ` (0-based).
    pub fn dz(dim: usize, mu: usize) -> Self {
        Self::monomial(dim, &[mu], &[], ScalarField::one())
    }

    /// `dz̄_μ` (0-based).
    pub fn dzbar(dim: usize, mu: usize) -> Self {
        Self::monomial(dim, &[], &[mu], ScalarField::one())
    }

    /// `c · dz_{holo[0]} ∧ … ∧ dz̄_{anti[0]} ∧ …` with indices in any order.
    pub fn monomial(dim: usize, holo: &[usize], anti: &[usize], c: ScalarField) -> Self {
        let mut out = Self::zero(dim);
        let mut h = holo.to_vec();
        let mut a = anti.to_vec();
        assert!(h.iter().chain(&a).all(|&i| i < dim), "index out of chart dimension");
        if let (Some(s1), Some(s2)) = (sort_with_sign(&mut h), sort_with_sign(&mut a)) {
            out.insert(BasisKey::new(h, a), c * (s1 * s2));
        }
        out
    }

    /// `Σ coeffs[μ] dz̄_μ`.
    pub fn from_antiholomorphic(coeffs: Vec<ScalarField>) -> Self {
        let dim = coeffs.len();
        let mut out = Self::zero(dim);
        for (mu, c) in coeffs.into_iter().enumerate() {
            out.insert(BasisKey::new(vec![], vec![mu]), c);
        }
        out
    }

    /// `Σ coeffs[μ] dz_μ`.
    pub fn from_holomorphic(coeffs: Vec<ScalarField>) -> Self {
        let dim = coeffs.len();
        let mut out = Self::zero(dim);
        for (mu, c) in coeffs.into_iter().enumerate() {
            out.insert(BasisKey::new(vec![mu], vec![]), c);
        }
        out
    }

    /// `Σ coeffs[μ][ν] dz_μ ∧ dz̄_ν`.
    pub fn from_11_matrix(coeffs: Vec<Vec<ScalarField>>) -> Self {
        let dim = coeffs.len();
        let mut out = Self::zero(dim);
        for (mu, row) in coeffs.into_iter().enumerate() {
            for (nu, c) in row.into_iter().enumerate() {
                out.insert(BasisKey::new(vec![mu], vec![nu]), c);
            }
        }
        out
    }

    /// Adds `c` to the coefficient of a canonical key.
    fn insert(&mut self, key: BasisKey, c: ScalarField) {
        if c.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&key) {
            Some(prev) => prev + c,
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(key, merged);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &ScalarField)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a basis element given by canonical (increasing) indices.
    pub fn coefficient(&self, holo: &[usize], anti: &[usize]) -> ScalarField {
        self.terms
            .get(&BasisKey::new(holo.to_vec(), anti.to_vec()))
            .cloned()
            .unwrap_or_else(ScalarField::zero)
    }

    /// The set of bidegrees that carry a stored coefficient.
    pub fn degrees(&self) -> BTreeSet<(usize, usize)> {
        self.terms.keys().map(BasisKey::degree).collect()
    }

    /// The `(p, q)` component.
    pub fn part(&self, p: usize, q: usize) -> Self {
        self.filter(|k| k.degree() == (p, q))
    }

    /// The component with `p` holomorphic legs (any `q`).
    pub fn holo_part(&self, p: usize) -> Self {
        self.filter(|k| k.holo.len() == p)
    }

    /// All components of total degree `k`.
    pub fn degree_part(&self, k: usize) -> Self {
        self.filter(|key| key.holo.len() + key.anti.len() == k)
    }

    pub fn filter(&self, keep: impl Fn(&BasisKey) -> bool) -> Self {
        Self {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn map_coefficients(&self, f: impl Fn(&ScalarField) -> ScalarField) -> Self {
        let mut out = Self::zero(self.dim);
        for (k, c) in &self.terms {
            out.insert(k.clone(), f(c));
        }
        out
    }

    /// Multiplies every coefficient by a function.
    pub fn scale(&self, f: &ScalarField) -> Self {
        self.map_coefficients(|c| c * f)
    }

    pub fn scale_by(&self, c: Complex64) -> Self {
        self.scale(&ScalarField::constant(c))
    }

    pub fn add(&self, other: &Self) -> Result<Self, FormsError> {
        check_dims(self.dim, other.dim)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FormsError> {
        self.add(&other.scale_by(Complex64::new(-1.0, 0.0)))
    }

    /// Complex conjugate: `conj(c dz_I ∧ dz̄_J) = c̄ dz̄_I ∧ dz_J`.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (k, c) in &self.terms {
            let sign = if (k.holo.len() * k.anti.len()) % 2 == 0 { 1.0 } else { -1.0 };
            out.insert(BasisKey::new(k.anti.clone(), k.holo.clone()), c.conj() * sign);
        }
        out
    }

    /// Partial derivative of every coefficient.
    pub fn derivative(&self, dir: Wirtinger) -> Self {
        self.map_coefficients(|c| c.derivative(dir))
    }

    pub fn eval(&self, p: &ChartPoint) -> FormValue {
        let mut ev = Evaluator::new(p);
        self.eval_with(&mut ev)
    }

    pub fn eval_with(&self, ev: &mut Evaluator<'_>) -> FormValue {
        self.terms.iter().map(|(k, c)| (k.clone(), ev.eval(c))).collect()
    }

    /// Largest coefficient modulus at a point.
    pub fn max_abs_at(&self, p: &ChartPoint) -> f64 {
        self.eval(p).values().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Evaluates a `k`-form on `k` tangent vectors with the determinant
    /// convention `(α ∧ β)(u, v) = α(u)β(v) − α(v)β(u)`. Components of other
    /// total degree are ignored.
    pub fn on_vectors(&self, p: &ChartPoint, vectors: &[TangentVector]) -> Complex64 {
        let k = vectors.len();
        let mut ev = Evaluator::new(p);
        let mut total = Complex64::new(0.0, 0.0);
        for (key, c) in &self.terms {
            if key.holo.len() + key.anti.len() != k {
                continue;
            }
            let mut m = vec![Complex64::new(0.0, 0.0); k * k];
            for (row, &mu) in key.holo.iter().enumerate() {
                for (col, v) in vectors.iter().enumerate() {
                    m[row * k + col] = v.components()[mu];
                }
            }
            for (r, &mu) in key.anti.iter().enumerate() {
                let row = key.holo.len() + r;
                for (col, v) in vectors.iter().enumerate() {
                    m[row * k + col] = v.components()[mu].conj();
                }
            }
            total += ev.eval(c) * crate::linalg::det(k, &m);
        }
        total
    }

    /// Max over coefficients of `|self − other|` at a point.
    pub fn max_diff_at(&self, other: &Self, p: &ChartPoint) -> f64 {
        value_diff(&self.eval(p), &other.eval(p))
    }
}

/// Max coefficientwise modulus of the difference of two evaluated forms.
pub fn value_diff(a: &FormValue, b: &FormValue) -> f64 {
    let keys: BTreeSet<&BasisKey> = a.keys().chain(b.keys()).collect();
    let zero = Complex64::new(0.0, 0.0);
    keys.into_iter()
        .map(|k| (a.get(k).copied().unwrap_or(zero) - b.get(k).copied().unwrap_or(zero)).norm())
        .fold(0.0, f64::max)
}

/// Max coefficient modulus of an evaluated form.
pub fn value_max_abs(a: &FormValue) -> f64 {
    a.values().map(|v| v.norm()).fold(0.0, f64::max)
}

fn check_dims(a: usize, b: usize) -> Result<(), FormsError> {
    if a == b {
        Ok(())
    } else {
        Err(FormsError::DimensionMismatch { left: a, right: b })
    }
}

/// Graded-antisymmetric exterior product.
pub fn wedge(a: &FormField, b: &FormField) -> Result<FormField, FormsError> {
    check_dims(a.dim, b.dim)?;
    let mut out = FormField::zero(a.dim);
    for (ka, ca) in &a.terms {
        for (kb, cb) in &b.terms {
            if let Some((sign, key)) = wedge_keys(ka, kb) {
                out.insert(key, ca * cb * sign);
            }
        }
    }
    Ok(out)
}

/// Full exterior derivative `d = ∂ + ∂̄`; the result holds both the
/// `(p+1, q)` and `(p, q+1)` parts.
pub fn exterior_derivative(form: &FormField) -> FormField {
    let dim = form.dim;
    let mut out = FormField::zero(dim);
    for (key, c) in &form.terms {
        for mu in 0..dim {
            for (dir, leg) in [
                (Wirtinger::Z(mu), BasisKey::new(vec![mu], vec![])),
                (Wirtinger::Zbar(mu), BasisKey::new(vec![], vec![mu])),
            ] {
                let dc = c.derivative(dir);
                if dc.is_zero() {
                    continue;
                }
                if let Some((sign, k)) = wedge_keys(&leg, key) {
                    out.insert(k, dc * sign);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2() -> ChartPoint {
        ChartPoint::from_parts(&[(0.4, -0.3), (1.1, 0.6)]).unwrap()
    }

    #[test]
    fn antisymmetry_of_antiholomorphic_legs() {
        let a = wedge(&FormField::dzbar(2, 0), &FormField::dzbar(2, 1)).unwrap();
        let b = wedge(&FormField::dzbar(2, 1), &FormField::dzbar(2, 0)).unwrap();
        assert_eq!(a.add(&b).unwrap().max_abs_at(&p2()), 0.0);
        assert_eq!(a.coefficient(&[], &[0, 1]).eval(&p2()).re, 1.0);
    }

    #[test]
    fn odd_form_squares_to_zero() {
        let u = FormField::from_antiholomorphic(vec![ScalarField::z(0), ScalarField::zbar(1)])
            .add(&FormField::dz(2, 1))
            .unwrap();
        assert!(wedge(&u, &u).unwrap().max_abs_at(&p2()) < 1e-15);
    }

    #[test]
    fn mixed_wedge_degree_and_sign() {
        let t = wedge(&FormField::dzbar(2, 0), &FormField::dzbar(2, 1)).unwrap();
        let w = wedge(&FormField::dz(2, 0), &t).unwrap();
        assert_eq!(w.degrees(), BTreeSet::from([(1, 2)]));
        assert_eq!(w.coefficient(&[0], &[0, 1]).eval(&p2()).re, 1.0);
        // dz̄₁ ∧ dz₁ = −dz₁ ∧ dz̄₁
        let v = wedge(&FormField::dzbar(2, 0), &FormField::dz(2, 0)).unwrap();
        assert_eq!(v.coefficient(&[0], &[0]).eval(&p2()).re, -1.0);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert!(wedge(&FormField::dz(2, 0), &FormField::dz(3, 0)).is_err());
    }

    #[test]
    fn d_of_s() {
        let ds = exterior_derivative(&FormField::scalar(2, ScalarField::s(2)));
        let p = p2();
        for mu in 0..2 {
            let a = ds.coefficient(&[mu], &[]).eval(&p);
            let b = ds.coefficient(&[], &[mu]).eval(&p);
            assert!((a - p.coord(mu).conj()).norm() < 1e-15);
            assert!((b - p.coord(mu)).norm() < 1e-15);
        }
        assert!(exterior_derivative(&FormField::dzbar(2, 0)).is_empty());
    }

    #[test]
    fn conj_of_11_form() {
        // conj(dz₁ ∧ dz̄₂) = dz̄₁ ∧ dz₂ = −dz₂ ∧ dz̄₁
        let f = FormField::monomial(2, &[0], &[1], ScalarField::i());
        let g = f.conj();
        assert_eq!(g.coefficient(&[1], &[0]).eval(&p2()), Complex64::new(0.0, 1.0));
    }

    #[test]
    fn evaluation_on_real_vectors() {
        // (i/2) dz ∧ dz̄ = dx ∧ dy in one complex dimension
        let w = FormField::monomial(1, &[0], &[0], ScalarField::constant(Complex64::new(0.0, 0.5)));
        let p = ChartPoint::from_parts(&[(0.3, 0.1)]).unwrap();
        let ex = TangentVector::new(vec![Complex64::new(1.0, 0.0)]);
        let ey = TangentVector::new(vec![Complex64::new(0.0, 1.0)]);
        let v = w.on_vectors(&p, &[ex, ey]);
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }
}

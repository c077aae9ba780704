//! Closed-form complex scalar fields with exact Wirtinger derivatives.
//!
//! A [`ScalarField`] is an immutable expression DAG over the coordinates
//! `z_μ`, their conjugates and a few elementary functions. Differentiation
//! produces a new field, so derivatives of any order are available without
//! finite differences.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex64;

use crate::point::ChartPoint;

/// A Wirtinger direction `∂/∂z_μ` or `∂/∂z̄_μ` (0-based index).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Wirtinger {
    Z(usize),
    Zbar(usize),
}

impl Wirtinger {
    pub fn conj(self) -> Self {
        match self {
            Wirtinger::Z(i) => Wirtinger::Zbar(i),
            Wirtinger::Zbar(i) => Wirtinger::Z(i),
        }
    }
}

/// A real function of one real variable whose logarithmic derivative is
/// itself expressible as a field. Used for profiles such as `f_n(s)` that are
/// only known through their ODE.
pub trait RadialProfile: Send + Sync + fmt::Debug {
    fn value(&self, s: f64) -> f64;
    /// `d/ds log(value)` evaluated on the field `arg`.
    fn log_rate(&self, arg: &ScalarField) -> ScalarField;
}

#[derive(Clone)]
pub struct ScalarField(Arc<Node>);

enum Node {
    Const(Complex64),
    Coord(usize),
    ConjCoord(usize),
    Sum(ScalarField, ScalarField),
    Product(ScalarField, ScalarField),
    Recip(ScalarField),
    Powi(ScalarField, i32),
    Powf(ScalarField, f64),
    Exp(ScalarField),
    Ln(ScalarField),
    Conj(ScalarField),
    Radial(Arc<dyn RadialProfile>, ScalarField),
}

impl fmt::Debug for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Node::Const(c) => write!(f, "{c}"),
            Node::Coord(i) => write!(f, "z{}", i + 1),
            Node::ConjCoord(i) => write!(f, "zb{}", i + 1),
            Node::Sum(a, b) => write!(f, "({a:?} + {b:?})"),
            Node::Product(a, b) => write!(f, "{a:?}*{b:?}"),
            Node::Recip(a) => write!(f, "1/{a:?}"),
            Node::Powi(a, k) => write!(f, "{a:?}^{k}"),
            Node::Powf(a, p) => write!(f, "{a:?}^{p}"),
            Node::Exp(a) => write!(f, "exp({a:?})"),
            Node::Ln(a) => write!(f, "ln({a:?})"),
            Node::Conj(a) => write!(f, "conj({a:?})"),
            Node::Radial(p, a) => write!(f, "{p:?}({a:?})"),
        }
    }
}

impl ScalarField {
    fn node(n: Node) -> Self {
        ScalarField(Arc::new(n))
    }

    fn key(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    pub fn constant(c: Complex64) -> Self {
        Self::node(Node::Const(c))
    }

    pub fn real(x: f64) -> Self {
        Self::constant(Complex64::new(x, 0.0))
    }

    pub fn zero() -> Self {
        Self::real(0.0)
    }

    pub fn one() -> Self {
        Self::real(1.0)
    }

    pub fn i() -> Self {
        Self::constant(Complex64::i())
    }

    /// The coordinate `z_μ` (0-based).
    pub fn z(mu: usize) -> Self {
        Self::node(Node::Coord(mu))
    }

    /// The conjugate coordinate `z̄_μ` (0-based).
    pub fn zbar(mu: usize) -> Self {
        Self::node(Node::ConjCoord(mu))
    }

    /// `s = Σ z_μ z̄_μ` on a chart of complex dimension `dim`.
    pub fn s(dim: usize) -> Self {
        (0..dim).fold(Self::zero(), |acc, mu| acc + Self::z(mu) * Self::zbar(mu))
    }

    /// The monomial `Π z_μ^{e_μ}`.
    pub fn monomial(exponents: &[u32]) -> Self {
        exponents
            .iter()
            .enumerate()
            .fold(Self::one(), |acc, (mu, &e)| acc * Self::z(mu).powi(e as i32))
    }

    pub fn as_const(&self) -> Option<Complex64> {
        match &*self.0 {
            Node::Const(c) => Some(*c),
            _ => None,
        }
    }

    /// True only for a literal zero constant.
    pub fn is_zero(&self) -> bool {
        self.as_const().is_some_and(|c| c == Complex64::new(0.0, 0.0))
    }

    fn is_one(&self) -> bool {
        self.as_const().is_some_and(|c| c == Complex64::new(1.0, 0.0))
    }

    pub fn recip(&self) -> Self {
        match &*self.0 {
            Node::Const(c) => Self::constant(c.inv()),
            Node::Recip(a) => a.clone(),
            _ => Self::node(Node::Recip(self.clone())),
        }
    }

    pub fn powi(&self, k: i32) -> Self {
        match (k, &*self.0) {
            (0, _) => Self::one(),
            (1, _) => self.clone(),
            (-1, _) => self.recip(),
            (_, Node::Const(c)) => Self::constant(c.powi(k)),
            (_, Node::Powi(a, j)) => a.powi(j * k),
            _ => Self::node(Node::Powi(self.clone(), k)),
        }
    }

    /// Principal-branch real power.
    pub fn powf(&self, p: f64) -> Self {
        if p == 0.0 {
            return Self::one();
        }
        if p == 1.0 {
            return self.clone();
        }
        match &*self.0 {
            Node::Const(c) => Self::constant(c.powf(p)),
            _ => Self::node(Node::Powf(self.clone(), p)),
        }
    }

    pub fn sqrt(&self) -> Self {
        self.powf(0.5)
    }

    pub fn exp(&self) -> Self {
        match &*self.0 {
            Node::Const(c) => Self::constant(c.exp()),
            _ => Self::node(Node::Exp(self.clone())),
        }
    }

    pub fn ln(&self) -> Self {
        match &*self.0 {
            Node::Const(c) => Self::constant(c.ln()),
            _ => Self::node(Node::Ln(self.clone())),
        }
    }

    /// `asinh(x) = ln(x + √(1 + x²))`.
    pub fn asinh(&self) -> Self {
        (self + (Self::one() + self * self).sqrt()).ln()
    }

    pub fn conj(&self) -> Self {
        match &*self.0 {
            Node::Const(c) => Self::constant(c.conj()),
            Node::Coord(i) => Self::zbar(*i),
            Node::ConjCoord(i) => Self::z(*i),
            Node::Conj(a) => a.clone(),
            _ => Self::node(Node::Conj(self.clone())),
        }
    }

    /// Applies a radial profile to this (real-valued) field.
    pub fn radial(profile: Arc<dyn RadialProfile>, arg: &ScalarField) -> Self {
        Self::node(Node::Radial(profile, arg.clone()))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::constant(c) * self
    }

    pub fn eval(&self, p: &ChartPoint) -> Complex64 {
        Evaluator::new(p).eval(self)
    }

    /// Derivative in one Wirtinger direction.
    pub fn derivative(&self, dir: Wirtinger) -> Self {
        self.derive_cached(dir, &mut HashMap::new())
    }

    pub fn d_z(&self, mu: usize) -> Self {
        self.derivative(Wirtinger::Z(mu))
    }

    pub fn d_zbar(&self, mu: usize) -> Self {
        self.derivative(Wirtinger::Zbar(mu))
    }

    /// All `∂_{z_μ}` evaluated at a point.
    pub fn grad_z_at(&self, p: &ChartPoint) -> Vec<Complex64> {
        (0..p.dim()).map(|mu| self.d_z(mu).eval(p)).collect()
    }

    /// All `∂_{z̄_μ}` evaluated at a point.
    pub fn grad_zbar_at(&self, p: &ChartPoint) -> Vec<Complex64> {
        (0..p.dim()).map(|mu| self.d_zbar(mu).eval(p)).collect()
    }

    fn derive_cached(&self, dir: Wirtinger, cache: &mut HashMap<usize, ScalarField>) -> Self {
        if let Some(hit) = cache.get(&self.key()) {
            return hit.clone();
        }
        let out = match &*self.0 {
            Node::Const(_) => Self::zero(),
            Node::Coord(i) => match dir {
                Wirtinger::Z(j) if j == *i => Self::one(),
                _ => Self::zero(),
            },
            Node::ConjCoord(i) => match dir {
                Wirtinger::Zbar(j) if j == *i => Self::one(),
                _ => Self::zero(),
            },
            Node::Sum(a, b) => a.derive_cached(dir, cache) + b.derive_cached(dir, cache),
            Node::Product(a, b) => {
                let da = a.derive_cached(dir, cache);
                let db = b.derive_cached(dir, cache);
                da * b + a * db
            }
            Node::Recip(a) => {
                let da = a.derive_cached(dir, cache);
                -(da * a.powi(-2))
            }
            Node::Powi(a, k) => {
                let da = a.derive_cached(dir, cache);
                Self::real(*k as f64) * a.powi(k - 1) * da
            }
            Node::Powf(a, pw) => {
                let da = a.derive_cached(dir, cache);
                Self::real(*pw) * a.powf(pw - 1.0) * da
            }
            Node::Exp(a) => {
                let da = a.derive_cached(dir, cache);
                self * da
            }
            Node::Ln(a) => {
                let da = a.derive_cached(dir, cache);
                da * a.recip()
            }
            // ∂_z conj(a) = conj(∂_z̄ a); the cache is keyed per direction so
            // the conjugate direction gets a fresh one.
            Node::Conj(a) => a.derivative(dir.conj()).conj(),
            Node::Radial(profile, a) => {
                let da = a.derive_cached(dir, cache);
                self * profile.log_rate(a) * da
            }
        };
        cache.insert(self.key(), out.clone());
        out
    }
}

/// Evaluates fields at one point, sharing work across common subexpressions.
pub struct Evaluator<'p> {
    point: &'p ChartPoint,
    cache: HashMap<usize, Complex64>,
    // keeps every visited node alive so cached addresses cannot be reused
    pins: Vec<ScalarField>,
}

impl<'p> Evaluator<'p> {
    pub fn new(point: &'p ChartPoint) -> Self {
        Self { point, cache: HashMap::new(), pins: Vec::new() }
    }

    pub fn point(&self) -> &ChartPoint {
        self.point
    }

    pub fn eval(&mut self, f: &ScalarField) -> Complex64 {
        if let Some(v) = self.cache.get(&f.key()) {
            return *v;
        }
        let v = match &*f.0 {
            Node::Const(c) => *c,
            Node::Coord(i) => self.point.coord(*i),
            Node::ConjCoord(i) => self.point.coord(*i).conj(),
            Node::Sum(a, b) => self.eval(a) + self.eval(b),
            Node::Product(a, b) => self.eval(a) * self.eval(b),
            Node::Recip(a) => self.eval(a).inv(),
            Node::Powi(a, k) => self.eval(a).powi(*k),
            Node::Powf(a, p) => {
                let x = self.eval(a);
                if x.im == 0.0 && x.re > 0.0 {
                    Complex64::new(x.re.powf(*p), 0.0)
                } else {
                    x.powf(*p)
                }
            }
            Node::Exp(a) => self.eval(a).exp(),
            Node::Ln(a) => {
                let x = self.eval(a);
                if x.im == 0.0 && x.re > 0.0 {
                    Complex64::new(x.re.ln(), 0.0)
                } else {
                    x.ln()
                }
            }
            Node::Conj(a) => self.eval(a).conj(),
            Node::Radial(profile, a) => Complex64::new(profile.value(self.eval(a).re), 0.0),
        };
        self.cache.insert(f.key(), v);
        self.pins.push(f.clone());
        v
    }
}

fn sum(a: &ScalarField, b: &ScalarField) -> ScalarField {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if let (Some(x), Some(y)) = (a.as_const(), b.as_const()) {
        return ScalarField::constant(x + y);
    }
    ScalarField::node(Node::Sum(a.clone(), b.clone()))
}

fn product(a: &ScalarField, b: &ScalarField) -> ScalarField {
    if a.is_zero() || b.is_zero() {
        return ScalarField::zero();
    }
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() {
        return a.clone();
    }
    if let (Some(x), Some(y)) = (a.as_const(), b.as_const()) {
        return ScalarField::constant(x * y);
    }
    ScalarField::node(Node::Product(a.clone(), b.clone()))
}

fn negate(a: &ScalarField) -> ScalarField {
    product(&ScalarField::real(-1.0), a)
}

macro_rules! binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<ScalarField> for ScalarField {
            type Output = ScalarField;
            fn $method(self, rhs: ScalarField) -> ScalarField {
                $body(&self, &rhs)
            }
        }
        impl $trait<&ScalarField> for ScalarField {
            type Output = ScalarField;
            fn $method(self, rhs: &ScalarField) -> ScalarField {
                $body(&self, rhs)
            }
        }
        impl $trait<ScalarField> for &ScalarField {
            type Output = ScalarField;
            fn $method(self, rhs: ScalarField) -> ScalarField {
                $body(self, &rhs)
            }
        }
        impl $trait<&ScalarField> for &ScalarField {
            type Output = ScalarField;
            fn $method(self, rhs: &ScalarField) -> ScalarField {
                $body(self, rhs)
            }
        }
        impl $trait<f64> for ScalarField {
            type Output = ScalarField;
            fn $method(self, rhs: f64) -> ScalarField {
                $body(&self, &ScalarField::real(rhs))
            }
        }
        impl $trait<f64> for &ScalarField {
            type Output = ScalarField;
            fn $method(self, rhs: f64) -> ScalarField {
                $body(self, &ScalarField::real(rhs))
            }
        }
        impl $trait<ScalarField> for f64 {
            type Output = ScalarField;
            fn $method(self, rhs: ScalarField) -> ScalarField {
                $body(&ScalarField::real(self), &rhs)
            }
        }
        impl $trait<&ScalarField> for f64 {
            type Output = ScalarField;
            fn $method(self, rhs: &ScalarField) -> ScalarField {
                $body(&ScalarField::real(self), rhs)
            }
        }
        impl $trait<Complex64> for ScalarField {
            type Output = ScalarField;
            fn $method(self, rhs: Complex64) -> ScalarField {
                $body(&self, &ScalarField::constant(rhs))
            }
        }
        impl $trait<Complex64> for &ScalarField {
            type Output = ScalarField;
            fn $method(self, rhs: Complex64) -> ScalarField {
                $body(self, &ScalarField::constant(rhs))
            }
        }
    };
}

binop!(Add, add, sum);
binop!(Mul, mul, product);
binop!(Sub, sub, |a: &ScalarField, b: &ScalarField| sum(a, &negate(b)));
binop!(Div, div, |a: &ScalarField, b: &ScalarField| product(a, &b.recip()));

impl Neg for ScalarField {
    type Output = ScalarField;
    fn neg(self) -> ScalarField {
        negate(&self)
    }
}

impl Neg for &ScalarField {
    type Output = ScalarField;
    fn neg(self) -> ScalarField {
        negate(self)
    }
}

impl From<f64> for ScalarField {
    fn from(x: f64) -> Self {
        ScalarField::real(x)
    }
}

impl From<Complex64> for ScalarField {
    fn from(c: Complex64) -> Self {
        ScalarField::constant(c)
    }
}

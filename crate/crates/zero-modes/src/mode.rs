use calabi_geometry::CalabiParams;
use eh_geometry::EhParams;

use crate::error::ZeroModeError;

fn check_common(ell: i64, kappa: f64) -> Result<(), ZeroModeError> {
    if ell < 0 {
        return Err(ZeroModeError::NegativeEll(ell));
    }
    if !(kappa >= 0.0 && kappa.is_finite()) {
        return Err(ZeroModeError::NegativeKappa(kappa));
    }
    Ok(())
}

/// An Eguchi-Hanson mode labelled by half-integers `(N, m)`, stored doubled.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EhModeSpec {
    two_n: u32,
    two_m: i32,
    ell: i64,
    kappa: f64,
}

impl EhModeSpec {
    /// `two_n = 2N`, `two_m = 2m`; needs `|m| ≤ N` and `N − m ∈ ℤ`.
    pub fn new(two_n: u32, two_m: i32, ell: i64, kappa: f64) -> Result<Self, ZeroModeError> {
        check_common(ell, kappa)?;
        if two_m.unsigned_abs() > two_n || (two_n as i32 - two_m) % 2 != 0 {
            return Err(ZeroModeError::InvalidSpec(format!(
                "(2N, 2m) = ({two_n}, {two_m}) needs |m| <= N and N - m integral"
            )));
        }
        Ok(Self { two_n, two_m, ell, kappa })
    }

    /// Every admissible `m` for the given `N`.
    pub fn multiplet(two_n: u32, ell: i64, kappa: f64) -> Result<Vec<Self>, ZeroModeError> {
        (0..=two_n)
            .map(|k| Self::new(two_n, 2 * k as i32 - two_n as i32, ell, kappa))
            .collect()
    }

    pub fn two_n(&self) -> u32 {
        self.two_n
    }

    pub fn two_m(&self) -> i32 {
        self.two_m
    }

    pub fn big_n(&self) -> f64 {
        self.two_n as f64 / 2.0
    }

    pub fn m(&self) -> f64 {
        self.two_m as f64 / 2.0
    }

    pub fn ell(&self) -> i64 {
        self.ell
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// `(N − m, N + m)`.
    pub fn exponents(&self) -> [u32; 2] {
        let n = self.two_n as i32;
        [((n - self.two_m) / 2) as u32, ((n + self.two_m) / 2) as u32]
    }

    pub fn params(&self) -> EhParams {
        EhParams::new(self.kappa).expect("kappa validated")
    }
}

/// A mode on the Calabi space with monomial prefactor `Π z_i^{a_i}`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralModeSpec {
    params: CalabiParams,
    exponents: Vec<u32>,
    ell: i64,
}

impl GeneralModeSpec {
    pub fn new(n: usize, exponents: Vec<u32>, ell: i64, kappa: f64) -> Result<Self, ZeroModeError> {
        check_common(ell, kappa)?;
        let params = CalabiParams::new(n, kappa)?;
        if exponents.len() != params.dim() {
            return Err(ZeroModeError::InvalidSpec(format!(
                "expected {} exponents for n = {n}, got {}",
                params.dim(),
                exponents.len()
            )));
        }
        Ok(Self { params, exponents, ell })
    }

    pub fn params(&self) -> CalabiParams {
        self.params
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Polynomial degree `δ`.
    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn ell(&self) -> i64 {
        self.ell
    }

    /// Every exponent vector of total degree `degree` in `n + 1` variables.
    pub fn all_of_degree(
        n: usize,
        degree: u32,
        ell: i64,
        kappa: f64,
    ) -> Result<Vec<Self>, ZeroModeError> {
        fn rec(left: usize, degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if left == 1 {
                prefix.push(degree);
                out.push(prefix.clone());
                prefix.pop();
                return;
            }
            for a in 0..=degree {
                prefix.push(a);
                rec(left - 1, degree - a, prefix, out);
                prefix.pop();
            }
        }
        let mut all = Vec::new();
        rec(n + 1, degree, &mut Vec::new(), &mut all);
        all.into_iter().map(|e| Self::new(n, e, ell, kappa)).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ZeroModeSpec {
    Eh(EhModeSpec),
    General(GeneralModeSpec),
}

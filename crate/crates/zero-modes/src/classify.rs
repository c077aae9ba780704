use std::fmt;

use crate::error::ZeroModeError;
use crate::mode::EhModeSpec;

/// Square-integrability of a mode, decided from its radial exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NormClass {
    Normalisable,
    LogDivergent,
    PowerDivergentAtZero,
    DivergentAtInfinity,
}

impl fmt::Display for NormClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NormClass::Normalisable => "Normalisable",
            NormClass::LogDivergent => "LogDivergent",
            NormClass::PowerDivergentAtZero => "PowerDivergentAtZero",
            NormClass::DivergentAtInfinity => "DivergentAtInfinity",
        })
    }
}

impl NormClass {
    pub fn is_finite(self) -> bool {
        self == NormClass::Normalisable
    }
}

/// Near the bolt `|σ|² dvol ~ s^{ℓ−δ−1} ds`; at infinity every mode decays
/// like `s^{−δ−n−1}`, so only the bolt exponent matters.
fn from_bolt_exponent(degree: u32, ell: i64) -> Result<NormClass, ZeroModeError> {
    if ell < 0 {
        return Err(ZeroModeError::NegativeEll(ell));
    }
    Ok(match (degree as i64).cmp(&ell) {
        std::cmp::Ordering::Less => NormClass::Normalisable,
        std::cmp::Ordering::Equal => NormClass::LogDivergent,
        std::cmp::Ordering::Greater => NormClass::PowerDivergentAtZero,
    })
}

/// Eguchi-Hanson modes are L² iff `2N < ℓ`.
pub fn classify_eh(two_n: u32, ell: i64) -> Result<NormClass, ZeroModeError> {
    from_bolt_exponent(two_n, ell)
}

/// General-`n` modes of degree `δ` are L² iff `δ < ℓ`.
pub fn classify_general(degree: u32, ell: i64, n: usize) -> Result<NormClass, ZeroModeError> {
    if n == 0 {
        return Err(ZeroModeError::InvalidSpec("n must be at least 1".into()));
    }
    from_bolt_exponent(degree, ell)
}

pub fn multiplet_dim(two_n: u32) -> u32 {
    two_n + 1
}

/// Number of normalisable modes for twist `ℓ`, by enumeration.
pub fn count_eh(ell: i64) -> Result<usize, ZeroModeError> {
    let mut total = 0;
    for two_n in 0..=(2 * ell.max(0) as u32 + 2) {
        if classify_eh(two_n, ell)?.is_finite() {
            total += EhModeSpec::multiplet(two_n, ell, 1.0)?.len();
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_classes() {
        assert_eq!(classify_eh(0, 1).unwrap(), NormClass::Normalisable);
        assert_eq!(classify_eh(0, 0).unwrap(), NormClass::LogDivergent);
        assert_eq!(classify_eh(2, 1).unwrap(), NormClass::PowerDivergentAtZero);
        assert_eq!(classify_general(0, 1, 3).unwrap(), NormClass::Normalisable);
        assert_eq!(classify_general(2, 2, 2).unwrap(), NormClass::LogDivergent);
        assert!(classify_eh(0, -1).is_err());
    }

    #[test]
    fn counts() {
        for ell in 0..=8 {
            assert_eq!(count_eh(ell).unwrap() as i64, ell * (ell + 1) / 2);
        }
        assert_eq!(multiplet_dim(1), 2);
        assert_eq!(multiplet_dim(6), 7);
    }
}

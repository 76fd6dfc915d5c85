//! Truncated power series coefficients for feeding the explorer.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::family::FamilySpec;

/// Coefficients `t_0..t_degree` of the family's series
/// `2 - 1/(1-X) - sum (a_i - 1) X^(i-1)`.
pub fn family_series(spec: &FamilySpec, degree: usize) -> Vec<BigInt> {
    (0..=degree)
        .map(|j| match j {
            0 => BigInt::one(),
            j if j < spec.q() => BigInt::from(-spec.a_at(j + 1)),
            _ => -BigInt::one(),
        })
        .collect()
}

/// Coefficients `t_0..t_degree` of `numerator / denominator` expanded at 0.
///
/// Both polynomials are given low degree first. The denominator's constant
/// term must be a unit so the expansion stays integral.
pub fn rational_series(numerator: &[BigInt], denominator: &[BigInt], degree: usize) -> Result<Vec<BigInt>> {
    let lead = denominator.first().ok_or(Error::EmptyCoefficients)?;
    if !lead.abs().is_one() {
        return Err(Error::NonUnitDenominator(lead.clone()));
    }
    let mut out: Vec<BigInt> = Vec::with_capacity(degree + 1);
    for n in 0..=degree {
        let mut acc = numerator.get(n).cloned().unwrap_or_else(BigInt::zero);
        for (i, d) in denominator.iter().enumerate().skip(1).take(n) {
            acc -= d * &out[n - i];
        }
        // lead is +-1, so dividing is multiplying
        out.push(acc * lead);
    }
    Ok(out)
}

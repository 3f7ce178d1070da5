use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Polynomial, PowerSeries, SeriesError};

/// `numerator / denominator` with the denominator's constant term equal to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalGF {
    /// Normalizes a denominator constant of -1 by negating both sides; any
    /// other constant other than 1 is rejected.
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self, SeriesError> {
        let c0 = denominator.coeff(0);
        if c0.is_one() {
            Ok(RationalGF {
                numerator,
                denominator,
            })
        } else if c0 == -BigInt::one() {
            Ok(RationalGF {
                numerator: -&numerator,
                denominator: -&denominator,
            })
        } else {
            Err(SeriesError::NonUnitDenominator(c0.to_string()))
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    /// `a_0..=a_order` via `a_n = p_n - sum_{k>=1} d_k a_{n-k}`.
    pub fn coefficients(&self, order: usize) -> Vec<BigInt> {
        let d = self.denominator.coeffs();
        let mut a: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut v = self.numerator.coeff(n);
            for (k, dk) in d.iter().enumerate().skip(1).take(n) {
                if !dk.is_zero() {
                    v -= dk * &a[n - k];
                }
            }
            a.push(v);
        }
        a
    }

    pub fn to_series(&self, order: usize) -> PowerSeries {
        PowerSeries::from_bigints(&self.coefficients(order), order)
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}

/// Coefficients of `num / den` to `order`.
pub fn gf_coefficients(f: &RationalGF, order: usize) -> Vec<BigInt> {
    f.coefficients(order)
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Polynomial, SeriesError};

/// Truncated power series `c_0 + c_1 x + … + c_N x^N + O(x^{N+1})` with exact
/// rational coefficients. Binary operations truncate to the smaller order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl PowerSeries {
    /// Takes coefficients `0..=order`, padding with zeros.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        PowerSeries { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I, order: usize) -> Self {
        PowerSeries::new(coeffs.into_iter().map(rat).collect(), order)
    }

    pub fn from_bigints(coeffs: &[BigInt], order: usize) -> Self {
        PowerSeries::new(
            coeffs
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect(),
            order,
        )
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        PowerSeries::from_bigints(&p.coeffs()[..p.coeffs().len().min(order + 1)], order)
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries::new(Vec::new(), order)
    }

    pub fn constant(c: i64, order: usize) -> Self {
        PowerSeries::new(vec![rat(c)], order)
    }

    pub fn one(order: usize) -> Self {
        PowerSeries::constant(1, order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        PowerSeries::monomial(1, order)
    }

    /// `x^k`.
    pub fn monomial(k: usize, order: usize) -> Self {
        let mut c = vec![BigRational::zero(); order + 1];
        if k <= order {
            c[k] = BigRational::one();
        }
        PowerSeries { coeffs: c }
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        PowerSeries::new(
            self.coeffs[..=order.min(self.order())].to_vec(),
            order.min(self.order()),
        )
    }

    /// Integer coefficients, or `None` if some coefficient is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> PowerSeries {
        let n = self.order();
        let mut c = vec![BigRational::zero(); n + 1];
        if k <= n {
            c[k..].clone_from_slice(&self.coeffs[..=n - k]);
        }
        PowerSeries { coeffs: c }
    }

    /// Divides by `x^k`. The low `k` coefficients must vanish; the order
    /// drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<PowerSeries, SeriesError> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::DivByNonUnit);
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<PowerSeries, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::DivByNonUnit);
        }
        let n = self.order();
        let inv0 = c0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out.push(-acc * &inv0);
        }
        Ok(PowerSeries { coeffs: out })
    }

    pub fn div(&self, rhs: &PowerSeries) -> Result<PowerSeries, SeriesError> {
        Ok(self * &rhs.inverse()?)
    }

    /// Square root with constant term 1 by Newton iteration
    /// `y <- (y + s / y) / 2`, which doubles the number of correct terms per
    /// step.
    pub fn sqrt(&self) -> Result<PowerSeries, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::SqrtNonUnit);
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut y = PowerSeries::one(self.order());
        let mut correct = 1usize;
        while correct <= self.order() {
            y = (&y + &self.div(&y)?).scale(&half);
            correct *= 2;
        }
        Ok(y)
    }

    pub fn pow(&self, e: u32) -> PowerSeries {
        (0..e).fold(PowerSeries::one(self.order()), |acc, _| &acc * self)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] + O(x^{})", parts.join(", "), self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.to_integers()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn sqrt_of_one_minus_four_x() {
        let s = PowerSeries::from_integers([1, -4], 3);
        assert_eq!(ints(&s.sqrt().unwrap()), [1, -2, -2, -4]);
        let s = PowerSeries::from_integers([1, -4], 12);
        let r = s.sqrt().unwrap();
        assert_eq!(&r * &r, s);
    }

    #[test]
    fn geometric_inverse() {
        let one_minus_x = PowerSeries::from_integers([1, -1], 6);
        let g = one_minus_x.inverse().unwrap();
        assert_eq!(ints(&g), [1; 7]);
        assert_eq!(&one_minus_x * &g, PowerSeries::one(6));
    }

    #[test]
    fn errors() {
        let s = PowerSeries::from_integers([0, 1], 4);
        assert_eq!(s.inverse(), Err(SeriesError::DivByNonUnit));
        assert_eq!(PowerSeries::one(3).div(&s), Err(SeriesError::DivByNonUnit));
        assert_eq!(
            PowerSeries::from_integers([2, 1], 4).sqrt(),
            Err(SeriesError::SqrtNonUnit)
        );
        assert!(PowerSeries::one(3).shift_down(1).is_err());
    }

    #[test]
    fn orders_take_the_minimum() {
        let a = PowerSeries::one(5);
        let b = PowerSeries::one(3);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!((&a * &b).order(), 3);
        let s = PowerSeries::from_integers([0, 0, 1], 5);
        assert_eq!(s.shift_down(2).unwrap().order(), 3);
        assert_eq!(s.shift_up(1), PowerSeries::monomial(3, 5));
    }

    fn small_series() -> impl Strategy<Value = PowerSeries> {
        proptest::collection::vec(-20i64..20, 1..8).prop_map(|v| PowerSeries::from_integers(v, 7))
    }

    proptest! {
        #[test]
        fn mul_commutes(a in small_series(), b in small_series()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn div_undoes_mul(a in small_series(), tail in proptest::collection::vec(-5i64..5, 0..6), c0 in 1i64..4) {
            let mut d = vec![c0];
            d.extend(tail);
            let d = PowerSeries::from_integers(d, 7);
            prop_assert_eq!((&a * &d).div(&d).unwrap(), a);
        }

        #[test]
        fn sqrt_squares_back(tail in proptest::collection::vec(-5i64..5, 0..6)) {
            let mut v = vec![1];
            v.extend(tail);
            let s = PowerSeries::from_integers(v, 7);
            let r = s.sqrt().unwrap();
            prop_assert_eq!(&r * &r, s);
        }
    }
}

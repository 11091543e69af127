//! Exact polynomials in the formal parameter β with rational coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ring::RingElement;

/// An element of ℚ[β], stored densely by exponent with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BetaPoly {
    coeffs: Vec<BigRational>,
}

impl BetaPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// `c · β^e`
    pub fn monomial(c: BigRational, e: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = c;
        Self { coeffs }
    }

    pub fn int_monomial(c: i64, e: usize) -> Self {
        Self::monomial(BigRational::from_integer(BigInt::from(c)), e)
    }

    pub fn beta_pow(e: usize) -> Self {
        Self::int_monomial(1, e)
    }

    /// `(-β)^e`
    pub fn neg_beta_pow(e: usize) -> Self {
        Self::int_monomial(if e.is_multiple_of(2) { 1 } else { -1 }, e)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, e: usize) -> BigRational {
        self.coeffs.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Returns the exponent when the polynomial is a single nonzero monomial.
    pub fn monomial_exponent(&self) -> Option<usize> {
        let mut it = self.terms();
        let (e, _) = it.next()?;
        if it.next().is_some() {
            None
        } else {
            Some(e)
        }
    }

    /// Drops every term of β-degree above `max_exp`.
    pub fn truncate_beta(&self, max_exp: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(max_exp + 1).cloned().collect())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplies by `β^e`.
    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn eval(&self, beta: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * beta + c;
        }
        acc
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Debug for BetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = e == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "{}β", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}β^{e}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a BetaPoly> for &'a BetaPoly {
    type Output = BetaPoly;
    fn add(self, rhs: &BetaPoly) -> BetaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        BetaPoly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a BetaPoly> for &'a BetaPoly {
    type Output = BetaPoly;
    fn sub(self, rhs: &BetaPoly) -> BetaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        BetaPoly::from_coeffs(coeffs)
    }
}

impl<'a> Mul<&'a BetaPoly> for &'a BetaPoly {
    type Output = BetaPoly;
    fn mul(self, rhs: &BetaPoly) -> BetaPoly {
        if self.is_zero() || rhs.is_zero() {
            return BetaPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                coeffs[i + j] += a * b;
            }
        }
        BetaPoly::from_coeffs(coeffs)
    }
}

impl Neg for &BetaPoly {
    type Output = BetaPoly;
    fn neg(self) -> BetaPoly {
        BetaPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for BetaPoly {
    type Output = BetaPoly;
    fn neg(self) -> BetaPoly {
        -&self
    }
}

impl Add for BetaPoly {
    type Output = BetaPoly;
    fn add(self, rhs: BetaPoly) -> BetaPoly {
        &self + &rhs
    }
}

impl Sub for BetaPoly {
    type Output = BetaPoly;
    fn sub(self, rhs: BetaPoly) -> BetaPoly {
        &self - &rhs
    }
}

impl Mul for BetaPoly {
    type Output = BetaPoly;
    fn mul(self, rhs: BetaPoly) -> BetaPoly {
        &self * &rhs
    }
}

impl AddAssign<&BetaPoly> for BetaPoly {
    fn add_assign(&mut self, rhs: &BetaPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigRational::zero());
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[i] += c;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&BetaPoly> for BetaPoly {
    fn sub_assign(&mut self, rhs: &BetaPoly) {
        *self += &(-rhs);
    }
}

impl RingElement for BetaPoly {
    fn zero_like(&self) -> Self {
        BetaPoly::zero()
    }
    fn one_like(&self) -> Self {
        BetaPoly::one()
    }
    fn is_zero(&self) -> bool {
        BetaPoly::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

/// Generalized binomial coefficient `C(n, k)` for any integer `n`; zero when `k < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

pub fn binomial_i64(n: i64, k: i64) -> i64 {
    binomial(n, k).to_i64().expect("binomial coefficient overflow")
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let b = BetaPoly::beta_pow(1);
        let one = BetaPoly::one();
        let p = &(&one + &b) * &(&one - &b);
        assert_eq!(p, &one - &BetaPoly::beta_pow(2));
        assert_eq!(format!("{p}"), "1 - β^2");
        assert_eq!(format!("{}", BetaPoly::int_monomial(-3, 1)), "-3*β");
        assert!((&b - &b).is_zero());
        assert_eq!(BetaPoly::neg_beta_pow(3), BetaPoly::int_monomial(-1, 3));
    }

    #[test]
    fn generalized_binomials() {
        assert_eq!(binomial_i64(5, 2), 10);
        assert_eq!(binomial_i64(2, 3), 0);
        assert_eq!(binomial_i64(-1, 3), -1);
        assert_eq!(binomial_i64(-1, 2), 1);
        assert_eq!(binomial_i64(-3, 2), 6);
        assert_eq!(binomial_i64(0, 0), 1);
        assert_eq!(binomial_i64(-2, 0), 1);
        assert_eq!(binomial_i64(4, -1), 0);
    }

    #[test]
    fn monomial_detection() {
        assert_eq!(BetaPoly::int_monomial(7, 3).monomial_exponent(), Some(3));
        assert_eq!((&BetaPoly::one() + &BetaPoly::beta_pow(1)).monomial_exponent(), None);
        assert_eq!(BetaPoly::zero().monomial_exponent(), None);
    }
}

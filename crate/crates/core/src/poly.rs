use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::binomial::binom;
use crate::error::{Error, Result};

/// Univariate polynomial with arbitrary precision integer coefficients.
///
/// `coefficients[d]` is the coefficient of `t^d`; trailing zeros are trimmed so
/// equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        IntPolynomial { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coefficients = vec![BigInt::zero(); degree + 1];
        coefficients[degree] = c;
        Self::new(coefficients)
    }

    /// `(1 + sign * t)^power`, expanded.
    fn binomial_power(power: usize, sign: i64) -> Self {
        let p = power as i64;
        Self::new(
            (0..=p)
                .map(|d| {
                    let c = binom(p, d);
                    if sign < 0 && d % 2 == 1 {
                        -c
                    } else {
                        c
                    }
                })
                .collect(),
        )
    }

    /// `(1 - t)^power`.
    pub fn one_minus_t_pow(power: usize) -> Self {
        Self::binomial_power(power, -1)
    }

    /// `(1 + t)^power`.
    pub fn one_plus_t_pow(power: usize) -> Self {
        Self::binomial_power(power, 1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coefficients
            .get(degree)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Exact quotient by `(1 - t)^power`, failing if a remainder is left.
    pub fn div_one_minus_t_pow(&self, power: usize) -> Result<Self> {
        let mut current = self.coefficients.clone();
        for _ in 0..power {
            // p(t) = (1 - t) q(t)  <=>  q_d = sum_{e <= d} p_e
            let mut q = Vec::with_capacity(current.len());
            let mut running = BigInt::zero();
            for c in &current {
                running += c;
                q.push(running.clone());
            }
            // the last partial sum is p(1) and must vanish
            if !running.is_zero() {
                return Err(Error::NotDivisible(power));
            }
            q.pop();
            current = q;
        }
        Ok(Self::new(current))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        IntPolynomial::new((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        IntPolynomial::new((0..len).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coefficients.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (a, x) in self.coefficients.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in rhs.coefficients.iter().enumerate() {
                out[a + b] += x * y;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for IntPolynomial {
    /// Ascending powers, e.g. `1 + 9t + 24t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (d, magnitude.is_one()) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{magnitude}t")?,
                (_, true) => write!(f, "t^{d}")?,
                (_, false) => write!(f, "{magnitude}t^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_compares() {
        assert_eq!(IntPolynomial::from_i64(&[1, 2, 0, 0]), IntPolynomial::from_i64(&[1, 2]));
        assert_eq!(IntPolynomial::from_i64(&[0, 0]).degree(), None);
    }

    #[test]
    fn binomial_powers() {
        assert_eq!(IntPolynomial::one_minus_t_pow(3), IntPolynomial::from_i64(&[1, -3, 3, -1]));
        assert_eq!(IntPolynomial::one_plus_t_pow(2), IntPolynomial::from_i64(&[1, 2, 1]));
        assert_eq!(IntPolynomial::one_minus_t_pow(0), IntPolynomial::one());
    }

    #[test]
    fn exact_division() {
        let h = IntPolynomial::from_i64(&[1, 2, 3, 3, 2, 1]);
        let p = &h * &IntPolynomial::one_minus_t_pow(4);
        assert_eq!(p.div_one_minus_t_pow(4).unwrap(), h);
        assert_eq!(p.div_one_minus_t_pow(5), Err(Error::NotDivisible(5)));
    }

    #[test]
    fn display() {
        let p = IntPolynomial::from_i64(&[1, 9, 24, 0, -1]);
        assert_eq!(p.to_string(), "1 + 9t + 24t^2 - t^4");
        assert_eq!(IntPolynomial::from_i64(&[0, -3]).to_string(), "-3t");
    }
}

//! Dense univariate integer polynomials in a formal variable `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::residue;

/// Coefficient `i` multiplies `t^i`. Trailing zeros are trimmed, so the
/// zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPolynomial {
    coeffs: Vec<BigInt>,
}

impl UniPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = UniPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// `c·t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Coefficients reduced to least non-negative residues mod `p`.
    pub fn reduce_mod(&self, p: u64) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| BigInt::from(residue(c, p)))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for UniPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Ascending powers, e.g. `1 - 165t^3 + 924t^6`.
impl fmt::Display for UniPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &UniPolynomial {
    type Output = UniPolynomial;
    fn add(self, rhs: &UniPolynomial) -> UniPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Add for UniPolynomial {
    type Output = UniPolynomial;
    fn add(self, rhs: UniPolynomial) -> UniPolynomial {
        &self + &rhs
    }
}

impl Sub for &UniPolynomial {
    type Output = UniPolynomial;
    fn sub(self, rhs: &UniPolynomial) -> UniPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Sub for UniPolynomial {
    type Output = UniPolynomial;
    fn sub(self, rhs: UniPolynomial) -> UniPolynomial {
        &self - &rhs
    }
}

impl Neg for &UniPolynomial {
    type Output = UniPolynomial;
    fn neg(self) -> UniPolynomial {
        UniPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for UniPolynomial {
    type Output = UniPolynomial;
    fn neg(self) -> UniPolynomial {
        -&self
    }
}

impl Mul for &UniPolynomial {
    type Output = UniPolynomial;
    fn mul(self, rhs: &UniPolynomial) -> UniPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return UniPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPolynomial::new(out)
    }
}

impl Mul for UniPolynomial {
    type Output = UniPolynomial;
    fn mul(self, rhs: UniPolynomial) -> UniPolynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_formats() {
        let p = UniPolynomial::from_i64(&[1, 0, 0, -165, 0, 0, 924, 0, 0]);
        assert_eq!(p.degree(), Some(6));
        assert_eq!(p.to_string(), "1 - 165t^3 + 924t^6");
        assert_eq!(UniPolynomial::from_i64(&[0, -9, 0, 0, 210]).to_string(), "-9t + 210t^4");
        assert_eq!(UniPolynomial::from_i64(&[0, 0, 0]).to_string(), "0");
        assert_eq!(UniPolynomial::from_i64(&[0, -1]).to_string(), "-t");
        assert_eq!(UniPolynomial::from_i64(&[-1]).to_string(), "-1");
    }

    #[test]
    fn arithmetic() {
        let s = UniPolynomial::t() + UniPolynomial::t().pow(2);
        assert_eq!(s.pow(2), UniPolynomial::from_i64(&[0, 0, 1, 2, 1]));
        assert_eq!(&s - &s, UniPolynomial::zero());
        assert_eq!(s.eval(&BigInt::from(2)), BigInt::from(6));
        assert_eq!(UniPolynomial::from_i64(&[1, -1]).reduce_mod(3), UniPolynomial::from_i64(&[1, 2]));
    }
}

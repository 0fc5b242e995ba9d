//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Exponent vector `α ∈ ℕⁿ` of the monomial `x^α`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// `δ(n) = (0, 1, …, n−1)`.
    pub fn staircase(n: usize) -> Self {
        ExponentVector((0..n as u32).collect())
    }

    /// The partition zero-padded to length `n`.
    pub fn from_partition(p: &Partition, n: usize) -> Result<Self> {
        let padded = p.padded(n)?;
        Ok(ExponentVector(
            padded.entries().into_iter().map(|e| e as u32).collect(),
        ))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree `|α|`.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// Componentwise sum; both vectors must have the same length.
    pub fn plus(&self, other: &ExponentVector) -> ExponentVector {
        assert_eq!(self.len(), other.len(), "exponent length mismatch");
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

/// A polynomial in `x₁, …, x_n`. Terms iterate in lexicographic exponent
/// order and zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(ExponentVector::zeros(nvars), BigInt::one())
    }

    pub fn monomial(exponent: ExponentVector, coeff: BigInt) -> Self {
        let mut p = Self::zero(exponent.len());
        p.add_term(exponent, coeff);
        p
    }

    /// Collects `(exponent, coefficient)` pairs, summing duplicates.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, BigInt)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient of `x^α`, zero when absent.
    pub fn coefficient(&self, alpha: &ExponentVector) -> Result<BigInt> {
        if alpha.len() != self.nvars {
            return Err(Error::LengthMismatch {
                expected: self.nvars,
                got: alpha.len(),
            });
        }
        Ok(self.terms.get(alpha).cloned().unwrap_or_default())
    }

    pub fn add_term(&mut self, exponent: ExponentVector, coeff: BigInt) {
        assert_eq!(exponent.len(), self.nvars, "exponent length mismatch");
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponent) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        SparsePolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Coefficient of `x_n^r` when viewed as a polynomial in `x_n`, as a
    /// polynomial in the first `n − 1` variables.
    pub fn coefficient_of_last(&self, r: u32) -> Result<Self> {
        if self.nvars < 2 {
            return Err(Error::Precondition(format!(
                "eliminating the last variable needs at least 2 variables, got {}",
                self.nvars
            )));
        }
        let mut out = Self::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            let (last, head) = e.as_slice().split_last().expect("nvars ≥ 2");
            if *last == r {
                out.terms.insert(ExponentVector(head.to_vec()), c.clone());
            }
        }
        Ok(out)
    }

    fn check_same_ring(&self, other: &Self) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomials live in different variable counts"
        );
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let negative = c < &BigInt::zero();
            let mag = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .as_slice()
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, p)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self.check_same_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Add for SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: SparsePolynomial) -> SparsePolynomial {
        &self + &rhs
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        SparsePolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        -&self
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self.check_same_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Sub for SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: SparsePolynomial) -> SparsePolynomial {
        &self - &rhs
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self.check_same_ring(rhs);
        let mut acc: HashMap<Vec<u32>, BigInt> = HashMap::new();
        let mut buf = vec![0u32; self.nvars];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                for (slot, (a, b)) in buf.iter_mut().zip(ea.0.iter().zip(&eb.0)) {
                    *slot = a + b;
                }
                let prod = ca * cb;
                match acc.get_mut(buf.as_slice()) {
                    Some(c) => *c += prod,
                    None => {
                        acc.insert(buf.clone(), prod);
                    }
                }
            }
        }
        SparsePolynomial {
            nvars: self.nvars,
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (ExponentVector(e), c))
                .collect(),
        }
    }
}

impl Mul for SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: SparsePolynomial) -> SparsePolynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn x(n: usize, i: usize) -> SparsePolynomial {
        let mut e = vec![0; n];
        e[i] = 1;
        SparsePolynomial::monomial(ExponentVector::new(e), BigInt::one())
    }

    #[test]
    fn arithmetic_cancels_exactly() {
        let a = &x(2, 0) + &x(2, 1);
        let b = &x(2, 0) - &x(2, 1);
        let prod = &a * &b;
        assert_eq!(prod.num_terms(), 2);
        assert_eq!(prod.coefficient(&ev(&[2, 0])).unwrap(), BigInt::one());
        assert_eq!(prod.coefficient(&ev(&[0, 2])).unwrap(), -BigInt::one());
        assert_eq!(prod.coefficient(&ev(&[1, 1])).unwrap(), BigInt::zero());
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn coefficient_length_checked() {
        let a = x(2, 0);
        assert!(matches!(
            a.coefficient(&ev(&[1])),
            Err(Error::LengthMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn display_is_readable() {
        let p = &x(2, 1) - &x(2, 0);
        assert_eq!(p.to_string(), "x2 - x1");
        assert_eq!(SparsePolynomial::zero(3).to_string(), "0");
        let sq = &p * &p;
        assert_eq!(sq.to_string(), "x2^2 - 2*x1*x2 + x1^2");
    }

    #[test]
    fn staircase_and_padding() {
        assert_eq!(ExponentVector::staircase(3), ev(&[0, 1, 2]));
        let p = Partition::from([1, 2]);
        assert_eq!(ExponentVector::from_partition(&p, 3).unwrap(), ev(&[0, 1, 2]));
        assert!(ExponentVector::from_partition(&p, 1).is_err());
    }
}

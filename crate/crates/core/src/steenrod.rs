//! Schur expansions of reduced power operations on top classes, the Wu
//! formula, and the two-column Giambelli identity.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial_signed, is_prime, residue};
use crate::closed::corollary4;
use crate::error::{Error, Result};
use crate::inverse::monomial_to_schur;
use crate::partition::Partition;
use crate::poly::SparsePolynomial;
use crate::symfunc::{elementary_symmetric, SchurExpansion};

/// A Schur expansion with coefficients reduced mod a prime `p`.
#[derive(Clone, PartialEq, Eq)]
pub struct ModPExpansion {
    p: u64,
    coeffs: BTreeMap<Partition, u64>,
}

impl ModPExpansion {
    pub fn from_schur(expansion: &SchurExpansion, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        let coeffs = expansion
            .iter()
            .map(|(lambda, c)| (lambda.clone(), residue(c, p)))
            .filter(|(_, r)| *r != 0)
            .collect();
        Ok(ModPExpansion { p, coeffs })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn get(&self, lambda: &Partition) -> u64 {
        self.coeffs.get(lambda).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.coeffs.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Debug for ModPExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self, self.p)
    }
}

impl fmt::Display for ModPExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "s{lambda}")?;
        }
        Ok(())
    }
}

/// An integer polynomial in `e₁, e₂, …`. Each monomial is a sorted list of
/// indices; `e₀ = 1` factors are dropped.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct EPolynomial {
    terms: BTreeMap<Vec<usize>, BigInt>,
}

impl EPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `coeff · Π e_{indices}`. A negative index makes the product 0.
    pub fn add_term(&mut self, indices: &[i64], coeff: BigInt) {
        if coeff.is_zero() || indices.iter().any(|&i| i < 0) {
            return;
        }
        let mut key: Vec<usize> = indices.iter().filter(|&&i| i > 0).map(|&i| i as usize).collect();
        key.sort_unstable();
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &EPolynomial) {
        for (k, v) in &other.terms {
            let idx: Vec<i64> = k.iter().map(|&i| i as i64).collect();
            self.add_term(&idx, v.clone());
        }
    }

    pub fn scale(&self, c: &BigInt) -> EPolynomial {
        let mut out = EPolynomial::new();
        for (k, v) in &self.terms {
            let idx: Vec<i64> = k.iter().map(|&i| i as i64).collect();
            out.add_term(&idx, v * c);
        }
        out
    }

    pub fn get(&self, indices: &[usize]) -> BigInt {
        let mut key: Vec<usize> = indices.iter().copied().filter(|&i| i > 0).collect();
        key.sort_unstable();
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[usize], &BigInt)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficients reduced into `{0, …, p−1}`, zeros dropped.
    pub fn reduce_mod(&self, p: u64) -> EPolynomial {
        let mut out = EPolynomial::new();
        for (k, v) in &self.terms {
            let idx: Vec<i64> = k.iter().map(|&i| i as i64).collect();
            out.add_term(&idx, BigInt::from(residue(v, p)));
        }
        out
    }

    /// Converts to the Schur basis by multiplying out each monomial with
    /// Pieri's rule, factors in ascending index order.
    pub fn to_schur(&self) -> SchurExpansion {
        let mut out = SchurExpansion::new();
        for (k, v) in &self.terms {
            let product = k
                .iter()
                .fold(SchurExpansion::single(Partition::empty()), |acc, &r| acc.pieri_multiply(r));
            out.add(&product.scale(v));
        }
        out
    }

    /// Substitutes `e_j(x₁,…,x_n)`, which vanishes for `j > n`.
    pub fn to_polynomial(&self, n: usize) -> Result<SparsePolynomial> {
        let mut out = SparsePolynomial::zero(n);
        for (k, v) in &self.terms {
            if k.iter().any(|&j| j > n) {
                continue;
            }
            let mut term = SparsePolynomial::one(n).scale(v);
            for &j in k {
                term = &term * &elementary_symmetric(j, n)?;
            }
            out = &out + &term;
        }
        Ok(out)
    }
}

impl fmt::Debug for EPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for EPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // more factors first, then reverse lexicographic
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| b.0.cmp(a.0)));
        for (i, (k, v)) in terms.into_iter().enumerate() {
            let neg = v.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = v.abs();
            if k.is_empty() {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}")?;
            }
            for j in k {
                write!(f, "e{j}")?;
            }
        }
        Ok(())
    }
}

fn check_k(k: usize, m: usize) -> Result<()> {
    if k > m {
        return Err(Error::Precondition(format!("need k ≤ m, got k={k}, m={m}")));
    }
    Ok(())
}

fn top_class_shape(k: usize, m: usize, p: usize) -> Partition {
    Partition::from_multiplicities(&[(1, m - k), (p, k)])
}

/// `P^k(c_m)`: the row `K⁻¹_{(1^{m−k},p^k),μ}` reduced mod an odd prime `p`.
pub fn steenrod_p(k: usize, m: usize, p: u64) -> Result<ModPExpansion> {
    check_k(k, m)?;
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    ModPExpansion::from_schur(&monomial_to_schur(&top_class_shape(k, m, p as usize)), p)
}

/// `Sq^k(w_m)`: the row `K⁻¹_{(1^{m−k},2^k),μ}` reduced mod 2.
pub fn steenrod_sq(k: usize, m: usize) -> Result<ModPExpansion> {
    check_k(k, m)?;
    ModPExpansion::from_schur(&monomial_to_schur(&top_class_shape(k, m, 2)), 2)
}

/// `Σ_{0≤i≤k} C(m−i−1, k−i) e_i e_{m+k−i}` over the integers.
pub fn wu_epolynomial(k: usize, m: usize) -> Result<EPolynomial> {
    check_k(k, m)?;
    let mut out = EPolynomial::new();
    for i in 0..=k {
        let c = binomial_signed(m as i64 - i as i64 - 1, k - i);
        out.add_term(&[i as i64, (m + k - i) as i64], c);
    }
    Ok(out)
}

/// The Wu formula for `Sq^k(w_m)`, expanded in Schur functions mod 2.
pub fn wu_rhs(k: usize, m: usize) -> Result<ModPExpansion> {
    ModPExpansion::from_schur(&wu_epolynomial(k, m)?.to_schur(), 2)
}

/// `s_{(1^{m−k},2^k)} = e_k e_m − e_{k−1} e_{m+1}`.
pub fn giambelli_hook2(m: usize, k: usize) -> Result<EPolynomial> {
    check_k(k, m)?;
    let (m, k) = (m as i64, k as i64);
    let mut out = EPolynomial::new();
    out.add_term(&[k, m], BigInt::one());
    out.add_term(&[k - 1, m + 1], -BigInt::one());
    Ok(out)
}

/// `m_{(1^{m−k},2^k)}` as an integer polynomial in the `e_i`: the two-column
/// Schur expansion with each term replaced by its Giambelli form.
pub fn integral_wu_lift(k: usize, m: usize) -> Result<EPolynomial> {
    check_k(k, m)?;
    if m == 0 {
        return Ok({
            let mut one = EPolynomial::new();
            one.add_term(&[], BigInt::one());
            one
        });
    }
    let mut out = EPolynomial::new();
    for (shape, c) in corollary4(m - k, k)?.iter() {
        let twos = shape.part_count(2);
        let len = shape.len();
        out.add(&giambelli_hook2(len, twos)?.scale(c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(parts: [usize; N]) -> Partition {
        Partition::from(parts)
    }

    fn modp(p: u64, terms: &[(Partition, u64)]) -> ModPExpansion {
        ModPExpansion {
            p,
            coeffs: terms.iter().cloned().collect(),
        }
    }

    #[test]
    fn reduced_powers() {
        assert_eq!(steenrod_p(0, 2, 3).unwrap(), modp(3, &[(p([1, 1]), 1)]));
        assert_eq!(
            steenrod_p(1, 1, 3).unwrap(),
            modp(3, &[(p([3]), 1), (p([1, 2]), 2), (p([1, 1, 1]), 1)])
        );
        let row = monomial_to_schur(&p([1, 3]));
        assert_eq!(steenrod_p(1, 2, 3).unwrap(), ModPExpansion::from_schur(&row, 3).unwrap());
        assert!(matches!(steenrod_p(1, 2, 2), Err(Error::NotOddPrime(2))));
        assert!(matches!(steenrod_p(1, 2, 9), Err(Error::NotOddPrime(9))));
        assert!(steenrod_p(3, 2, 3).is_err());
    }

    #[test]
    fn squares() {
        assert_eq!(steenrod_sq(1, 2).unwrap(), modp(2, &[(p([1, 2]), 1)]));
        assert_eq!(steenrod_sq(0, 3).unwrap(), modp(2, &[(p([1, 1, 1]), 1)]));
        assert!(steenrod_sq(3, 2).is_err());
    }

    #[test]
    fn wu_examples() {
        assert_eq!(wu_rhs(1, 2).unwrap(), modp(2, &[(p([1, 2]), 1)]));
        for m in 1..6 {
            let ones = Partition::from_multiplicities(&[(1, m)]);
            assert_eq!(wu_rhs(0, m).unwrap(), modp(2, &[(ones, 1)]));
        }
        assert_eq!(wu_rhs(2, 3).unwrap(), steenrod_sq(2, 3).unwrap());
        // C(−1, 0) = 1 at i = k = m
        assert_eq!(wu_epolynomial(2, 2).unwrap().get(&[2, 2]), BigInt::one());
    }

    #[test]
    fn giambelli_examples() {
        assert_eq!(giambelli_hook2(2, 1).unwrap().to_string(), "e1e2 - e3");
        assert_eq!(giambelli_hook2(3, 0).unwrap().to_string(), "e3");
        assert_eq!(giambelli_hook2(2, 2).unwrap().to_string(), "e2e2 - e1e3");
        assert!(giambelli_hook2(1, 2).is_err());
    }

    #[test]
    fn lift_examples() {
        assert_eq!(integral_wu_lift(1, 2).unwrap().to_string(), "e1e2 - 3e3");
        assert_eq!(integral_wu_lift(0, 4).unwrap().to_string(), "e4");
        assert_eq!(
            ModPExpansion::from_schur(&integral_wu_lift(1, 2).unwrap().to_schur(), 2).unwrap(),
            wu_rhs(1, 2).unwrap()
        );
    }
}

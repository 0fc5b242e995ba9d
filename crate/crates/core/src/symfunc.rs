//! Symmetric polynomials in finitely many variables, built directly from
//! their combinatorial definitions: monomial symmetric functions,
//! alternants, elementary symmetric functions, Schur polynomials by
//! tableau enumeration, Kostka numbers, and the coefficient functionals
//! used to read Schur coordinates off a polynomial.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{check_weights, Partition};
use crate::poly::{ExponentVector, SparsePolynomial};

/// `m_λ(n)`: the sum of `x^{w(λ)}` over distinct rearrangements of the
/// zero-padded `λ`.
pub fn monomial_symmetric(lambda: &Partition, n: usize) -> Result<SparsePolynomial> {
    let mut exps: Vec<u32> = ExponentVector::from_partition(lambda, n)?.into_vec();
    let mut out = SparsePolynomial::zero(n);
    loop {
        out.add_term(ExponentVector::new(exps.clone()), BigInt::one());
        if !next_permutation(&mut exps) {
            break;
        }
    }
    Ok(out)
}

/// Lexicographic successor; `false` once the sequence is non-increasing.
fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[i - 1] < v[j]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `a_α = det(x_j^{α_i})`, expanded over all `n!` permutations.
pub fn alternant(alpha: &ExponentVector) -> SparsePolynomial {
    let n = alpha.len();
    let mut out = SparsePolynomial::zero(n);
    if alpha.as_slice().iter().duplicates().next().is_some() {
        return out;
    }
    // Heap's algorithm: each step is one transposition, so the sign flips.
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut negative = false;
    let mut emit = |perm: &[usize], negative: bool| {
        let mut e = vec![0u32; n];
        for (i, &target) in perm.iter().enumerate() {
            e[target] = alpha.as_slice()[i];
        }
        let coeff = if negative { -BigInt::one() } else { BigInt::one() };
        out.add_term(ExponentVector::new(e), coeff);
    };
    emit(&perm, negative);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            negative = !negative;
            emit(&perm, negative);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// `e_r(n)`, the sum of all squarefree monomials of degree `r`.
pub fn elementary_symmetric(r: usize, n: usize) -> Result<SparsePolynomial> {
    if r > n {
        return Err(Error::Precondition(format!("e_{r} needs r ≤ n = {n}")));
    }
    let mut out = SparsePolynomial::zero(n);
    for subset in (0..n).combinations(r) {
        let mut e = vec![0u32; n];
        for i in subset {
            e[i] = 1;
        }
        out.add_term(ExponentVector::new(e), BigInt::one());
    }
    Ok(out)
}

/// `s_λ(n)` as the content generating function of semistandard tableaux of
/// shape `λ` with entries in `1..=n`.
pub fn schur(lambda: &Partition, n: usize) -> Result<SparsePolynomial> {
    if lambda.len() > n {
        return Err(Error::TooFewVariables {
            n,
            needed: lambda.len(),
        });
    }
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut exps = vec![0u32; n];
    fill_tableaux(&lambda.rows(), n, &mut exps, &mut counts);
    Ok(SparsePolynomial::from_terms(
        n,
        counts
            .into_iter()
            .map(|(e, c)| (ExponentVector::new(e), BigInt::from(c))),
    ))
}

/// Peels off the cells holding the largest entry `v` (a horizontal strip)
/// and recurses on the remaining shape with entries `< v`.
fn fill_tableaux(shape: &[usize], v: usize, exps: &mut Vec<u32>, out: &mut HashMap<Vec<u32>, u64>) {
    if shape.is_empty() {
        *out.entry(exps.clone()).or_default() += 1;
        return;
    }
    if shape.len() > v {
        return;
    }
    let total: usize = shape.iter().sum();
    for inner in horizontal_strip_inner(shape, None, v - 1) {
        let removed = total - inner.iter().sum::<usize>();
        exps[v - 1] = removed as u32;
        fill_tableaux(&inner, v - 1, exps, out);
    }
    exps[v - 1] = 0;
}

/// Shapes `ν` (rows, non-increasing, zeros trimmed) with `shape/ν` a
/// horizontal strip, at most `max_rows` rows, and optionally exactly
/// `size` removed cells.
fn horizontal_strip_inner(shape: &[usize], size: Option<usize>, max_rows: usize) -> Vec<Vec<usize>> {
    fn go(
        shape: &[usize],
        i: usize,
        remaining: Option<usize>,
        max_rows: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == shape.len() {
            if remaining.is_none_or(|r| r == 0) {
                let mut nu = cur.clone();
                while nu.last() == Some(&0) {
                    nu.pop();
                }
                out.push(nu);
            }
            return;
        }
        let lo = shape.get(i + 1).copied().unwrap_or(0);
        let hi = if i >= max_rows { 0 } else { shape[i] };
        if lo > hi {
            return;
        }
        for nu_i in lo..=hi {
            let take = shape[i] - nu_i;
            let next = match remaining {
                Some(r) if take > r => continue,
                Some(r) => Some(r - take),
                None => None,
            };
            cur.push(nu_i);
            go(shape, i + 1, next, max_rows, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(shape, 0, size, max_rows, &mut Vec::new(), &mut out);
    out
}

/// `D_α h`: the coefficient of `x^α` in `h`.
pub fn coefficient_extract(h: &SparsePolynomial, alpha: &ExponentVector) -> Result<BigInt> {
    h.coefficient(alpha)
}

/// The elimination law: `h_r`, the coefficient of `x_n^r` in `h`, as a
/// polynomial in `x₁, …, x_{n−1}`.
pub fn eliminate_last(h: &SparsePolynomial, r: u32) -> Result<SparsePolynomial> {
    h.coefficient_of_last(r)
}

/// `K_{λ,μ}`: the number of semistandard tableaux of shape `λ` and
/// content `μ`.
pub fn kostka_number(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    check_weights(lambda, mu)?;
    let content = mu.parts().to_vec();
    let mut memo = HashMap::new();
    Ok(count_tableaux(&lambda.rows(), &content, &mut memo))
}

fn count_tableaux(
    shape: &[usize],
    content: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), BigInt>,
) -> BigInt {
    let Some((&last, rest)) = content.split_last() else {
        return if shape.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    if shape.len() > content.len() {
        return BigInt::zero();
    }
    let key = (shape.to_vec(), content.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let total = horizontal_strip_inner(shape, Some(last), rest.len())
        .into_iter()
        .map(|inner| count_tableaux(&inner, rest, memo))
        .sum::<BigInt>();
    memo.insert(key, total.clone());
    total
}

/// A finite integer combination `Σ c_μ s_μ`, independent of the number of
/// variables as long as it is at least the longest partition in the support.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    /// `s_λ` with coefficient one.
    pub fn single(lambda: Partition) -> Self {
        let mut e = Self::new();
        e.add_term(lambda, BigInt::one());
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, BigInt)>>(terms: I) -> Self {
        let mut e = Self::new();
        for (p, c) in terms {
            e.add_term(p, c);
        }
        e
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(lambda) {
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

    pub fn add(&mut self, other: &SchurExpansion) {
        for (p, c) in &other.coeffs {
            self.add_term(p.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(p, v)| (p.clone(), v * c)))
    }

    /// Coefficient of `s_λ`, zero when absent.
    pub fn get(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in canonical partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_length(&self) -> usize {
        self.coeffs.keys().map(Partition::len).max().unwrap_or(0)
    }

    /// Drops `s_μ` with more than `n` parts, which vanish in `n` variables.
    pub fn truncate(&self, n: usize) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .filter(|(p, _)| p.len() <= n)
                .map(|(p, c)| (p.clone(), c.clone())),
        )
    }

    /// Multiplication by `e_r` via vertical strips.
    pub fn pieri_multiply(&self, r: usize) -> Self {
        let mut out = Self::new();
        for (lambda, c) in &self.coeffs {
            for mu in lambda.vertical_strip_successors(r) {
                out.add_term(mu, c.clone());
            }
        }
        out
    }

    /// `Σ c_μ s_μ(n)` as an explicit polynomial.
    pub fn to_polynomial(&self, n: usize) -> Result<SparsePolynomial> {
        let mut out = SparsePolynomial::zero(n);
        for (mu, c) in &self.coeffs {
            out = &out + &schur(mu, n)?.scale(c);
        }
        Ok(out)
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "s{p}")?;
        }
        Ok(())
    }
}

pub fn pieri_multiply(expansion: &SchurExpansion, r: usize) -> SchurExpansion {
    expansion.pieri_multiply(r)
}

pub fn expansion_to_polynomial(expansion: &SchurExpansion, n: usize) -> Result<SparsePolynomial> {
    expansion.to_polynomial(n)
}

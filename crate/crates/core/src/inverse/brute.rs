//! Inverse Kostka numbers as a signed count of solutions to
//! `w(λ) + σ(δ(n)) = μ + δ(n)`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::{check_weights, Partition};
use crate::poly::ExponentVector;
use crate::unipoly::UniPolynomial;

/// One solution `(w, σ)`. `permutation[i]` is the 0-based value `σ(i)`,
/// so `σ(δ(n))` has entry `permutation[i]` in position `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionPair {
    pub rearrangement: ExponentVector,
    pub permutation: Vec<usize>,
    pub sign: i8,
    pub inversions: usize,
}

fn check_query(lambda: &Partition, mu: &Partition, n: usize) -> Result<()> {
    check_weights(lambda, mu)?;
    let needed = lambda.len().max(mu.len());
    if n < needed {
        return Err(Error::TooFewVariables { n, needed });
    }
    Ok(())
}

/// Every `(w, σ)` with `w` a distinct rearrangement of the zero-padded `λ`.
pub fn solution_pairs(lambda: &Partition, mu: &Partition, n: usize) -> Result<Vec<SolutionPair>> {
    check_query(lambda, mu, n)?;
    let target: Vec<usize> = mu
        .padded_entries(n)
        .into_iter()
        .enumerate()
        .map(|(i, m)| m + i)
        .collect();
    // Multiset of padded λ entries, indexed by value.
    let mut available = vec![0usize; lambda.largest() + 1];
    available[0] = n - lambda.len();
    for &p in lambda.parts() {
        available[p] += 1;
    }

    let mut out = Vec::new();
    let mut used = vec![false; n];
    let mut sigma = Vec::with_capacity(n);
    let mut w = Vec::with_capacity(n);
    search(&target, &mut available, &mut used, &mut sigma, &mut w, &mut out);
    Ok(out)
}

fn search(
    target: &[usize],
    available: &mut [usize],
    used: &mut [bool],
    sigma: &mut Vec<usize>,
    w: &mut Vec<u32>,
    out: &mut Vec<SolutionPair>,
) {
    let i = sigma.len();
    if i == target.len() {
        let inversions = count_inversions(sigma);
        out.push(SolutionPair {
            rearrangement: ExponentVector::new(w.clone()),
            permutation: sigma.clone(),
            sign: if inversions % 2 == 0 { 1 } else { -1 },
            inversions,
        });
        return;
    }
    for s in 0..target.len() {
        if used[s] || s > target[i] {
            continue;
        }
        let value = target[i] - s;
        if value >= available.len() || available[value] == 0 {
            continue;
        }
        used[s] = true;
        available[value] -= 1;
        sigma.push(s);
        w.push(value as u32);
        search(target, available, used, sigma, w, out);
        w.pop();
        sigma.pop();
        available[value] += 1;
        used[s] = false;
    }
}

fn count_inversions(perm: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                count += 1;
            }
        }
    }
    count
}

/// `K⁻¹_{λ,μ} = Σ ε(σ)` over the solution set in `n` variables.
pub fn inv_kostka_bruteforce(lambda: &Partition, mu: &Partition, n: usize) -> Result<BigInt> {
    let total: i64 = solution_pairs(lambda, mu, n)?
        .iter()
        .map(|s| s.sign as i64)
        .sum();
    Ok(BigInt::from(total))
}

/// `f_{λ,μ}(t) = Σ (−t)^{I(σ)}` over the solution set.
pub fn f_polynomial(lambda: &Partition, mu: &Partition, n: usize) -> Result<UniPolynomial> {
    let pairs = solution_pairs(lambda, mu, n)?;
    let degree = pairs.iter().map(|s| s.inversions).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); degree + 1];
    for s in &pairs {
        coeffs[s.inversions] += s.sign as i64;
    }
    Ok(UniPolynomial::new(coeffs))
}

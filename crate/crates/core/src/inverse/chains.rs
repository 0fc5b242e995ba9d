//! Signed chains of partitions whose signed counts are inverse Kostka
//! numbers.

use num_bigint::BigInt;

use crate::error::Result;
use crate::partition::{check_weights, Partition};

/// One link `μ^{i−1} → μ^i` of a chain: the partition `μ^i` reached and
/// the index `j_i` used to reach it (a strip size for [`ChainS`], a drop
/// position for [`ChainT`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub partition: Partition,
    pub index: usize,
}

/// `(0) <_{j₁} μ¹ <_{j₂} … <_{j_k} μ^k = μ`, where `μ^{i}` with its largest
/// part removed differs from `μ^{i−1}` by a vertical `j_i`-strip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainS {
    pub steps: Vec<ChainStep>,
}

impl ChainS {
    /// `b_i = (largest part of μ^i) + j_i`.
    pub fn b_values(&self) -> Vec<usize> {
        self.steps
            .iter()
            .map(|s| s.partition.largest() + s.index)
            .collect()
    }

    /// `(−1)^{Σ j_i}`.
    pub fn sign(&self) -> i8 {
        let total: usize = self.steps.iter().map(|s| s.index).sum();
        if total % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// `(0) ⊂_{j₁} μ¹ ⊂_{j₂} … ⊂_{j_k} μ^k = μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainT {
    pub steps: Vec<ChainStep>,
}

impl ChainT {
    /// `a_i = μ^i_{j_i} + j_i − 1`.
    pub fn a_values(&self) -> Vec<usize> {
        self.steps
            .iter()
            .map(|s| s.partition.parts()[s.index - 1] + s.index - 1)
            .collect()
    }

    /// `(−1)^{Σ j_i − k}`.
    pub fn sign(&self) -> i8 {
        let total: usize = self.steps.iter().map(|s| s.index).sum();
        if (total - self.steps.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Every chain in `S(λ, μ)`, built from `μ` downwards. Steps are tried by
/// increasing strip size.
pub fn enumerate_chains_s(lambda: &Partition, mu: &Partition) -> Result<Vec<ChainS>> {
    check_weights(lambda, mu)?;
    let mut out = Vec::new();
    let mut rev_steps = Vec::new();
    chains_s(lambda, mu, &mut rev_steps, &mut out);
    Ok(out)
}

fn chains_s(remaining: &Partition, current: &Partition, rev: &mut Vec<ChainStep>, out: &mut Vec<ChainS>) {
    if current.is_empty() {
        if remaining.is_empty() {
            out.push(ChainS {
                steps: rev.iter().rev().cloned().collect(),
            });
        }
        return;
    }
    let top = current.largest();
    let head = current.without_largest();
    for &(b, _) in remaining.multiplicity_form().pairs() {
        if b < top {
            continue;
        }
        let strip = b - top;
        let rest = remaining.remove_one(b).expect("b is a part");
        for omega in head.vertical_strip_predecessors(strip) {
            rev.push(ChainStep {
                partition: current.clone(),
                index: strip,
            });
            chains_s(&rest, &omega, rev, out);
            rev.pop();
        }
    }
}

/// Every chain in `T(λ, μ)`, built from `μ` downwards. Steps are tried by
/// increasing drop index.
pub fn enumerate_chains_t(lambda: &Partition, mu: &Partition) -> Result<Vec<ChainT>> {
    check_weights(lambda, mu)?;
    let mut out = Vec::new();
    let mut rev_steps = Vec::new();
    chains_t(lambda, mu, &mut rev_steps, &mut out);
    Ok(out)
}

fn chains_t(remaining: &Partition, current: &Partition, rev: &mut Vec<ChainStep>, out: &mut Vec<ChainT>) {
    if current.is_empty() {
        if remaining.is_empty() {
            out.push(ChainT {
                steps: rev.iter().rev().cloned().collect(),
            });
        }
        return;
    }
    for (idx, &part) in current.parts().iter().enumerate() {
        let i = idx + 1;
        let Some(rest) = remaining.remove_one(part + i - 1) else {
            continue;
        };
        let omega = current.er_reduction(i).expect("i in range");
        rev.push(ChainStep {
            partition: current.clone(),
            index: i,
        });
        chains_t(&rest, &omega, rev, out);
        rev.pop();
    }
}

/// `Σ sign(S)` over a chain list.
pub fn signed_count_s(chains: &[ChainS]) -> BigInt {
    BigInt::from(chains.iter().map(|c| c.sign() as i64).sum::<i64>())
}

/// `Σ sign(T)` over a chain list.
pub fn signed_count_t(chains: &[ChainT]) -> BigInt {
    BigInt::from(chains.iter().map(|c| c.sign() as i64).sum::<i64>())
}

//! The two recurrences for `K⁻¹_{λ,μ}`, sharing a concurrent memo store.
//!
//! The strip recurrence peels the largest part `μ_n` off `μ` and sums over
//! vertical strips of `μ^{(n)}`; the Egecioglu–Remmel recurrence removes
//! the `i`-th part with the `⊂_i` reduction. Both bottom out at
//! `K⁻¹_{(0),(0)} = 1`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::sign;
use crate::error::Result;
use crate::partition::{check_weights, Partition};

use super::identities::{cancels, strip_common_tail};

type Key = (Partition, Partition);

/// Memoized evaluator for both recurrences. Reads proceed concurrently;
/// inserts take the write lock briefly and never while recursing.
#[derive(Default)]
pub struct InverseKostka {
    strip_memo: RwLock<HashMap<Key, BigInt>>,
    er_memo: RwLock<HashMap<Key, BigInt>>,
}

impl InverseKostka {
    pub fn new() -> Self {
        Self::default()
    }

    /// The strip recurrence, pruned by the cancellation principles.
    pub fn duan(&self, lambda: &Partition, mu: &Partition) -> Result<BigInt> {
        check_weights(lambda, mu)?;
        Ok(self.duan_unchecked(lambda, mu))
    }

    pub(crate) fn duan_unchecked(&self, lambda: &Partition, mu: &Partition) -> BigInt {
        if cancels(lambda, mu) {
            return BigInt::zero();
        }
        let (lambda, mu) = strip_common_tail(lambda, mu);
        if lambda.is_empty() {
            return BigInt::one();
        }
        let key = (lambda, mu);
        if let Some(v) = self.strip_memo.read().expect("memo poisoned").get(&key) {
            return v.clone();
        }
        let value = strip_step(&key.0, &key.1, |l, w| self.duan_unchecked(l, w));
        self.strip_memo
            .write()
            .expect("memo poisoned")
            .insert(key, value.clone());
        value
    }

    /// The Egecioglu–Remmel recurrence, with no pruning beyond the memo.
    pub fn er(&self, lambda: &Partition, mu: &Partition) -> Result<BigInt> {
        check_weights(lambda, mu)?;
        Ok(self.er_unchecked(lambda, mu))
    }

    fn er_unchecked(&self, lambda: &Partition, mu: &Partition) -> BigInt {
        if lambda.is_empty() && mu.is_empty() {
            return BigInt::one();
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.er_memo.read().expect("memo poisoned").get(&key) {
            return v.clone();
        }
        let value = er_step(lambda, mu, |l, w| self.er_unchecked(l, w));
        self.er_memo.write().expect("memo poisoned").insert(key, value.clone());
        value
    }

    pub fn memo_sizes(&self) -> (usize, usize) {
        (
            self.strip_memo.read().expect("memo poisoned").len(),
            self.er_memo.read().expect("memo poisoned").len(),
        )
    }
}

/// Process-wide engine used by the free functions.
pub fn shared() -> &'static InverseKostka {
    static ENGINE: OnceLock<InverseKostka> = OnceLock::new();
    ENGINE.get_or_init(InverseKostka::new)
}

/// One unfolding of the strip recurrence:
/// `Σ_{r_j ≥ μ_n} (−1)^{r_j−μ_n} Σ_{μ^{(n)}−ω ∈ {r_j−μ_n}} K⁻¹_{λ[j],ω}`,
/// with sub-entries supplied by `sub`. Distinct part values are visited
/// once each.
pub fn strip_step<F>(lambda: &Partition, mu: &Partition, mut sub: F) -> BigInt
where
    F: FnMut(&Partition, &Partition) -> BigInt,
{
    let top = mu.largest();
    let head = mu.without_largest();
    let mut total = BigInt::zero();
    for &(r, _) in lambda.multiplicity_form().pairs() {
        if r < top {
            continue;
        }
        let strip = r - top;
        let reduced = lambda.remove_one(r).expect("r is a part of λ");
        for omega in head.vertical_strip_predecessors(strip) {
            total += sign(strip) * sub(&reduced, &omega);
        }
    }
    total
}

/// One unfolding of the Egecioglu–Remmel recurrence:
/// `Σ_{r_j = μ_i + i − 1} (−1)^{i−1} K⁻¹_{λ[j], ω}` with `ω ⊂_i μ`.
pub fn er_step<F>(lambda: &Partition, mu: &Partition, mut sub: F) -> BigInt
where
    F: FnMut(&Partition, &Partition) -> BigInt,
{
    let mut total = BigInt::zero();
    for (idx, &part) in mu.parts().iter().enumerate() {
        let i = idx + 1;
        let r = part + i - 1;
        if let Some(reduced) = lambda.remove_one(r) {
            let omega = mu.er_reduction(i).expect("i is in range");
            total += sign(i - 1) * sub(&reduced, &omega);
        }
    }
    total
}

/// `K⁻¹_{λ,μ}` by the strip recurrence, using the shared memo store.
pub fn inv_kostka_duan(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    shared().duan(lambda, mu)
}

/// `K⁻¹_{λ,μ}` by the Egecioglu–Remmel recurrence, using the shared memo store.
pub fn inv_kostka_er(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    shared().er(lambda, mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(parts: [usize; N]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn duan_examples() {
        let e = InverseKostka::new();
        assert_eq!(e.duan(&p([2]), &p([1, 1])).unwrap(), BigInt::from(-1));
        assert_eq!(e.duan(&p([1, 2]), &p([1, 1, 1])).unwrap(), BigInt::from(-2));
        assert_eq!(e.duan(&p([1, 4]), &p([1, 2, 2])).unwrap(), BigInt::from(1));
        assert_eq!(e.duan(&Partition::empty(), &Partition::empty()).unwrap(), BigInt::one());
        assert!(e.duan(&p([2]), &p([1])).is_err());
    }

    #[test]
    fn er_examples() {
        let e = InverseKostka::new();
        assert_eq!(e.er(&p([2]), &p([1, 1])).unwrap(), BigInt::from(-1));
        assert_eq!(e.er(&p([4]), &p([2, 2])).unwrap(), BigInt::zero());
        assert_eq!(e.er(&p([1, 4]), &p([1, 2, 2])).unwrap(), BigInt::from(1));
        assert!(e.er(&p([2]), &p([1])).is_err());
    }

    #[test]
    fn memo_fills() {
        let e = InverseKostka::new();
        e.duan(&p([1, 2, 3]), &p([1, 1, 1, 1, 2])).unwrap();
        e.er(&p([1, 2, 3]), &p([1, 1, 1, 1, 2])).unwrap();
        let (a, b) = e.memo_sizes();
        assert!(a > 0 && b > 0);
    }
}

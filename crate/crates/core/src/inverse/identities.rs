//! Cancellation principles and the identity obtained by unfolding both
//! recurrences once.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::partition::{check_weights, Partition};

use super::recurrence::{er_step, shared, strip_step};

pub(crate) fn cancels(lambda: &Partition, mu: &Partition) -> bool {
    lambda.len() > mu.len() || lambda.reverse_lex_cmp(mu) == Ordering::Less
}

pub(crate) fn strip_common_tail(lambda: &Partition, mu: &Partition) -> (Partition, Partition) {
    let a = lambda.parts();
    let b = mu.parts();
    let common = a
        .iter()
        .rev()
        .zip(b.iter().rev())
        .take_while(|(x, y)| x == y)
        .count();
    (
        Partition::from(&a[..a.len() - common]),
        Partition::from(&b[..b.len() - common]),
    )
}

/// True when `K⁻¹_{λ,μ}` vanishes by cancellation: `λ < μ` in the
/// last-non-zero-difference order, or `l(λ) > l(μ)`.
pub fn cancellation_zero(lambda: &Partition, mu: &Partition) -> Result<bool> {
    check_weights(lambda, mu)?;
    Ok(cancels(lambda, mu))
}

/// Strips the longest run of equal trailing (largest) parts shared by `λ`
/// and `μ`. The inverse Kostka number is unchanged.
pub fn tail_reduction(lambda: &Partition, mu: &Partition) -> Result<(Partition, Partition)> {
    check_weights(lambda, mu)?;
    Ok(strip_common_tail(lambda, mu))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corollary1Record {
    /// One unfolding of the strip recurrence.
    pub lhs: BigInt,
    /// One unfolding of the Egecioglu–Remmel recurrence.
    pub rhs: BigInt,
    pub equal: bool,
}

/// Evaluates both one-step expansions of `K⁻¹_{λ,μ}`, with every sub-entry
/// taken from the strip engine.
pub fn verify_corollary1(lambda: &Partition, mu: &Partition) -> Result<Corollary1Record> {
    check_weights(lambda, mu)?;
    let (lhs, rhs) = if lambda.is_empty() {
        (BigInt::one(), BigInt::one())
    } else {
        let engine = shared();
        (
            strip_step(lambda, mu, |l, w| engine.duan_unchecked(l, w)),
            er_step(lambda, mu, |l, w| engine.duan_unchecked(l, w)),
        )
    };
    let equal = lhs == rhs;
    Ok(Corollary1Record { lhs, rhs, equal })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(parts: [usize; N]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn cancellation_examples() {
        assert!(cancellation_zero(&p([1, 1]), &p([2])).unwrap());
        assert!(cancellation_zero(&p([1, 1, 1]), &p([1, 2])).unwrap());
        assert!(!cancellation_zero(&p([3]), &p([1, 2])).unwrap());
        assert!(cancellation_zero(&p([3]), &p([2])).is_err());
    }

    #[test]
    fn tail_reduction_examples() {
        assert_eq!(
            tail_reduction(&p([1, 1, 2, 2]), &p([1, 1, 1, 1, 2])).unwrap(),
            (p([1, 1, 2]), p([1, 1, 1, 1]))
        );
        assert_eq!(
            tail_reduction(&p([1, 2, 3]), &p([1, 2, 3])).unwrap(),
            (Partition::empty(), Partition::empty())
        );
        assert_eq!(tail_reduction(&p([1, 2]), &p([3])).unwrap(), (p([1, 2]), p([3])));
    }

    #[test]
    fn worked_identities() {
        // K⁻¹_{(3),(1³)} − K⁻¹_{(2),(1²)} = −K⁻¹_{(3),(1,2)} + K⁻¹_{(2),(2)}: 1 + 1 = 1 + 1
        let rec = verify_corollary1(&p([2, 3]), &p([1, 1, 1, 2])).unwrap();
        assert_eq!((rec.lhs.clone(), rec.rhs.clone()), (BigInt::from(2), BigInt::from(2)));
        assert!(rec.equal);
        // K⁻¹_{(1,2),(1³)} = K⁻¹_{(2²),(1²,2)} − K⁻¹_{(1,2),(1,2)}: −2 = −1 − 1
        let rec = verify_corollary1(&p([1, 2, 2]), &p([1, 1, 1, 2])).unwrap();
        assert_eq!((rec.lhs.clone(), rec.rhs.clone()), (BigInt::from(-2), BigInt::from(-2)));
        let rec = verify_corollary1(&p([1, 3]), &p([1, 3])).unwrap();
        assert_eq!((rec.lhs, rec.rhs), (BigInt::one(), BigInt::one()));
    }
}

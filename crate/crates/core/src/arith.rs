//! Small exact-arithmetic helpers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient for non-negative arguments; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Binomial coefficient with an integer upper argument, using
/// `C(n, k) = (-1)^k C(k - n - 1, k)` for negative `n`.
pub fn binomial_signed(n: i64, k: usize) -> BigInt {
    if n >= 0 {
        binomial(n as usize, k)
    } else {
        let b = binomial((k as i64 - n - 1) as usize, k);
        if k % 2 == 0 {
            b
        } else {
            -b
        }
    }
}

/// `(-1)^e` as a big integer.
pub fn sign(e: usize) -> BigInt {
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Least non-negative residue of `x` modulo `p`.
pub fn residue(x: &BigInt, p: u64) -> u64 {
    let p = BigInt::from(p);
    let r = ((x % &p) + &p) % &p;
    r.try_into().expect("residue fits in u64")
}

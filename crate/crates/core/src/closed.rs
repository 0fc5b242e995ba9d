//! Closed forms for special families of inverse Kostka numbers and the
//! generating polynomials `g_{k,l}(t)` and `h_b(t)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{binomial, factorial, sign};
use crate::error::{Error, Result};
use crate::inverse::inv_kostka_duan;
use crate::partition::{MultiplicityForm, Partition};
use crate::symfunc::SchurExpansion;
use crate::unipoly::UniPolynomial;

fn multiplicity_factorials(lambda: &Partition) -> BigInt {
    lambda
        .multiplicity_form()
        .pairs()
        .iter()
        .map(|&(_, i)| factorial(i))
        .product()
}

/// `(−1)^{x−y}` for possibly negative differences.
fn sign_of_difference(x: usize, y: usize) -> BigInt {
    sign(x + y)
}

/// `K⁻¹_{λ,(1^m)} = (−1)^{m−l(λ)} l(λ)! / (i₁!⋯i_k!)`.
pub fn lemma5(lambda: &Partition) -> Result<BigInt> {
    if lambda.is_empty() {
        return Err(Error::Precondition("lemma5 needs a non-empty partition".into()));
    }
    let l = lambda.len();
    Ok(sign_of_difference(lambda.weight(), l) * factorial(l) / multiplicity_factorials(lambda))
}

/// `K⁻¹_{λ,(1^{m−a},a)} = (−1)^{l(μ)−l(λ)} (l(λ)−1)! λ'_a / (i₁!⋯i_k!)`.
pub fn lemma6(lambda: &Partition, a: usize) -> Result<BigInt> {
    if lambda.is_empty() {
        return Err(Error::Precondition("lemma6 needs a non-empty partition".into()));
    }
    let w = lambda.weight();
    if a == 0 || a > w {
        return Err(Error::Precondition(format!("lemma6 needs 1 ≤ a ≤ {w}, got {a}")));
    }
    let mu_len = if a == 1 { w } else { w - a + 1 };
    let l = lambda.len();
    let numer = factorial(l - 1) * lambda.conjugate_count(a);
    Ok(sign_of_difference(mu_len, l) * numer / multiplicity_factorials(lambda))
}

/// `K⁻¹_{λ,(1^m,a,b)}` for `1 < a ≤ b`, split on whether the least part
/// `r_d ≥ b` equals `b`.
///
/// Only valid when every strip fits among the unit parts of `μ`, i.e.
/// `m ≥ r_k − b`, and `l(λ) ≥ 2`; otherwise [`Error::NotApplicable`] is
/// returned and the caller should use a recurrence.
pub fn corollary3(lambda: &MultiplicityForm, a: usize, b: usize) -> Result<BigInt> {
    if !(1 < a && a <= b) {
        return Err(Error::Precondition(format!("need 1 < a ≤ b, got a={a}, b={b}")));
    }
    let lam = lambda.to_partition();
    let w = lam.weight();
    if w < a + b {
        return Err(Error::Precondition(format!("weight {w} is less than a + b = {}", a + b)));
    }
    let ones = w - a - b;
    let mu = Partition::new(std::iter::repeat_n(1, ones).chain([a, b]));
    if lam.last_nonzero_cmp(&mu)? == std::cmp::Ordering::Less {
        return Err(Error::Precondition(format!("need λ ≥ μ, got λ={lam}, μ={mu}")));
    }
    let l = lam.len();
    if l < 2 {
        return Err(Error::NotApplicable(format!("corollary3 needs l(λ) ≥ 2, got λ={lam}")));
    }
    if ones + b < lam.largest() {
        return Err(Error::NotApplicable(format!(
            "guard m ≥ r_k − b fails: m={ones}, r_k={}, b={b}",
            lam.largest()
        )));
    }
    let k = lambda.distinct();
    let d = (1..=k)
        .find(|&j| lambda.value(j) >= b)
        .ok_or_else(|| Error::Precondition(format!("no part of λ is ≥ b = {b}")))?;

    let units = |j: usize| -> Result<BigInt> {
        let reduced = lambda.remove_part(j)?;
        Ok(BigInt::from(lambda.multiplicity(j) * reduced.part_count(a - 1)))
    };
    let mut bracket = BigInt::zero();
    let first_summed = if lambda.value(d) == b {
        let reduced = lambda.remove_part(d)?;
        bracket += lambda.multiplicity(d) * reduced.conjugate_count(a);
        d + 1
    } else {
        d
    };
    for j in first_summed..=k {
        bracket -= units(j)?;
    }

    let numer = sign_of_difference(mu.len(), l) * factorial(l - 2) * bracket;
    let (value, rem) = numer.div_rem(&multiplicity_factorials(&lam));
    if !rem.is_zero() {
        return Err(Error::NotApplicable(format!("non-integral value for λ={lam}, a={a}, b={b}")));
    }
    Ok(value)
}

/// `m_{(1^k,2^l)} = Σ_{0≤t≤l} (−1)^t (k+t)!/(k! t!) s_{(1^{k+2t},2^{l−t})}`.
pub fn corollary4(k: usize, l: usize) -> Result<SchurExpansion> {
    if k + l == 0 {
        return Err(Error::Precondition("corollary4 needs k + l ≥ 1".into()));
    }
    Ok(SchurExpansion::from_terms((0..=l).map(|t| {
        let shape = Partition::from_multiplicities(&[(1, k + 2 * t), (2, l - t)]);
        (shape, sign(t) * binomial(k + t, t))
    })))
}

/// `g_{k,l}(t) = Σ_b K⁻¹_{(1^k,3^l),(1^a,2^b)} t^b`, by the recurrence
/// `g_{k,l} = C(k+l, l) − (t+t²) g_{k,l−1} + ε(t)` from `g_{k,0} = 1`.
///
/// When `k + 3l` is odd, `(t+t²) g_{k,l−1}` overshoots the top degree by
/// one; `ε(t) = K⁻¹_{(1^k,3^{l−1}),(2^D)} t^{D+2}` with `D = (k+3l−3)/2`
/// cancels that term.
pub fn g_polynomial(k: usize, l: usize) -> UniPolynomial {
    let t_plus_t2 = UniPolynomial::from_i64(&[0, 1, 1]);
    let mut g = UniPolynomial::one();
    for level in 1..=l {
        let mut next = &UniPolynomial::constant(binomial(k + level, level)) - &(&t_plus_t2 * &g);
        if (k + 3 * level) % 2 == 1 {
            let top = (k + 3 * (level - 1)) / 2;
            let lambda = Partition::from_multiplicities(&[(1, k), (3, level - 1)]);
            let mu = Partition::from_multiplicities(&[(2, top)]);
            let coeff = inv_kostka_duan(&lambda, &mu).expect("weights agree by construction");
            next = &next + &UniPolynomial::monomial(coeff, top + 2);
        }
        g = next;
    }
    g
}

/// `g_{k,l}(t) = Σ_{0≤i≤l} (−1)^i (k+l−i)!/(k!(l−i)!) (t+t²)^i`, valid
/// when `k > l − 1`.
pub fn corollary5(k: usize, l: usize) -> Result<UniPolynomial> {
    if k + 1 <= l {
        return Err(Error::Precondition(format!("corollary5 needs k > l − 1, got k={k}, l={l}")));
    }
    let t_plus_t2 = UniPolynomial::from_i64(&[0, 1, 1]);
    let mut out = UniPolynomial::zero();
    for i in 0..=l {
        let c = sign(i) * binomial(k + l - i, k);
        out = &out + &t_plus_t2.pow(i as u32).scale(&c);
    }
    Ok(out)
}

fn h_initial() -> [UniPolynomial; 4] {
    [
        UniPolynomial::one(),
        UniPolynomial::zero(),
        -UniPolynomial::t(),
        UniPolynomial::one(),
    ]
}

/// `h_b(t) = Σ_{k+3l=2b} K⁻¹_{(1^k,3^l),(2^b)} t^k`, by
/// `h_b = −t h_{b−2} + h_{b−3}` from `(h₀, h₁, h₂, h₃) = (1, 0, −t, 1)`.
pub fn h_polynomial(b: usize) -> UniPolynomial {
    let mut h: Vec<UniPolynomial> = h_initial().into_iter().collect();
    let minus_t = -UniPolynomial::t();
    for i in 4..=b {
        let next = &(&minus_t * &h[i - 2]) + &h[i - 3];
        h.push(next);
    }
    h.swap_remove(b)
}

/// A 3×3 matrix of polynomials in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferMatrix {
    entries: [[UniPolynomial; 3]; 3],
}

impl TransferMatrix {
    pub fn identity() -> Self {
        let mut entries: [[UniPolynomial; 3]; 3] = Default::default();
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = UniPolynomial::one();
        }
        TransferMatrix { entries }
    }

    /// `A(t) = [[−t, 1, 0], [0, −t, 1], [1, 0, 0]]`, which shifts
    /// `(h_{b−2}, h_{b−3}, h_{b−4})` to `(h_b, h_{b−1}, h_{b−2})`.
    pub fn shift() -> Self {
        let minus_t = -UniPolynomial::t();
        let one = UniPolynomial::one();
        let zero = UniPolynomial::zero();
        TransferMatrix {
            entries: [
                [minus_t.clone(), one.clone(), zero.clone()],
                [zero.clone(), minus_t, one.clone()],
                [one, zero.clone(), zero],
            ],
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &UniPolynomial {
        &self.entries[i][j]
    }

    pub fn mul(&self, other: &TransferMatrix) -> TransferMatrix {
        let mut entries: [[UniPolynomial; 3]; 3] = Default::default();
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).fold(UniPolynomial::zero(), |acc, k| {
                    &acc + &(&self.entries[i][k] * &other.entries[k][j])
                });
            }
        }
        TransferMatrix { entries }
    }

    pub fn pow(&self, mut e: u32) -> TransferMatrix {
        let mut base = self.clone();
        let mut acc = TransferMatrix::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn apply(&self, v: &[UniPolynomial; 3]) -> [UniPolynomial; 3] {
        std::array::from_fn(|i| {
            (0..3).fold(UniPolynomial::zero(), |acc, k| &acc + &(&self.entries[i][k] * &v[k]))
        })
    }
}

/// `h_b = (t², −2t, 1) · A(t)^{k−3} · (h_{2+r}, h_{1+r}, h_r)ᵀ` for
/// `b = 2k + r`, `r ∈ {0, 1}`. Needs `k ≥ 3`, i.e. `b ≥ 6`.
pub fn h_polynomial_matrix(b: usize) -> Result<UniPolynomial> {
    let (k, r) = (b / 2, b % 2);
    if k < 3 {
        return Err(Error::NotApplicable(format!("matrix form needs b ≥ 6, got {b}")));
    }
    let h = h_initial();
    let start = [h[2 + r].clone(), h[1 + r].clone(), h[r].clone()];
    let v = TransferMatrix::shift().pow((k - 3) as u32).apply(&start);
    let row = [
        UniPolynomial::t().pow(2),
        UniPolynomial::monomial(BigInt::from(-2), 1),
        UniPolynomial::one(),
    ];
    Ok(row
        .iter()
        .zip(&v)
        .fold(UniPolynomial::zero(), |acc, (c, x)| &acc + &(c * x)))
}

/// Whether every coefficient of `h_b` matches the strip engine on
/// `K⁻¹_{(1^k,3^l),(2^b)}`, `k + 3l = 2b`. Returns `false` when the weight
/// `2b` exceeds `bound`, since nothing can be certified there.
pub fn h_coefficient_check(b: usize, bound: usize) -> bool {
    if 2 * b > bound {
        return false;
    }
    let h = h_polynomial(b);
    let mu = Partition::from_multiplicities(&[(2, b)]);
    (0..=2 * b / 3).all(|l| {
        let k = 2 * b - 3 * l;
        let lambda = Partition::from_multiplicities(&[(1, k), (3, l)]);
        let engine = inv_kostka_duan(&lambda, &mu).expect("weights agree");
        engine == h.coeff(k)
    }) && h.degree().is_none_or(|d| d <= 2 * b)
}

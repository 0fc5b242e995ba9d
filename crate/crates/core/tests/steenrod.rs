use invkostka::{
    giambelli_hook2, integral_wu_lift, monomial_symmetric, monomial_to_schur, schur, steenrod_p,
    steenrod_sq, wu_epolynomial, wu_rhs, EPolynomial, Error, ModPExpansion, Partition,
    SchurExpansion,
};
use num_bigint::BigInt;

fn hook2(k: usize, m: usize) -> Partition {
    Partition::from_multiplicities(&[(1, m - k), (2, k)])
}

#[test]
fn wu_formula_agrees() {
    for m in 1..=10 {
        for k in 0..=m {
            assert_eq!(steenrod_sq(k, m).unwrap(), wu_rhs(k, m).unwrap(), "Sq^{k} w_{m}");
        }
    }
}

#[test]
fn giambelli_matches_schur() {
    for m in 1..=6 {
        for k in 0..=m {
            let g = giambelli_hook2(m, k).unwrap();
            for n in [m + k, m + k + 1] {
                let n = n.max(1);
                assert_eq!(g.to_polynomial(n).unwrap(), schur(&hook2(k, m), n).unwrap(), "m={m}, k={k}, n={n}");
            }
        }
    }
}

#[test]
fn giambelli_in_schur_basis() {
    for m in 1..=8 {
        for k in 0..=m {
            let expected = SchurExpansion::single(hook2(k, m));
            assert_eq!(giambelli_hook2(m, k).unwrap().to_schur(), expected, "m={m}, k={k}");
        }
    }
}

#[test]
fn integral_lift() {
    for m in 1..=6 {
        for k in 0..=m {
            let lift = integral_wu_lift(k, m).unwrap();
            let shape = hook2(k, m);
            let n = shape.len();
            assert_eq!(lift.to_polynomial(n).unwrap(), monomial_symmetric(&shape, n).unwrap(), "m={m}, k={k}");
            assert_eq!(
                ModPExpansion::from_schur(&lift.to_schur(), 2).unwrap(),
                wu_rhs(k, m).unwrap(),
                "m={m}, k={k}"
            );
            assert_eq!(lift.to_schur(), monomial_to_schur(&shape));
        }
    }
    assert_eq!(integral_wu_lift(1, 2).unwrap().to_string(), "e1e2 - 3e3");
    assert_eq!(integral_wu_lift(0, 5).unwrap().to_string(), "e5");
}

#[test]
fn pieri_factor_order_is_irrelevant() {
    // e₁e₂e₃ built by hand in two orders
    let mut forward = EPolynomial::new();
    forward.add_term(&[1, 2, 3], BigInt::from(1));
    let mut backward = EPolynomial::new();
    backward.add_term(&[3, 2, 1], BigInt::from(1));
    assert_eq!(forward, backward);
    let by_hand = SchurExpansion::single(Partition::empty())
        .pieri_multiply(3)
        .pieri_multiply(2)
        .pieri_multiply(1);
    assert_eq!(forward.to_schur(), by_hand);
}

#[test]
fn reduced_power_identity_and_support() {
    for m in 1..=8 {
        for p in [3, 5] {
            let ones = Partition::from_multiplicities(&[(1, m)]);
            let expected = ModPExpansion::from_schur(&SchurExpansion::single(ones), p).unwrap();
            assert_eq!(steenrod_p(0, m, p).unwrap(), expected);
            assert_eq!(steenrod_sq(0, m).unwrap().len(), 1);
        }
    }
    for m in 1..=4 {
        for k in 0..=m {
            for p in [3, 5] {
                if m + (p as usize - 1) * k > 14 {
                    continue;
                }
                // cancellation forces l(μ) ≥ l(λ) = m on the support
                let row = steenrod_p(k, m, p).unwrap();
                assert!(row.iter().all(|(mu, c)| mu.len() >= m && c < p), "P^{k} c_{m} mod {p}");
            }
        }
    }
}

#[test]
fn worked_examples() {
    let p = |s: &str| s.parse::<Partition>().unwrap();
    let row = steenrod_p(1, 1, 3).unwrap();
    assert_eq!((row.get(&p("[3]")), row.get(&p("[1,2]")), row.get(&p("[1,1,1]"))), (1, 2, 1));
    assert_eq!(steenrod_sq(1, 2).unwrap().iter().collect::<Vec<_>>(), vec![(&p("[1,2]"), 1)]);
    assert_eq!(
        steenrod_sq(2, 2).unwrap(),
        ModPExpansion::from_schur(&monomial_to_schur(&p("[2,2]")), 2).unwrap()
    );
    assert_eq!(wu_epolynomial(1, 2).unwrap().to_string(), "e1e2 + e3");
    assert_eq!(giambelli_hook2(2, 2).unwrap().to_string(), "e2e2 - e1e3");
    assert!(matches!(steenrod_p(1, 2, 4), Err(Error::NotOddPrime(4))));
    assert!(steenrod_sq(3, 1).is_err());
    assert!(wu_rhs(3, 1).is_err());
    assert!(integral_wu_lift(3, 1).is_err());
}

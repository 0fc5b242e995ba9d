use std::cmp::Ordering;

use invkostka::{
    cancellation_zero, enumerate_chains_s, enumerate_chains_t, enumerate_partitions, f_polynomial,
    inv_kostka_bruteforce, inv_kostka_duan, inv_kostka_er, inverse_kostka_matrix, kostka_matrix,
    signed_count_s, signed_count_t, solution_pairs, tail_reduction, verify_corollary1, InverseKostka,
    Partition,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn all_pairs(m: usize) -> Vec<(Partition, Partition)> {
    let parts = enumerate_partitions(m, None);
    parts
        .iter()
        .flat_map(|l| parts.iter().map(move |u| (l.clone(), u.clone())))
        .collect()
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn arb_pair(max_weight: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (1..=max_weight).prop_flat_map(|m| {
        let all = enumerate_partitions(m, None);
        let k = all.len();
        (0..k, 0..k).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

#[test]
fn engines_agree_with_matrix_inverse() {
    let fresh = InverseKostka::new();
    for m in 0..=7 {
        let oracle = kostka_matrix(m).inverse().unwrap();
        for (l, u) in all_pairs(m) {
            let expected = oracle.get(&l, &u).unwrap();
            let n = l.len().max(u.len()).max(1);
            assert_eq!(&fresh.duan(&l, &u).unwrap(), expected, "duan {l},{u}");
            assert_eq!(&fresh.er(&l, &u).unwrap(), expected, "er {l},{u}");
            assert_eq!(&inv_kostka_bruteforce(&l, &u, n).unwrap(), expected, "brute {l},{u}");
        }
    }
}

#[test]
fn worked_entries() {
    let cases = [
        ("[2]", "[1,1]", -1),
        ("[1,2]", "[1,1,1]", -2),
        ("[3]", "[1,2]", -1),
        ("[3]", "[1,1,1]", 1),
        ("[1,4]", "[1,2,2]", 1),
        ("[4]", "[2,2]", 0),
        ("[1,1,1,1]", "[1,1,1,1]", 1),
    ];
    for (l, u, v) in cases {
        let expected = BigInt::from(v);
        assert_eq!(inv_kostka_duan(&p(l), &p(u)).unwrap(), expected, "{l},{u}");
        assert_eq!(inv_kostka_er(&p(l), &p(u)).unwrap(), expected, "{l},{u}");
        assert_eq!(inv_kostka_bruteforce(&p(l), &p(u), 4).unwrap(), expected, "{l},{u}");
    }
    assert!(inv_kostka_duan(&p("[2]"), &p("[1]")).is_err());
    assert!(inv_kostka_bruteforce(&p("[1,2]"), &p("[1,1,1]"), 2).is_err());
}

#[test]
fn matrix_identity() {
    for m in 0..=7 {
        let prod = kostka_matrix(m).mul(&inverse_kostka_matrix(m)).unwrap();
        assert!(prod.is_identity(), "m={m}");
    }
}

#[test]
fn inverse_is_unitriangular() {
    let by_order = |a: &Partition, b: &Partition| a.last_nonzero_cmp(b).unwrap();
    for m in 0..=8 {
        assert!(inverse_kostka_matrix(m).is_unitriangular_by(by_order), "m={m}");
    }
}

#[test]
fn matrix_rows_are_deterministic() {
    let a = inverse_kostka_matrix(7);
    let b = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| inverse_kostka_matrix(7));
    assert_eq!(a, b);
}

#[test]
fn chain_sums() {
    for m in 0..=6 {
        for (l, u) in all_pairs(m) {
            let expected = inv_kostka_duan(&l, &u).unwrap();
            let s = enumerate_chains_s(&l, &u).unwrap();
            let t = enumerate_chains_t(&l, &u).unwrap();
            assert_eq!(signed_count_s(&s), expected, "S {l},{u}");
            assert_eq!(signed_count_t(&t), inv_kostka_er(&l, &u).unwrap(), "T {l},{u}");
            for chain in &s {
                let mut b = chain.b_values();
                b.sort();
                assert_eq!(b, l.parts());
            }
            for chain in &t {
                let mut a = chain.a_values();
                a.sort();
                assert_eq!(a, l.parts());
            }
        }
    }
}

#[test]
fn brute_force_is_stable_in_n() {
    for m in 1..=5 {
        for (l, u) in all_pairs(m) {
            for n in l.len().max(u.len())..=m + 1 {
                assert_eq!(
                    inv_kostka_bruteforce(&l, &u, n).unwrap(),
                    inv_kostka_bruteforce(&l, &u, n + 1).unwrap(),
                    "{l},{u} at n={n}"
                );
            }
        }
    }
}

#[test]
fn f_polynomial_evaluations() {
    for m in 1..=5 {
        for (l, u) in all_pairs(m) {
            let n = l.len().max(u.len());
            let f = f_polynomial(&l, &u, n).unwrap();
            let pairs = solution_pairs(&l, &u, n).unwrap();
            assert_eq!(f.eval(&BigInt::from(1)), inv_kostka_duan(&l, &u).unwrap(), "{l},{u}");
            assert_eq!(f.eval(&BigInt::from(-1)), BigInt::from(pairs.len()), "{l},{u}");
        }
    }
}

#[test]
fn solution_pairs_solve_the_vector_equation() {
    for m in 1..=5 {
        for (l, u) in all_pairs(m) {
            let n = l.len().max(u.len());
            let target: Vec<usize> = u.padded(n).unwrap().entries().iter().enumerate().map(|(i, x)| x + i).collect();
            for sp in solution_pairs(&l, &u, n).unwrap() {
                let w = sp.rearrangement.as_slice();
                for i in 0..n {
                    assert_eq!(w[i] as usize + sp.permutation[i], target[i]);
                }
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| sp.permutation[i] > sp.permutation[j])
                    .count();
                assert_eq!(sp.inversions, inversions);
                assert_eq!(sp.sign, if inversions % 2 == 0 { 1 } else { -1 });
                let mut sorted = w.to_vec();
                sorted.sort();
                let expected: Vec<u32> = l.padded(n).unwrap().entries().iter().map(|&x| x as u32).collect();
                assert_eq!(sorted, expected);
            }
        }
    }
}

#[test]
fn one_step_expansions_agree() {
    for m in 0..=7 {
        for (l, u) in all_pairs(m) {
            let rec = verify_corollary1(&l, &u).unwrap();
            assert!(rec.equal, "{l},{u}: {} vs {}", rec.lhs, rec.rhs);
        }
    }
}

#[test]
fn worked_identities() {
    let rec = verify_corollary1(&p("[2,3]"), &p("[1,1,1,2]")).unwrap();
    assert_eq!((rec.lhs, rec.rhs), (BigInt::from(2), BigInt::from(2)));
    let rec = verify_corollary1(&p("[1,2,2]"), &p("[1,1,1,2]")).unwrap();
    assert_eq!((rec.lhs, rec.rhs), (BigInt::from(-2), BigInt::from(-2)));
}

#[test]
fn cancellation_and_diagonal() {
    for m in 0..=7 {
        for (l, u) in all_pairs(m) {
            if cancellation_zero(&l, &u).unwrap() {
                assert_eq!(inv_kostka_er(&l, &u).unwrap(), BigInt::from(0), "{l},{u}");
                if l.len().max(u.len()) <= 6 {
                    let n = l.len().max(u.len());
                    assert_eq!(inv_kostka_bruteforce(&l, &u, n).unwrap(), BigInt::from(0));
                }
            }
            if l.last_nonzero_cmp(&u).unwrap() == Ordering::Less {
                assert!(cancellation_zero(&l, &u).unwrap());
            }
        }
        for l in enumerate_partitions(m, None) {
            assert_eq!(inv_kostka_er(&l, &l).unwrap(), BigInt::from(1));
        }
    }
}

proptest! {
    #[test]
    fn tail_reduction_preserves_value((l, u) in arb_pair(9)) {
        let (l2, u2) = tail_reduction(&l, &u).unwrap();
        prop_assert_eq!(l2.weight(), u2.weight());
        prop_assert_eq!(inv_kostka_er(&l2, &u2).unwrap(), inv_kostka_er(&l, &u).unwrap());
    }

    #[test]
    fn duan_matches_er((l, u) in arb_pair(10)) {
        prop_assert_eq!(inv_kostka_duan(&l, &u).unwrap(), inv_kostka_er(&l, &u).unwrap());
    }
}

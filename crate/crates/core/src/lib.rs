//! Exact inverse Kostka numbers.
//!
//! `K⁻¹_{λ,μ}` is the coefficient of the Schur polynomial `s_μ` in the
//! monomial symmetric polynomial `m_λ`. This crate computes it three ways
//! (a signed permutation sum, a vertical-strip recurrence and the
//! Egecioglu–Remmel recurrence), cross-checks them against the exact
//! inverse of the Kostka matrix, and evaluates closed forms for the
//! families `(1^m, a)`, `(1^m, a, b)` and `(1^k, 2^l)`.
//!
//! ```
//! use invkostka::{inv_kostka_duan, Partition};
//!
//! let lambda: Partition = "[1,2]".parse().unwrap();
//! let mu: Partition = "1^3".parse().unwrap();
//! assert_eq!(inv_kostka_duan(&lambda, &mu).unwrap(), (-2).into());
//! ```

pub mod arith;
pub mod closed;
mod error;
pub mod inverse;
pub mod matrix;
pub mod partition;
pub mod poly;
pub mod steenrod;
pub mod symfunc;
pub mod unipoly;
pub mod verify;

pub use closed::{
    corollary3, corollary4, corollary5, g_polynomial, h_coefficient_check, h_polynomial,
    h_polynomial_matrix, lemma5, lemma6, TransferMatrix,
};
pub use error::{Error, Result};
pub use inverse::{
    cancellation_zero, enumerate_chains_s, enumerate_chains_t, f_polynomial, inv_kostka_bruteforce,
    inv_kostka_duan, inv_kostka_er, inverse_kostka_matrix, kostka_matrix, monomial_to_schur,
    signed_count_s, signed_count_t, solution_pairs, tail_reduction, verify_corollary1, ChainS,
    ChainStep, ChainT, Corollary1Record, InverseKostka, SolutionPair,
};
pub use matrix::LabeledMatrix;
pub use partition::{enumerate_partitions, MultiplicityForm, PaddedPartition, Partition};
pub use poly::{ExponentVector, SparsePolynomial};
pub use steenrod::{
    giambelli_hook2, integral_wu_lift, steenrod_p, steenrod_sq, wu_epolynomial, wu_rhs,
    EPolynomial, ModPExpansion,
};
pub use symfunc::{
    alternant, coefficient_extract, elementary_symmetric, eliminate_last, expansion_to_polynomial,
    kostka_number, monomial_symmetric, pieri_multiply, schur, SchurExpansion,
};
pub use unipoly::UniPolynomial;
pub use verify::{verify_suite, SuiteReport, VerifyReport};

//! Inverse Kostka numbers `K⁻¹_{λ,μ}`, the coefficients of `m_λ` in the
//! Schur basis, computed by three independent engines.

mod brute;
mod chains;
mod identities;
mod recurrence;

pub use brute::{f_polynomial, inv_kostka_bruteforce, solution_pairs, SolutionPair};
pub use chains::{
    enumerate_chains_s, enumerate_chains_t, signed_count_s, signed_count_t, ChainS, ChainStep,
    ChainT,
};
pub use identities::{cancellation_zero, tail_reduction, verify_corollary1, Corollary1Record};
pub use recurrence::{er_step, inv_kostka_duan, inv_kostka_er, shared, strip_step, InverseKostka};

use rayon::prelude::*;

use crate::matrix::LabeledMatrix;
use crate::partition::{enumerate_partitions, Partition};
use crate::symfunc::{kostka_number, SchurExpansion};

/// The row `μ ↦ K⁻¹_{λ,μ}` over all partitions of `|λ|`, zeros omitted.
pub fn monomial_to_schur(lambda: &Partition) -> SchurExpansion {
    let engine = shared();
    SchurExpansion::from_terms(
        enumerate_partitions(lambda.weight(), None)
            .into_iter()
            .map(|mu| {
                let v = engine.duan_unchecked(lambda, &mu);
                (mu, v)
            }),
    )
}

/// `K_m`, with rows and columns in canonical partition order.
pub fn kostka_matrix(m: usize) -> LabeledMatrix {
    let labels = enumerate_partitions(m, None);
    let rows = labels
        .par_iter()
        .map(|lambda| {
            labels
                .iter()
                .map(|mu| kostka_number(lambda, mu).expect("equal weights"))
                .collect()
        })
        .collect();
    LabeledMatrix::new(labels, rows)
}

/// `K_m⁻¹` from the strip recurrence. Rows are computed in parallel; the
/// result does not depend on scheduling.
pub fn inverse_kostka_matrix(m: usize) -> LabeledMatrix {
    let labels = enumerate_partitions(m, None);
    let engine = shared();
    let rows = labels
        .par_iter()
        .map(|lambda| labels.iter().map(|mu| engine.duan_unchecked(lambda, mu)).collect())
        .collect();
    LabeledMatrix::new(labels, rows)
}

//! Batch property checks across all engines up to a given weight.

use std::fmt;

use rayon::prelude::*;

use crate::inverse::{
    enumerate_chains_s, enumerate_chains_t, inv_kostka_bruteforce, inverse_kostka_matrix,
    kostka_matrix, signed_count_s, signed_count_t, verify_corollary1, InverseKostka,
};
use crate::inverse::cancellation_zero;
use crate::partition::{enumerate_partitions, Partition};
use crate::steenrod::{steenrod_sq, wu_rhs};

/// Pass/fail tally for one family of checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, results: Vec<(bool, String)>) {
        for (ok, what) in results {
            self.record(ok, || what);
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub max_weight: usize,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn total_checks(&self) -> usize {
        self.suites.iter().map(|s| s.checks).sum()
    }

    pub fn total_failures(&self) -> usize {
        self.suites.iter().map(|s| s.failures.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.total_failures() == 0
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            let status = if s.passed() { "ok" } else { "FAILED" };
            writeln!(f, "{:<20} {:>7} checks  {:>3} failures  {status}", s.name, s.checks, s.failures.len())?;
            for msg in s.failures.iter().take(5) {
                writeln!(f, "    {msg}")?;
            }
        }
        write!(f, "total: {} checks, {} failures", self.total_checks(), self.total_failures())
    }
}

fn pairs(m: usize) -> Vec<(Partition, Partition)> {
    let parts = enumerate_partitions(m, None);
    parts
        .iter()
        .flat_map(|l| parts.iter().map(move |u| (l.clone(), u.clone())))
        .collect()
}

/// Brute force is factorial in `n`; pairs needing more variables than this
/// are left to the other engines.
const BRUTE_MAX_N: usize = 8;
/// Weights above this are skipped by the stability suite.
const STABILITY_MAX_WEIGHT: usize = 5;

fn engine_agreement(max_weight: usize, engine: &InverseKostka) -> SuiteReport {
    let mut suite = SuiteReport::new("engine-agreement");
    for m in 0..=max_weight {
        let inverse = kostka_matrix(m).inverse();
        let Ok(inverse) = inverse else {
            suite.record(false, || format!("K_{m} is not invertible over the integers"));
            continue;
        };
        let results: Vec<(bool, String)> = pairs(m)
            .par_iter()
            .map(|(l, u)| {
                let d = engine.duan(l, u).expect("same weight");
                let e = engine.er(l, u).expect("same weight");
                let oracle = inverse.get(l, u).expect("labels cover P(m)").clone();
                let n = l.len().max(u.len()).max(1);
                let brute = (n <= BRUTE_MAX_N).then(|| inv_kostka_bruteforce(l, u, n).expect("n fits"));
                let ok = d == e && d == oracle && brute.as_ref().is_none_or(|b| *b == d);
                (ok, format!("{l},{u}: duan={d} er={e} inverse={oracle} brute={brute:?}"))
            })
            .collect();
        suite.absorb(results);
    }
    suite
}

fn matrix_identity(max_weight: usize) -> SuiteReport {
    let mut suite = SuiteReport::new("matrix-identity");
    for m in 0..=max_weight {
        let ok = kostka_matrix(m)
            .mul(&inverse_kostka_matrix(m))
            .is_ok_and(|p| p.is_identity());
        suite.record(ok, || format!("K_{m} K_{m}^-1 != Id"));
    }
    suite
}

fn chain_sums(max_weight: usize, engine: &InverseKostka) -> SuiteReport {
    let mut suite = SuiteReport::new("chain-sums");
    for m in 0..=max_weight {
        let results: Vec<(bool, String)> = pairs(m)
            .par_iter()
            .map(|(l, u)| {
                let v = engine.duan(l, u).expect("same weight");
                let s = signed_count_s(&enumerate_chains_s(l, u).expect("same weight"));
                let t = signed_count_t(&enumerate_chains_t(l, u).expect("same weight"));
                (s == v && t == v, format!("{l},{u}: engine={v} S={s} T={t}"))
            })
            .collect();
        suite.absorb(results);
    }
    suite
}

fn one_step_expansions(max_weight: usize) -> SuiteReport {
    let mut suite = SuiteReport::new("one-step-expansions");
    for m in 1..=max_weight {
        let results: Vec<(bool, String)> = pairs(m)
            .par_iter()
            .map(|(l, u)| {
                let rec = verify_corollary1(l, u).expect("same weight");
                (rec.equal, format!("{l},{u}: lhs={} rhs={}", rec.lhs, rec.rhs))
            })
            .collect();
        suite.absorb(results);
    }
    suite
}

fn cancellation(max_weight: usize, engine: &InverseKostka) -> SuiteReport {
    let mut suite = SuiteReport::new("cancellation");
    for m in 0..=max_weight {
        for (l, u) in pairs(m) {
            if cancellation_zero(&l, &u).expect("same weight") {
                let v = engine.er(&l, &u).expect("same weight");
                suite.record(v == 0.into(), || format!("{l},{u}: predicted 0, er gives {v}"));
            }
        }
    }
    suite
}

fn stability(max_weight: usize) -> SuiteReport {
    let mut suite = SuiteReport::new("stability");
    for m in 1..=max_weight.min(STABILITY_MAX_WEIGHT) {
        for (l, u) in pairs(m) {
            let start = l.len().max(u.len());
            for n in start..=m + 1 {
                let a = inv_kostka_bruteforce(&l, &u, n).expect("n fits");
                let b = inv_kostka_bruteforce(&l, &u, n + 1).expect("n fits");
                suite.record(a == b, || format!("{l},{u}: n={n} gives {a}, n+1 gives {b}"));
            }
        }
    }
    suite
}

fn wu_agreement(max_weight: usize) -> SuiteReport {
    let mut suite = SuiteReport::new("wu-agreement");
    for m in 1..=max_weight {
        for k in 0..=m {
            let lhs = steenrod_sq(k, m).expect("k ≤ m");
            let rhs = wu_rhs(k, m).expect("k ≤ m");
            suite.record(lhs == rhs, || format!("Sq^{k} w_{m}: {lhs} vs {rhs}"));
        }
    }
    suite
}

/// Runs every suite for all weights up to `max_weight` with a fresh memo
/// store, so earlier queries cannot mask an engine fault.
pub fn verify_suite(max_weight: usize) -> VerifyReport {
    let engine = InverseKostka::new();
    VerifyReport {
        max_weight,
        suites: vec![
            engine_agreement(max_weight, &engine),
            matrix_identity(max_weight),
            chain_sums(max_weight, &engine),
            one_step_expansions(max_weight),
            cancellation(max_weight, &engine),
            stability(max_weight),
            wu_agreement(max_weight),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_weight() {
        let r = verify_suite(0);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn small_weight() {
        let r = verify_suite(4);
        assert!(r.passed(), "{r}");
        assert!(r.suites.iter().all(|s| s.checks > 0));
    }
}

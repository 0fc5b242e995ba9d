//! Integer partitions in non-decreasing notation.
//!
//! A partition is stored as its positive parts sorted in non-decreasing
//! order, `λ₁ ≤ … ≤ λ_l`. Leading zeros are implicit; [`PaddedPartition`]
//! makes them explicit when a formula indexes a fixed number of entries
//! (the largest part is always the last entry).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are dropped.
    pub fn new<I: IntoIterator<Item = usize>>(parts: I) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable();
        Partition { parts }
    }

    /// The empty partition `(0)`.
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Builds `(r₁^{i₁}, …, r_k^{i_k})` from `(value, multiplicity)` pairs.
    pub fn from_multiplicities(pairs: &[(usize, usize)]) -> Self {
        Partition::new(
            pairs
                .iter()
                .flat_map(|&(r, i)| std::iter::repeat_n(r, i)),
        )
    }

    fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `l(λ)`, the number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The largest part, `0` for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.last().copied().unwrap_or(0)
    }

    /// Parts in non-increasing order (the usual Young diagram rows).
    pub fn rows(&self) -> Vec<usize> {
        self.parts.iter().rev().copied().collect()
    }

    pub fn multiplicity_form(&self) -> MultiplicityForm {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match pairs.last_mut() {
                Some((r, i)) if *r == p => *i += 1,
                _ => pairs.push((p, 1)),
            }
        }
        MultiplicityForm { pairs }
    }

    pub fn padded(&self, n: usize) -> Result<PaddedPartition> {
        PaddedPartition::new(self.clone(), n)
    }

    /// Entries padded with leading zeros to length `n` (caller guarantees `n ≥ l`).
    pub(crate) fn padded_entries(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n - self.len()];
        out.extend_from_slice(&self.parts);
        out
    }

    /// `μ^{(n)}`: the partition with its largest part removed.
    pub fn without_largest(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.pop();
        Partition::from_sorted(parts)
    }

    /// Removes one copy of `value`, if present.
    pub fn remove_one(&self, value: usize) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == value)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition::from_sorted(parts))
    }

    pub fn contains_part(&self, value: usize) -> bool {
        self.parts.binary_search(&value).is_ok()
    }

    /// `λ'_a`: the number of parts `≥ a`.
    pub fn conjugate_count(&self, a: usize) -> usize {
        self.parts.iter().filter(|&&p| p >= a).count()
    }

    /// `D_c(λ)`: the number of parts equal to `c`.
    pub fn part_count(&self, c: usize) -> usize {
        self.parts.iter().filter(|&&p| p == c).count()
    }

    /// Compares by the sign of the last non-zero difference `λ_i − μ_i`
    /// of the zero-padded forms. Both partitions must have the same weight.
    pub fn last_nonzero_cmp(&self, other: &Partition) -> Result<Ordering> {
        check_weights(self, other)?;
        Ok(self.reverse_lex_cmp(other))
    }

    /// Same order as [`Self::last_nonzero_cmp`] without the weight check.
    pub(crate) fn reverse_lex_cmp(&self, other: &Partition) -> Ordering {
        let n = self.len().max(other.len());
        let a = self.padded_entries(n);
        let b = other.padded_entries(n);
        a.iter().rev().cmp(b.iter().rev())
    }

    /// The partition `ω ⊂_i μ`: drop the `i`-th part (1-based) and
    /// decrement every earlier part.
    pub fn er_reduction(&self, i: usize) -> Result<Partition> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        let parts = self.parts[..i - 1]
            .iter()
            .map(|&p| p - 1)
            .chain(self.parts[i..].iter().copied());
        Ok(Partition::new(parts))
    }

    /// All `ω` with `μ − ω` a vertical `r`-strip, in canonical order.
    pub fn vertical_strip_predecessors(&self, r: usize) -> Vec<Partition> {
        // Within a run of equal parts only the leftmost ones can drop
        // without breaking the order, so a choice per run is a count.
        let runs = self.multiplicity_form().pairs;
        let mut out = Vec::new();
        let mut counts = vec![0; runs.len()];
        distribute(&runs, 0, r, &mut counts, &mut |counts| {
            let parts = runs.iter().zip(counts).flat_map(|(&(v, c), &t)| {
                std::iter::repeat_n(v - 1, t).chain(std::iter::repeat_n(v, c - t))
            });
            out.push(Partition::new(parts));
        });
        out.sort();
        out
    }

    /// All `μ` with `μ − λ` a vertical `r`-strip, in canonical order.
    /// Rows may be added, so results can be longer than `self`.
    pub fn vertical_strip_successors(&self, r: usize) -> Vec<Partition> {
        let mut runs = vec![(0, r)];
        runs.extend(self.multiplicity_form().pairs);
        let mut out = Vec::new();
        let mut counts = vec![0; runs.len()];
        distribute(&runs, 0, r, &mut counts, &mut |counts| {
            let parts = runs.iter().zip(counts).flat_map(|(&(v, c), &t)| {
                std::iter::repeat_n(v, c - t).chain(std::iter::repeat_n(v + 1, t))
            });
            out.push(Partition::new(parts));
        });
        out.sort();
        out
    }
}

/// Enumerates every way of taking `t_j ≤ c_j` items from each run with
/// `Σ t_j = remaining`.
fn distribute(
    runs: &[(usize, usize)],
    idx: usize,
    remaining: usize,
    counts: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if idx == runs.len() {
        if remaining == 0 {
            emit(counts);
        }
        return;
    }
    let capacity: usize = runs[idx..].iter().map(|&(_, c)| c).sum();
    if remaining > capacity {
        return;
    }
    for t in 0..=runs[idx].1.min(remaining) {
        counts[idx] = t;
        distribute(runs, idx + 1, remaining - t, counts, emit);
    }
    counts[idx] = 0;
}

pub(crate) fn check_weights(a: &Partition, b: &Partition) -> Result<()> {
    if a.weight() != b.weight() {
        return Err(Error::WeightMismatch {
            left: a.weight(),
            right: b.weight(),
        });
    }
    Ok(())
}

/// Canonical order: by length, then lexicographically on the
/// non-decreasing parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.iter().copied())
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(parts: [usize; N]) -> Self {
        Partition::new(parts)
    }
}

/// Parses `[1,1,2]` (any order), `1^2,2^1` (a bare `r` means `r^1`),
/// or `[]` / `0` for the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let s = s.trim();
        if s == "0" {
            return Ok(Partition::empty());
        }
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner.strip_suffix(']').ok_or_else(bad)?.trim();
            if inner.is_empty() {
                return Ok(Partition::empty());
            }
            let parts = inner
                .split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Partition::new(parts));
        }
        if s.is_empty() {
            return Err(bad());
        }
        let mut pairs = Vec::new();
        for item in s.split(',') {
            let item = item.trim();
            let (r, i) = match item.split_once('^') {
                Some((r, i)) => (r.trim(), i.trim()),
                None => (item, "1"),
            };
            let r: usize = r.parse().map_err(|_| bad())?;
            let i: usize = i.parse().map_err(|_| bad())?;
            if r == 0 {
                return Err(bad());
            }
            pairs.push((r, i));
        }
        Ok(Partition::from_multiplicities(&pairs))
    }
}

/// `(r₁^{i₁}, …, r_k^{i_k})` with `r` strictly increasing and every `i ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicityForm {
    pairs: Vec<(usize, usize)>,
}

impl MultiplicityForm {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        let ordered = pairs.windows(2).all(|w| w[0].0 < w[1].0);
        let positive = pairs.iter().all(|&(r, i)| r >= 1 && i >= 1);
        if !ordered || !positive {
            return Err(Error::Precondition(format!(
                "multiplicity form needs strictly increasing positive parts with positive multiplicities, got {pairs:?}"
            )));
        }
        Ok(MultiplicityForm { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// `k`, the number of distinct parts.
    pub fn distinct(&self) -> usize {
        self.pairs.len()
    }

    pub fn value(&self, j: usize) -> usize {
        self.pairs[j - 1].0
    }

    pub fn multiplicity(&self, j: usize) -> usize {
        self.pairs[j - 1].1
    }

    pub fn len(&self) -> usize {
        self.pairs.iter().map(|&(_, i)| i).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `λ[j]`: remove one copy of `r_j` (1-based `j`).
    pub fn remove_part(&self, j: usize) -> Result<Partition> {
        if j == 0 || j > self.pairs.len() {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.pairs.len(),
            });
        }
        let mut pairs = self.pairs.clone();
        pairs[j - 1].1 -= 1;
        Ok(Partition::from_multiplicities(&pairs))
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_multiplicities(&self.pairs)
    }
}

impl From<&Partition> for MultiplicityForm {
    fn from(p: &Partition) -> Self {
        p.multiplicity_form()
    }
}

/// A partition viewed as exactly `n` entries, leading zeros included.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PaddedPartition {
    partition: Partition,
    n: usize,
}

impl PaddedPartition {
    pub fn new(partition: Partition, n: usize) -> Result<Self> {
        if n < partition.len() {
            return Err(Error::TooFewVariables {
                n,
                needed: partition.len(),
            });
        }
        Ok(PaddedPartition { partition, n })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> Vec<usize> {
        self.partition.padded_entries(self.n)
    }

    /// `μ_n`, the entry in the last position.
    pub fn last(&self) -> usize {
        self.partition.largest()
    }

    /// `μ^{(n)}` as a padded partition of length `n − 1`.
    pub fn prefix(&self) -> Result<PaddedPartition> {
        if self.n == 0 {
            return Err(Error::Precondition("prefix of a zero-length partition".into()));
        }
        PaddedPartition::new(self.partition.without_largest(), self.n - 1)
    }
}

/// All partitions of `m` with at most `max_parts` parts, graded by length
/// and lexicographic within a length.
pub fn enumerate_partitions(m: usize, max_parts: Option<usize>) -> Vec<Partition> {
    if m == 0 {
        return vec![Partition::empty()];
    }
    let max_len = max_parts.unwrap_or(m).min(m);
    let mut out = Vec::new();
    let mut buf = Vec::new();
    for len in 1..=max_len {
        fixed_length(m, len, 1, &mut buf, &mut out);
    }
    out
}

fn fixed_length(m: usize, len: usize, min: usize, buf: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if len == 1 {
        if m >= min {
            buf.push(m);
            out.push(Partition::from_sorted(buf.clone()));
            buf.pop();
        }
        return;
    }
    // the remaining len parts are all ≥ p, so p·len ≤ m
    let mut p = min;
    while p * len <= m {
        buf.push(p);
        fixed_length(m - p, len - 1, p, buf, out);
        buf.pop();
        p += 1;
    }
}

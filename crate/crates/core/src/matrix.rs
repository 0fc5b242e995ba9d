//! Square integer matrices indexed by partitions.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledMatrix {
    labels: Vec<Partition>,
    rows: Vec<Vec<BigInt>>,
}

impl LabeledMatrix {
    pub fn new(labels: Vec<Partition>, rows: Vec<Vec<BigInt>>) -> Self {
        assert_eq!(labels.len(), rows.len(), "one row per label");
        assert!(rows.iter().all(|r| r.len() == labels.len()), "matrix must be square");
        LabeledMatrix { labels, rows }
    }

    pub fn identity(labels: Vec<Partition>) -> Self {
        let n = labels.len();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        LabeledMatrix { labels, rows }
    }

    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, row: &Partition, col: &Partition) -> Option<&BigInt> {
        let i = self.labels.iter().position(|p| p == row)?;
        let j = self.labels.iter().position(|p| p == col)?;
        Some(&self.rows[i][j])
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
        })
    }

    /// Exact product; both factors must carry the same labels in the same order.
    pub fn mul(&self, other: &LabeledMatrix) -> Result<LabeledMatrix> {
        if self.labels != other.labels {
            return Err(Error::Precondition("matrix labels differ".into()));
        }
        let n = self.dim();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &self.rows[i][k] * &other.rows[k][j]).sum())
                    .collect()
            })
            .collect();
        Ok(LabeledMatrix::new(self.labels.clone(), rows))
    }

    /// Exact inverse by Gauss–Jordan elimination over the rationals.
    /// Fails if the matrix is singular or its inverse is not integral.
    pub fn inverse(&self) -> Result<LabeledMatrix> {
        let n = self.dim();
        let mut a: Vec<Vec<BigRational>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .map(|v| BigRational::from_integer(v.clone()))
                    .chain((0..n).map(|j| {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    }))
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or_else(|| Error::Precondition("singular matrix".into()))?;
            a.swap(col, pivot);
            let inv = a[col][col].recip();
            for v in a[col].iter_mut() {
                *v *= &inv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for c in 0..2 * n {
                        let delta = &factor * &a[col][c];
                        a[r][c] -= delta;
                    }
                }
            }
        }
        let rows = a
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .skip(n)
                    .map(|v| {
                        if v.denom().is_one() {
                            Ok(v.to_integer())
                        } else {
                            Err(Error::Precondition("inverse is not integral".into()))
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LabeledMatrix::new(self.labels.clone(), rows))
    }

    /// Whether the matrix is unitriangular once rows and columns are sorted
    /// decreasingly by `order`: unit diagonal and `M[λ][μ] = 0` whenever
    /// `λ < μ`.
    pub fn is_unitriangular_by<F>(&self, order: F) -> bool
    where
        F: Fn(&Partition, &Partition) -> Ordering,
    {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let v = &self.rows[i][j];
                match order(&self.labels[i], &self.labels[j]) {
                    Ordering::Equal => v.is_one(),
                    Ordering::Less => v.is_zero(),
                    Ordering::Greater => true,
                }
            })
        })
    }

    /// Entries reduced to least non-negative residues mod `p`.
    pub fn reduce_mod(&self, p: u64) -> LabeledMatrix {
        let p = BigInt::from(p);
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|v| v.mod_floor(&p)).collect())
            .collect();
        LabeledMatrix::new(self.labels.clone(), rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> LabeledMatrix {
        let labels = (1..=rows.len()).map(|k| Partition::from([k])).collect();
        LabeledMatrix::new(
            labels,
            rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(),
        )
    }

    #[test]
    fn inverse_of_unitriangular() {
        let a = m(&[&[1, 1, 1], &[0, 1, 2], &[0, 0, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv, m(&[&[1, -1, 1], &[0, 1, -2], &[0, 0, 1]]));
        assert!(a.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn singular_and_fractional() {
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
        assert!(m(&[&[2, 0], &[0, 1]]).inverse().is_err());
        assert!(m(&[&[0, 1], &[1, 0]]).inverse().unwrap().mul(&m(&[&[0, 1], &[1, 0]])).unwrap().is_identity());
    }

    #[test]
    fn lookup_by_label() {
        let a = m(&[&[1, 5], &[0, 1]]);
        assert_eq!(a.get(&Partition::from([1]), &Partition::from([2])), Some(&BigInt::from(5)));
        assert_eq!(a.get(&Partition::from([9]), &Partition::from([2])), None);
    }
}

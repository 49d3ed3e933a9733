use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Sparse graded Betti table of a quotient of `K[x_1..x_N]`.
///
/// Keys are `(i, j)` with `i` the homological degree and `j` the internal
/// degree. Zero entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiTable {
    n_vars: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

/// First entry on which two tables disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub i: usize,
    pub j: usize,
    pub left: BigInt,
    pub right: BigInt,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "beta[{},{}]: {} vs {}",
            self.i, self.j, self.left, self.right
        )
    }
}

impl BettiTable {
    /// An empty table. Quotient rings should insert `(0, 0) = 1`.
    pub fn new(n_vars: usize) -> Self {
        BettiTable {
            n_vars,
            entries: BTreeMap::new(),
        }
    }

    /// The table of the ring itself, `beta_{0,0} = 1` and nothing else.
    pub fn unit(n_vars: usize) -> Self {
        let mut t = Self::new(n_vars);
        t.add(0, 0, BigInt::from(1));
        t
    }

    /// Adds `value` to the entry at `(i, j)`, dropping it if the sum is zero.
    pub fn add(&mut self, i: usize, j: usize, value: impl Into<BigInt>) {
        let value = value.into();
        if value.is_zero() {
            return;
        }
        let slot = self.entries.entry((i, j)).or_insert_with(BigInt::zero);
        *slot += value;
        if slot.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    /// Stores a closed-form value, rejecting negative results.
    pub fn insert_checked(&mut self, i: usize, j: usize, value: BigInt) -> Result<()> {
        if value.is_negative() {
            return Err(Error::NegativeBetti {
                i,
                j,
                value: value.to_string(),
            });
        }
        if value.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
        Ok(())
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero entries sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max i` over the support.
    pub fn proj_dim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `max (j - i)` over the support.
    pub fn regularity(&self) -> usize {
        self.entries
            .keys()
            .map(|&(i, j)| j.saturating_sub(i))
            .max()
            .unwrap_or(0)
    }

    /// Row indices `j - i` that carry a nonzero entry.
    pub fn rows(&self) -> Vec<usize> {
        let mut rows: Vec<usize> = self.entries.keys().map(|&(i, j)| j - i).collect();
        rows.sort_unstable();
        rows.dedup();
        rows
    }

    /// Column sums `sum_j beta_{i,j}` for `i = 0..=pdim`.
    pub fn totals(&self) -> Vec<BigInt> {
        let mut totals = vec![BigInt::zero(); self.proj_dim() + 1];
        for (&(i, _), v) in &self.entries {
            totals[i] += v;
        }
        totals
    }

    /// `sum (-1)^i beta_{i,j} t^j`, the numerator of the Hilbert series.
    pub fn alternating_polynomial(&self) -> IntPolynomial {
        let mut coefficients = vec![BigInt::zero(); self.n_vars + 1];
        for (&(i, j), v) in &self.entries {
            if coefficients.len() <= j {
                coefficients.resize(j + 1, BigInt::zero());
            }
            if i % 2 == 0 {
                coefficients[j] += v;
            } else {
                coefficients[j] -= v;
            }
        }
        IntPolynomial::new(coefficients)
    }

    /// Entries with `i` in the given column and `j - i = row`.
    pub fn row(&self, row: usize) -> Vec<(usize, BigInt)> {
        self.entries
            .iter()
            .filter(|(&(i, j), _)| j >= i && j - i == row)
            .map(|(&(i, _), v)| (i, v.clone()))
            .collect()
    }

    /// First `(i, j)` in sorted order on which `self` and `other` differ.
    pub fn first_mismatch(&self, other: &BettiTable) -> Option<Mismatch> {
        let mut keys: Vec<(usize, usize)> = self
            .entries
            .keys()
            .chain(other.entries.keys())
            .copied()
            .collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter().find_map(|(i, j)| {
            let (left, right) = (self.get(i, j), other.get(i, j));
            (left != right).then_some(Mismatch { i, j, left, right })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dual_example() -> BettiTable {
        let mut t = BettiTable::unit(9);
        for j in [3, 4, 6] {
            t.add(1, j, 1);
        }
        for j in [6, 7] {
            t.add(2, j, 1);
        }
        t
    }

    #[test]
    fn read_off_invariants() {
        let t = dual_example();
        assert_eq!(t.proj_dim(), 2);
        assert_eq!(t.regularity(), 5);
        assert_eq!(t.totals(), vec![1.into(), 3.into(), 2.into()]);
        assert_eq!(t.rows(), vec![0, 2, 3, 4, 5]);
        let unit = BettiTable::unit(4);
        assert_eq!((unit.proj_dim(), unit.regularity()), (0, 0));
    }

    #[test]
    fn alternating_sum() {
        assert_eq!(
            dual_example().alternating_polynomial(),
            IntPolynomial::from_i64(&[1, 0, 0, -1, -1, 0, 0, 1])
        );
    }

    #[test]
    fn zero_and_negative_entries() {
        let mut t = BettiTable::new(3);
        t.add(1, 2, 2);
        t.add(1, 2, -2);
        assert!(t.is_empty());
        assert!(matches!(
            t.insert_checked(1, 2, BigInt::from(-1)),
            Err(Error::NegativeBetti { i: 1, j: 2, .. })
        ));
        t.insert_checked(1, 2, BigInt::zero()).unwrap();
        assert!(t.is_empty());
    }

    #[test]
    fn mismatch_reporting() {
        let a = dual_example();
        let mut b = dual_example();
        assert_eq!(a.first_mismatch(&b), None);
        b.add(2, 5, 3);
        let m = a.first_mismatch(&b).unwrap();
        assert_eq!((m.i, m.j), (2, 5));
        assert_eq!(m.to_string(), "beta[2,5]: 0 vs 3");
    }
}

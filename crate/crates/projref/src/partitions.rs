//! Integer partitions stored as weakly decreasing part vectors.
//!
//! Trailing zeros are never stored, so two partitions are equal as values
//! exactly when they are equal as shapes.  The derived `Ord` is
//! lexicographic on the part vectors; any total order would do for picking
//! canonical orbit representatives, and this one is stable and cheap.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(
    Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from arbitrary nonnegative parts by sorting.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    /// Accepts the vector only if it is already weakly decreasing.
    pub fn try_decreasing(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Malformed(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The i-th part (0-based), zero beyond the last nonzero part.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// Componentwise sum, padding the shorter vector with zeros.
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition(
            (0..n)
                .map(|i| self.part(i) + other.part(i))
                .collect(),
        )
    }

    /// Componentwise difference, if it is again a partition.
    pub fn sub_checked(&self, other: &Partition) -> Option<Partition> {
        let n = self.len().max(other.len());
        let mut diff = Vec::with_capacity(n);
        for i in 0..n {
            diff.push(self.part(i).checked_sub(other.part(i))?);
        }
        if diff.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        while diff.last() == Some(&0) {
            diff.pop();
        }
        Some(Partition(diff))
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition(
            (0..cols)
                .map(|j| self.0.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }

    /// Number of standard Young tableaux of this shape, by hook lengths.
    pub fn tableau_count(&self) -> u128 {
        let n = self.size();
        let conj = self.conjugate();
        let mut num: u128 = 1;
        for m in 1..=n {
            num *= m as u128;
        }
        let mut den: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let hook = (row - j) + (conj.part(j) - i) - 1;
                den *= hook as u128;
            }
        }
        debug_assert_eq!(num % den, 0);
        num / den
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All partitions of `n`, in lexicographically decreasing part order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        let top = max_part.min(remaining);
        for part in (1..=top).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// All partitions of `n` with at most `max_len` parts.
pub fn partitions_of_bounded_length(n: usize, max_len: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.len() <= max_len)
        .collect()
}

/// Multinomial coefficient n! / (sizes_1! ... sizes_m!) with n = sum sizes.
pub fn multinomial(sizes: &[usize]) -> u128 {
    let mut result: u128 = 1;
    let mut seen = 0usize;
    for &s in sizes {
        for i in 1..=s {
            // result * (seen + i) / i stays integral at every step because it
            // equals a binomial coefficient.
            result = result * (seen + i) as u128 / i as u128;
        }
        seen += s;
    }
    result
}

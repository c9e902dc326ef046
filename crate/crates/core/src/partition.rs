//! Integer partitions, permutations and cycle types.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::{Error, Rational, Result};

/// A weakly decreasing tuple of positive integers.
///
/// Zero parts are stripped on construction, so the empty tuple is the unique
/// partition of 0. Partitions are ordered reverse-lexicographically: for a
/// fixed size `(3) < (2,1) < (1,1,1)`, and every `BTreeMap` keyed by
/// partitions iterates in that order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts; zeros are dropped.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(parts: impl Into<Vec<usize>>) -> Self {
        let mut parts = parts.into();
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `m_i(λ)`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn is_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// The multiset union `λ ∪ μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Which partitions [`partitions_of`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionFilter {
    All,
    Odd,
    Strict,
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize, filter: PartitionFilter) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, current: &mut Vec<usize>, filter: PartitionFilter, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            match filter {
                PartitionFilter::Odd if part % 2 == 0 => continue,
                PartitionFilter::Strict if current.last() == Some(&part) => continue,
                _ => {}
            }
            current.push(part);
            let next_max = if filter == PartitionFilter::Strict { part - 1 } else { part };
            go(remaining - part, next_max, current, filter, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), filter, &mut out);
    out
}

/// `z_λ = ∏ i^{m_i} m_i!`, the order of the centralizer of a permutation of
/// cycle type `λ`.
pub fn z_lambda(lambda: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (part, mult) in lambda.multiplicities() {
        for k in 1..=mult {
            z *= BigInt::from(part) * BigInt::from(k);
        }
    }
    z
}

/// `z_λ` as a rational, for use in coefficient arithmetic.
pub fn z_rational(lambda: &Partition) -> Rational {
    Rational::from_integer(z_lambda(lambda))
}

/// A permutation of `{0, …, n-1}` stored as its image vector.
///
/// Everything user-facing (display, cycle notation in tests) is 1-based; the
/// storage is 0-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds from 0-based images.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from 1-based images, i.e. `w(1), …, w(n)`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(format!("{images:?}")));
        }
        Self::new(images.iter().map(|&i| i - 1).collect())
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based image of `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Cycles as lists of 0-based points, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect::<Vec<_>>())
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i32 {
        let even_cycles = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The action on tuples: `w · (a_1, …, a_n) = (a_{w(1)}, …, a_{w(n)})`.
    pub fn act_on<T: Clone>(&self, tuple: &[T]) -> Vec<T> {
        self.images.iter().map(|&i| tuple[i].clone()).collect()
    }
}

/// The permutation with consecutive cycles on the blocks
/// `{r_j+1, …, r_j+λ_j}` where `r_j = λ_1 + ⋯ + λ_{j-1}`.
pub fn class_representative(lambda: &Partition) -> Permutation {
    let n = lambda.size();
    let mut images = Vec::with_capacity(n);
    let mut start = 0;
    for &part in lambda.parts() {
        for k in 0..part {
            images.push(start + (k + 1) % part);
        }
        start += part;
    }
    Permutation { images }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(partitions_of(0, PartitionFilter::All), vec![Partition::empty()]);
        assert_eq!(partitions_of(3, PartitionFilter::All), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(4, PartitionFilter::Odd), vec![p(&[3, 1]), p(&[1, 1, 1, 1])]);
        assert_eq!(partitions_of(6, PartitionFilter::Strict), vec![p(&[6]), p(&[5, 1]), p(&[4, 2]), p(&[3, 2, 1])]);
    }

    #[test]
    fn enumeration_is_sorted_and_counts_match() {
        let counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &c) in counts.iter().enumerate() {
            let all = partitions_of(n, PartitionFilter::All);
            assert_eq!(all.len(), c);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            // Euler: odd partitions and strict partitions are equinumerous.
            assert_eq!(partitions_of(n, PartitionFilter::Odd).len(), partitions_of(n, PartitionFilter::Strict).len());
        }
    }

    #[test]
    fn zeros_are_stripped() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn z_values() {
        assert_eq!(z_lambda(&p(&[1, 1])), BigInt::from(2));
        assert_eq!(z_lambda(&p(&[3])), BigInt::from(3));
        assert_eq!(z_lambda(&p(&[2, 1])), BigInt::from(2));
        assert_eq!(z_lambda(&p(&[2, 2, 1])), BigInt::from(8));
    }

    #[test]
    fn class_equation() {
        let mut fact = BigInt::one();
        for n in 1..=10usize {
            fact *= BigInt::from(n);
            let total: BigInt = partitions_of(n, PartitionFilter::All).iter().map(|l| &fact / z_lambda(l)).sum();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn representatives_have_the_right_cycle_type() {
        assert_eq!(class_representative(&p(&[1, 1, 1])), Permutation::identity(3));
        assert_eq!(class_representative(&p(&[3])), Permutation::from_one_based(&[2, 3, 1]).unwrap());
        for n in 0..=8 {
            for lambda in partitions_of(n, PartitionFilter::All) {
                assert_eq!(class_representative(&lambda).cycle_type(), lambda);
            }
        }
    }

    #[test]
    fn permutation_basics() {
        let w = Permutation::from_one_based(&[2, 3, 1, 5, 4]).unwrap();
        assert_eq!(w.sign(), -1);
        assert_eq!(w.compose(&w.inverse()), Permutation::identity(5));
        assert_eq!(w.act_on(&['a', 'b', 'c', 'd', 'e']), vec!['b', 'c', 'a', 'e', 'd']);
        assert!(Permutation::from_one_based(&[1, 1]).is_err());
    }
}

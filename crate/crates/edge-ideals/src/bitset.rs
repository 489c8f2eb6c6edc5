//! Vertex subsets of `{1, ..., n}` packed into a single machine word.
//!
//! Vertices are 1-indexed in every public API; bit `i` of the word stores
//! vertex `i + 1`. The capacity bound of 63 vertices keeps every subset
//! operation a single word instruction, which is what the Hochster-style
//! subset enumerations lean on.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Hard capacity of the bitset representation.
pub const MAX_VERTICES: usize = 63;

/// A subset of the vertex set `{1, ..., n}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// Fails with a capacity error when `n` vertices do not fit in one word.
    pub fn check_capacity(n: usize) -> Result<()> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity { requested: n });
        }
        Ok(())
    }

    /// Builds a set from 1-indexed vertex labels.
    pub fn from_vertices(vertices: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::Capacity { requested: v });
            }
            bits |= 1 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    /// The full set `{1, ..., n}`. Callers validate `n` beforehand.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v >= 1 && v <= MAX_VERTICES);
        VertexSet(1 << (v - 1))
    }

    pub fn contains(self, v: usize) -> bool {
        v >= 1 && v <= MAX_VERTICES && self.0 & (1 << (v - 1)) != 0
    }

    #[must_use]
    pub fn insert(self, v: usize) -> Self {
        debug_assert!(v >= 1 && v <= MAX_VERTICES);
        VertexSet(self.0 | 1 << (v - 1))
    }

    #[must_use]
    pub fn remove(self, v: usize) -> Self {
        debug_assert!(v >= 1 && v <= MAX_VERTICES);
        VertexSet(self.0 & !(1 << (v - 1)))
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersect(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Ascending 1-indexed vertex labels.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn vertices(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    pub fn max_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// Lexicographic order on the ascending vertex lists, shortest-prefix first.
    pub fn lex_cmp(self, other: Self) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, v) in self.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// All subsets of `{1, ..., n}` of cardinality `k`, in ascending bit order
/// (Gosper's hack).
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    debug_assert!(n <= MAX_VERTICES);
    let limit: u64 = if n == 0 { 1 } else { 1u64 << n };
    let mut state: Option<u64> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let x = state?;
        if x >= limit && x != 0 {
            state = None;
            return None;
        }
        if k == 0 {
            state = None;
            return Some(VertexSet(0));
        }
        let u = x & x.wrapping_neg();
        let v = x.wrapping_add(u);
        let next = if v == 0 || v >= limit {
            None
        } else {
            Some(v | (((x ^ v) / u) >> 2))
        };
        state = next;
        Some(VertexSet(x))
    })
}

/// Inclusion-minimal elements of a family of sets, deduplicated and sorted.
pub fn antichain_minimal(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (s.card(), s.bits()));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset_of(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Inclusion-maximal elements of a family of sets, deduplicated and sorted.
pub fn antichain_maximal(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (std::cmp::Reverse(s.card()), s.bits()));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset_of(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Number of subsets of `[n]` of cardinality at most `j_max`, saturating.
pub fn count_subsets_up_to(n: usize, j_max: usize) -> u64 {
    let mut total: u64 = 0;
    for j in 0..=j_max.min(n) {
        total = total.saturating_add(binomial(n as u64, j as u64));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_iteration_counts() {
        assert_eq!(subsets_of_size(5, 2).count(), 10);
        assert_eq!(subsets_of_size(5, 0).count(), 1);
        assert_eq!(subsets_of_size(5, 5).count(), 1);
        assert_eq!(subsets_of_size(5, 6).count(), 0);
        assert_eq!(subsets_of_size(0, 0).count(), 1);
    }

    #[test]
    fn subset_iteration_at_capacity() {
        assert_eq!(subsets_of_size(63, 1).count(), 63);
        assert_eq!(subsets_of_size(63, 62).count(), 63);
    }

    #[test]
    fn lex_order_short_sets() {
        let a = VertexSet::from_vertices(&[1, 3]).unwrap();
        let b = VertexSet::from_vertices(&[2]).unwrap();
        assert_eq!(a.lex_cmp(b), Ordering::Less);
        assert_eq!(b.lex_cmp(a), Ordering::Greater);
        assert_eq!(a.lex_cmp(a), Ordering::Equal);
    }

    #[test]
    fn capacity_enforced() {
        assert!(VertexSet::from_vertices(&[64]).is_err());
        assert!(VertexSet::check_capacity(64).is_err());
        assert!(VertexSet::check_capacity(63).is_ok());
    }

    #[test]
    fn display_ascending() {
        let s = VertexSet::from_vertices(&[3, 1]).unwrap();
        assert_eq!(s.to_string(), "{1,3}");
        assert_eq!(VertexSet::EMPTY.to_string(), "{}");
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(count_subsets_up_to(4, 2), 1 + 4 + 6);
    }
}

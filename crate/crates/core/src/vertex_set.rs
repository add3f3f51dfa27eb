//! Vertex sets over `[n] = {1, ..., n}` stored as 64-bit masks.
//!
//! Vertex `v` occupies bit `v - 1`. Ordering is lexicographic on the sorted
//! vertex lists, so `12 < 123 < 13 < 2`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Builds a set from 1-based vertices, rejecting duplicates and anything outside `1..=n`.
    pub fn from_vertices(vertices: &[usize], n: usize) -> Result<Self> {
        let mut bits = 0u64;
        for &v in vertices {
            if v == 0 || v > n || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            let b = 1u64 << (v - 1);
            if bits & b != 0 {
                return Err(Error::DuplicateVertex { vertex: v });
            }
            bits |= b;
        }
        Ok(VertexSet(bits))
    }

    /// `{1, ..., k}`.
    pub fn initial_segment(k: usize) -> Self {
        match k {
            0 => VertexSet(0),
            k if k >= 64 => VertexSet(u64::MAX),
            k => VertexSet((1u64 << k) - 1),
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1u64 << (v - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Self {
        self.union(VertexSet::singleton(v))
    }

    pub fn without(self, v: usize) -> Self {
        self.difference(VertexSet::singleton(v))
    }

    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self` with exactly `k` elements, in lexicographic order.
    pub fn subsets_of_size(self, k: usize) -> Combinations {
        Combinations::new(self.to_vec(), k)
    }
}

/// Iterator over the vertices of a [`VertexSet`].
#[derive(Clone)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Vertices {}

/// k-subsets of a fixed vertex list, produced in lexicographic order.
pub struct Combinations {
    pool: Vec<usize>,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(pool: Vec<usize>, k: usize) -> Self {
        let done = k > pool.len();
        Combinations {
            idx: (0..k).collect(),
            pool,
            done,
        }
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let bits = self
            .idx
            .iter()
            .fold(0u64, |acc, &i| acc | 1u64 << (self.pool[i] - 1));
        let k = self.idx.len();
        let m = self.pool.len();
        // advance to the next index combination
        let mut pos = k;
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            if self.idx[pos] < m - k + pos {
                self.idx[pos] += 1;
                for j in pos + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(VertexSet(bits))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0, other.0);
        loop {
            match (a == 0, b == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                _ => {}
            }
            let (la, lb) = (a.trailing_zeros(), b.trailing_zeros());
            if la != lb {
                return la.cmp(&lb);
            }
            a &= a - 1;
            b &= b - 1;
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    /// Compact `124` form when every vertex is a single digit, `{1,12}` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        if self.max_vertex().unwrap() <= 9 {
            for v in self.iter() {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.iter().map(|v| v.to_string()).collect();
            write!(f, "{{{}}}", parts.join(","))
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet({self})")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(deserializer)?;
        VertexSet::from_vertices(&vs, MAX_VERTICES).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for tests and examples: `vs(&[1, 2, 4])`. Panics on invalid input.
pub fn vs(vertices: &[usize]) -> VertexSet {
    VertexSet::from_vertices(vertices, MAX_VERTICES).expect("valid vertex list")
}

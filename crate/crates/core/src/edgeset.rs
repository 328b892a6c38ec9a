//! Fixed-length bit sets keyed by edge index.
//!
//! An [`EdgeSet`] is the common currency of the crate: subgraphs, minimal
//! conflicting subgraphs, hitting sets and colour classes are all edge sets
//! over one host graph's canonical edge indexing.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    len: usize,
    words: Vec<u64>,
}

impl EdgeSet {
    /// The empty set over `len` edges.
    pub fn empty(len: usize) -> Self {
        EdgeSet {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    /// Every edge of a host with `len` edges.
    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let n = (len - lo).min(WORD);
            *w = if n == WORD { u64::MAX } else { (1u64 << n) - 1 };
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut s = Self::empty(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Length of the host edge list, not the number of members.
    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "edge index {i} out of range {}", self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        assert!(i < self.len, "edge index {i} out of range {}", self.len);
        self.words[i / WORD] &= !(1 << (i % WORD));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn check_host(&self, other: &EdgeSet) {
        assert_eq!(
            self.len, other.len,
            "edge sets over different hosts ({} vs {} edges)",
            self.len, other.len
        );
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        self.check_host(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        EdgeSet { len: self.len, words }
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        self.check_host(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        EdgeSet { len: self.len, words }
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        self.check_host(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect();
        EdgeSet { len: self.len, words }
    }

    pub fn complement(&self) -> EdgeSet {
        Self::full(self.len).difference(self)
    }

    pub fn union_with(&mut self, other: &EdgeSet) {
        self.check_host(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &EdgeSet) {
        self.check_host(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.check_host(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.check_host(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &EdgeSet) -> bool {
        !self.is_disjoint(other)
    }

    /// Raw words, least significant bit is edge 0.
    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

/// Canonical order: lexicographic on the ascending member lists.
impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeSet/{}", self.len)?;
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + bit);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

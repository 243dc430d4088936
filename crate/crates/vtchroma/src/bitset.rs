//! Fixed-width vertex sets.
//!
//! Two 64-bit words give a hard capacity of 128 vertices, enough for every
//! family the toolkit generates while keeping set arithmetic at a couple of
//! machine instructions.

use std::fmt;

/// Hard cap on the number of vertices in any graph.
pub const MAX_VERTICES: usize = 128;

const WORDS: usize = MAX_VERTICES / 64;

/// A set of vertex indices below [`MAX_VERTICES`], stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    /// The empty set.
    pub const EMPTY: VertexSet = VertexSet { words: [0; WORDS] };

    /// Set containing the vertices `0..n`.
    pub fn full(n: usize) -> VertexSet {
        assert!(n <= MAX_VERTICES);
        let mut words = [0u64; WORDS];
        for (i, w) in words.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = u64::MAX;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        VertexSet { words }
    }

    /// Set containing exactly `v`.
    pub fn singleton(v: usize) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        s.insert(v);
        s
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    /// Set with `v` added.
    pub fn with(&self, v: usize) -> VertexSet {
        let mut s = *self;
        s.insert(v);
        s
    }

    /// Set with `v` removed.
    pub fn without(&self, v: usize) -> VertexSet {
        let mut s = *self;
        s.remove(v);
        s
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w |= o;
        }
        VertexSet { words }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w &= o;
        }
        VertexSet { words }
    }

    /// Members of `self` not in `other`.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w &= !o;
        }
        VertexSet { words }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(w, o)| w & !o == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(w, o)| w & o == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Removes and returns the smallest member.
    pub fn pop_first(&mut self) -> Option<usize> {
        let v = self.first()?;
        self.remove(v);
        Some(v)
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> Iter {
        Iter { words: self.words, word_idx: 0 }
    }

    /// Members collected in ascending order.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Numeric order of the underlying 128-bit value; used only as a
/// deterministic total order for sorting and deduplication.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        for i in (0..WORDS).rev() {
            match self.words[i].cmp(&other.words[i]) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word_idx: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word_idx < WORDS {
            let w = self.words[self.word_idx];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word_idx] &= w - 1;
                return Some(self.word_idx * 64 + bit);
            }
            self.word_idx += 1;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_contains() {
        let mut s = VertexSet::EMPTY;
        assert!(s.is_empty());
        s.insert(0);
        s.insert(63);
        s.insert(64);
        s.insert(127);
        assert_eq!(s.len(), 4);
        assert!(s.contains(63) && s.contains(64));
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.to_vec(), vec![0, 63, 127]);
    }

    #[test]
    fn full_spans_word_boundary() {
        assert_eq!(VertexSet::full(0).len(), 0);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(65).len(), 65);
        assert_eq!(VertexSet::full(128).len(), 128);
        assert!(VertexSet::full(65).contains(64));
        assert!(!VertexSet::full(65).contains(65));
    }

    #[test]
    fn set_algebra() {
        let a: VertexSet = [1, 2, 3, 70].into_iter().collect();
        let b: VertexSet = [2, 3, 4].into_iter().collect();
        assert_eq!(a.intersection(&b).to_vec(), vec![2, 3]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 2, 3, 4, 70]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 70]);
        assert!(a.intersection(&b).is_subset(&a));
        assert!(!a.is_disjoint(&b));
        assert!(a.difference(&b).is_disjoint(&b));
    }

    #[test]
    fn pop_first_ascending() {
        let mut s: VertexSet = [5, 90, 17].into_iter().collect();
        assert_eq!(s.pop_first(), Some(5));
        assert_eq!(s.pop_first(), Some(17));
        assert_eq!(s.pop_first(), Some(90));
        assert_eq!(s.pop_first(), None);
    }

    #[test]
    fn ordering_is_numeric() {
        let a = VertexSet::singleton(3);
        let b = VertexSet::singleton(100);
        assert!(a < b);
        assert!(a.union(&b) > b);
    }
}

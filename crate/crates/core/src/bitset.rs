//! Fixed-width vertex bitsets.
//!
//! Every vertex set, edge, facet and squarefree monomial in the crate is a
//! [`VertexSet`]: a 256-bit inline bitset over vertex indices. Graphs and
//! complexes are limited to [`DEFAULT_VERTEX_CAP`] vertices unless the wide
//! mode is requested, in which case [`MAX_VERTICES`] applies.

use std::fmt;

const WORDS: usize = 4;

/// Hard upper bound on the number of vertices of any universe.
pub const MAX_VERTICES: usize = WORDS * 64;

/// Vertex cap used when wide mode is not requested.
pub const DEFAULT_VERTEX_CAP: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::empty();
        s.insert(v);
        s
    }

    pub fn pair(u: usize, v: usize) -> Self {
        let mut s = Self::singleton(u);
        s.insert(v);
        s
    }

    /// The set `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex index out of range");
        let mut s = Self::empty();
        for (w, word) in s.words.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }

    /// Builds a set from the low 64 bits of a mask.
    pub fn from_u64(mask: u64) -> Self {
        let mut s = Self::empty();
        s.words[0] = mask;
        s
    }

    /// The low word, if every element is below 64.
    pub fn as_u64(&self) -> Option<u64> {
        if self.words[1..].iter().all(|&w| w == 0) {
            Some(self.words[0])
        } else {
            None
        }
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_VERTICES, "vertex index {v} out of range");
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < MAX_VERTICES {
            self.words[v / 64] &= !(1u64 << (v % 64));
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && (self.words[v / 64] >> (v % 64)) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        let mut s = *self;
        for (a, b) in s.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
        s
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = *self;
        for (a, b) in s.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
        s
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        let mut s = *self;
        for (a, b) in s.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
        s
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            word: 0,
        }
    }

    /// Compares the sorted index sequences lexicographically, so that a
    /// proper prefix sorts first (`{1} < {1,2} < {1,3} < {2}`).
    pub fn cmp_lex(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_indices(iter)
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word] &= w - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_iteration() {
        let s = VertexSet::full(70);
        assert_eq!(s.len(), 70);
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.last(), Some(69));
        assert_eq!(VertexSet::full(0), VertexSet::empty());
        assert_eq!(VertexSet::full(64).as_u64(), Some(u64::MAX));
    }

    #[test]
    fn lexicographic_word_order() {
        let a = VertexSet::from_indices([1]);
        let b = VertexSet::from_indices([1, 2]);
        let c = VertexSet::from_indices([1, 3]);
        let d = VertexSet::from_indices([2]);
        assert!(a.cmp_lex(&b).is_lt());
        assert!(b.cmp_lex(&c).is_lt());
        assert!(c.cmp_lex(&d).is_lt());
    }

    proptest! {
        #[test]
        fn set_algebra(a in proptest::collection::vec(0usize..200, 0..20),
                       b in proptest::collection::vec(0usize..200, 0..20)) {
            let sa = VertexSet::from_indices(a.iter().copied());
            let sb = VertexSet::from_indices(b.iter().copied());
            let u = sa.union(&sb);
            prop_assert!(sa.is_subset(&u) && sb.is_subset(&u));
            prop_assert_eq!(u.difference(&sb).union(&sa.intersection(&sb)), sa);
            prop_assert_eq!(sa.is_disjoint(&sb), sa.intersection(&sb).is_empty());
            let expect: std::collections::BTreeSet<usize> = a.iter().copied().collect();
            prop_assert_eq!(sa.iter().collect::<Vec<_>>(), expect.into_iter().collect::<Vec<_>>());
        }
    }
}

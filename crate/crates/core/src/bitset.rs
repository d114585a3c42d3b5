//! Fixed-universe bit sets used for alternative sets and memoization keys.
//!
//! Universes of up to 64 elements pack into one inline word, so a state key
//! of two sets is two `u64`s. Larger universes spill to the heap.

use smallvec::{smallvec, SmallVec};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    universe: usize,
    words: SmallVec<[u64; 1]>,
}

impl BitSet {
    pub fn empty(universe: usize) -> Self {
        let n_words = universe.div_ceil(64).max(1);
        BitSet {
            universe,
            words: smallvec![0; n_words],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for (w, word) in set.words.iter_mut().enumerate() {
            let lo = w * 64;
            let bits = universe.saturating_sub(lo).min(64);
            *word = if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 };
        }
        set
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(universe);
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.universe, "bit {i} outside universe {}", self.universe);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.universe {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// The only member, if there is exactly one.
    pub fn single(&self) -> Option<usize> {
        if self.len() == 1 {
            self.first()
        } else {
            None
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter().chain(std::iter::repeat(&0)))
            .all(|(a, b)| a & !b == 0)
    }

    pub fn without(&self, i: usize) -> BitSet {
        let mut out = self.clone();
        out.remove(i);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + tz)
            })
        })
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_set_respects_universe() {
        assert_eq!(BitSet::full(3).iter().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(BitSet::full(64).len(), 64);
        assert_eq!(BitSet::full(65).len(), 65);
        assert_eq!(BitSet::full(130).iter().last(), Some(129));
        assert!(BitSet::full(0).is_empty());
    }

    #[test]
    fn insert_remove_wide() {
        let mut s = BitSet::empty(200);
        s.insert(3);
        s.insert(150);
        assert!(s.contains(150));
        assert_eq!(s.len(), 2);
        assert_eq!(s.first(), Some(3));
        s.remove(3);
        assert_eq!(s.single(), Some(150));
        assert!(s.is_subset(&BitSet::full(200)));
        assert!(!BitSet::full(200).is_subset(&s));
    }
}

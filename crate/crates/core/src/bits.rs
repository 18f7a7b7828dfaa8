//! Small fixed-universe bit sets.
//!
//! Element sets of a finite ring and point sets of a finite space are
//! subsets of `{0, .., n-1}`; this module provides the shared set type.
//! The [`Ord`] instance is the canonical order used everywhere a list
//! of sets must be deterministic: first by cardinality, then by the
//! smallest element on which the two sets differ.

use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    universe: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn empty(universe: usize) -> Self {
        BitSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = BitSet::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn singleton(universe: usize, elem: usize) -> Self {
        let mut s = BitSet::empty(universe);
        s.insert(elem);
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(universe: usize, elems: I) -> Self {
        let mut s = BitSet::empty(universe);
        for e in elems {
            s.insert(e);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, elem: usize) {
        assert!(elem < self.universe, "element {elem} outside universe");
        self.words[elem / 64] |= 1 << (elem % 64);
    }

    pub fn remove(&mut self, elem: usize) {
        assert!(elem < self.universe, "element {elem} outside universe");
        self.words[elem / 64] &= !(1 << (elem % 64));
    }

    pub fn contains(&self, elem: usize) -> bool {
        elem < self.universe && self.words[elem / 64] & (1 << (elem % 64)) != 0
    }

    pub fn card(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersect(&self, other: &BitSet) -> BitSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &BitSet) -> BitSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> BitSet {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * 64 + bit)
                }
            })
        })
    }

    pub fn min_elem(&self) -> Option<usize> {
        self.iter().next()
    }

    fn zip_with(&self, other: &BitSet, f: impl Fn(u64, u64) -> u64) -> BitSet {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| f(a, b))
            .collect();
        let mut out = BitSet {
            universe: self.universe,
            words,
        };
        out.trim();
        out
    }

    /// Clear bits beyond the universe so equality stays structural.
    fn trim(&mut self) {
        let tail = self.universe % 64;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        if self.universe == 0 {
            self.words.clear();
        }
    }
}

impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.card().cmp(&other.card()).then_with(|| {
            // First differing element decides; the set containing it is
            // lexicographically smaller (its sorted listing diverges
            // earlier with a smaller entry).
            for (a, b) in self.words.iter().zip(&other.words) {
                let diff = a ^ b;
                if diff != 0 {
                    let low = diff & diff.wrapping_neg();
                    return if a & low != 0 {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

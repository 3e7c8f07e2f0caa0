//! Families of subsets of `[n]`, stored as characteristic vectors over the
//! `2^n` cells of the hypercube.
//!
//! Almost every operation on a family is a sweep over `P(n)` in one
//! direction at a time. [`Family::pair_map`] is the single primitive behind
//! those sweeps: for element `j` it pairs every cell `B` not containing `j`
//! with `B + j` and rewrites both cells from the two old bits, 64 cells at a
//! time.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::{ElementSet, GroundSize};

/// Cells containing element `b + 1`, for `b < 6`, within one 64-bit word.
const LOW_MASKS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// A collection of distinct subsets of `[n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Family {
    n: GroundSize,
    words: Vec<u64>,
}

#[inline]
fn word_count(n: GroundSize) -> usize {
    n.cells().div_ceil(64)
}

#[inline]
fn tail_mask(n: GroundSize) -> u64 {
    if n.cells() >= 64 {
        u64::MAX
    } else {
        (1u64 << n.cells()) - 1
    }
}

impl Family {
    pub fn empty(n: GroundSize) -> Self {
        Family { n, words: vec![0; word_count(n)] }
    }

    /// The whole powerset `P(n)`.
    pub fn full(n: GroundSize) -> Self {
        let mut words = vec![u64::MAX; word_count(n)];
        words[0] &= tail_mask(n);
        Family { n, words }
    }

    pub fn from_sets<I: IntoIterator<Item = ElementSet>>(n: GroundSize, sets: I) -> Result<Self> {
        let mut f = Family::empty(n);
        for s in sets {
            f.insert(s)?;
        }
        Ok(f)
    }

    /// Builds a family over `n <= 6` directly from its characteristic word.
    pub fn from_word(n: GroundSize, word: u64) -> Result<Self> {
        if n.get() > 6 {
            return Err(Error::capacity(format!("a single word holds families over n <= 6, not n = {n}")));
        }
        if word & !tail_mask(n) != 0 {
            return Err(Error::domain("characteristic word has bits outside P(n)"));
        }
        Ok(Family { n, words: vec![word] })
    }

    pub(crate) fn from_words(n: GroundSize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), word_count(n));
        Family { n, words }
    }

    #[inline]
    pub fn ground(&self) -> GroundSize {
        self.n
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Number of sets.
    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, s: ElementSet) -> bool {
        let i = s.index();
        i < self.n.cells() && (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    /// Adds `s`; returns whether it was absent.
    pub fn insert(&mut self, s: ElementSet) -> Result<bool> {
        if !s.fits(self.n) {
            return Err(Error::SetOutOfRange { set: s, n: self.n.get() });
        }
        let i = s.index();
        let bit = 1u64 << (i & 63);
        let fresh = self.words[i >> 6] & bit == 0;
        self.words[i >> 6] |= bit;
        Ok(fresh)
    }

    /// Removes `s`; returns whether it was present.
    pub fn remove(&mut self, s: ElementSet) -> bool {
        if !self.contains(s) {
            return false;
        }
        let i = s.index();
        self.words[i >> 6] &= !(1u64 << (i & 63));
        true
    }

    /// Members in ascending cell order, which is colex order.
    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, word: 0, cur: self.words[0] }
    }

    /// `||F||`, the sum of the sizes of the members.
    pub fn total_size(&self) -> u64 {
        (1..=self.n.get()).map(|i| self.degree(i)).sum()
    }

    /// Number of members containing element `i`.
    pub fn degree(&self, i: u32) -> u64 {
        let b = i - 1;
        if b < 6 {
            self.words.iter().map(|w| (w & LOW_MASKS[b as usize]).count_ones() as u64).sum()
        } else {
            let stride = 1usize << (b - 6);
            self.words
                .iter()
                .enumerate()
                .filter(|(w, _)| w & stride != 0)
                .map(|(_, x)| x.count_ones() as u64)
                .sum()
        }
    }

    pub fn degrees(&self) -> Vec<u64> {
        (1..=self.n.get()).map(|i| self.degree(i)).collect()
    }

    /// `P(n) \ F`.
    pub fn complement(&self) -> Family {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        words[0] &= tail_mask(self.n);
        Family { n: self.n, words }
    }

    /// Cells of `P(n)` containing element `i`.
    pub fn containing(n: GroundSize, i: u32) -> Family {
        let b = i - 1;
        let words = (0..word_count(n))
            .map(|w| if b < 6 { LOW_MASKS[b as usize] } else if w & (1 << (b - 6)) != 0 { u64::MAX } else { 0 })
            .collect::<Vec<_>>();
        let mut f = Family { n, words };
        f.words[0] &= tail_mask(n);
        f
    }

    /// The same sets, viewed as a family over `[n]`.
    pub fn embed(&self, n: GroundSize) -> Result<Family> {
        Family::from_sets(n, self.iter())
    }

    fn check_ground(&self, other: &Family) {
        assert_eq!(self.n, other.n, "families over different ground sets");
    }

    pub fn union(&self, other: &Family) -> Family {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Family) -> Family {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Family) -> Family {
        self.zip(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &Family) -> bool {
        self.check_ground(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Family) -> bool {
        self.check_ground(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersection_len(&self, other: &Family) -> usize {
        self.check_ground(other);
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    fn zip(&self, other: &Family, op: impl Fn(u64, u64) -> u64) -> Family {
        self.check_ground(other);
        let words = self.words.iter().zip(&other.words).map(|(&a, &b)| op(a, b)).collect();
        Family { n: self.n, words }
    }

    /// Rewrites every pair of cells `(B, B + i)` with `i` not in `B`.
    ///
    /// `op` receives 64 lanes of `(bit of B, bit of B + i)` and returns the new
    /// pair. Lanes that do not correspond to such a pair are masked out.
    #[inline]
    pub(crate) fn pair_map(&mut self, i: u32, op: impl Fn(u64, u64) -> (u64, u64)) {
        let b = i - 1;
        debug_assert!(b < self.n.get());
        if b < 6 {
            let s = 1u32 << b;
            let keep = !LOW_MASKS[b as usize];
            for x in &mut self.words {
                let lo = *x & keep;
                let hi = (*x >> s) & keep;
                let (lo2, hi2) = op(lo, hi);
                *x = (lo2 & keep) | ((hi2 & keep) << s);
            }
        } else {
            let stride = 1usize << (b - 6);
            for w in 0..self.words.len() {
                if w & stride == 0 {
                    let (lo2, hi2) = op(self.words[w], self.words[w + stride]);
                    self.words[w] = lo2;
                    self.words[w + stride] = hi2;
                }
            }
        }
    }

    /// Cells `B` with `i` in `B` and `B - i` in the family.
    pub(crate) fn lift(&self, i: u32) -> Family {
        let mut f = self.clone();
        f.pair_map(i, |lo, _| (0, lo));
        f
    }

    /// Members whose whole powerset lies in the family: the largest down-set
    /// contained in it.
    pub fn downset_core(&self) -> Family {
        let mut f = self.clone();
        for i in 1..=self.n.get() {
            f.pair_map(i, |lo, hi| (lo, hi & lo));
        }
        f
    }

    /// The down-set generated by the family.
    pub fn downward_closure(&self) -> Family {
        let mut f = self.clone();
        for i in 1..=self.n.get() {
            f.pair_map(i, |lo, hi| (lo | hi, hi));
        }
        f
    }

    /// The up-set generated by the family.
    pub fn upward_closure(&self) -> Family {
        let mut f = self.clone();
        for i in 1..=self.n.get() {
            f.pair_map(i, |lo, hi| (lo, hi | lo));
        }
        f
    }

    /// Compares characteristic vectors cell by cell, cell 0 first, absent
    /// before present.
    pub fn cmp_characteristic(&self, other: &Family) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            let d = a ^ b;
            if d != 0 {
                let t = d.trailing_zeros();
                return if (a >> t) & 1 == 0 { Ordering::Less } else { Ordering::Greater };
            }
        }
        Ordering::Equal
    }

    /// Image of the family under a permutation of the ground set.
    /// `perm[k]` is the image of element `k + 1`, 1-based.
    pub fn permute(&self, perm: &[u32]) -> Family {
        assert_eq!(perm.len(), self.n.get() as usize);
        let mut out = Family::empty(self.n);
        for s in self.iter() {
            let mut bits = 0u32;
            for e in s.elements() {
                bits |= 1 << (perm[(e - 1) as usize] - 1);
            }
            let c = bits as usize;
            out.words[c >> 6] |= 1 << (c & 63);
        }
        out
    }
}

impl PartialOrd for Family {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Family {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.cmp_characteristic(other))
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Family(n={}, ", self.n)?;
        f.debug_set().entries(self.iter()).finish()?;
        f.write_str(")")
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = ElementSet;

    #[inline]
    fn next(&mut self) -> Option<ElementSet> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(ElementSet::from_bits(((self.word << 6) | t) as u32));
            }
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a Family {
    type Item = ElementSet;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

//! Ground sets and element sets.
//!
//! An [`ElementSet`] is a subset of `[n] = {1, ..., n}` stored as a bitmask in
//! which binary digit `i - 1` is set iff element `i` is present. The same
//! integer is the set's position in colex order, so it doubles as a cell index
//! into the characteristic vector of a [`Family`](crate::Family).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported ground-set size.
pub const MAX_GROUND: u32 = 24;

/// The size `n` of the ground set `[n]`, with `n <= 24`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct GroundSize(u8);

impl GroundSize {
    pub fn new(n: u32) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge(n));
        }
        Ok(GroundSize(n as u8))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0 as u32
    }

    /// Number of cells of the hypercube `P(n)`.
    #[inline]
    pub fn cells(self) -> usize {
        1usize << self.0
    }

    /// The full ground set `[n]`.
    #[inline]
    pub fn full_set(self) -> ElementSet {
        ElementSet((1u32 << self.0) - 1)
    }

    /// Elements `1..=n`.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        1..=self.get()
    }
}

impl TryFrom<u32> for GroundSize {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        GroundSize::new(n)
    }
}

impl From<GroundSize> for u32 {
    fn from(n: GroundSize) -> u32 {
        n.get()
    }
}

impl fmt::Display for GroundSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite set of positive integers, encoded as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementSet(u32);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        ElementSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    /// Index of this set's cell in a characteristic vector.
    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// Builds a set from 1-based elements. Elements must lie in `1..=24`.
    pub fn from_elements<I: IntoIterator<Item = u32>>(elements: I) -> Result<Self> {
        let mut bits = 0u32;
        for e in elements {
            if e == 0 || e > MAX_GROUND {
                return Err(Error::ElementOutOfRange { element: e, n: MAX_GROUND });
            }
            bits |= 1 << (e - 1);
        }
        Ok(ElementSet(bits))
    }

    /// The singleton `{i}`.
    #[inline]
    pub const fn singleton(i: u32) -> Self {
        ElementSet(1 << (i - 1))
    }

    #[inline]
    pub const fn len(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, i: u32) -> bool {
        i >= 1 && i <= 32 && self.0 & (1 << (i - 1)) != 0
    }

    /// `B + i`.
    #[inline]
    pub const fn with(self, i: u32) -> Self {
        ElementSet(self.0 | (1 << (i - 1)))
    }

    /// `B - i`.
    #[inline]
    pub const fn without(self, i: u32) -> Self {
        ElementSet(self.0 & !(1 << (i - 1)))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn symmetric_difference(self, other: Self) -> Self {
        ElementSet(self.0 ^ other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest element, if any.
    #[inline]
    pub const fn max(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(32 - self.0.leading_zeros())
        }
    }

    /// True iff every element lies in `[n]`.
    #[inline]
    pub fn fits(self, n: GroundSize) -> bool {
        self.0 >> n.get() == 0
    }

    /// Elements in ascending order.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets, in ascending bitmask order.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, next: Some(0) }
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.elements().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug)]
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

/// Subsets of a mask, enumerated with the `(s - mask) & mask` trick.
#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    #[inline]
    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        self.next = if cur == self.mask { None } else { Some((cur.wrapping_sub(self.mask)) & self.mask) };
        Some(ElementSet(cur))
    }
}

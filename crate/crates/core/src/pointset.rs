//! Subsets of a small point universe stored as a single 64-bit word.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Serialize, Serializer};

/// Largest universe a [`PointSet`] can address.
pub const MAX_POINTS: usize = 64;

/// A subset of `{0, .., universe - 1}`.
///
/// Equality is bitwise together with the universe size. The numeric value of
/// the bitmap is the canonical order used for open-set families and witness
/// minimality.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    universe: u8,
    bits: u64,
}

impl PointSet {
    #[inline]
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_POINTS, "universe of {universe} points exceeds {MAX_POINTS}");
        PointSet { universe: universe as u8, bits: 0 }
    }

    #[inline]
    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        s.bits = full_mask(universe);
        s
    }

    #[inline]
    pub fn singleton(universe: usize, x: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(x);
        s
    }

    /// Builds a set from a raw bitmap. Bits at or above `universe` are rejected.
    pub fn from_bits(universe: usize, bits: u64) -> Option<Self> {
        if universe > MAX_POINTS || bits & !full_mask(universe) != 0 {
            return None;
        }
        Some(PointSet { universe: universe as u8, bits })
    }

    /// Panics if an index is outside the universe.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut s = Self::empty(universe);
        for x in indices {
            s.insert(x);
        }
        s
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn universe(self) -> usize {
        self.universe as usize
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        x < self.universe() && self.bits >> x & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        assert!(x < self.universe(), "point {x} outside universe of {}", self.universe);
        self.bits |= 1 << x;
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        if x < self.universe() {
            self.bits &= !(1 << x);
        }
    }

    #[inline]
    pub fn with(mut self, x: usize) -> Self {
        self.insert(x);
        self
    }

    #[inline]
    pub fn without(mut self, x: usize) -> Self {
        self.remove(x);
        self
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(self) -> bool {
        self.bits == full_mask(self.universe())
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        PointSet { universe: self.universe, bits: self.bits | other.bits }
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        PointSet { universe: self.universe, bits: self.bits & other.bits }
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        PointSet { universe: self.universe, bits: self.bits & !other.bits }
    }

    #[inline]
    pub fn complement(self) -> Self {
        PointSet { universe: self.universe, bits: !self.bits & full_mask(self.universe()) }
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.bits & other.bits == 0
    }

    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Points {
        Points { bits: self.bits }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of the universe in ascending bitmap order.
    pub fn all_subsets(universe: usize) -> impl Iterator<Item = PointSet> {
        assert!(universe < MAX_POINTS, "cannot enumerate subsets of {universe} points");
        (0..1u64 << universe).map(move |bits| PointSet { universe: universe as u8, bits })
    }

    /// Every subset of `self`, ascending.
    pub fn subsets(self) -> impl Iterator<Item = PointSet> {
        let universe = self.universe;
        let mask = self.bits;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask { None } else { Some((cur.wrapping_sub(mask)) & mask) };
            Some(PointSet { universe, bits: cur })
        })
    }

    /// Re-home this set into a universe of `universe` points, shifting indices by `offset`.
    pub fn shifted(self, universe: usize, offset: usize) -> Self {
        assert!(offset + self.universe() <= universe);
        PointSet { universe: universe as u8, bits: self.bits << offset }
    }
}

#[inline]
pub(crate) fn full_mask(universe: usize) -> u64 {
    if universe >= 64 {
        u64::MAX
    } else {
        (1u64 << universe) - 1
    }
}

pub struct Points {
    bits: u64,
}

impl Iterator for Points {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let x = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.bits.count_ones() as usize;
        (k, Some(k))
    }
}

impl IntoIterator for PointSet {
    type Item = usize;
    type IntoIter = Points;

    fn into_iter(self) -> Points {
        self.iter()
    }
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl Sub for PointSet {
    type Output = PointSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

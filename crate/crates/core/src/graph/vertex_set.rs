use std::fmt;

use super::{full_mask, Bits};

/// A subset of `{0, .., universe - 1}` stored as a single word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: u64,
    universe: usize,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet { bits: 0, universe }
    }

    pub fn full(universe: usize) -> Self {
        VertexSet { bits: full_mask(universe), universe }
    }

    /// Bits at or above `universe` are dropped.
    pub fn from_bits(bits: u64, universe: usize) -> Self {
        VertexSet { bits: bits & full_mask(universe), universe }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(universe: usize, it: I) -> Self {
        let mut bits = 0u64;
        for v in it {
            assert!(v < universe, "vertex {v} outside universe {universe}");
            bits |= 1 << v;
        }
        VertexSet { bits, universe }
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.bits & (1 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.bits |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < 64 {
            self.bits &= !(1 << v);
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet { bits: self.bits | other.bits, universe: self.universe.max(other.universe) }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet { bits: self.bits & other.bits, universe: self.universe.max(other.universe) }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet { bits: self.bits & !other.bits, universe: self.universe }
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet { bits: !self.bits & full_mask(self.universe), universe: self.universe }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        Bits(self.bits)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

//! Index bitsets for vertex and edge subsets.

use std::fmt;

use fixedbitset::FixedBitSet;

macro_rules! index_set {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(FixedBitSet);

        impl $name {
            /// Empty set over the universe `0..universe`.
            pub fn empty(universe: usize) -> Self {
                Self(FixedBitSet::with_capacity(universe))
            }

            pub fn full(universe: usize) -> Self {
                let mut bits = FixedBitSet::with_capacity(universe);
                bits.insert_range(..);
                Self(bits)
            }

            /// Builds a set from indices. Panics if an index is outside the universe.
            pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
                let mut set = Self::empty(universe);
                for i in indices {
                    set.insert(i);
                }
                set
            }

            /// Interprets bit `i` of `mask` as membership of index `i`.
            pub fn from_mask(universe: usize, mask: u64) -> Self {
                assert!(universe >= 64 || mask >> universe == 0, "mask has bits outside the universe");
                Self::from_indices(universe, (0..universe.min(64)).filter(|i| mask >> i & 1 == 1))
            }

            /// The set as a bitmask. Panics when the universe exceeds 64.
            pub fn to_mask(&self) -> u64 {
                assert!(self.universe() <= 64, "universe too large for a u64 mask");
                self.iter().fold(0u64, |m, i| m | 1 << i)
            }

            pub fn universe(&self) -> usize {
                self.0.len()
            }

            pub fn insert(&mut self, i: usize) -> bool {
                assert!(i < self.universe(), "index {i} outside universe {}", self.universe());
                !self.0.put(i)
            }

            pub fn remove(&mut self, i: usize) -> bool {
                let was = self.contains(i);
                if i < self.universe() {
                    self.0.set(i, false);
                }
                was
            }

            /// Flips membership of `i`.
            pub fn toggle(&mut self, i: usize) {
                self.0.toggle(i);
            }

            pub fn contains(&self, i: usize) -> bool {
                self.0.contains(i)
            }

            pub fn len(&self) -> usize {
                self.0.count_ones(..)
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_clear()
            }

            pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
                self.0.ones()
            }

            pub fn union(&self, other: &Self) -> Self {
                self.check(other);
                let mut out = self.0.clone();
                out.union_with(&other.0);
                Self(out)
            }

            pub fn intersection(&self, other: &Self) -> Self {
                self.check(other);
                let mut out = self.0.clone();
                out.intersect_with(&other.0);
                Self(out)
            }

            pub fn difference(&self, other: &Self) -> Self {
                self.check(other);
                let mut out = self.0.clone();
                out.difference_with(&other.0);
                Self(out)
            }

            pub fn symmetric_difference(&self, other: &Self) -> Self {
                self.check(other);
                let mut out = self.0.clone();
                out.symmetric_difference_with(&other.0);
                Self(out)
            }

            /// `|self △ other|` without allocating.
            pub fn symmetric_difference_count(&self, other: &Self) -> usize {
                self.check(other);
                self.0.symmetric_difference_count(&other.0)
            }

            pub fn is_subset(&self, other: &Self) -> bool {
                self.check(other);
                self.0.is_subset(&other.0)
            }

            pub fn is_disjoint(&self, other: &Self) -> bool {
                self.check(other);
                self.0.is_disjoint(&other.0)
            }

            fn check(&self, other: &Self) {
                debug_assert_eq!(self.universe(), other.universe(), "mismatched universes");
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }
    };
}

index_set!(
    /// A subset of the vertices of some graph, stored as a bitset over vertex indices.
    VertexSet
);

index_set!(
    /// A subset of the edges of some graph, stored as a bitset over edge ids.
    ///
    /// This is the carrier for path edge sets `[x,y]`, reach sets `[x,A]` and
    /// spans `[C]` on trees.
    EdgeSet
);

//! Fixed 64-bit sets over vertex and edge ids.
//!
//! Every graph handled by this crate has at most 64 vertices and 64 edges,
//! which covers P(n,1) up to n = 21.

use std::cmp::Ordering;

/// Largest vertex or edge count a [`Graph`](crate::Graph) may have.
pub const MAX_WIDTH: usize = 64;

macro_rules! bitset_newtype {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
        pub struct $name(pub u64);

        impl $name {
            pub const EMPTY: Self = Self(0);

            #[inline]
            pub fn bits(self) -> u64 {
                self.0
            }

            #[inline]
            pub fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            #[inline]
            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            #[inline]
            pub fn contains(self, i: usize) -> bool {
                i < 64 && (self.0 >> i) & 1 == 1
            }

            #[inline]
            pub fn insert(&mut self, i: usize) {
                self.0 |= 1 << i;
            }

            #[inline]
            pub fn remove(&mut self, i: usize) {
                self.0 &= !(1 << i);
            }

            #[inline]
            pub fn toggle(&mut self, i: usize) {
                self.0 ^= 1 << i;
            }

            #[inline]
            pub fn union(self, other: Self) -> Self {
                Self(self.0 | other.0)
            }

            #[inline]
            pub fn intersection(self, other: Self) -> Self {
                Self(self.0 & other.0)
            }

            #[inline]
            pub fn symmetric_difference(self, other: Self) -> Self {
                Self(self.0 ^ other.0)
            }

            #[inline]
            pub fn is_subset(self, other: Self) -> bool {
                self.0 & !other.0 == 0
            }

            /// Ids in ascending order.
            pub fn iter(self) -> BitIter {
                BitIter(self.0)
            }

            /// Lexicographic comparison of the ascending id sequences.
            pub fn lex_cmp(self, other: Self) -> Ordering {
                lex_cmp(self.0, other.0)
            }
        }

        impl FromIterator<usize> for $name {
            fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
                let mut s = Self::EMPTY;
                for i in iter {
                    s.insert(i);
                }
                s
            }
        }
    };
}

bitset_newtype!(
    /// Set of edge ids.
    EdgeSet
);
bitset_newtype!(
    /// Set of vertex ids.
    VertexSet
);

/// Iterator over set bits, lowest first.
#[derive(Debug, Clone)]
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for BitIter {}

/// Compares two sets as if they were sorted id lists.
///
/// The first id where the sets differ decides, unless the set lacking it has
/// run out of elements, in which case it is a prefix and sorts first.
pub(crate) fn lex_cmp(a: u64, b: u64) -> Ordering {
    let d = a ^ b;
    if d == 0 {
        return Ordering::Equal;
    }
    let t = d.trailing_zeros();
    let above = if t >= 63 { 0 } else { !0u64 << (t + 1) };
    if (a >> t) & 1 == 1 {
        if b & above != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if a & above != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

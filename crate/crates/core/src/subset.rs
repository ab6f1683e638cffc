//! Subsets of a small finite set, encoded as bitmasks.

use std::fmt;

/// Largest base set a [`Subset`] can index.
pub const MAX_POINTS: usize = 16;

/// A subset of `{0, .., n-1}` for `n <= MAX_POINTS`, bit `x` set iff `x` is a member.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The whole base set `{0, .., n-1}`.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_POINTS);
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(x: usize) -> Subset {
        Subset(1 << x)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Subset {
        Subset(points.into_iter().fold(0, |acc, x| acc | (1 << x)))
    }

    #[inline]
    pub fn bits(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn insert(self, x: usize) -> Subset {
        Subset(self.0 | (1 << x))
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let x = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(x)
            }
        })
    }

    /// All subsets of `{0, .., n-1}` in increasing bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..1u32 << n).map(Subset)
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur | !full).wrapping_add(1) & full) };
            Some(Subset(cur))
        })
    }

    /// Image of this subset under a point map.
    pub fn image(self, map: &[usize]) -> Subset {
        self.iter().fold(Subset::EMPTY, |acc, x| acc.insert(map[x]))
    }

    /// Preimage of this subset under a point map.
    pub fn preimage(self, map: &[usize]) -> Subset {
        Subset::from_points((0..map.len()).filter(|&x| self.contains(map[x])))
    }
}

impl fmt::Display for Subset {
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

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported code length; coordinate sets are 64-bit masks.
pub const MAX_LENGTH: usize = 64;

/// A set of codeword coordinates (0-based), stored as a bit mask.
///
/// `Display` renders 1-based indices, e.g. `{2,4}` for the set `{1, 3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CoordSet(u64);

impl CoordSet {
    pub const EMPTY: CoordSet = CoordSet(0);

    pub fn from_mask(mask: u64) -> Self {
        CoordSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_LENGTH);
        CoordSet(1 << i)
    }

    /// Builds a set, checking every index against the code length `n`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I, n: usize) -> Result<Self> {
        let mut mask = 0u64;
        for i in indices {
            if i >= n || i >= MAX_LENGTH {
                return Err(Error::IndexOutOfRange {
                    what: "coordinate",
                    index: i,
                    limit: n,
                });
            }
            mask |= 1 << i;
        }
        Ok(CoordSet(mask))
    }

    /// Like [`CoordSet::from_indices`] but without a length check. Panics on indices ≥ 64.
    pub fn of<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().fold(CoordSet(0), |s, i| {
            assert!(i < MAX_LENGTH, "coordinate {i} exceeds {MAX_LENGTH}");
            s.with(i)
        })
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            CoordSet(u64::MAX)
        } else {
            CoordSet((1u64 << n) - 1)
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_LENGTH && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        CoordSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        CoordSet(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        CoordSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        CoordSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        CoordSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest element plus one (0 for the empty set).
    pub fn bound(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for CoordSet {
    /// Lexicographic order on the ascending element sequences.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for CoordSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CoordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for CoordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromIterator<usize> for CoordSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        CoordSet::of(iter)
    }
}

/// All subsets of `[0, n)` with size in `1..=max_size`, grouped by size and
/// lexicographic within a size.
pub fn subsets_up_to(n: usize, max_size: usize) -> impl Iterator<Item = CoordSet> {
    use itertools::Itertools;
    (1..=max_size.min(n)).flat_map(move |size| (0..n).combinations(size).map(CoordSet::of))
}

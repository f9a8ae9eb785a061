//! Subsets of a small ground set, stored as a 64-bit mask.
//!
//! Elements are 0-based inside the library. Text output and the
//! [`ElementSet::from_labels`] constructor use the 1-based labels of the
//! file formats.

use std::cmp::Ordering;
use std::fmt;

/// Largest ground set an [`ElementSet`] can address.
pub const MAX_GROUND: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set of size {n} exceeds {MAX_GROUND}");
        if n == MAX_GROUND {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        ElementSet(1u64 << e)
    }

    /// Builds a set from 1-based labels, e.g. `from_labels(&[1, 4])` is `{1,4}`.
    pub fn from_labels(labels: &[usize]) -> Self {
        labels.iter().map(|&l| l - 1).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_GROUND && self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u64 << e;
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u64 << e);
    }

    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | 1u64 << e)
    }

    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1u64 << e))
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Largest element, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// 1-based labels in ascending order.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|e| e + 1).collect()
    }

    /// Shifts every element up by `offset`.
    pub fn shifted(self, offset: usize) -> Self {
        if self.0 == 0 {
            self
        } else {
            ElementSet(self.0 << offset)
        }
    }

    /// Image under an element map `map[e]`.
    pub fn map(self, map: &[usize]) -> Self {
        self.iter().map(|e| map[e]).collect()
    }

    /// All subsets of `self`, in increasing bit order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let current = self.next?;
        // standard submask enumeration in increasing order
        self.next = if current == self.mask {
            None
        } else {
            Some((current.wrapping_sub(self.mask)) & self.mask)
        };
        Some(ElementSet(current))
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = ElementSet::EMPTY;
        for e in iter {
            set.insert(e);
        }
        set
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

/// Lexicographic order on the ascending element sequences, so that
/// `{1,2} < {1,2,3} < {1,3} < {2}`.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Iterates over all `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = ElementSet> {
    use itertools::Itertools;
    (0..n).combinations(k).map(ElementSet::from_iter)
}

//! Subsets of `[n] = {1, ..., n}` packed into a machine word.

use std::fmt;

/// Largest supported ground set. Squarefree modules hold `2^n` components, so
/// in practice `n` stays far below this.
pub const MAX_GROUND_SET: usize = 32;

/// A subset of `[n]`. Bit `i` stands for element `i + 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    /// The full set `[n]`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND_SET);
        if n == 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    /// Builds a subset from 1-based element labels.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        let mut bits = 0u32;
        for e in elements {
            assert!((1..=MAX_GROUND_SET).contains(&e), "element {e} out of range");
            bits |= 1 << (e - 1);
        }
        Subset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Index into arrays of length `2^n`.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Membership of the 0-based position `i`.
    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1 << i))
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        Subset(!self.0 & Subset::full(n).0)
    }

    /// 0-based positions in increasing order.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits & (1 << i) != 0)
    }

    /// 1-based element labels in increasing order.
    pub fn elements(self) -> Vec<usize> {
        self.positions().map(|i| i + 1).collect()
    }

    /// Number of elements of `self` strictly below position `i`.
    pub fn rank_of(self, i: usize) -> usize {
        (self.0 & ((1u32 << i) - 1)).count_ones() as usize
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(Subset(cur))
        })
    }

    /// All subsets of `[n]` in graded order: by size, then by bit pattern.
    pub fn all_graded(n: usize) -> Vec<Subset> {
        assert!(n < MAX_GROUND_SET);
        let mut all: Vec<Subset> = (0..(1u32 << n)).map(Subset).collect();
        all.sort_by_key(|s| (s.len(), s.0));
        all
    }

    /// Lexicographic comparison of the sorted element lists.
    pub fn lex_cmp(self, other: Subset) -> std::cmp::Ordering {
        self.elements().cmp(&other.elements())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.elements().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

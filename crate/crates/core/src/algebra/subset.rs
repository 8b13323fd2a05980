//! Subsets of a finite carrier as 64-bit characteristic vectors.

use std::fmt;

/// Largest carrier size any structure in this crate may have.
pub const MAX_CARRIER: usize = 64;

/// Bit mask with the low `n` bits set.
pub(crate) fn full_mask(n: usize) -> u64 {
    debug_assert!(n <= MAX_CARRIER);
    if n == MAX_CARRIER {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of the carrier `0..n` of some structure.
///
/// Ordering compares the characteristic vector as an integer, so element
/// `n - 1` is the most significant position.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    bits: u64,
    n: u8,
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_CARRIER, "carrier of size {n} is too large");
        Subset {
            bits: 0,
            n: n as u8,
        }
    }

    pub fn full(n: usize) -> Self {
        Subset::from_bits(n, u64::MAX)
    }

    /// Bits at positions `>= n` are discarded.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        assert!(n <= MAX_CARRIER, "carrier of size {n} is too large");
        Subset {
            bits: bits & full_mask(n),
            n: n as u8,
        }
    }

    pub fn singleton(n: usize, element: usize) -> Self {
        assert!(element < n, "element {element} outside carrier of size {n}");
        Subset::from_bits(n, 1 << element)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, elements: I) -> Self {
        let mut s = Subset::empty(n);
        for e in elements {
            s.insert(e);
        }
        s
    }

    /// Every subset of `0..n` in increasing bit-mask order, starting with ∅.
    pub fn all(n: usize) -> impl DoubleEndedIterator<Item = Subset> + Clone {
        assert!(
            n < MAX_CARRIER,
            "cannot enumerate subsets of a {n}-element carrier"
        );
        (0..=full_mask(n)).map(move |bits| Subset::from_bits(n, bits))
    }

    /// Every nonempty subset of `0..n` in increasing bit-mask order.
    pub fn nonempty(n: usize) -> impl DoubleEndedIterator<Item = Subset> + Clone {
        assert!(
            n < MAX_CARRIER,
            "cannot enumerate subsets of a {n}-element carrier"
        );
        (1..=full_mask(n)).map(move |bits| Subset::from_bits(n, bits))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn carrier_size(self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn contains(self, element: usize) -> bool {
        element < self.carrier_size() && self.bits >> element & 1 == 1
    }

    pub fn insert(&mut self, element: usize) {
        assert!(
            element < self.carrier_size(),
            "element {element} outside carrier of size {}",
            self.n
        );
        self.bits |= 1 << element;
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(self) -> bool {
        self.bits == full_mask(self.carrier_size())
    }

    #[inline]
    pub fn is_subset(self, other: Subset) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset {
            bits: self.bits & other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset {
            bits: self.bits & !other.bits,
            n: self.n,
        }
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> Elements {
        Elements { bits: self.bits }
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

/// Iterator over the members of a [`Subset`].
#[derive(Clone, Debug)]
pub struct Elements {
    bits: u64,
}

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let i = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.bits.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.n)
    }
}

//! Fixed-width subsets of a small carrier.
//!
//! Every carrier in this crate (poset points, lattice elements, space points)
//! is indexed `0..n` with `n <= 64`, so a subset is a single machine word.
//! The derived `Ord` compares the words numerically; that order is the
//! tie-break used wherever output has to be canonical.

use std::fmt;

/// Largest carrier a [`Subset`] can index.
pub const MAX_CARRIER: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_CARRIER,
            "carrier of size {n} exceeds {MAX_CARRIER}"
        );
        if n == MAX_CARRIER {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_CARRIER);
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(Subset::EMPTY, |acc, i| acc.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_CARRIER && self.0 & (1u64 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < MAX_CARRIER);
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        if i < MAX_CARRIER {
            self.0 &= !(1u64 << i);
        }
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        let mut s = self;
        s.insert(i);
        s
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        let mut s = self;
        s.remove(i);
        s
    }

    #[must_use]
    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    /// Complement relative to a carrier of size `n`.
    #[must_use]
    pub fn complement(self, n: usize) -> Self {
        Subset::full(n).difference(self)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    /// All subsets of `{0, .., n-1}`, in numeric order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        assert!(
            n < MAX_CARRIER,
            "cannot enumerate subsets of a {n}-element carrier"
        );
        (0..(1u64 << n)).map(Subset)
    }

    /// All subsets of `self`, in numeric order of their bits.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == mask {
                None
            } else {
                Some((current.wrapping_sub(mask)) & mask)
            };
            Some(Subset(current))
        })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Subset::from_indices(iter)
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = SubsetIter;

    fn into_iter(self) -> SubsetIter {
        self.iter()
    }
}

pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = usize;

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

impl ExactSizeIterator for SubsetIter {}

/// Serialized as the ascending list of member indices.
impl serde::Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Renders a subset as `{a,b}` using the carrier's labels.
pub fn render(set: Subset, labels: &[String]) -> String {
    let names: Vec<&str> = set.iter().map(|i| labels[i].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_complement() {
        assert_eq!(Subset::full(0), Subset::EMPTY);
        assert_eq!(Subset::full(3).bits(), 0b111);
        assert_eq!(Subset::full(64).len(), 64);
        assert_eq!(
            Subset::from_indices([0, 2]).complement(3),
            Subset::singleton(1)
        );
    }

    #[test]
    fn subsets_of_mask_are_exhaustive() {
        let mask = Subset::from_indices([1, 3, 4]);
        let subs: Vec<Subset> = mask.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset(mask)));
        assert_eq!(subs.first(), Some(&Subset::EMPTY));
        assert_eq!(subs.last(), Some(&mask));
    }

    #[test]
    fn render_uses_labels() {
        let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        assert_eq!(render(Subset::from_indices([0, 2]), &labels), "{a,c}");
        assert_eq!(render(Subset::EMPTY, &labels), "{}");
    }

    proptest! {
        #[test]
        fn iteration_round_trips(bits in any::<u64>()) {
            let s = Subset::from_bits(bits);
            prop_assert_eq!(Subset::from_indices(s.iter()), s);
            prop_assert_eq!(s.iter().count(), s.len());
        }

        #[test]
        fn de_morgan(a in 0u64..256, b in 0u64..256) {
            let (a, b) = (Subset::from_bits(a), Subset::from_bits(b));
            prop_assert_eq!(a.union(b).complement(8), a.complement(8).intersection(b.complement(8)));
        }
    }
}

//! Heyting-algebra and frame structure of a [`FiniteLattice`]: primes,
//! filters, points, density, minimal and essential primes, booleanization.

use serde::Serialize;

use crate::lattice::FiniteLattice;
use crate::poset::FinitePoset;
use crate::space::FiniteSpace;
use crate::subset::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filter {
    pub members: Subset,
    pub prime: bool,
    pub completely_prime: bool,
}

impl Filter {
    /// The least member; every filter of a finite lattice is principal.
    pub fn generator(&self, l: &FiniteLattice) -> usize {
        l.meet_all(self.members.iter())
    }
}

/// Nonempty, upward closed and closed under binary meets.
pub fn is_filter(l: &FiniteLattice, s: Subset) -> bool {
    !s.is_empty()
        && s.iter().all(|a| l.up_of(a).is_subset(s))
        && s.iter().all(|a| s.iter().all(|b| s.contains(l.meet(a, b))))
}

/// Proper, and `a∨b ∈ F` forces `a ∈ F` or `b ∈ F`.
pub fn is_prime_filter(l: &FiniteLattice, s: Subset) -> bool {
    is_filter(l, s)
        && !s.contains(l.bottom())
        && l.elements().all(|a| {
            l.elements()
                .all(|b| !s.contains(l.join(a, b)) || s.contains(a) || s.contains(b))
        })
}

/// Proper, and `⋁S ∈ F` forces `S ∩ F ≠ ∅` for every `S ⊆ L`. It suffices to
/// test `S = L∖F`, since every family missing `F` lies below `⋁(L∖F)`.
pub fn is_completely_prime_filter(l: &FiniteLattice, s: Subset) -> bool {
    is_filter(l, s) && !s.contains(l.join_all(s.complement(l.len()).iter()))
}

/// Prime filters, found among the principal filters `↑a` (`a ≠ 0`).
pub fn prime_filters(l: &FiniteLattice) -> Vec<Filter> {
    let mut out: Vec<Filter> = l
        .elements()
        .filter(|&a| a != l.bottom())
        .map(|a| l.up_of(a))
        .filter(|&f| is_prime_filter(l, f))
        .map(|f| Filter {
            members: f,
            prime: true,
            completely_prime: is_completely_prime_filter(l, f),
        })
        .collect();
    out.sort();
    out
}

/// Completely prime filters, found among the complements `L∖↓p` (`p ≠ 1`).
pub fn completely_prime_filters(l: &FiniteLattice) -> Vec<Filter> {
    let mut out: Vec<Filter> = l
        .elements()
        .filter(|&p| p != l.top())
        .map(|p| l.down_of(p).complement(l.len()))
        .filter(|&f| is_completely_prime_filter(l, f))
        .map(|f| Filter {
            members: f,
            prime: is_prime_filter(l, f),
            completely_prime: true,
        })
        .collect();
    out.sort();
    out
}

/// `p ≠ 1` with `a∧b ≤ p ⇒ a ≤ p or b ≤ p`.
pub fn meet_primes(l: &FiniteLattice) -> Subset {
    l.elements()
        .filter(|&p| p != l.top())
        .filter(|&p| {
            l.elements().all(|a| {
                l.elements()
                    .all(|b| !l.leq(l.meet(a, b), p) || l.leq(a, p) || l.leq(b, p))
            })
        })
        .collect()
}

/// `p ≠ 0` with `p ≤ a∨b ⇒ p ≤ a or p ≤ b`.
pub fn join_irreducibles(l: &FiniteLattice) -> Subset {
    l.elements()
        .filter(|&p| p != l.bottom())
        .filter(|&p| {
            l.elements().all(|a| {
                l.elements()
                    .all(|b| !l.leq(p, l.join(a, b)) || l.leq(p, a) || l.leq(p, b))
            })
        })
        .collect()
}

/// Point labels used for filters: `x` followed by the generator's label.
pub fn filter_labels(l: &FiniteLattice, filters: &[Filter]) -> Vec<String> {
    filters
        .iter()
        .map(|f| format!("x{}", l.label(f.generator(l))))
        .collect()
}

/// `pt(L)`: completely prime filters with the opens `η(a) = {x : a ∈ x}`.
pub fn points_space(l: &FiniteLattice) -> FiniteSpace {
    let pts = completely_prime_filters(l);
    let labels = filter_labels(l, &pts);
    let opens = l.elements().map(|a| eta(&pts, a)).collect();
    FiniteSpace::new(labels, opens).expect("η(L) is a topology")
}

/// `η(a)` over a list of filters.
pub fn eta(points: &[Filter], a: usize) -> Subset {
    points
        .iter()
        .enumerate()
        .filter(|(_, f)| f.members.contains(a))
        .map(|(i, _)| i)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpatialityCheck {
    pub spatial: bool,
    /// A pair `a ≰ b` that no point separates.
    pub witness: Option<(String, String)>,
}

/// Spatial iff every `a ≰ b` is separated by a point `x` with `a ∈ x ∌ b`.
pub fn is_spatial(l: &FiniteLattice) -> SpatialityCheck {
    let pts = completely_prime_filters(l);
    for a in l.elements() {
        for b in l.elements() {
            if l.leq(a, b) {
                continue;
            }
            let separated = pts
                .iter()
                .any(|x| x.members.contains(a) && !x.members.contains(b));
            if !separated {
                return SpatialityCheck {
                    spatial: false,
                    witness: Some((l.label(a).into(), l.label(b).into())),
                };
            }
        }
    }
    SpatialityCheck {
        spatial: true,
        witness: None,
    }
}

/// Elements `d ≥ a` dense in `↑a`, i.e. with `d → a = a`.
pub fn dense_above(l: &FiniteLattice, a: usize) -> Subset {
    l.up_of(a)
        .iter()
        .filter(|&d| l.implication(d, a) == a)
        .collect()
}

/// The least element dense in `↑a`, if there is one.
pub fn smallest_dense(l: &FiniteLattice, a: usize) -> Option<usize> {
    let dense = dense_above(l, a);
    dense.iter().find(|&d| dense.is_subset(l.up_of(d)))
}

/// Every principal upset has a smallest dense element.
pub fn is_scattered_frame(l: &FiniteLattice) -> bool {
    l.elements().all(|a| smallest_dense(l, a).is_some())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinPrimes {
    /// `Min(a)`: meet-primes above `a` minimal among such.
    pub minimal: Subset,
    /// Whether `a = ⋀Min(a)`.
    pub meet_recovers: bool,
    /// Essential members of `Min(a)`; absent when `a ≠ ⋀Min(a)`.
    pub essential: Option<Subset>,
}

pub fn min_primes(l: &FiniteLattice, a: usize) -> MinPrimes {
    let above: Subset = meet_primes(l).intersection(l.up_of(a));
    let minimal = l.order().minimal(above);
    let meet_recovers = l.meet_all(minimal.iter()) == a;
    let essential = meet_recovers.then(|| {
        minimal
            .iter()
            .filter(|&p| l.meet_all(minimal.without(p).iter()) != a)
            .collect()
    });
    MinPrimes {
        minimal,
        meet_recovers,
        essential,
    }
}

/// Essential primes of `a`; empty when `a ≠ ⋀Min(a)`.
pub fn essential_primes(l: &FiniteLattice, a: usize) -> Subset {
    min_primes(l, a).essential.unwrap_or_default()
}

/// `B(L)`, the image of `¬¬`, with its inclusion into `L`.
#[derive(Debug, Clone)]
pub struct Booleanization {
    pub lattice: FiniteLattice,
    /// `embedding[i]` is the element of `L` that element `i` of `B(L)` is.
    pub embedding: Vec<usize>,
    /// `projection[a]` is the element of `B(L)` equal to `¬¬a`.
    pub projection: Vec<usize>,
    pub boolean: bool,
}

pub fn booleanization(l: &FiniteLattice) -> Booleanization {
    let image: Subset = l.elements().map(|a| l.negation(l.negation(a))).collect();
    let embedding: Vec<usize> = image.iter().collect();
    let labels = embedding.iter().map(|&a| l.label(a).to_string()).collect();
    let order = FinitePoset::from_leq_fn(labels, |i, j| l.leq(embedding[i], embedding[j]));
    let lattice = FiniteLattice::from_order(order).expect("fixpoints of ¬¬ form a boolean lattice");
    let projection = l
        .elements()
        .map(|a| {
            let nn = l.negation(l.negation(a));
            embedding
                .iter()
                .position(|&e| e == nn)
                .expect("¬¬a lies in the image")
        })
        .collect();
    let boolean = lattice.is_boolean();
    Booleanization {
        lattice,
        embedding,
        projection,
        boolean,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::FinitePoset;

    fn l3() -> FiniteLattice {
        let p = FinitePoset::from_labeled(&["0", "m", "1"], &[("0", "m"), ("m", "1")]).unwrap();
        FiniteLattice::from_order(p).unwrap()
    }

    fn l4() -> FiniteLattice {
        let p = FinitePoset::from_labeled(
            &["0", "p", "q", "1"],
            &[("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")],
        )
        .unwrap();
        FiniteLattice::from_order(p).unwrap()
    }

    fn set(l: &FiniteLattice, names: &[&str]) -> Subset {
        names.iter().map(|n| l.index_of(n).unwrap()).collect()
    }

    // Filters by exhaustive subset scan, independent of the principal-filter route.
    fn scanned_prime_filters(l: &FiniteLattice) -> Vec<Subset> {
        Subset::all(l.len())
            .filter(|&s| {
                let upward = s.iter().all(|a| l.up_of(a).is_subset(s));
                let meets = s.iter().all(|a| s.iter().all(|b| s.contains(l.meet(a, b))));
                let proper = !s.contains(l.bottom());
                let prime = l.elements().all(|a| {
                    l.elements()
                        .all(|b| !s.contains(l.join(a, b)) || s.contains(a) || s.contains(b))
                });
                !s.is_empty() && upward && meets && proper && prime
            })
            .collect()
    }

    #[test]
    fn prime_examples() {
        let l = l3();
        assert_eq!(meet_primes(&l), set(&l, &["0", "m"]));
        assert_eq!(join_irreducibles(&l), set(&l, &["m", "1"]));
        let l = l4();
        assert_eq!(meet_primes(&l), set(&l, &["p", "q"]));
        assert_eq!(meet_primes(&FiniteLattice::chain(2)), Subset::singleton(0));
    }

    #[test]
    fn filter_examples() {
        let l = l3();
        let fs: Vec<Subset> = prime_filters(&l).iter().map(|f| f.members).collect();
        let mut expected = vec![set(&l, &["1"]), set(&l, &["m", "1"])];
        expected.sort();
        assert_eq!(fs, expected);
        assert_eq!(fs, scanned_prime_filters(&l));
        assert_eq!(prime_filters(&l), completely_prime_filters(&l));
        assert!(prime_filters(&FiniteLattice::chain(1)).is_empty());
        assert!(completely_prime_filters(&FiniteLattice::chain(1)).is_empty());
    }

    #[test]
    fn points_space_examples() {
        let s = points_space(&l3());
        assert_eq!(s.len(), 2);
        assert_eq!(s.opens().len(), 3);
        let s = points_space(&l4());
        assert_eq!(s.opens().len(), 4);
        assert!(s.is_discrete());
        let s = points_space(&FiniteLattice::chain(2));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn spatial_examples() {
        assert!(is_spatial(&l3()).spatial);
        assert!(is_spatial(&FiniteLattice::chain(1)).spatial);
    }

    #[test]
    fn dense_examples() {
        let l = l3();
        let (z, m, one) = (0, 1, 2);
        assert_eq!(dense_above(&l, z), set(&l, &["m", "1"]));
        assert_eq!(smallest_dense(&l, z), Some(m));
        assert_eq!(smallest_dense(&l, m), Some(one));
        let l = l4();
        assert_eq!(smallest_dense(&l, 1), Some(3));
        assert!(is_scattered_frame(&l));
    }

    #[test]
    fn min_prime_examples() {
        let l = l3();
        let r = min_primes(&l, 0);
        assert_eq!(r.minimal, set(&l, &["0"]));
        assert_eq!(r.essential, Some(set(&l, &["0"])));
        let l = l4();
        let r = min_primes(&l, 0);
        assert_eq!(r.minimal, set(&l, &["p", "q"]));
        assert_eq!(r.essential, Some(set(&l, &["p", "q"])));
        let r = min_primes(&l, l.top());
        assert_eq!(r.minimal, Subset::EMPTY);
        assert!(r.meet_recovers);
        assert_eq!(r.essential, Some(Subset::EMPTY));
    }

    #[test]
    fn booleanization_examples() {
        let b = booleanization(&l3());
        assert_eq!(b.lattice.len(), 2);
        assert_eq!(b.lattice.labels(), ["0", "1"]);
        assert_eq!(b.projection, vec![0, 1, 1]);
        assert!(b.boolean);
        let b = booleanization(&l4());
        assert_eq!(b.lattice.len(), 4);
        assert_eq!(b.embedding, vec![0, 1, 2, 3]);
    }
}

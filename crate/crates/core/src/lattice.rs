//! Finite distributive lattices, held as order rows plus meet, join and
//! implication tables. Being finite and distributive, every such lattice is a
//! frame and a complete Heyting algebra.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::subset::{Subset, MAX_CARRIER};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    order: FinitePoset,
    meet: Vec<usize>,
    join: Vec<usize>,
    imp: Vec<usize>,
    bottom: usize,
    top: usize,
}

/// Outcome of checking that an order is a bounded distributive lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub bounded: bool,
    pub lattice: bool,
    pub distributive: bool,
    /// First pair without a meet or join, if any.
    pub missing_bound: Option<(String, String)>,
    /// First triple violating `a∧(b∨c) = (a∧b)∨(a∧c)`, if any.
    pub distributivity_witness: Option<(String, String, String)>,
}

impl LatticeReport {
    pub fn is_valid(&self) -> bool {
        self.bounded && self.lattice && self.distributive
    }
}

struct Tables {
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

fn bound_tables(order: &FinitePoset) -> std::result::Result<Tables, (usize, usize)> {
    let n = order.len();
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for a in 0..n {
        for b in a..n {
            let lower = order.down_of(a).intersection(order.down_of(b));
            let m = lower
                .iter()
                .find(|&g| lower.is_subset(order.down_of(g)))
                .ok_or((a, b))?;
            let upper = order.up_of(a).intersection(order.up_of(b));
            let j = upper
                .iter()
                .find(|&g| upper.is_subset(order.up_of(g)))
                .ok_or((a, b))?;
            meet[a * n + b] = m;
            meet[b * n + a] = m;
            join[a * n + b] = j;
            join[b * n + a] = j;
        }
    }
    let all = order.all();
    let bottom = (0..n).find(|&x| order.up_of(x) == all).ok_or((0, 0))?;
    let top = (0..n).find(|&x| order.down_of(x) == all).ok_or((0, 0))?;
    Ok(Tables {
        meet,
        join,
        bottom,
        top,
    })
}

fn distributivity_witness(
    n: usize,
    meet: &[usize],
    join: &[usize],
) -> Option<(usize, usize, usize)> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = meet[a * n + join[b * n + c]];
                let rhs = join[meet[a * n + b] * n + meet[a * n + c]];
                if lhs != rhs {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// Checks an arbitrary finite order for being a bounded distributive lattice.
pub fn validate_order(order: &FinitePoset) -> LatticeReport {
    let name = |i: usize| order.label(i).to_string();
    if order.is_empty() {
        return LatticeReport {
            bounded: false,
            lattice: false,
            distributive: false,
            missing_bound: None,
            distributivity_witness: None,
        };
    }
    match bound_tables(order) {
        Err((a, b)) => LatticeReport {
            bounded: (0..order.len()).any(|x| order.up_of(x) == order.all())
                && (0..order.len()).any(|x| order.down_of(x) == order.all()),
            lattice: false,
            distributive: false,
            missing_bound: Some((name(a), name(b))),
            distributivity_witness: None,
        },
        Ok(t) => {
            let w = distributivity_witness(order.len(), &t.meet, &t.join);
            LatticeReport {
                bounded: true,
                lattice: true,
                distributive: w.is_none(),
                missing_bound: None,
                distributivity_witness: w.map(|(a, b, c)| (name(a), name(b), name(c))),
            }
        }
    }
}

impl FiniteLattice {
    /// Builds the lattice carried by `order`, failing unless it is a bounded
    /// distributive lattice.
    pub fn from_order(order: FinitePoset) -> Result<Self> {
        let n = order.len();
        if n == 0 {
            return Err(Error::NotALattice(
                "empty carrier has no top or bottom".into(),
            ));
        }
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge {
                size: n,
                max: MAX_CARRIER,
            });
        }
        let t = bound_tables(&order).map_err(|(a, b)| {
            Error::NotALattice(format!(
                "`{}` and `{}` have no meet or join",
                order.label(a),
                order.label(b)
            ))
        })?;
        if let Some((a, b, c)) = distributivity_witness(n, &t.meet, &t.join) {
            return Err(Error::NotDistributive {
                a: order.label(a).into(),
                b: order.label(b).into(),
                c: order.label(c).into(),
            });
        }
        let mut imp = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                // a → b = ⋁{x : a∧x ≤ b}
                imp[a * n + b] = (0..n)
                    .filter(|&x| order.leq(t.meet[a * n + x], b))
                    .fold(t.bottom, |acc, x| t.join[acc * n + x]);
            }
        }
        Ok(FiniteLattice {
            order,
            meet: t.meet,
            join: t.join,
            imp,
            bottom: t.bottom,
            top: t.top,
        })
    }

    /// Lattice of a family of subsets of a `points`-element carrier ordered
    /// by inclusion (or reverse inclusion).
    pub(crate) fn of_sets(labels: Vec<String>, sets: &[Subset], reverse: bool) -> Result<Self> {
        let order = FinitePoset::from_leq_fn(labels, |a, b| {
            if reverse {
                sets[b].is_subset(sets[a])
            } else {
                sets[a].is_subset(sets[b])
            }
        });
        FiniteLattice::from_order(order)
    }

    /// The `n`-element chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        FiniteLattice::from_order(FinitePoset::chain(n)).expect("chains are distributive lattices")
    }

    /// Re-runs the lattice checks on this value's own order.
    pub fn validate(&self) -> LatticeReport {
        validate_order(&self.order)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn order(&self) -> &FinitePoset {
        &self.order
    }

    pub fn labels(&self) -> &[String] {
        self.order.labels()
    }

    pub fn label(&self, a: usize) -> &str {
        self.order.label(a)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.order.index_of(label)
    }

    pub fn all(&self) -> Subset {
        self.order.all()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    /// `⋀S`; the empty meet is the top.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// `⋁S`; the empty join is the bottom.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items
            .into_iter()
            .fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// `a → b`, the largest `x` with `a ∧ x ≤ b`.
    pub fn implication(&self, a: usize, b: usize) -> usize {
        self.imp[a * self.len() + b]
    }

    /// `¬a = a → 0`.
    pub fn negation(&self, a: usize) -> usize {
        self.implication(a, self.bottom)
    }

    /// The complement of `a`, when it has one.
    pub fn complement(&self, a: usize) -> Option<usize> {
        self.elements()
            .find(|&c| self.meet(a, c) == self.bottom && self.join(a, c) == self.top)
    }

    pub fn is_boolean(&self) -> bool {
        self.elements().all(|a| self.complement(a).is_some())
    }

    /// `↑a` as a subset of the carrier.
    pub fn up_of(&self, a: usize) -> Subset {
        self.order.up_of(a)
    }

    pub fn down_of(&self, a: usize) -> Subset {
        self.order.down_of(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn l3() -> FiniteLattice {
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

    fn m3_order() -> FinitePoset {
        FinitePoset::from_labeled(
            &["0", "a", "b", "c", "1"],
            &[
                ("0", "a"),
                ("0", "b"),
                ("0", "c"),
                ("a", "1"),
                ("b", "1"),
                ("c", "1"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(l3().validate().is_valid());
        assert!(FiniteLattice::chain(2).validate().is_valid());
        let r = validate_order(&m3_order());
        assert!(r.lattice && !r.distributive);
        let (a, b, c) = r.distributivity_witness.clone().unwrap();
        // the witness must really violate distributivity
        assert!(a != b && b != c && a != c);
        assert!(matches!(
            FiniteLattice::from_order(m3_order()),
            Err(Error::NotDistributive { .. })
        ));
    }

    #[test]
    fn non_lattice_order_is_reported() {
        // two incomparable tops
        let p = FinitePoset::from_labeled(&["0", "a", "b"], &[("0", "a"), ("0", "b")]).unwrap();
        let r = validate_order(&p);
        assert!(!r.lattice && !r.bounded);
        assert!(matches!(
            FiniteLattice::from_order(p),
            Err(Error::NotALattice(_))
        ));
    }

    #[test]
    fn implication_examples() {
        let l = l3();
        let (z, m, one) = (0, 1, 2);
        assert_eq!(l.implication(m, z), z);
        for b in l.elements() {
            assert_eq!(l.implication(one, b), b);
        }
        let l = l4();
        assert_eq!(l.implication(1, 2), 2);
        assert_eq!(l.negation(1), 2);
    }

    #[test]
    fn one_element_lattice() {
        let l = FiniteLattice::chain(1);
        assert_eq!(l.bottom(), l.top());
        assert!(l.is_boolean());
        assert_eq!(l.implication(0, 0), 0);
    }

    #[test]
    fn boolean_detection() {
        assert!(l4().is_boolean());
        assert!(!l3().is_boolean());
        assert!(FiniteLattice::chain(2).is_boolean());
    }
}

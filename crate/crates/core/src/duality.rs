//! Finite Priestley/Esakia duality.
//!
//! A finite Priestley space carries the discrete topology, so the topology is
//! recorded as a marker and the clopen/closure/interior operators are the
//! discrete ones. The separation, Esakia and extremal order-disconnectedness
//! conditions are still checked from their definitions.

use std::collections::HashMap;

use serde::Serialize;

use crate::bounds::Bounds;
use crate::error::Result;
use crate::heyting::{filter_labels, prime_filters, Filter};
use crate::lattice::FiniteLattice;
use crate::poset::{find_isomorphism, FinitePoset};
use crate::sets::{birkhoff_lattice, SetLattice};
use crate::subset::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Topology {
    Discrete,
}

/// Results of the literal space conditions; `None` when the space is larger
/// than the literal-check bound and the quantification over subsets was skipped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpaceConditions {
    pub priestley_separation: bool,
    pub esakia: Option<bool>,
    pub extremally_order_disconnected: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct EsakiaSpace {
    poset: FinitePoset,
    filters: Option<Vec<Filter>>,
    topology: Topology,
    conditions: SpaceConditions,
}

impl EsakiaSpace {
    /// The finite Priestley space on `poset`.
    pub fn from_poset(poset: FinitePoset) -> Self {
        Self::build(poset, None)
    }

    fn build(poset: FinitePoset, filters: Option<Vec<Filter>>) -> Self {
        let mut space = EsakiaSpace {
            poset,
            filters,
            topology: Topology::Discrete,
            conditions: SpaceConditions {
                priestley_separation: false,
                esakia: None,
                extremally_order_disconnected: None,
            },
        };
        let bound = Bounds::default().literal_points;
        space.conditions = SpaceConditions {
            priestley_separation: space.priestley_separation(),
            esakia: space.esakia_condition(bound).ok(),
            extremally_order_disconnected: space.extremally_order_disconnected(bound).ok(),
        };
        space
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn all(&self) -> Subset {
        self.poset.all()
    }

    pub fn filters(&self) -> Option<&[Filter]> {
        self.filters.as_deref()
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn conditions(&self) -> SpaceConditions {
        self.conditions
    }

    pub fn is_clopen(&self, s: Subset) -> bool {
        match self.topology {
            Topology::Discrete => s.is_subset(self.all()),
        }
    }

    /// `cl_π`
    pub fn closure(&self, s: Subset) -> Subset {
        match self.topology {
            Topology::Discrete => s,
        }
    }

    /// `int_π`
    pub fn interior(&self, s: Subset) -> Subset {
        match self.topology {
            Topology::Discrete => s,
        }
    }

    pub fn is_open(&self, s: Subset) -> bool {
        self.interior(s) == s
    }

    /// For every `x ≰ y`, `X∖↓y` is a clopen upset containing `x` and missing `y`.
    pub fn priestley_separation(&self) -> bool {
        let p = &self.poset;
        (0..p.len()).all(|x| {
            (0..p.len()).filter(|&y| !p.leq(x, y)).all(|y| {
                let u = p.down_of(y).complement(p.len());
                self.is_clopen(u) && p.is_upset(u) && u.contains(x) && !u.contains(y)
            })
        })
    }

    /// `↓U` is clopen for every clopen `U`, checked over all subsets.
    pub fn esakia_condition(&self, literal_bound: usize) -> Result<bool> {
        Bounds::check("literal clopen check", self.len(), literal_bound)?;
        Ok(Subset::all(self.len())
            .filter(|&u| self.is_clopen(u))
            .all(|u| self.is_clopen(self.poset.down_closure(u))))
    }

    /// The closure of every open upset is clopen, checked over all subsets.
    pub fn extremally_order_disconnected(&self, literal_bound: usize) -> Result<bool> {
        Bounds::check("literal clopen check", self.len(), literal_bound)?;
        Ok(Subset::all(self.len())
            .filter(|&u| self.is_open(u) && self.poset.is_upset(u))
            .all(|u| self.is_clopen(self.closure(u))))
    }

    /// `max(A)`
    pub fn maximal(&self, s: Subset) -> Subset {
        self.poset.maximal(s)
    }

    pub fn up_closure(&self, s: Subset) -> Subset {
        self.poset.up_closure(s)
    }

    pub fn down_closure(&self, s: Subset) -> Subset {
        self.poset.down_closure(s)
    }

    /// Regular closed sets of `(X, π)`.
    pub fn regular_closed(&self) -> Vec<Subset> {
        Subset::all(self.len())
            .filter(|&f| self.closure(self.interior(f)) == f)
            .collect()
    }
}

/// `X_L`: prime filters of `L` ordered by inclusion.
pub fn dual_space(l: &FiniteLattice) -> EsakiaSpace {
    let filters = prime_filters(l);
    let labels = filter_labels(l, &filters);
    let poset = FinitePoset::from_leq_fn(labels, |x, y| {
        filters[x].members.is_subset(filters[y].members)
    });
    EsakiaSpace::build(poset, Some(filters))
}

/// A lattice together with its dual space and the map `φ`.
#[derive(Debug, Clone)]
pub struct Duality {
    lattice: FiniteLattice,
    space: EsakiaSpace,
    phi: Vec<Subset>,
    by_upset: HashMap<Subset, usize>,
}

impl Duality {
    pub fn new(l: &FiniteLattice) -> Self {
        let space = dual_space(l);
        let filters = space
            .filters()
            .expect("dual space keeps its filters")
            .to_vec();
        let phi: Vec<Subset> = l
            .elements()
            .map(|a| {
                filters
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.members.contains(a))
                    .map(|(x, _)| x)
                    .collect()
            })
            .collect();
        let by_upset = phi.iter().enumerate().map(|(a, &u)| (u, a)).collect();
        Duality {
            lattice: l.clone(),
            space,
            phi,
            by_upset,
        }
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn space(&self) -> &EsakiaSpace {
        &self.space
    }

    /// `φ(a) = {x ∈ X_L : a ∈ x}`
    pub fn phi(&self, a: usize) -> Subset {
        self.phi[a]
    }

    /// `φ⁻¹(U)`, defined exactly on the upsets of `X_L`.
    pub fn element_of(&self, upset: Subset) -> Option<usize> {
        self.by_upset.get(&upset).copied()
    }

    pub fn points(&self) -> usize {
        self.space.len()
    }
}

pub fn phi(l: &FiniteLattice, a: usize) -> Subset {
    Duality::new(l).phi(a)
}

/// `U(X)`: the upsets of `X` ordered by inclusion.
pub fn upset_algebra(x: &EsakiaSpace) -> Result<SetLattice> {
    birkhoff_lattice(x.poset())
}

/// `U → V = X ∖ ↓(U ∖ V)`
pub fn upset_implication(x: &EsakiaSpace, u: Subset, v: Subset) -> Subset {
    x.down_closure(u.difference(v)).complement(x.len())
}

/// Compares the set formula for `→` on `U(X)` with the lattice's own
/// implication; returns the first disagreeing pair.
pub fn implication_cross_check(x: &EsakiaSpace, algebra: &SetLattice) -> Option<(String, String)> {
    let l = algebra.lattice();
    for a in l.elements() {
        for b in l.elements() {
            let formula = upset_implication(x, algebra.set(a), algebra.set(b));
            if algebra.set(l.implication(a, b)) != formula {
                return Some((l.label(a).into(), l.label(b).into()));
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitCheck {
    pub bijective: bool,
    pub preserves_meet: bool,
    pub preserves_join: bool,
    pub preserves_bounds: bool,
    pub preserves_implication: bool,
    pub witness: Option<String>,
}

impl UnitCheck {
    pub fn holds(&self) -> bool {
        self.bijective
            && self.preserves_meet
            && self.preserves_join
            && self.preserves_bounds
            && self.preserves_implication
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounitCheck {
    pub bijective: bool,
    pub order_isomorphism: bool,
    pub witness: Option<String>,
}

impl CounitCheck {
    pub fn holds(&self) -> bool {
        self.bijective && self.order_isomorphism
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub lattice_size: usize,
    pub space_size: usize,
    pub unit: UnitCheck,
    pub counit: CounitCheck,
    pub conditions: SpaceConditions,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.unit.holds()
            && self.counit.holds()
            && self.conditions.priestley_separation
            && self.conditions.esakia != Some(false)
            && self.conditions.extremally_order_disconnected != Some(false)
    }
}

/// Checks `φ : L ≅ U(X_L)` as a Heyting isomorphism.
pub fn unit_check(d: &Duality) -> UnitCheck {
    let l = d.lattice();
    let x = d.space();
    let upsets = x.poset().upsets();
    let mut images: Vec<Subset> = l.elements().map(|a| d.phi(a)).collect();
    images.sort();
    let bijective = images.windows(2).all(|w| w[0] != w[1]) && images == upsets;

    let mut witness = None;
    let mut note = |ok: bool, what: &str, a: usize, b: usize| {
        if !ok && witness.is_none() {
            witness = Some(format!(
                "φ fails to preserve {what} at ({}, {})",
                l.label(a),
                l.label(b)
            ));
        }
        ok
    };
    let mut preserves_meet = true;
    let mut preserves_join = true;
    let mut preserves_implication = true;
    for a in l.elements() {
        for b in l.elements() {
            let (pa, pb) = (d.phi(a), d.phi(b));
            preserves_meet &= note(d.phi(l.meet(a, b)) == pa.intersection(pb), "∧", a, b);
            preserves_join &= note(d.phi(l.join(a, b)) == pa.union(pb), "∨", a, b);
            preserves_implication &= note(
                d.phi(l.implication(a, b)) == upset_implication(x, pa, pb),
                "→",
                a,
                b,
            );
        }
    }
    let preserves_bounds = d.phi(l.bottom()).is_empty() && d.phi(l.top()) == x.all();
    UnitCheck {
        bijective,
        preserves_meet,
        preserves_join,
        preserves_bounds,
        preserves_implication,
        witness,
    }
}

/// Checks `ξ : X ≅ X_{U(X)}`, `ξ(x) = {U ∈ U(X) : x ∈ U}`.
pub fn counit_check(x: &EsakiaSpace) -> Result<CounitCheck> {
    let algebra = upset_algebra(x)?;
    let l = algebra.lattice();
    let double = dual_space(l);
    let double_filters = double.filters().expect("dual space keeps its filters");
    let xi: Vec<Option<usize>> = (0..x.len())
        .map(|p| {
            let members: Subset = l
                .elements()
                .filter(|&u| algebra.set(u).contains(p))
                .collect();
            double_filters.iter().position(|f| f.members == members)
        })
        .collect();
    if let Some(p) = xi.iter().position(Option::is_none) {
        return Ok(CounitCheck {
            bijective: false,
            order_isomorphism: false,
            witness: Some(format!("ξ({}) is not a prime filter", x.labels()[p])),
        });
    }
    let map: Vec<usize> = xi.into_iter().flatten().collect();
    let image: Subset = map.iter().copied().collect();
    let bijective = map.len() == double.len() && image == double.all();
    let mut witness = None;
    let order_isomorphism = (0..x.len()).all(|p| {
        (0..x.len()).all(|q| {
            let ok = x.poset().leq(p, q) == double.poset().leq(map[p], map[q]);
            if !ok && witness.is_none() {
                witness = Some(format!(
                    "ξ breaks the order at ({}, {})",
                    x.labels()[p],
                    x.labels()[q]
                ));
            }
            ok
        })
    });
    Ok(CounitCheck {
        bijective,
        order_isomorphism,
        witness,
    })
}

/// Unit and counit checks for `L` and its dual space.
pub fn unit_counit_check(l: &FiniteLattice) -> Result<DualityReport> {
    let d = Duality::new(l);
    Ok(DualityReport {
        lattice_size: l.len(),
        space_size: d.points(),
        unit: unit_check(&d),
        counit: counit_check(d.space())?,
        conditions: d.space().conditions(),
    })
}

/// `X_{Up(P)} ≅ P`, returning the isomorphism `P → X_{Up(P)}` found by search.
pub fn poset_round_trip(p: &FinitePoset) -> Result<Option<Vec<usize>>> {
    let up = birkhoff_lattice(p)?;
    let x = dual_space(up.lattice());
    Ok(find_isomorphism(p, x.poset()))
}

#[cfg(test)]
mod tests {
    use super::*;

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

    #[test]
    fn dual_space_examples() {
        let x = dual_space(&l3());
        assert_eq!(x.labels(), ["x1", "xm"]);
        assert!(x.poset().lt(0, 1));
        let f = x.filters().unwrap();
        assert_eq!(f[0].members, Subset::singleton(2));
        assert_eq!(f[1].members, Subset::from_indices([1, 2]));

        let x = dual_space(&l4());
        assert_eq!(x.len(), 2);
        assert!(!x.poset().leq(0, 1) && !x.poset().leq(1, 0));

        assert_eq!(dual_space(&FiniteLattice::chain(2)).len(), 1);
    }

    #[test]
    fn phi_examples() {
        let d = Duality::new(&l3());
        assert_eq!(d.phi(1), Subset::singleton(1));
        assert_eq!(d.phi(0), Subset::EMPTY);
        assert_eq!(d.phi(2), d.space().all());
    }

    #[test]
    fn upset_implication_examples() {
        let x = dual_space(&l3());
        // {xm} → ∅ = X ∖ ↓{xm} = ∅
        assert_eq!(
            upset_implication(&x, Subset::singleton(1), Subset::EMPTY),
            Subset::EMPTY
        );
        for u in x.poset().upsets() {
            assert_eq!(upset_implication(&x, x.all(), u), u);
        }
        let a2 = EsakiaSpace::from_poset(FinitePoset::antichain(2));
        assert_eq!(
            upset_implication(&a2, Subset::singleton(0), Subset::singleton(1)),
            Subset::singleton(1)
        );
        let alg = upset_algebra(&a2).unwrap();
        assert_eq!(implication_cross_check(&a2, &alg), None);
    }

    #[test]
    fn unit_counit_examples() {
        assert!(unit_counit_check(&l3()).unwrap().holds());
        assert!(unit_counit_check(&FiniteLattice::chain(2)).unwrap().holds());
        let c2 = FinitePoset::from_labeled(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(poset_round_trip(&c2).unwrap().is_some());
    }

    #[test]
    fn conditions_hold_literally() {
        let x = dual_space(&l3());
        let c = x.conditions();
        assert!(c.priestley_separation);
        assert_eq!(c.esakia, Some(true));
        assert_eq!(c.extremally_order_disconnected, Some(true));
        let big = EsakiaSpace::from_poset(FinitePoset::antichain(11));
        assert_eq!(big.conditions().esakia, None);
        assert!(big.esakia_condition(11).unwrap());
    }
}

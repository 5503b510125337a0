//! Finite topological spaces held as an explicit family of open sets.
//!
//! Spaces need not be T0. Closure, interior and the specialization preorder
//! are derived from the open family, and the scatteredness predicates are
//! evaluated from their definitions.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::heyting::{completely_prime_filters, points_space};
use crate::sets::SetLattice;
use crate::subset::{render, Subset, MAX_CARRIER};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    labels: Vec<String>,
    opens: Vec<Subset>,
}

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

impl FiniteSpace {
    /// Validates that `opens` contains `∅` and the whole carrier and is
    /// closed under binary unions and intersections.
    pub fn new(labels: Vec<String>, mut opens: Vec<Subset>) -> Result<Self> {
        let n = labels.len();
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge {
                size: n,
                max: MAX_CARRIER,
            });
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateElement(l.clone()));
            }
        }
        let full = Subset::full(n);
        if let Some(bad) = opens.iter().find(|u| !u.is_subset(full)) {
            return Err(Error::InvalidTopology(format!(
                "open set {bad:?} leaves the carrier"
            )));
        }
        opens.sort();
        opens.dedup();
        let has = |s: Subset| opens.binary_search(&s).is_ok();
        if !has(Subset::EMPTY) {
            return Err(Error::InvalidTopology("the empty set is not open".into()));
        }
        if !has(full) {
            return Err(Error::InvalidTopology("the whole space is not open".into()));
        }
        for &u in &opens {
            for &v in &opens {
                if !has(u.union(v)) {
                    let r = render(u.union(v), &labels);
                    return Err(Error::InvalidTopology(format!("union {r} is not open")));
                }
                if !has(u.intersection(v)) {
                    let r = render(u.intersection(v), &labels);
                    return Err(Error::InvalidTopology(format!(
                        "intersection {r} is not open"
                    )));
                }
            }
        }
        Ok(FiniteSpace { labels, opens })
    }

    pub fn discrete(n: usize) -> Self {
        FiniteSpace {
            labels: numbered(n),
            opens: Subset::all(n).collect(),
        }
    }

    pub fn indiscrete(n: usize) -> Self {
        let mut opens = vec![Subset::EMPTY, Subset::full(n)];
        opens.dedup();
        FiniteSpace {
            labels: numbered(n),
            opens,
        }
    }

    /// Points `0`, `1` with opens `∅`, `{1}`, `{0,1}`.
    pub fn sierpinski() -> Self {
        FiniteSpace {
            labels: numbered(2),
            opens: vec![Subset::EMPTY, Subset::singleton(1), Subset::full(2)],
        }
    }

    /// The Alexandroff topology of a preorder given by generating pairs
    /// `x ≤ y`: the opens are the up-closed sets.
    pub fn from_preorder(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge {
                size: n,
                max: MAX_CARRIER,
            });
        }
        let mut up: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::UnknownElement(format!("index {}", x.max(y))));
            }
            up[x].insert(y);
        }
        warshall(&mut up);
        let opens = Subset::all(n)
            .filter(|&s| s.iter().all(|x| up[x].is_subset(s)))
            .collect();
        FiniteSpace::new(labels, opens)
    }

    /// The coarsest topology in which every generator is open.
    pub fn generated(labels: Vec<String>, generators: &[Subset]) -> Result<Self> {
        let opens = generate_topology(labels.len(), generators);
        FiniteSpace::new(labels, opens)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn all(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Open sets in increasing numeric order.
    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    pub fn is_open(&self, s: Subset) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: Subset) -> bool {
        s.is_subset(self.all()) && self.is_open(s.complement(self.len()))
    }

    /// Closed sets in increasing numeric order.
    pub fn closed_sets(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = self
            .opens
            .iter()
            .map(|u| u.complement(self.len()))
            .collect();
        out.sort();
        out
    }

    pub fn is_discrete(&self) -> bool {
        self.opens.len() == 1 << self.len()
    }

    pub fn closure(&self, s: Subset) -> Subset {
        self.opens
            .iter()
            .map(|u| u.complement(self.len()))
            .filter(|&f| s.is_subset(f))
            .fold(self.all(), Subset::intersection)
    }

    pub fn interior(&self, s: Subset) -> Subset {
        self.opens
            .iter()
            .copied()
            .filter(|u| u.is_subset(s))
            .fold(Subset::EMPTY, Subset::union)
    }

    /// Smallest open set containing `x`.
    pub fn neighbourhood(&self, x: usize) -> Subset {
        self.opens
            .iter()
            .copied()
            .filter(|u| u.contains(x))
            .fold(self.all(), Subset::intersection)
    }

    /// `x ≤ y` iff `x ∈ cl{y}`.
    pub fn specializes(&self, x: usize, y: usize) -> bool {
        self.closure(Subset::singleton(y)).contains(x)
    }

    /// `[x] = {y : cl{y} = cl{x}}`
    pub fn class_of(&self, x: usize) -> Subset {
        let cx = self.closure(Subset::singleton(x));
        (0..self.len())
            .filter(|&y| self.closure(Subset::singleton(y)) == cx)
            .collect()
    }

    pub fn is_t0(&self) -> bool {
        (0..self.len()).all(|x| self.class_of(x) == Subset::singleton(x))
    }

    /// Every point is the intersection of an open and a closed set.
    pub fn is_td(&self) -> bool {
        let closed = self.closed_sets();
        (0..self.len()).all(|x| {
            self.opens.iter().any(|u| {
                closed
                    .iter()
                    .any(|f| u.intersection(*f) == Subset::singleton(x))
            })
        })
    }

    /// Renames the points; opens are carried along.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::Malformed(format!(
                "{} labels for a {}-point space",
                labels.len(),
                self.len()
            )));
        }
        FiniteSpace::new(labels, self.opens.clone())
    }
}

fn warshall(up: &mut [Subset]) {
    let n = up.len();
    for k in 0..n {
        for i in 0..n {
            if up[i].contains(k) {
                up[i] = up[i].union(up[k]);
            }
        }
    }
}

/// Closes `generators` (plus `∅` and the carrier) under finite intersections
/// and then arbitrary unions.
pub fn generate_topology(n: usize, generators: &[Subset]) -> Vec<Subset> {
    let full = Subset::full(n);
    let mut base: BTreeSet<Subset> = generators.iter().map(|g| g.intersection(full)).collect();
    base.insert(full);
    loop {
        let items: Vec<Subset> = base.iter().copied().collect();
        let before = base.len();
        for &a in &items {
            for &b in &items {
                base.insert(a.intersection(b));
            }
        }
        if base.len() == before {
            break;
        }
    }
    let mut opens: BTreeSet<Subset> = BTreeSet::from([Subset::EMPTY]);
    for b in base {
        let grown: Vec<Subset> = opens.iter().map(|u| u.union(b)).collect();
        opens.extend(grown);
    }
    opens.into_iter().collect()
}

/// `O(S)`: the opens ordered by inclusion.
pub fn open_frame(s: &FiniteSpace) -> SetLattice {
    SetLattice::new(s.labels(), s.opens().to_vec(), false).expect("open sets form a frame")
}

/// All topologies on `{0, .., n-1}`, one per reflexive transitive relation
/// (its Alexandroff topology), sorted by open family.
pub fn enumerate_topologies(n: usize, bounds: &Bounds) -> Result<Vec<FiniteSpace>> {
    Bounds::check("topology enumeration", n, bounds.topology_points)?;
    Bounds::check("topology enumeration", n, 5)?;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut up: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                up[i].insert(j);
            }
        }
        let before = up.clone();
        warshall(&mut up);
        if up != before {
            continue;
        }
        let opens = Subset::all(n)
            .filter(|&s| s.iter().all(|x| up[x].is_subset(s)))
            .collect();
        out.push(FiniteSpace {
            labels: numbered(n),
            opens,
        });
    }
    out.sort_by(|a, b| a.opens.cmp(&b.opens));
    Ok(out)
}

/// A bijection `S → T` carrying opens exactly onto opens.
pub fn find_homeomorphism(s: &FiniteSpace, t: &FiniteSpace) -> Option<Vec<usize>> {
    if s.len() != t.len() || s.opens.len() != t.opens.len() {
        return None;
    }
    let inv = |sp: &FiniteSpace, x: usize| {
        (
            sp.closure(Subset::singleton(x)).len(),
            sp.neighbourhood(x).len(),
        )
    };
    let si: Vec<_> = (0..s.len()).map(|x| inv(s, x)).collect();
    let ti: Vec<_> = (0..t.len()).map(|x| inv(t, x)).collect();
    let mut map = vec![usize::MAX; s.len()];
    fn go(
        x: usize,
        used: Subset,
        map: &mut [usize],
        s: &FiniteSpace,
        t: &FiniteSpace,
        si: &[(usize, usize)],
        ti: &[(usize, usize)],
    ) -> bool {
        if x == s.len() {
            return is_homeomorphism(s, t, map);
        }
        for y in 0..t.len() {
            if used.contains(y) || si[x] != ti[y] {
                continue;
            }
            // specialization must be preserved both ways on the assigned part
            let ok = (0..x).all(|z| {
                s.specializes(x, z) == t.specializes(y, map[z])
                    && s.specializes(z, x) == t.specializes(map[z], y)
            });
            if ok {
                map[x] = y;
                if go(x + 1, used.with(y), map, s, t, si, ti) {
                    return true;
                }
            }
        }
        false
    }
    go(0, Subset::EMPTY, &mut map, s, t, &si, &ti).then_some(map)
}

pub fn image(set: Subset, map: &[usize]) -> Subset {
    set.iter().map(|x| map[x]).collect()
}

pub fn preimage(set: Subset, map: &[usize]) -> Subset {
    (0..map.len()).filter(|&x| set.contains(map[x])).collect()
}

pub fn is_homeomorphism(s: &FiniteSpace, t: &FiniteSpace, map: &[usize]) -> bool {
    map.len() == s.len()
        && s.len() == t.len()
        && image(s.all(), map) == t.all()
        && s.opens.len() == t.opens.len()
        && s.opens.iter().all(|&u| t.is_open(image(u, map)))
}

/// `ρ : S → S_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMap {
    pub source: FiniteSpace,
    pub target: FiniteSpace,
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuotientCheck {
    pub continuous: bool,
    pub open: bool,
    pub closed: bool,
    pub surjective: bool,
    pub fibers_are_classes: bool,
    pub target_t0: bool,
}

impl QuotientCheck {
    pub fn holds(&self) -> bool {
        self.continuous
            && self.open
            && self.closed
            && self.surjective
            && self.fibers_are_classes
            && self.target_t0
    }
}

impl QuotientMap {
    pub fn check(&self) -> QuotientCheck {
        let (s, t, m) = (&self.source, &self.target, &self.map);
        QuotientCheck {
            continuous: t.opens().iter().all(|&v| s.is_open(preimage(v, m))),
            open: s.opens().iter().all(|&u| t.is_open(image(u, m))),
            closed: s.closed_sets().iter().all(|&f| t.is_closed(image(f, m))),
            surjective: image(s.all(), m) == t.all(),
            fibers_are_classes: (0..s.len())
                .all(|x| preimage(Subset::singleton(m[x]), m) == s.class_of(x)),
            target_t0: t.is_t0(),
        }
    }
}

/// `S_0 = S/∼` with `x ∼ y` iff `cl{x} = cl{y}`. Classes are ordered by their
/// least point; a singleton class keeps its point's label.
pub fn t0_reflection(s: &FiniteSpace) -> QuotientMap {
    let mut classes: Vec<Subset> = Vec::new();
    let map: Vec<usize> = (0..s.len())
        .map(|x| {
            let c = s.class_of(x);
            classes.iter().position(|&d| d == c).unwrap_or_else(|| {
                classes.push(c);
                classes.len() - 1
            })
        })
        .collect();
    let labels = classes
        .iter()
        .map(|&c| match c.len() {
            1 => s.label(c.first().unwrap()).to_string(),
            _ => render(c, s.labels()),
        })
        .collect();
    let opens = s.opens().iter().map(|&u| image(u, &map)).collect();
    let target = FiniteSpace::new(labels, opens).expect("images of opens form a topology");
    QuotientMap {
        source: s.clone(),
        target,
        map,
    }
}

/// `pt(O S)` with `ε(s) = {U ∈ O S : s ∈ U}`.
#[derive(Debug, Clone)]
pub struct Soberification {
    pub frame: SetLattice,
    pub space: FiniteSpace,
    pub epsilon: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SoberificationCheck {
    pub epsilon_continuous: bool,
    pub frame_isomorphism: bool,
    pub homeomorphic_to_t0_reflection: bool,
}

impl SoberificationCheck {
    pub fn holds(&self) -> bool {
        self.epsilon_continuous && self.frame_isomorphism && self.homeomorphic_to_t0_reflection
    }
}

/// `ε` as a map into a list of filters of `O S`.
pub(crate) fn epsilon_into(frame: &SetLattice, s: &FiniteSpace, filters: &[Subset]) -> Vec<usize> {
    (0..s.len())
        .map(|x| {
            let members: Subset = frame
                .lattice()
                .elements()
                .filter(|&e| frame.set(e).contains(x))
                .collect();
            filters
                .iter()
                .position(|&f| f == members)
                .expect("ε(s) is a completely prime filter")
        })
        .collect()
}

pub fn soberification(s: &FiniteSpace) -> Soberification {
    let frame = open_frame(s);
    let space = points_space(frame.lattice());
    let filters: Vec<Subset> = completely_prime_filters(frame.lattice())
        .into_iter()
        .map(|f| f.members)
        .collect();
    let epsilon = epsilon_into(&frame, s, &filters);
    Soberification {
        frame,
        space,
        epsilon,
    }
}

impl Soberification {
    pub fn check(&self, s: &FiniteSpace) -> SoberificationCheck {
        let pulled: Vec<Subset> = self
            .space
            .opens()
            .iter()
            .map(|&v| preimage(v, &self.epsilon))
            .collect();
        let epsilon_continuous = pulled.iter().all(|&u| s.is_open(u));
        let mut sorted = pulled.clone();
        sorted.sort();
        sorted.dedup();
        let opens = self.space.opens();
        let frame_isomorphism = sorted == s.opens()
            && pulled.len() == opens.len()
            && opens.iter().zip(&pulled).all(|(&v, &pv)| {
                opens
                    .iter()
                    .zip(&pulled)
                    .all(|(&w, &pw)| v.is_subset(w) == pv.is_subset(pw))
            });
        let s0 = t0_reflection(s).target;
        SoberificationCheck {
            epsilon_continuous,
            frame_isomorphism,
            homeomorphic_to_t0_reflection: find_homeomorphism(&s0, &self.space).is_some(),
        }
    }
}

/// Each irreducible closed set is the closure of exactly one point.
pub fn is_sober(s: &FiniteSpace) -> bool {
    let closed = s.closed_sets();
    closed
        .iter()
        .filter(|&&f| !f.is_empty())
        .filter(|&&f| {
            !closed.iter().any(|&a| {
                a != f
                    && a.is_subset(f)
                    && closed
                        .iter()
                        .any(|&b| b != f && b.is_subset(f) && a.union(b) == f)
            })
        })
        .all(|&f| {
            (0..s.len())
                .filter(|&x| s.closure(Subset::singleton(x)) == f)
                .count()
                == 1
        })
}

/// Topology generated by the differences `U ∖ V` of open sets.
pub fn front_topology(s: &FiniteSpace) -> FiniteSpace {
    let gens: Vec<Subset> = s
        .opens()
        .iter()
        .flat_map(|&u| s.opens().iter().map(move |&v| u.difference(v)))
        .collect();
    FiniteSpace::generated(s.labels().to_vec(), &gens).expect("generated families are topologies")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PointClass {
    pub isolated: bool,
    pub weakly_isolated: bool,
    pub detached: bool,
}

/// Classifies `x` within the subspace `t`.
pub fn classify_point(s: &FiniteSpace, t: Subset, x: usize) -> Result<PointClass> {
    if !t.is_subset(s.all()) {
        return Err(Error::Malformed(format!(
            "{t:?} is not a subset of the space"
        )));
    }
    if !t.contains(x) {
        return Err(Error::Malformed(format!("point {x} is not in {t:?}")));
    }
    let cl = s.closure(Subset::singleton(x));
    let class = s.class_of(x);
    let traces = || {
        s.opens()
            .iter()
            .map(|&u| u.intersection(t))
            .filter(|tr| tr.contains(x))
    };
    Ok(PointClass {
        isolated: traces().any(|tr| tr == Subset::singleton(x)),
        weakly_isolated: traces().any(|tr| tr.is_subset(cl)),
        detached: traces().any(|tr| tr.is_subset(class)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ScatterFlags {
    pub scattered: bool,
    pub weakly_scattered: bool,
    pub dispersed: bool,
}

fn scatter_flags<I: Iterator<Item = Subset>>(s: &FiniteSpace, family: I) -> ScatterFlags {
    let mut out = ScatterFlags {
        scattered: true,
        weakly_scattered: true,
        dispersed: true,
    };
    for t in family.filter(|t| !t.is_empty()) {
        let classes: Vec<PointClass> = t
            .iter()
            .map(|x| classify_point(s, t, x).expect("points of t"))
            .collect();
        out.scattered &= classes.iter().any(|c| c.isolated);
        out.weakly_scattered &= classes.iter().any(|c| c.weakly_isolated);
        out.dispersed &= classes.iter().any(|c| c.detached);
    }
    out
}

/// Scatteredness over nonempty closed subsets.
pub fn scatter_flags_closed(s: &FiniteSpace) -> ScatterFlags {
    scatter_flags(s, s.closed_sets().into_iter())
}

/// Scatteredness over all nonempty subsets.
pub fn scatter_flags_all(s: &FiniteSpace) -> ScatterFlags {
    scatter_flags(s, Subset::all(s.len()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScatterConsistency {
    pub scattered_iff_weakly_scattered_and_td: bool,
    pub dispersed_iff_reflection_scattered: bool,
    pub weakly_scattered_iff_reflection_weakly_scattered: bool,
    pub scattered_implies_t0: bool,
    pub closed_and_all_subsets_agree: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScatterReport {
    pub t0: bool,
    pub t_d: bool,
    pub scattered: bool,
    pub weakly_scattered: bool,
    pub dispersed: bool,
    pub all_subsets: ScatterFlags,
    pub consistency: ScatterConsistency,
}

impl ScatterReport {
    pub fn consistent(&self) -> bool {
        let c = self.consistency;
        c.scattered_iff_weakly_scattered_and_td
            && c.dispersed_iff_reflection_scattered
            && c.weakly_scattered_iff_reflection_weakly_scattered
            && c.scattered_implies_t0
            && c.closed_and_all_subsets_agree
    }
}

pub fn scatter_report(s: &FiniteSpace) -> ScatterReport {
    let f = scatter_flags_closed(s);
    let all = scatter_flags_all(s);
    let s0 = t0_reflection(s).target;
    let f0 = scatter_flags_closed(&s0);
    let t0 = s.is_t0();
    let t_d = s.is_td();
    ScatterReport {
        t0,
        t_d,
        scattered: f.scattered,
        weakly_scattered: f.weakly_scattered,
        dispersed: f.dispersed,
        all_subsets: all,
        consistency: ScatterConsistency {
            scattered_iff_weakly_scattered_and_td: f.scattered == (f.weakly_scattered && t_d),
            dispersed_iff_reflection_scattered: f.dispersed == f0.scattered,
            weakly_scattered_iff_reflection_weakly_scattered: f.weakly_scattered
                == f0.weakly_scattered,
            scattered_implies_t0: !f.scattered || t0,
            closed_and_all_subsets_agree: f == all,
        },
    }
}

/// Closed sets `F` with `F = cl(int F)`.
pub fn regular_closed(s: &FiniteSpace) -> Vec<Subset> {
    s.closed_sets()
        .into_iter()
        .filter(|&f| s.closure(s.interior(f)) == f)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_point() -> FiniteSpace {
        FiniteSpace::new(
            numbered(3),
            vec![Subset::EMPTY, Subset::singleton(2), Subset::full(3)],
        )
        .unwrap()
    }

    #[test]
    fn validation_rejects_non_topologies() {
        let l = numbered(2);
        assert!(FiniteSpace::new(l.clone(), vec![Subset::full(2)]).is_err());
        assert!(FiniteSpace::new(l.clone(), vec![Subset::EMPTY]).is_err());
        let bad = vec![
            Subset::EMPTY,
            Subset::singleton(0),
            Subset::singleton(1),
            Subset::full(2),
        ];
        assert!(FiniteSpace::new(numbered(3), bad).is_err());
    }

    #[test]
    fn open_frame_examples() {
        let s = open_frame(&FiniteSpace::sierpinski());
        assert_eq!(s.len(), 3);
        assert_eq!(open_frame(&FiniteSpace::indiscrete(2)).len(), 2);
        assert!(open_frame(&FiniteSpace::discrete(2)).lattice().is_boolean());
    }

    #[test]
    fn t0_reflection_examples() {
        let q = t0_reflection(&FiniteSpace::indiscrete(2));
        assert_eq!(q.target.len(), 1);
        assert!(q.check().holds());

        let q = t0_reflection(&FiniteSpace::sierpinski());
        assert_eq!(q.target, FiniteSpace::sierpinski());

        let q = t0_reflection(&three_point());
        assert_eq!(q.target.labels(), ["{0,1}", "2"]);
        assert_eq!(q.map, [0, 0, 1]);
        assert!(q.check().holds());
        assert!(find_homeomorphism(&q.target, &FiniteSpace::sierpinski()).is_some());
    }

    #[test]
    fn soberification_examples() {
        let sob = soberification(&FiniteSpace::indiscrete(2));
        assert_eq!(sob.space.len(), 1);
        assert!(sob.check(&FiniteSpace::indiscrete(2)).holds());
        let s = FiniteSpace::sierpinski();
        let sob = soberification(&s);
        assert!(find_homeomorphism(&sob.space, &s).is_some());
        assert!(sob.check(&s).holds());
    }

    #[test]
    fn sobriety_examples() {
        assert!(is_sober(&FiniteSpace::sierpinski()));
        assert!(!is_sober(&FiniteSpace::indiscrete(2)));
        assert!(is_sober(&FiniteSpace::discrete(2)));
    }

    #[test]
    fn front_topology_examples() {
        assert!(front_topology(&FiniteSpace::sierpinski()).is_discrete());
        assert!(front_topology(&FiniteSpace::discrete(2)).is_discrete());
        assert_eq!(
            front_topology(&FiniteSpace::indiscrete(2)),
            FiniteSpace::indiscrete(2)
        );
    }

    #[test]
    fn classify_examples() {
        let s = FiniteSpace::sierpinski();
        assert!(classify_point(&s, s.all(), 1).unwrap().isolated);
        let i = FiniteSpace::indiscrete(2);
        let c = classify_point(&i, i.all(), 0).unwrap();
        assert_eq!(
            c,
            PointClass {
                isolated: false,
                weakly_isolated: true,
                detached: true
            }
        );
        let d = FiniteSpace::discrete(2);
        let c = classify_point(&d, d.all(), 1).unwrap();
        assert!(c.isolated && c.weakly_isolated && c.detached);
        assert!(classify_point(&d, Subset::singleton(0), 1).is_err());
    }

    #[test]
    fn scatter_examples() {
        let r = scatter_report(&FiniteSpace::sierpinski());
        assert!(r.scattered && r.weakly_scattered && r.dispersed && r.t_d && r.t0);
        let r = scatter_report(&FiniteSpace::indiscrete(2));
        assert!(r.dispersed && r.weakly_scattered && !r.scattered && !r.t_d);
        assert!(r.consistent());
    }

    #[test]
    fn regular_closed_examples() {
        assert_eq!(
            regular_closed(&FiniteSpace::sierpinski()),
            [Subset::EMPTY, Subset::full(2)]
        );
        assert_eq!(regular_closed(&FiniteSpace::discrete(2)).len(), 4);
        assert_eq!(regular_closed(&FiniteSpace::indiscrete(2)).len(), 2);
    }

    #[test]
    fn topology_counts() {
        let b = Bounds::default();
        let counts: Vec<usize> = (0..=4)
            .map(|n| enumerate_topologies(n, &b).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 1, 4, 29, 355]);
        assert!(enumerate_topologies(5, &b).is_err());
    }

    #[test]
    fn preorder_constructor() {
        let s = FiniteSpace::from_preorder(numbered(2), &[(0, 1)]).unwrap();
        assert_eq!(s, FiniteSpace::sierpinski());
        assert!(s.specializes(0, 1) && !s.specializes(1, 0));
    }
}

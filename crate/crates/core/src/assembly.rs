//! Nuclei on a finite frame and the assembly `N(L)`, computed dually through
//! nuclear subsets of `X_L`.

use serde::Serialize;

use crate::bounds::Bounds;
use crate::duality::{Duality, EsakiaSpace};
use crate::error::{Error, Result};
use crate::heyting::{booleanization, is_scattered_frame};
use crate::lattice::FiniteLattice;
use crate::poset::{is_isomorphism, FinitePoset};
use crate::sets::SetLattice;
use crate::subset::{Subset, MAX_CARRIER};

/// Largest space on which the literal meet formula may be evaluated.
pub const LITERAL_MEET_POINTS: usize = 4;

/// An endomap of a lattice, stored as `values[a] = j(a)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Nucleus {
    values: Vec<usize>,
}

impl Nucleus {
    /// Validates the nucleus axioms.
    pub fn new(l: &FiniteLattice, values: Vec<usize>) -> Result<Self> {
        let report = validate_nucleus(l, &values);
        match report.witness {
            None => Ok(Nucleus { values }),
            Some(w) => Err(Error::InvalidNucleus(w)),
        }
    }

    pub(crate) fn unchecked(values: Vec<usize>) -> Self {
        Nucleus { values }
    }

    pub fn identity(l: &FiniteLattice) -> Self {
        Nucleus {
            values: l.elements().collect(),
        }
    }

    /// The constant-`1` nucleus.
    pub fn top(l: &FiniteLattice) -> Self {
        Nucleus {
            values: vec![l.top(); l.len()],
        }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.values[a]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Pointwise order `j ≤ k`.
    pub fn leq(&self, l: &FiniteLattice, other: &Nucleus) -> bool {
        self.values
            .iter()
            .zip(&other.values)
            .all(|(&a, &b)| l.leq(a, b))
    }

    /// `{a : ja = a}`
    pub fn fixpoints(&self) -> Subset {
        (0..self.values.len())
            .filter(|&a| self.values[a] == a)
            .collect()
    }

    /// Label pairs `(a, ja)` in carrier order.
    pub fn table(&self, l: &FiniteLattice) -> Vec<(String, String)> {
        l.elements()
            .map(|a| (l.label(a).to_string(), l.label(self.values[a]).to_string()))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NucleusReport {
    pub total: bool,
    pub inflationary: bool,
    pub idempotent: bool,
    pub preserves_meets: bool,
    pub monotone: bool,
    /// First failure found, in the order the axioms are listed.
    pub witness: Option<String>,
}

impl NucleusReport {
    pub fn is_valid(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks `a ≤ ja`, `jja ≤ ja` and `j(a∧b) = ja∧jb`, plus monotonicity.
pub fn validate_nucleus(l: &FiniteLattice, values: &[usize]) -> NucleusReport {
    let n = l.len();
    let total = values.len() == n && values.iter().all(|&v| v < n);
    if !total {
        return NucleusReport {
            total,
            inflationary: false,
            idempotent: false,
            preserves_meets: false,
            monotone: false,
            witness: Some(format!(
                "map has {} values in range, lattice has {n} elements",
                values.len()
            )),
        };
    }
    let name = |a: usize| l.label(a);
    let j = |a: usize| values[a];
    let mut witnesses = Vec::new();
    let inflationary = match l.elements().find(|&a| !l.leq(a, j(a))) {
        None => true,
        Some(a) => {
            witnesses.push(format!(
                "{} is not below j{} = {}",
                name(a),
                name(a),
                name(j(a))
            ));
            false
        }
    };
    let idempotent = match l.elements().find(|&a| !l.leq(j(j(a)), j(a))) {
        None => true,
        Some(a) => {
            witnesses.push(format!(
                "jj{} = {} exceeds j{} = {}",
                name(a),
                name(j(j(a))),
                name(a),
                name(j(a))
            ));
            false
        }
    };
    let pairs = || l.elements().flat_map(|a| l.elements().map(move |b| (a, b)));
    let preserves_meets = match pairs().find(|&(a, b)| j(l.meet(a, b)) != l.meet(j(a), j(b))) {
        None => true,
        Some((a, b)) => {
            witnesses.push(format!(
                "j({}∧{}) = {} but j{}∧j{} = {}",
                name(a),
                name(b),
                name(j(l.meet(a, b))),
                name(a),
                name(b),
                name(l.meet(j(a), j(b)))
            ));
            false
        }
    };
    let monotone = match pairs().find(|&(a, b)| l.leq(a, b) && !l.leq(j(a), j(b))) {
        None => true,
        Some((a, b)) => {
            witnesses.push(format!(
                "{} ≤ {} but j{} ≰ j{}",
                name(a),
                name(b),
                name(a),
                name(b)
            ));
            false
        }
    };
    NucleusReport {
        total,
        inflationary,
        idempotent,
        preserves_meets,
        monotone,
        witness: witnesses.into_iter().next(),
    }
}

/// `u_a(x) = a ∨ x`
pub fn make_u(l: &FiniteLattice, a: usize) -> Nucleus {
    Nucleus::unchecked(l.elements().map(|x| l.join(a, x)).collect())
}

/// `v_a(x) = a → x`
pub fn make_v(l: &FiniteLattice, a: usize) -> Nucleus {
    Nucleus::unchecked(l.elements().map(|x| l.implication(a, x)).collect())
}

/// `w_a(x) = (x → a) → a`
pub fn make_w(l: &FiniteLattice, a: usize) -> Nucleus {
    Nucleus::unchecked(
        l.elements()
            .map(|x| l.implication(l.implication(x, a), a))
            .collect(),
    )
}

/// `N_j = {x ∈ X_L : j⁻¹(x) = x}`, i.e. `ja ∈ x ⇒ a ∈ x`.
pub fn to_nuclear_set(d: &Duality, j: &Nucleus) -> Subset {
    let l = d.lattice();
    let filters = d.space().filters().expect("dual space keeps its filters");
    filters
        .iter()
        .enumerate()
        .filter(|(_, f)| {
            l.elements()
                .all(|a| !f.members.contains(j.apply(a)) || f.members.contains(a))
        })
        .map(|(x, _)| x)
        .collect()
}

/// `φ(j_N a) = X ∖ ↓(N ∖ φ(a))`
pub fn from_nuclear_set(d: &Duality, n: Subset) -> Nucleus {
    let x = d.space();
    let values = d
        .lattice()
        .elements()
        .map(|a| {
            let u = x.down_closure(n.difference(d.phi(a))).complement(x.len());
            d.element_of(u).expect("complements of downsets are upsets")
        })
        .collect();
    Nucleus::unchecked(values)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NuclearMethod {
    Literal,
    DiscreteShortcut,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NuclearCheck {
    pub nuclear: bool,
    pub method: NuclearMethod,
}

/// `F` is closed and `↓(U ∩ F)` is clopen for every clopen `U`. Spaces
/// above the literal bound use the finite-discrete shortcut when allowed.
pub fn is_nuclear(
    x: &EsakiaSpace,
    f: Subset,
    bounds: &Bounds,
    allow_shortcut: bool,
) -> Result<NuclearCheck> {
    if !f.is_subset(x.all()) {
        return Err(Error::Malformed(format!(
            "{f:?} is not a subset of the space"
        )));
    }
    if x.len() <= bounds.literal_points {
        let nuclear = x.closure(f) == f
            && Subset::all(x.len())
                .filter(|&u| x.is_clopen(u))
                .all(|u| x.is_clopen(x.down_closure(u.intersection(f))));
        return Ok(NuclearCheck {
            nuclear,
            method: NuclearMethod::Literal,
        });
    }
    if allow_shortcut {
        return Ok(NuclearCheck {
            nuclear: true,
            method: NuclearMethod::DiscreteShortcut,
        });
    }
    Err(Error::BoundExceeded {
        what: "literal nuclear check",
        size: x.len(),
        bound: bounds.literal_points,
    })
}

/// `N(L)`, held as the nuclear subsets of `X_L` under reverse inclusion.
/// Element `e` of the frame is the nuclear set `sets()[e]` and the nucleus
/// `nucleus(e)`.
#[derive(Debug, Clone)]
pub struct Assembly {
    duality: Duality,
    frame: SetLattice,
    nuclei: Vec<Nucleus>,
    order_agrees: bool,
}

impl Assembly {
    pub fn new(l: &FiniteLattice) -> Result<Self> {
        let duality = Duality::new(l);
        let x = duality.space();
        if x.len() > 6 {
            return Err(Error::CarrierTooLarge {
                size: 1 << x.len().min(63),
                max: MAX_CARRIER,
            });
        }
        let bounds = Bounds::default();
        let mut sets = Vec::new();
        for f in Subset::all(x.len()) {
            if is_nuclear(x, f, &bounds, true)?.nuclear {
                sets.push(f);
            }
        }
        let frame = SetLattice::new(x.labels(), sets, true)?;
        let nuclei: Vec<Nucleus> = frame
            .sets()
            .iter()
            .map(|&s| from_nuclear_set(&duality, s))
            .collect();
        let fl = frame.lattice();
        let order_agrees = fl.elements().all(|e| {
            fl.elements()
                .all(|f| fl.leq(e, f) == nuclei[e].leq(l, &nuclei[f]))
        });
        Ok(Assembly {
            duality,
            frame,
            nuclei,
            order_agrees,
        })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        self.frame.lattice()
    }

    pub fn base(&self) -> &FiniteLattice {
        self.duality.lattice()
    }

    pub fn duality(&self) -> &Duality {
        &self.duality
    }

    pub fn space(&self) -> &EsakiaSpace {
        self.duality.space()
    }

    pub fn len(&self) -> usize {
        self.nuclei.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nuclei.is_empty()
    }

    pub fn sets(&self) -> &[Subset] {
        self.frame.sets()
    }

    pub fn set(&self, e: usize) -> Subset {
        self.frame.set(e)
    }

    pub fn nuclei(&self) -> &[Nucleus] {
        &self.nuclei
    }

    pub fn nucleus(&self, e: usize) -> &Nucleus {
        &self.nuclei[e]
    }

    pub fn element_of_set(&self, s: Subset) -> Option<usize> {
        self.frame.element_of(s)
    }

    pub fn element_of(&self, j: &Nucleus) -> Option<usize> {
        self.element_of_set(to_nuclear_set(&self.duality, j))
    }

    /// The pointwise order of nuclei coincides with reverse inclusion.
    pub fn order_agrees(&self) -> bool {
        self.order_agrees
    }
}

pub fn assembly_frame(l: &FiniteLattice) -> Result<Assembly> {
    Assembly::new(l)
}

/// Pointwise meet; the empty meet is the top nucleus.
pub fn nuclei_meet(l: &FiniteLattice, list: &[Nucleus]) -> Nucleus {
    Nucleus::unchecked(
        l.elements()
            .map(|a| l.meet_all(list.iter().map(|j| j.apply(a))))
            .collect(),
    )
}

/// Join computed dually: the nuclear set of the join is the meet of the
/// nuclear sets.
pub fn nuclei_join(d: &Duality, list: &[Nucleus]) -> Nucleus {
    let sets: Vec<Subset> = list.iter().map(|j| to_nuclear_set(d, j)).collect();
    from_nuclear_set(d, nuclear_meet(d.space(), &sets))
}

/// Join computed by iterating the composite of the nuclei to a fixpoint.
pub fn nuclei_join_by_iteration(l: &FiniteLattice, list: &[Nucleus]) -> Nucleus {
    let values = l
        .elements()
        .map(|a| {
            let mut x = a;
            loop {
                let y = list.iter().fold(x, |acc, j| j.apply(acc));
                if y == x {
                    break x;
                }
                x = y;
            }
        })
        .collect();
    Nucleus::unchecked(values)
}

/// Meet in `N(X)`: the largest nuclear set inside `⋂N_α`, which on a finite
/// space is the intersection itself. The empty meet is `X`.
pub fn nuclear_meet(x: &EsakiaSpace, family: &[Subset]) -> Subset {
    family.iter().fold(x.all(), |acc, &n| acc.intersection(n))
}

/// `cl_π ⋃{F ∈ N(X) : F ⊆ ⋂N_α}`, evaluated over all subsets.
pub fn nuclear_meet_literal(x: &EsakiaSpace, family: &[Subset]) -> Result<Subset> {
    Bounds::check("literal meet formula", x.len(), LITERAL_MEET_POINTS)?;
    let n = family.iter().fold(x.all(), |acc, &s| acc.intersection(s));
    let bounds = Bounds::default();
    let mut union = Subset::EMPTY;
    for f in n.subsets() {
        if is_nuclear(x, f, &bounds, false)?.nuclear {
            union = union.union(f);
        }
    }
    Ok(x.closure(union))
}

/// Every nucleus, found by scanning subsets `S ∋ 1` closed under `∧` and
/// under `a → s`; each induces `j(a) = ⋀{s ∈ S : a ≤ s}`.
pub fn enumerate_nuclei_oracle(l: &FiniteLattice, bounds: &Bounds) -> Result<Vec<Nucleus>> {
    Bounds::check("nucleus oracle", l.len(), bounds.oracle_elements)?;
    let rest = l.all().without(l.top());
    let mut out = Vec::new();
    for extra in rest.subsets() {
        let s = extra.with(l.top());
        let meet_closed = s.iter().all(|a| s.iter().all(|b| s.contains(l.meet(a, b))));
        if !meet_closed {
            continue;
        }
        let imp_closed = l
            .elements()
            .all(|a| s.iter().all(|b| s.contains(l.implication(a, b))));
        if !imp_closed {
            continue;
        }
        let values = l
            .elements()
            .map(|a| l.meet_all(s.iter().filter(|&t| l.leq(a, t))))
            .collect();
        out.push(Nucleus::unchecked(values));
    }
    out.sort();
    Ok(out)
}

/// `L_j = {a : ja = a}` with joins `⊔S = j(⋁S)`.
#[derive(Debug, Clone)]
pub struct FixpointFrame {
    pub lattice: FiniteLattice,
    /// `embedding[i]` is the element of `L` that element `i` is.
    pub embedding: Vec<usize>,
    /// Binary joins of the frame equal `j(a ∨ b)`.
    pub joins_agree: bool,
    /// Binary meets of the frame equal those of `L`.
    pub meets_agree: bool,
}

pub fn fixpoint_frame(l: &FiniteLattice, j: &Nucleus) -> Result<FixpointFrame> {
    let embedding: Vec<usize> = j.fixpoints().iter().collect();
    let labels = embedding.iter().map(|&a| l.label(a).to_string()).collect();
    let order = FinitePoset::from_leq_fn(labels, |a, b| l.leq(embedding[a], embedding[b]));
    let lattice = FiniteLattice::from_order(order)?;
    let pairs = || (0..embedding.len()).flat_map(|a| (0..embedding.len()).map(move |b| (a, b)));
    let joins_agree = pairs()
        .all(|(a, b)| embedding[lattice.join(a, b)] == j.apply(l.join(embedding[a], embedding[b])));
    let meets_agree =
        pairs().all(|(a, b)| embedding[lattice.meet(a, b)] == l.meet(embedding[a], embedding[b]));
    Ok(FixpointFrame {
        lattice,
        embedding,
        joins_agree,
        meets_agree,
    })
}

/// `j = ⋀{w_a : ja = a}`
pub fn w_decomposition_check(l: &FiniteLattice, j: &Nucleus) -> bool {
    let ws: Vec<Nucleus> = j.fixpoints().iter().map(|a| make_w(l, a)).collect();
    nuclei_meet(l, &ws) == *j
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BooleanReport {
    /// `N(L)` is a boolean algebra.
    pub direct: bool,
    /// `N(X_L) = RC(X_L)`.
    pub nuclear_sets_are_regular_closed: bool,
    /// `max(D)` is clopen for every clopen downset `D`.
    pub max_of_downsets_clopen: bool,
    /// `L` is a scattered frame.
    pub scattered: bool,
    pub agree: bool,
}

pub fn is_assembly_boolean(l: &FiniteLattice) -> Result<BooleanReport> {
    let asm = Assembly::new(l)?;
    let x = asm.space();
    let direct = asm.lattice().is_boolean();
    let mut nuclear: Vec<Subset> = asm.sets().to_vec();
    nuclear.sort();
    let nuclear_sets_are_regular_closed = nuclear == x.regular_closed();
    let max_of_downsets_clopen = x
        .poset()
        .downsets()
        .into_iter()
        .filter(|&d| x.is_clopen(d))
        .all(|d| x.is_clopen(x.maximal(d)));
    let scattered = is_scattered_frame(l);
    let agree = direct == nuclear_sets_are_regular_closed
        && direct == max_of_downsets_clopen
        && direct == scattered;
    Ok(BooleanReport {
        direct,
        nuclear_sets_are_regular_closed,
        max_of_downsets_clopen,
        scattered,
        agree,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BooleanizationCheck {
    pub holds: bool,
    pub booleanization_size: usize,
    pub regular_closed_size: usize,
}

/// `B(N(L))` is dually isomorphic to `RC(X_L)` through `N ↦ N`.
pub fn assembly_booleanization_check(l: &FiniteLattice) -> Result<BooleanizationCheck> {
    let asm = Assembly::new(l)?;
    let b = booleanization(asm.lattice());
    let rc = asm.space().regular_closed();
    let image: Vec<Subset> = b.embedding.iter().map(|&e| asm.set(e)).collect();
    let mut sorted = image.clone();
    sorted.sort();
    sorted.dedup();
    let n = image.len();
    let reversing =
        (0..n).all(|i| (0..n).all(|k| b.lattice.leq(i, k) == image[k].is_subset(image[i])));
    Ok(BooleanizationCheck {
        holds: b.boolean && sorted == rc && sorted.len() == n && reversing,
        booleanization_size: n,
        regular_closed_size: rc.len(),
    })
}

/// The map `a ↦ u_a` when it is an order-isomorphism `L ≅ N(L)`.
pub fn assembly_isomorphism(l: &FiniteLattice) -> Result<Option<Vec<usize>>> {
    let asm = Assembly::new(l)?;
    let map = u_embedding(&asm);
    Ok(is_isomorphism(l.order(), asm.lattice().order(), &map).then_some(map))
}

/// `a ↦ u_a` as a map into the elements of `N(L)`.
pub fn u_embedding(asm: &Assembly) -> Vec<usize> {
    let l = asm.base();
    l.elements()
        .map(|a| asm.element_of(&make_u(l, a)).expect("u_a is a nucleus"))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EmbeddingCheck {
    pub injective: bool,
    pub preserves_meets: bool,
    pub preserves_joins: bool,
    pub preserves_bottom: bool,
    pub preserves_top: bool,
    /// `u_a` and `v_a` are complements in `N(L)` for every `a`.
    pub u_v_complemented: bool,
}

impl EmbeddingCheck {
    pub fn holds(&self) -> bool {
        self.injective
            && self.preserves_meets
            && self.preserves_joins
            && self.preserves_bottom
            && self.preserves_top
            && self.u_v_complemented
    }
}

pub fn embedding_check(asm: &Assembly) -> EmbeddingCheck {
    let l = asm.base();
    let n = asm.lattice();
    let u = u_embedding(asm);
    let mut image: Vec<usize> = u.clone();
    image.sort();
    image.dedup();
    let pairs = || l.elements().flat_map(|a| l.elements().map(move |b| (a, b)));
    let u_v_complemented = l.elements().all(|a| {
        let v = asm.element_of(&make_v(l, a)).expect("v_a is a nucleus");
        n.meet(u[a], v) == n.bottom() && n.join(u[a], v) == n.top()
    });
    EmbeddingCheck {
        injective: image.len() == l.len(),
        preserves_meets: pairs().all(|(a, b)| u[l.meet(a, b)] == n.meet(u[a], u[b])),
        preserves_joins: pairs().all(|(a, b)| u[l.join(a, b)] == n.join(u[a], u[b])),
        preserves_bottom: u[l.bottom()] == n.bottom(),
        preserves_top: u[l.top()] == n.top(),
        u_v_complemented,
    }
}

/// `L ↪ N(L) ↪ N²(L) ↪ ..`, with the check of each embedding `a ↦ u_a`.
#[derive(Debug, Clone)]
pub struct Tower {
    pub stages: Vec<FiniteLattice>,
    pub embeddings: Vec<EmbeddingCheck>,
}

impl Tower {
    pub fn sizes(&self) -> Vec<usize> {
        self.stages.iter().map(FiniteLattice::len).collect()
    }
}

pub fn tower(l: &FiniteLattice, k: usize, bounds: &Bounds) -> Result<Tower> {
    Bounds::check("tower depth", k, bounds.tower_depth)?;
    if k >= 2 {
        let points = Duality::new(l).points();
        Bounds::check("tower base points", points, bounds.tower_points)?;
    }
    let mut stages = vec![l.clone()];
    let mut embeddings = Vec::new();
    for _ in 0..k {
        let asm = Assembly::new(stages.last().expect("nonempty"))?;
        embeddings.push(embedding_check(&asm));
        stages.push(asm.lattice().clone());
    }
    Ok(Tower { stages, embeddings })
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
    fn validate_examples() {
        let l = l3();
        assert!(validate_nucleus(&l, Nucleus::identity(&l).values()).is_valid());
        assert!(validate_nucleus(&l, Nucleus::top(&l).values()).is_valid());
        let r = validate_nucleus(&l, &[2, 1, 2]);
        assert!(r.inflationary && r.idempotent && !r.preserves_meets);
        assert_eq!(r.witness.as_deref(), Some("j(0∧m) = 1 but j0∧jm = m"));
        assert!(Nucleus::new(&l, vec![2, 1, 2]).is_err());
        assert!(!validate_nucleus(&l, &[0, 1]).total);
    }

    #[test]
    fn uvw_examples() {
        let l = l3();
        assert_eq!(make_w(&l, 0).values(), [0, 2, 2]);
        assert_eq!(make_u(&l, 2), Nucleus::top(&l));
        assert_eq!(make_v(&l, 2), Nucleus::identity(&l));
    }

    #[test]
    fn nuclear_set_examples() {
        let l = l3();
        let d = Duality::new(&l);
        // points: x1 = 0, xm = 1
        assert_eq!(to_nuclear_set(&d, &make_w(&l, 0)), Subset::singleton(1));
        assert_eq!(to_nuclear_set(&d, &make_u(&l, 1)), Subset::singleton(0));
        assert_eq!(to_nuclear_set(&d, &Nucleus::identity(&l)), d.space().all());
        for s in Subset::all(2) {
            assert_eq!(to_nuclear_set(&d, &from_nuclear_set(&d, s)), s);
        }
    }

    #[test]
    fn is_nuclear_examples() {
        let x = Duality::new(&l3()).space().clone();
        let b = Bounds::default();
        for f in [Subset::singleton(0), Subset::EMPTY, x.all()] {
            let c = is_nuclear(&x, f, &b, false).unwrap();
            assert!(c.nuclear);
            assert_eq!(c.method, NuclearMethod::Literal);
        }
        let big = EsakiaSpace::from_poset(FinitePoset::antichain(11));
        assert!(is_nuclear(&big, Subset::singleton(3), &b, false).is_err());
        let c = is_nuclear(&big, Subset::singleton(3), &b, true).unwrap();
        assert_eq!(c.method, NuclearMethod::DiscreteShortcut);
    }

    #[test]
    fn assembly_examples() {
        let a = Assembly::new(&l3()).unwrap();
        assert_eq!(a.len(), 4);
        assert!(a.order_agrees());
        assert_eq!(a.set(a.lattice().bottom()), a.space().all());
        assert_eq!(Assembly::new(&FiniteLattice::chain(2)).unwrap().len(), 2);
        let map = assembly_isomorphism(&l4()).unwrap();
        assert!(map.is_some());
    }

    #[test]
    fn meet_join_examples() {
        let l = l3();
        let d = Duality::new(&l);
        let (um, w0) = (make_u(&l, 1), make_w(&l, 0));
        assert_eq!(nuclei_join(&d, &[um.clone(), w0.clone()]), Nucleus::top(&l));
        assert_eq!(
            nuclei_join_by_iteration(&l, &[um.clone(), w0.clone()]),
            Nucleus::top(&l)
        );
        assert_eq!(nuclei_join(&d, &[um.clone(), Nucleus::identity(&l)]), um);
        assert_eq!(nuclei_meet(&l, &[um, w0]), Nucleus::identity(&l));
        let x = d.space();
        let fam = [Subset::singleton(0), x.all()];
        assert_eq!(
            nuclear_meet_literal(x, &fam).unwrap(),
            nuclear_meet(x, &fam)
        );
    }

    #[test]
    fn oracle_examples() {
        let b = Bounds::default();
        let l = l3();
        let all = enumerate_nuclei_oracle(&l, &b).unwrap();
        assert_eq!(all.len(), 4);
        for j in [
            Nucleus::identity(&l),
            Nucleus::top(&l),
            make_u(&l, 1),
            make_w(&l, 0),
        ] {
            assert!(all.contains(&j));
        }
        assert_eq!(
            enumerate_nuclei_oracle(&FiniteLattice::chain(2), &b)
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            enumerate_nuclei_oracle(&FiniteLattice::chain(4), &b)
                .unwrap()
                .len(),
            8
        );
        assert!(enumerate_nuclei_oracle(&FiniteLattice::chain(17), &b).is_err());
    }

    #[test]
    fn fixpoint_examples() {
        let l = l3();
        let f = fixpoint_frame(&l, &make_w(&l, 0)).unwrap();
        assert_eq!(f.embedding, [0, 2]);
        assert!(f.joins_agree && f.meets_agree);
        assert_eq!(
            fixpoint_frame(&l, &Nucleus::identity(&l))
                .unwrap()
                .lattice
                .len(),
            3
        );
        assert_eq!(
            fixpoint_frame(&l, &Nucleus::top(&l)).unwrap().embedding,
            [2]
        );
    }

    #[test]
    fn w_decomposition_examples() {
        let l = l3();
        assert!(w_decomposition_check(&l, &make_u(&l, 1)));
        assert!(w_decomposition_check(&l, &Nucleus::identity(&l)));
        assert!(w_decomposition_check(&l, &Nucleus::top(&l)));
    }

    #[test]
    fn boolean_examples() {
        let r = is_assembly_boolean(&l3()).unwrap();
        assert!(
            r.direct
                && r.nuclear_sets_are_regular_closed
                && r.max_of_downsets_clopen
                && r.scattered
        );
        assert!(r.agree);
        assert!(is_assembly_boolean(&FiniteLattice::chain(1)).unwrap().agree);
        let c = assembly_booleanization_check(&l3()).unwrap();
        assert!(c.holds);
        assert_eq!((c.booleanization_size, c.regular_closed_size), (4, 4));
        assert!(assembly_booleanization_check(&l4()).unwrap().holds);
        assert!(
            assembly_booleanization_check(&FiniteLattice::chain(1))
                .unwrap()
                .holds
        );
    }

    #[test]
    fn tower_examples() {
        let b = Bounds::default();
        let t = tower(&l3(), 2, &b).unwrap();
        assert_eq!(t.sizes(), [3, 4, 4]);
        assert!(t.embeddings.iter().all(EmbeddingCheck::holds));
        assert_eq!(tower(&l3(), 0, &b).unwrap().stages, [l3()]);
        assert!(tower(&l3(), 3, &b).is_err());
    }
}

//! Nuclear points `Y_L`, the topology `τ`, the map `γ`, and the spatiality
//! criteria for `L` and `N(L)`.
//!
//! On finite frames every criterion holds, so each check computes both sides
//! of an equivalence through separate code and reports whether they agree.

use serde::Serialize;

use crate::assembly::{is_nuclear, nuclear_meet, Assembly};
use crate::bounds::Bounds;
use crate::duality::{Duality, EsakiaSpace};
use crate::error::Result;
use crate::heyting::{
    completely_prime_filters, essential_primes, is_spatial, join_irreducibles, min_primes,
    points_space,
};
use crate::lattice::FiniteLattice;
use crate::poset::find_isomorphism;
use crate::sets::SetLattice;
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointSet {
    /// `{y : {y} ∈ N(X_L)}`
    pub points: Subset,
    /// Points whose filter is completely prime.
    pub completely_prime: Subset,
    /// `{U ∩ Y_L : U a clopen upset}`
    pub tau_opens: Vec<Subset>,
    /// `cl_τ{y} = ↓y ∩ Y_L` for every `y ∈ Y_L`.
    pub closure_matches_order: bool,
    /// The order on `Y_L` matches the specialization order of `pt(L)`.
    pub matches_points_of_lattice: bool,
}

impl PointSet {
    pub fn characterizations_agree(&self) -> bool {
        self.points == self.completely_prime
    }
}

fn closure_in(universe: Subset, opens: &[Subset], a: Subset) -> Subset {
    let outside = opens
        .iter()
        .filter(|v| v.is_disjoint(a))
        .fold(Subset::EMPTY, |acc, &v| acc.union(v));
    universe.difference(outside)
}

pub fn nuclear_points(l: &FiniteLattice) -> Result<PointSet> {
    nuclear_points_of(&Duality::new(l))
}

pub fn nuclear_points_of(d: &Duality) -> Result<PointSet> {
    let x = d.space();
    let bounds = Bounds::default();
    let mut points = Subset::EMPTY;
    for y in 0..x.len() {
        if is_nuclear(x, Subset::singleton(y), &bounds, true)?.nuclear {
            points.insert(y);
        }
    }
    let filters = x.filters().expect("dual space keeps its filters");
    let completely_prime: Subset = (0..x.len())
        .filter(|&y| filters[y].completely_prime)
        .collect();
    let mut tau_opens: Vec<Subset> = x
        .poset()
        .upsets()
        .into_iter()
        .filter(|&u| x.is_clopen(u))
        .map(|u| u.intersection(points))
        .collect();
    tau_opens.sort();
    tau_opens.dedup();
    let closure_matches_order = points.iter().all(|y| {
        closure_in(points, &tau_opens, Subset::singleton(y))
            == x.poset().down_of(y).intersection(points)
    });

    let l = d.lattice();
    let pt = points_space(l);
    let cp: Vec<Subset> = completely_prime_filters(l)
        .into_iter()
        .map(|f| f.members)
        .collect();
    let map: Vec<Option<usize>> = points
        .iter()
        .map(|y| cp.iter().position(|&f| f == filters[y].members))
        .collect();
    let ys: Vec<usize> = points.iter().collect();
    let matches_points_of_lattice = map.iter().all(Option::is_some)
        && ys.len() == pt.len()
        && (0..ys.len()).all(|i| {
            (0..ys.len()).all(|k| {
                let (mi, mk) = (map[i].unwrap(), map[k].unwrap());
                x.poset().leq(ys[i], ys[k]) == pt.specializes(mi, mk)
            })
        });
    Ok(PointSet {
        points,
        completely_prime,
        tau_opens,
        closure_matches_order,
        matches_points_of_lattice,
    })
}

/// `γ(N) = N ∩ Y_L`
pub fn gamma(points: &PointSet, n: Subset) -> Subset {
    n.intersection(points.points)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GammaCheck {
    pub preserves_finite_unions: bool,
    pub preserves_meets: bool,
    /// Every `π`-closed subset of `Y_L` is an image.
    pub onto_pi_closed: bool,
    /// Every `τ`-closed subset of `Y_L` is an image.
    pub hits_tau_closed: bool,
    pub injective: bool,
}

impl GammaCheck {
    pub fn is_onto_coframe_homomorphism(&self) -> bool {
        self.preserves_finite_unions && self.preserves_meets && self.onto_pi_closed
    }
}

pub fn gamma_check(x: &EsakiaSpace, points: &PointSet, nuclear: &[Subset]) -> GammaCheck {
    let y = points.points;
    let g = |n: Subset| gamma(points, n);
    let pairs = || {
        nuclear
            .iter()
            .flat_map(|&a| nuclear.iter().map(move |&b| (a, b)))
    };
    let preserves_finite_unions =
        g(Subset::EMPTY).is_empty() && pairs().all(|(a, b)| g(a.union(b)) == g(a).union(g(b)));
    let preserves_meets = g(nuclear_meet(x, &[])) == y
        && pairs().all(|(a, b)| g(nuclear_meet(x, &[a, b])) == g(a).intersection(g(b)));
    let mut image: Vec<Subset> = nuclear.iter().map(|&n| g(n)).collect();
    image.sort();
    image.dedup();
    let hit = |f: &Subset| image.binary_search(f).is_ok();
    let pi_closed: Vec<Subset> = Subset::all(x.len())
        .filter(|&d| x.closure(d) == d)
        .map(|d| d.intersection(y))
        .collect();
    GammaCheck {
        preserves_finite_unions,
        preserves_meets,
        onto_pi_closed: pi_closed.iter().all(hit),
        hits_tau_closed: points
            .tau_opens
            .iter()
            .map(|&v| y.difference(v))
            .all(|f| hit(&f)),
        injective: image.len() == nuclear.len(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpatialReport {
    /// `L` is spatial, by separating points.
    pub lattice_spatial: bool,
    /// (a) `Y_L` is dense in `(X_L, π)`.
    pub points_dense: bool,
    /// `N(L)` is spatial, by separating points.
    pub assembly_spatial: bool,
    /// (b) every nonempty nuclear set meets `Y_L`.
    pub nonempty_nuclear_sets_meet_points: bool,
    /// (c) `γ` is injective.
    pub gamma_injective: bool,
    /// (d) `N(L) ≅ O_π(Y_L)`.
    pub isomorphic_to_opens_of_points: bool,
    pub gamma: GammaCheck,
    pub agree: bool,
}

pub fn assembly_spatial_report(l: &FiniteLattice) -> Result<SpatialReport> {
    let asm = Assembly::new(l)?;
    let x = asm.space();
    let ps = nuclear_points_of(asm.duality())?;
    let y = ps.points;
    let lattice_spatial = is_spatial(l).spatial;
    let points_dense = x.closure(y) == x.all();
    let assembly_spatial = is_spatial(asm.lattice()).spatial;
    let nonempty_nuclear_sets_meet_points =
        asm.sets().iter().all(|n| n.is_empty() || !n.is_disjoint(y));
    let gamma = gamma_check(x, &ps, asm.sets());
    let mut pi_opens: Vec<Subset> = Subset::all(x.len())
        .filter(|&u| x.is_open(u))
        .map(|u| u.intersection(y))
        .collect();
    pi_opens.sort();
    pi_opens.dedup();
    let ylabels: Vec<String> = x.labels().to_vec();
    let opens_frame = SetLattice::new(&ylabels, pi_opens, false)?;
    let isomorphic_to_opens_of_points =
        find_isomorphism(asm.lattice().order(), opens_frame.lattice().order()).is_some();
    let agree = lattice_spatial == points_dense
        && assembly_spatial == nonempty_nuclear_sets_meet_points
        && assembly_spatial == gamma.injective
        && assembly_spatial == isomorphic_to_opens_of_points;
    Ok(SpatialReport {
        lattice_spatial,
        points_dense,
        assembly_spatial,
        nonempty_nuclear_sets_meet_points,
        gamma_injective: gamma.injective,
        isomorphic_to_opens_of_points,
        gamma,
        agree,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinPrimes {
    /// Join-prime elements of `N(X_L)` under inclusion.
    pub join_primes: Vec<Subset>,
    /// They are exactly the singletons of `Y_L`.
    pub are_point_singletons: bool,
    pub points_of_lattice: usize,
    pub points_of_assembly: usize,
}

pub fn join_primes_of_assembly(l: &FiniteLattice) -> Result<JoinPrimes> {
    let asm = Assembly::new(l)?;
    let ps = nuclear_points_of(asm.duality())?;
    let inclusion = SetLattice::new(asm.space().labels(), asm.sets().to_vec(), false)?;
    let join_primes: Vec<Subset> = join_irreducibles(inclusion.lattice())
        .iter()
        .map(|e| inclusion.set(e))
        .collect();
    let singletons: Vec<Subset> = ps.points.iter().map(Subset::singleton).collect();
    let mut sorted = join_primes.clone();
    sorted.sort();
    let mut expected = singletons;
    expected.sort();
    Ok(JoinPrimes {
        are_point_singletons: sorted == expected,
        join_primes,
        points_of_lattice: completely_prime_filters(l).len(),
        points_of_assembly: completely_prime_filters(asm.lattice()).len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DualPrimes {
    /// Primes `p` with `φ(p) = X ∖ ↓y`, `y ∈ max[(X ∖ φ(a)) ∩ Y_L]`.
    pub minimal: Subset,
    /// `a` is the meet of its minimal primes, tested in `X_L`.
    pub meet_recovers: bool,
    /// Primes `p` with `φ(p) = X ∖ ↓y`, `y ∈ max(X ∖ φ(a)) ∩ Y_L`; empty
    /// unless `meet_recovers`.
    pub essential: Subset,
}

/// Minimal and essential primes of `a` read off the dual space.
pub fn essential_primes_dual(d: &Duality, points: &PointSet, a: usize) -> DualPrimes {
    let x = d.space();
    let y = points.points;
    let outside = d.phi(a).complement(x.len());
    let prime_of = |p: usize| {
        d.element_of(x.poset().down_of(p).complement(x.len()))
            .expect("complements of principal downsets are upsets")
    };
    let minimal: Subset = x
        .maximal(outside.intersection(y))
        .iter()
        .map(prime_of)
        .collect();
    let spread = minimal.iter().fold(Subset::EMPTY, |acc, p| {
        acc.union(d.phi(p).complement(x.len()))
    });
    let meet_recovers = outside == x.down_closure(x.closure(spread));
    let essential = if meet_recovers {
        x.maximal(outside)
            .intersection(y)
            .iter()
            .map(prime_of)
            .collect()
    } else {
        Subset::EMPTY
    };
    DualPrimes {
        minimal,
        meet_recovers,
        essential,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrimesAgreement {
    /// Lattice-level and dual `Min(a)` agree for every `a`.
    pub minimal_agree: bool,
    /// Lattice-level and dual essential primes agree for every `a`.
    pub essential_agree: bool,
    /// `a = ⋀Min(a)` for every `a`.
    pub every_element_recovered: bool,
    /// Every `a ≠ 1` has an essential prime.
    pub every_element_has_essential: bool,
    /// `max(D) ∩ Y_L = max(D ∩ Y_L)` for every clopen downset `D`.
    pub max_restriction_agrees: bool,
}

pub fn primes_agreement(l: &FiniteLattice) -> Result<PrimesAgreement> {
    let d = Duality::new(l);
    let ps = nuclear_points_of(&d)?;
    let x = d.space();
    let mut out = PrimesAgreement {
        minimal_agree: true,
        essential_agree: true,
        every_element_recovered: true,
        every_element_has_essential: true,
        max_restriction_agrees: true,
    };
    for a in l.elements() {
        let lat = min_primes(l, a);
        let dual = essential_primes_dual(&d, &ps, a);
        out.minimal_agree &= lat.minimal == dual.minimal;
        out.essential_agree &=
            essential_primes(l, a) == dual.essential && lat.meet_recovers == dual.meet_recovers;
        out.every_element_recovered &= lat.meet_recovers;
        out.every_element_has_essential &= a == l.top() || !essential_primes(l, a).is_empty();
    }
    out.max_restriction_agrees =
        x.poset().downsets().into_iter().all(|dn| {
            x.maximal(dn).intersection(ps.points) == x.maximal(dn.intersection(ps.points))
        });
    Ok(out)
}

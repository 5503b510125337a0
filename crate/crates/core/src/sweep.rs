//! Exhaustive sweeps: run a suite of invariants over every poset or every
//! labeled topology of a given size.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::assembly::{
    assembly_booleanization_check, enumerate_nuclei_oracle, from_nuclear_set, is_assembly_boolean,
    make_u, make_v, make_w, nuclei_join, nuclei_join_by_iteration, to_nuclear_set, tower,
    w_decomposition_check, Assembly,
};
use crate::bounds::Bounds;
use crate::duality::{implication_cross_check, poset_round_trip, unit_counit_check, Duality};
use crate::error::{Error, Result};
use crate::heyting::{
    completely_prime_filters, is_scattered_frame, is_spatial, meet_primes, min_primes,
    prime_filters,
};
use crate::io::{poset_json, space_json};
use crate::lattice::FiniteLattice;
use crate::poset::{enumerate_posets, FinitePoset};
use crate::sets::birkhoff_lattice;
use crate::simmons::{compactification_check, simmons_isbell_report};
use crate::space::{
    enumerate_topologies, front_topology, is_sober, scatter_report, soberification, t0_reflection,
    FiniteSpace,
};
use crate::spatiality::{
    assembly_spatial_report, join_primes_of_assembly, nuclear_points, primes_agreement,
};
use crate::subset::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepKind {
    Posets,
    Topologies,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Duality,
    Heyting,
    Nuclei,
    Boolean,
    Spatial,
    Tower,
    Simmons,
    Spaces,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Duality,
        Suite::Heyting,
        Suite::Nuclei,
        Suite::Boolean,
        Suite::Spatial,
        Suite::Tower,
        Suite::Simmons,
        Suite::Spaces,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Duality => "duality",
            Suite::Heyting => "heyting",
            Suite::Nuclei => "nuclei",
            Suite::Boolean => "boolean",
            Suite::Spatial => "spatial",
            Suite::Tower => "tower",
            Suite::Simmons => "simmons",
            Suite::Spaces => "spaces",
        }
    }

    pub fn kind(self) -> SweepKind {
        match self {
            Suite::Simmons | Suite::Spaces => SweepKind::Topologies,
            _ => SweepKind::Posets,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown suite `{s}`")))
    }
}

impl FromStr for SweepKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "posets" => Ok(SweepKind::Posets),
            "topologies" => Ok(SweepKind::Topologies),
            _ => Err(Error::Malformed(format!("unknown sweep kind `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub instance: Value,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub kind: SweepKind,
    pub n: usize,
    pub suite: Suite,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub first_counterexample: Option<Counterexample>,
}

impl SweepSummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

type Verdict = Result<Option<String>>;

fn require(ok: bool, reason: &str) -> Option<String> {
    (!ok).then(|| reason.to_string())
}

fn first(checks: impl IntoIterator<Item = (bool, &'static str)>) -> Option<String> {
    checks.into_iter().find_map(|(ok, why)| require(ok, why))
}

fn duality_suite(p: &FinitePoset) -> Verdict {
    let up = birkhoff_lattice(p)?;
    let report = unit_counit_check(up.lattice())?;
    let d = Duality::new(up.lattice());
    let algebra = crate::duality::upset_algebra(d.space())?;
    Ok(first([
        (report.unit.holds(), "φ is not a Heyting isomorphism"),
        (report.counit.holds(), "ξ is not an order isomorphism"),
        (
            poset_round_trip(p)?.is_some(),
            "X_Up(P) is not isomorphic to P",
        ),
        (
            implication_cross_check(d.space(), &algebra).is_none(),
            "upset implication formula disagrees",
        ),
    ]))
}

fn heyting_suite(l: &FiniteLattice) -> Verdict {
    let primes: Vec<Subset> = prime_filters(l).iter().map(|f| f.members).collect();
    let complete: Vec<Subset> = completely_prime_filters(l)
        .iter()
        .map(|f| f.members)
        .collect();
    let residuation = l.elements().all(|a| {
        l.elements().all(|b| {
            l.elements()
                .all(|x| l.leq(x, l.implication(a, b)) == l.leq(l.meet(a, x), b))
        })
    });
    let mut from_primes: Vec<Subset> = meet_primes(l)
        .iter()
        .map(|p| l.down_of(p).complement(l.len()))
        .collect();
    from_primes.sort();
    let dense_meet_closed = l.elements().all(|a| {
        let dense = crate::heyting::dense_above(l, a);
        dense
            .iter()
            .all(|d| dense.iter().all(|e| dense.contains(l.meet(d, e))))
    });
    Ok(first([
        (
            primes == complete,
            "prime and completely prime filters differ",
        ),
        (residuation, "residuation fails"),
        (
            from_primes == primes,
            "meet-primes do not match prime filters",
        ),
        (is_spatial(l).spatial, "lattice is not spatial"),
        (is_scattered_frame(l), "lattice is not scattered"),
        (
            dense_meet_closed,
            "dense elements are not closed under meets",
        ),
        (
            l.elements().all(|a| min_primes(l, a).meet_recovers),
            "some a differs from ⋀Min(a)",
        ),
    ]))
}

fn nuclei_suite(l: &FiniteLattice, bounds: &Bounds) -> Verdict {
    let asm = Assembly::new(l)?;
    let d = asm.duality();
    let x = d.space();
    let oracle = enumerate_nuclei_oracle(l, bounds)?;
    let mut sets: Vec<Subset> = oracle.iter().map(|j| to_nuclear_set(d, j)).collect();
    sets.sort();
    sets.dedup();
    let bijective =
        oracle.len() == 1 << x.len() && sets.len() == oracle.len() && sets.len() == asm.len();
    let reversing = oracle.iter().all(|j| {
        oracle
            .iter()
            .all(|k| j.leq(l, k) == to_nuclear_set(d, k).is_subset(to_nuclear_set(d, j)))
    });
    let round_trip = oracle
        .iter()
        .all(|j| from_nuclear_set(d, to_nuclear_set(d, j)) == *j)
        && Subset::all(x.len()).all(|s| to_nuclear_set(d, &from_nuclear_set(d, s)) == s);
    let formulas = l.elements().all(|a| {
        let outside = d.phi(a).complement(x.len());
        to_nuclear_set(d, &make_u(l, a)) == outside
            && to_nuclear_set(d, &make_v(l, a)) == d.phi(a)
            && to_nuclear_set(d, &make_w(l, a)) == x.maximal(outside)
    });
    let decomposition = oracle.iter().all(|j| w_decomposition_check(l, j));
    let joins = oracle.iter().all(|j| {
        oracle.iter().all(|k| {
            let pair = [j.clone(), k.clone()];
            nuclei_join(d, &pair) == nuclei_join_by_iteration(l, &pair)
        })
    });
    Ok(first([
        (bijective, "nucleus count or N_j bijection fails"),
        (
            asm.order_agrees(),
            "pointwise order differs from reverse inclusion",
        ),
        (reversing, "j ↦ N_j is not order-reversing"),
        (round_trip, "nuclear set round trip fails"),
        (formulas, "N_u, N_v or N_w formula fails"),
        (decomposition, "w-decomposition fails"),
        (joins, "dual join disagrees with iterated join"),
    ]))
}

fn boolean_suite(l: &FiniteLattice) -> Verdict {
    let r = is_assembly_boolean(l)?;
    Ok(first([
        (r.agree, "booleanness criteria disagree"),
        (r.direct && r.scattered, "N(L) is not boolean"),
        (
            assembly_booleanization_check(l)?.holds,
            "B(N(L)) is not dual to RC(X_L)",
        ),
    ]))
}

fn spatial_suite(l: &FiniteLattice) -> Verdict {
    let ps = nuclear_points(l)?;
    let r = assembly_spatial_report(l)?;
    let jp = join_primes_of_assembly(l)?;
    let pa = primes_agreement(l)?;
    let x_size = Duality::new(l).points();
    Ok(first([
        (
            ps.characterizations_agree(),
            "nuclear and completely prime points differ",
        ),
        (ps.points == Subset::full(x_size), "Y_L differs from X_L"),
        (
            ps.closure_matches_order && ps.matches_points_of_lattice,
            "τ specialization fails",
        ),
        (
            r.agree && r.points_dense && r.nonempty_nuclear_sets_meet_points,
            "spatiality criteria disagree",
        ),
        (
            r.gamma.is_onto_coframe_homomorphism() && r.gamma.injective,
            "γ is not an isomorphism",
        ),
        (
            jp.are_point_singletons,
            "join-primes are not the point singletons",
        ),
        (
            jp.points_of_lattice == jp.points_of_assembly,
            "|pt(L)| differs from |pt(N(L))|",
        ),
        (
            pa.minimal_agree && pa.essential_agree,
            "dual primes disagree with lattice primes",
        ),
        (
            pa.every_element_recovered && pa.every_element_has_essential,
            "essential prime criterion fails",
        ),
        (
            pa.max_restriction_agrees,
            "max(D) ∩ Y differs from max(D ∩ Y)",
        ),
    ]))
}

fn tower_suite(l: &FiniteLattice, bounds: &Bounds) -> Verdict {
    let t = tower(l, bounds.tower_depth.min(2), bounds)?;
    Ok(require(
        t.embeddings.iter().all(|e| e.holds()),
        "a ↦ u_a is not a frame embedding",
    ))
}

fn simmons_suite(s: &FiniteSpace) -> Verdict {
    let r = simmons_isbell_report(s)?;
    Ok(first([
        (r.consistent(), "Simmons/Isbell equivalences disagree"),
        (r.sigma.injective, "σ is not injective"),
        (
            compactification_check(s)?.holds(),
            "ε′ is not a compactification",
        ),
    ]))
}

fn spaces_suite(s: &FiniteSpace) -> Verdict {
    let r = scatter_report(s);
    let t0 = s.is_t0();
    let sober = is_sober(s);
    Ok(first([
        (r.consistent(), "scatteredness consistency fails"),
        (
            soberification(s).check(s).holds(),
            "soberification differs from the T0 reflection",
        ),
        (
            t0_reflection(s).check().holds(),
            "ρ is not an open closed quotient",
        ),
        (sober == t0, "sobriety differs from T0"),
        (
            !t0 || front_topology(s).is_discrete(),
            "front topology of a T0 space is not discrete",
        ),
        (
            !(r.weakly_scattered && t0) || sober,
            "weakly scattered T0 space is not sober",
        ),
    ]))
}

fn run<T: Sync>(
    items: &[T],
    parallel: bool,
    check: impl Fn(&T) -> Verdict + Sync,
    describe: impl Fn(&T) -> Value,
) -> Result<(usize, Option<Counterexample>)> {
    let verdicts: Vec<Verdict> = if parallel {
        items.par_iter().map(&check).collect()
    } else {
        items.iter().map(&check).collect()
    };
    let mut failed = 0;
    let mut first = None;
    for (item, v) in items.iter().zip(verdicts) {
        if let Some(reason) = v? {
            failed += 1;
            if first.is_none() {
                first = Some(Counterexample {
                    instance: describe(item),
                    reason,
                });
            }
        }
    }
    Ok((failed, first))
}

/// Runs `suite` on every instance of size `n`. Poset suites act on `Up(P)`.
pub fn sweep(n: usize, suite: Suite, bounds: &Bounds, parallel: bool) -> Result<SweepSummary> {
    let kind = suite.kind();
    let (instances, (failed, first)) = match kind {
        SweepKind::Posets => {
            let posets = enumerate_posets(n, bounds)?;
            let check = |p: &FinitePoset| -> Verdict {
                if suite == Suite::Duality {
                    return duality_suite(p);
                }
                let l = birkhoff_lattice(p)?.into_lattice();
                match suite {
                    Suite::Heyting => heyting_suite(&l),
                    Suite::Nuclei => nuclei_suite(&l, bounds),
                    Suite::Boolean => boolean_suite(&l),
                    Suite::Spatial => spatial_suite(&l),
                    Suite::Tower => tower_suite(&l, bounds),
                    _ => unreachable!("topology suites are dispatched below"),
                }
            };
            (posets.len(), run(&posets, parallel, check, poset_json)?)
        }
        SweepKind::Topologies => {
            let spaces = enumerate_topologies(n, bounds)?;
            let check = |s: &FiniteSpace| match suite {
                Suite::Simmons => simmons_suite(s),
                _ => spaces_suite(s),
            };
            (spaces.len(), run(&spaces, parallel, check, space_json)?)
        }
    };
    Ok(SweepSummary {
        kind,
        n,
        suite,
        instances,
        passed: instances - failed,
        failed,
        first_counterexample: first,
    })
}

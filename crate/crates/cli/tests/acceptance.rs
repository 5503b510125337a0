//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use framekit::assembly::{
    assembly_booleanization_check, assembly_isomorphism, enumerate_nuclei_oracle,
    is_assembly_boolean, make_u, make_v, make_w, to_nuclear_set, tower, w_decomposition_check,
    Assembly,
};
use framekit::bounds::Bounds;
use framekit::duality::{
    implication_cross_check, poset_round_trip, unit_counit_check, upset_algebra, Duality,
};
use framekit::lattice::FiniteLattice;
use framekit::poset::{enumerate_posets, is_isomorphism, FinitePoset};
use framekit::sets::birkhoff_lattice;
use framekit::simmons::{sigma_check, simmons_isbell_report, SpaceAssembly};
use framekit::space::{
    enumerate_topologies, front_topology, is_sober, scatter_report, soberification, t0_reflection,
};
use framekit::spatiality::{
    assembly_spatial_report, join_primes_of_assembly, nuclear_points, primes_agreement,
};
use framekit::subset::Subset;

type Outcome = Result<String, String>;

fn posets(sizes: std::ops::RangeInclusive<usize>) -> Vec<FinitePoset> {
    let b = Bounds::default();
    sizes
        .flat_map(|n| enumerate_posets(n, &b).unwrap())
        .collect()
}

fn up(p: &FinitePoset) -> FiniteLattice {
    birkhoff_lattice(p).unwrap().into_lattice()
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn duality_round_trip() -> Outcome {
    let ps = posets(1..=5);
    ensure(ps.len() == 87, || {
        format!("{} iso-classes, expected 87", ps.len())
    })?;
    for p in &ps {
        let l = up(p);
        ensure(poset_round_trip(p).unwrap().is_some(), || {
            format!("X_Up(P) ≇ P for {:?}", p.labels())
        })?;
        let r = unit_counit_check(&l).unwrap();
        ensure(r.holds(), || format!("unit/counit fails: {r:?}"))?;
        let d = Duality::new(&l);
        let algebra = upset_algebra(d.space()).unwrap();
        ensure(
            implication_cross_check(d.space(), &algebra).is_none(),
            || "→ identity fails".into(),
        )?;
        for a in l.elements() {
            for b in l.elements() {
                ensure(
                    d.phi(l.implication(a, b))
                        == d.space()
                            .all()
                            .difference(d.space().down_closure(d.phi(a).difference(d.phi(b)))),
                    || "φ(a→b) ≠ X∖↓(φa∖φb)".into(),
                )?;
            }
        }
    }
    Ok(format!("{} posets", ps.len()))
}

fn nucleus_duality() -> Outcome {
    let b = Bounds::default();
    let ps = posets(1..=4);
    ensure(ps.len() == 24, || {
        format!("{} iso-classes, expected 24", ps.len())
    })?;
    for p in &ps {
        let l = up(p);
        let d = Duality::new(&l);
        let x = d.space();
        let oracle = enumerate_nuclei_oracle(&l, &b).unwrap();
        ensure(oracle.len() == 1 << p.len(), || {
            format!("{} nuclei for |P| = {}", oracle.len(), p.len())
        })?;
        let sets: Vec<Subset> = oracle.iter().map(|j| to_nuclear_set(&d, j)).collect();
        let mut distinct = sets.clone();
        distinct.sort();
        distinct.dedup();
        ensure(
            distinct.len() == sets.len() && distinct == Subset::all(x.len()).collect::<Vec<_>>(),
            || "j ↦ N_j is not a bijection onto the nuclear sets".into(),
        )?;
        for (i, j) in oracle.iter().enumerate() {
            for (k, jk) in oracle.iter().enumerate() {
                ensure(j.leq(&l, jk) == sets[k].is_subset(sets[i]), || {
                    "j ↦ N_j is not order-reversing".into()
                })?;
            }
        }
        for a in l.elements() {
            let outside = x.all().difference(d.phi(a));
            ensure(to_nuclear_set(&d, &make_u(&l, a)) == outside, || {
                "N_u ≠ X∖φ(a)".into()
            })?;
            ensure(to_nuclear_set(&d, &make_v(&l, a)) == d.phi(a), || {
                "N_v ≠ φ(a)".into()
            })?;
            ensure(
                to_nuclear_set(&d, &make_w(&l, a)) == x.maximal(outside),
                || "N_w ≠ max(X∖φ(a))".into(),
            )?;
        }
    }
    Ok(format!("{} posets", ps.len()))
}

fn w_decomposition() -> Outcome {
    let b = Bounds::default();
    let mut count = 0;
    for p in posets(1..=4) {
        let l = up(&p);
        for j in enumerate_nuclei_oracle(&l, &b).unwrap() {
            ensure(w_decomposition_check(&l, &j), || {
                format!("fails for {:?}", j.values())
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} nuclei"))
}

fn beazer_macnab() -> Outcome {
    for n in 0..=4 {
        let l = up(&FinitePoset::antichain(n));
        ensure(l.is_boolean() && l.len() == 1 << n, || {
            format!("Up(antichain {n}) is not 2^{n}")
        })?;
        let map = assembly_isomorphism(&l)
            .unwrap()
            .ok_or_else(|| format!("N(2^{n}) ≇ 2^{n}"))?;
        let asm = Assembly::new(&l).unwrap();
        ensure(
            is_isomorphism(l.order(), asm.lattice().order(), &map),
            || "exhibited map is not an isomorphism".into(),
        )?;
    }
    Ok("n = 0..4".into())
}

fn booleanness() -> Outcome {
    let ps = posets(1..=5);
    for p in &ps {
        let l = up(p);
        let r = is_assembly_boolean(&l).unwrap();
        ensure(
            r.direct
                && r.nuclear_sets_are_regular_closed
                && r.max_of_downsets_clopen
                && r.scattered
                && r.agree,
            || format!("{r:?}"),
        )?;
        ensure(assembly_booleanization_check(&l).unwrap().holds, || {
            "B(N(L)) check fails".into()
        })?;
    }
    Ok(format!("{} posets", ps.len()))
}

fn spatiality() -> Outcome {
    let ps = posets(1..=5);
    for p in &ps {
        let l = up(p);
        let x_points = Duality::new(&l).points();
        let pts = nuclear_points(&l).unwrap();
        ensure(pts.points == Subset::full(x_points), || "Y_L ≠ X_L".into())?;
        let r = assembly_spatial_report(&l).unwrap();
        ensure(r.agree && r.lattice_spatial == r.points_dense, || {
            format!("{r:?}")
        })?;
        ensure(
            r.gamma.injective && r.gamma.onto_pi_closed && r.gamma.hits_tau_closed,
            || format!("γ: {:?}", r.gamma),
        )?;
        ensure(r.nonempty_nuclear_sets_meet_points, || {
            "a nonempty nuclear set misses Y_L".into()
        })?;
        let jp = join_primes_of_assembly(&l).unwrap();
        ensure(jp.points_of_lattice == jp.points_of_assembly, || {
            "|pt(L)| ≠ |pt(N(L))|".into()
        })?;
        ensure(jp.are_point_singletons, || {
            "join-primes of N(X_L) are not the singletons".into()
        })?;
    }
    Ok(format!("{} posets", ps.len()))
}

fn essential_primes() -> Outcome {
    let ps = posets(1..=5);
    for p in &ps {
        let r = primes_agreement(&up(p)).unwrap();
        ensure(
            r.minimal_agree
                && r.essential_agree
                && r.every_element_recovered
                && r.every_element_has_essential,
            || format!("{r:?}"),
        )?;
    }
    Ok(format!("{} posets", ps.len()))
}

fn simmons_isbell() -> Outcome {
    let b = Bounds::default();
    let spaces: Vec<_> = (1..=4)
        .flat_map(|n| enumerate_topologies(n, &b).unwrap())
        .collect();
    ensure(spaces.len() == 389, || {
        format!("{} spaces, expected 389", spaces.len())
    })?;
    for s in &spaces {
        let r = simmons_isbell_report(s).unwrap();
        let sa = SpaceAssembly::new(s).unwrap();
        let nuclei = sa.assembly.nuclei().to_vec();
        let sigma = sigma_check(&sa, &nuclei, &front_topology(s));
        ensure(sigma.injective && sigma.onto_front_opens, || {
            format!("σ is not a bijection: {sigma:?}")
        })?;
        ensure(sigma.complements_delta, || "σ(j) ≠ S∖δ(N_j)".into())?;
        ensure(r.consistent(), || format!("{r:?}"))?;
        ensure(soberification(s).check(s).holds(), || {
            "soberification ≇ T0 reflection".into()
        })?;
        let sc = scatter_report(s);
        ensure(sc.scattered == (sc.weakly_scattered && sc.t_d), || {
            "scattered ⇎ weakly scattered ∧ T_D".into()
        })?;
        let s0 = t0_reflection(s).target;
        ensure(sc.dispersed == scatter_report(&s0).scattered, || {
            "dispersed ⇎ S_0 scattered".into()
        })?;
        ensure(is_sober(s) == s.is_t0(), || "sober ⇎ T0".into())?;
    }
    Ok(format!("{} spaces", spaces.len()))
}

fn tower_sizes() -> Outcome {
    let b = Bounds::default();
    let mut observed = Vec::new();
    let mut failures = std::collections::BTreeSet::new();
    for p in posets(0..=3) {
        let l = up(&p);
        let t = tower(&l, 2, &b).unwrap();
        let sizes = t.sizes();
        for (stage, e) in t.embeddings.iter().enumerate() {
            ensure(e.holds(), || {
                format!("embedding at stage {} fails: {e:?}", stage + 1)
            })?;
        }
        let expected = 1usize << (1usize << p.len());
        if sizes[2] != expected {
            failures.insert(format!(
                "|P| = {}: |N²(L)| = {}, expected {expected}",
                p.len(),
                sizes[2]
            ));
        }
        observed.push(sizes[2]);
    }
    if failures.is_empty() {
        Ok(format!("sizes {observed:?}"))
    } else {
        Err(failures.into_iter().collect::<Vec<_>>().join("; "))
    }
}

fn golden() -> Outcome {
    let bad = common::golden_mismatches();
    ensure(bad.is_empty(), || format!("mismatched: {}", bad.join(", ")))?;
    Ok(format!("{} files", common::GOLDEN.len()))
}

type Criterion = (usize, &'static str, fn() -> Outcome, Option<Duration>);

fn main() {
    let criteria: [Criterion; 10] = [
        (
            1,
            "duality round trip",
            duality_round_trip,
            Some(Duration::from_secs(10)),
        ),
        (
            2,
            "nucleus duality",
            nucleus_duality,
            Some(Duration::from_secs(60)),
        ),
        (3, "w-decomposition", w_decomposition, None),
        (4, "N(2^n) ≅ 2^n", beazer_macnab, None),
        (5, "booleanness criteria", booleanness, None),
        (6, "spatiality criteria", spatiality, None),
        (7, "essential primes", essential_primes, None),
        (
            8,
            "Simmons/Isbell sweep",
            simmons_isbell,
            Some(Duration::from_secs(300)),
        ),
        (9, "tower sizes", tower_sizes, None),
        (10, "golden CLI outputs", golden, None),
    ];
    let mut failed = 0;
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("PASS {id:>2} {name}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL {id:>2} {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

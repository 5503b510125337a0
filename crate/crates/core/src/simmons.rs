//! The maps `σ : N(O S) → O_F(S)` and `δ : N(X_{O S}) → F_F(S)`, the
//! compactification `ε′`, and the Simmons/Isbell equivalences for a finite
//! space.

use serde::Serialize;

use crate::assembly::{
    enumerate_nuclei_oracle, nuclear_meet, nuclei_join_by_iteration, nuclei_meet, to_nuclear_set,
    Assembly, Nucleus,
};
use crate::bounds::Bounds;
use crate::error::Result;
use crate::heyting::{completely_prime_filters, is_scattered_frame, is_spatial};
use crate::sets::SetLattice;
use crate::space::{
    epsilon_into, front_topology, image, is_sober, open_frame, preimage, scatter_flags_closed,
    soberification, t0_reflection, FiniteSpace,
};
use crate::subset::Subset;

/// `σ(j) = ⋃{j(U) ∖ U : U ∈ O S}`
pub fn sigma(frame: &SetLattice, j: &Nucleus) -> Subset {
    frame.lattice().elements().fold(Subset::EMPTY, |acc, u| {
        acc.union(frame.set(j.apply(u)).difference(frame.set(u)))
    })
}

/// `O S` with its assembly and `ε : S → X_{O S}`.
#[derive(Debug, Clone)]
pub struct SpaceAssembly {
    pub space: FiniteSpace,
    pub frame: SetLattice,
    pub assembly: Assembly,
    pub epsilon: Vec<usize>,
}

impl SpaceAssembly {
    pub fn new(s: &FiniteSpace) -> Result<Self> {
        let frame = open_frame(s);
        let assembly = Assembly::new(frame.lattice())?;
        let filters: Vec<Subset> = assembly
            .space()
            .filters()
            .expect("dual space keeps its filters")
            .iter()
            .map(|f| f.members)
            .collect();
        let epsilon = epsilon_into(&frame, s, &filters);
        Ok(SpaceAssembly {
            space: s.clone(),
            frame,
            assembly,
            epsilon,
        })
    }

    /// `δ(N) = ε⁻¹(N)`
    pub fn delta(&self, n: Subset) -> Subset {
        preimage(n, &self.epsilon)
    }

    pub fn sigma(&self, j: &Nucleus) -> Subset {
        sigma(&self.frame, j)
    }
}

pub fn delta(sa: &SpaceAssembly, n: Subset) -> Subset {
    sa.delta(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CompactificationReport {
    pub factors_through_reflection: bool,
    pub injective: bool,
    pub front_continuous: bool,
    pub embedding: bool,
    pub dense: bool,
    pub surjective: bool,
    /// `ε` into `pt(O S)` and into `X_{O S}` pick the same filters.
    pub codomains_agree: bool,
}

impl CompactificationReport {
    pub fn holds(&self) -> bool {
        self.factors_through_reflection
            && self.injective
            && self.front_continuous
            && self.embedding
            && self.dense
            && self.codomains_agree
    }
}

pub fn compactification_check(s: &FiniteSpace) -> Result<CompactificationReport> {
    let sa = SpaceAssembly::new(s)?;
    let x = sa.assembly.space();
    let q = t0_reflection(s);
    let s0 = &q.target;
    let factors_through_reflection = (0..s.len())
        .all(|a| (0..s.len()).all(|b| q.map[a] != q.map[b] || sa.epsilon[a] == sa.epsilon[b]));
    let mut eps0 = vec![usize::MAX; s0.len()];
    for a in 0..s.len() {
        eps0[q.map[a]] = sa.epsilon[a];
    }
    let im = image(s0.all(), &eps0);
    let injective = im.len() == s0.len();
    let front = front_topology(s0);
    let pi_opens: Vec<Subset> = Subset::all(x.len()).filter(|&v| x.is_open(v)).collect();
    let front_continuous = pi_opens.iter().all(|&v| front.is_open(preimage(v, &eps0)));
    let mut traces: Vec<Subset> = pi_opens.iter().map(|v| v.intersection(im)).collect();
    traces.sort();
    traces.dedup();
    let mut pushed: Vec<Subset> = front.opens().iter().map(|&w| image(w, &eps0)).collect();
    pushed.sort();
    pushed.dedup();
    let embedding = injective && front_continuous && pushed == traces;

    let sob = soberification(s);
    let cp: Vec<Subset> = completely_prime_filters(sa.frame.lattice())
        .into_iter()
        .map(|f| f.members)
        .collect();
    let pf = x.filters().expect("dual space keeps its filters");
    let codomains_agree = (0..s.len()).all(|a| cp[sob.epsilon[a]] == pf[sa.epsilon[a]].members);
    Ok(CompactificationReport {
        factors_through_reflection,
        injective,
        front_continuous,
        embedding,
        dense: x.closure(im) == x.all(),
        surjective: im == x.all(),
        codomains_agree,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SigmaCheck {
    pub injective: bool,
    pub front_open: bool,
    pub onto_front_opens: bool,
    pub frame_homomorphism: bool,
    /// `σ(j) = S ∖ δ(N_j)` for every nucleus.
    pub complements_delta: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DeltaCheck {
    pub front_closed: bool,
    pub onto_coframe_homomorphism: bool,
    pub injective: bool,
    /// Nonempty nuclear sets have nonempty `δ`.
    pub reflects_nonempty: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SimmonsAgreement {
    /// weakly scattered ⇔ σ injective.
    pub sigma_injective_iff_weakly_scattered: bool,
    /// weakly scattered ⇔ δ reflects nonempty ⇔ δ injective.
    pub delta_criteria: bool,
    /// `N(O S)` spatial ⇔ soberification weakly scattered.
    pub spatial_iff_soberification_weakly_scattered: bool,
    /// For `T0` spaces: sober and `N(O S)` spatial ⇔ weakly scattered.
    pub t0_criterion: bool,
    /// `N(O S)` boolean ⇔ dispersed ⇔ `O S` scattered.
    pub boolean_iff_dispersed_iff_frame_scattered: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SimmonsReport {
    pub points: usize,
    pub nuclei: usize,
    pub weakly_scattered: bool,
    pub dispersed: bool,
    pub t0: bool,
    pub sober: bool,
    pub soberification_weakly_scattered: bool,
    pub assembly_spatial: bool,
    pub assembly_boolean: bool,
    pub frame_scattered: bool,
    pub sigma: SigmaCheck,
    pub delta: DeltaCheck,
    pub agreement: SimmonsAgreement,
}

impl SimmonsReport {
    pub fn consistent(&self) -> bool {
        let a = self.agreement;
        a.sigma_injective_iff_weakly_scattered
            && a.delta_criteria
            && a.spatial_iff_soberification_weakly_scattered
            && a.t0_criterion
            && a.boolean_iff_dispersed_iff_frame_scattered
            && self.sigma.front_open
            && self.sigma.onto_front_opens
            && self.sigma.frame_homomorphism
            && self.sigma.complements_delta
            && self.delta.front_closed
            && self.delta.onto_coframe_homomorphism
    }
}

fn sorted(mut v: Vec<Subset>) -> Vec<Subset> {
    v.sort();
    v.dedup();
    v
}

pub fn sigma_check(sa: &SpaceAssembly, nuclei: &[Nucleus], front: &FiniteSpace) -> SigmaCheck {
    let l = sa.frame.lattice();
    let s = &sa.space;
    let values: Vec<Subset> = nuclei.iter().map(|j| sa.sigma(j)).collect();
    let distinct = sorted(values.clone());
    let pairs = || (0..nuclei.len()).flat_map(|a| (0..nuclei.len()).map(move |b| (a, b)));
    let frame_homomorphism = sa.sigma(&Nucleus::identity(l)).is_empty()
        && sa.sigma(&Nucleus::top(l)) == s.all()
        && pairs().all(|(a, b)| {
            let pair = [nuclei[a].clone(), nuclei[b].clone()];
            sa.sigma(&nuclei_meet(l, &pair)) == values[a].intersection(values[b])
                && sa.sigma(&nuclei_join_by_iteration(l, &pair)) == values[a].union(values[b])
        });
    let d = sa.assembly.duality();
    SigmaCheck {
        injective: distinct.len() == nuclei.len(),
        front_open: values.iter().all(|&v| front.is_open(v)),
        onto_front_opens: distinct == front.opens(),
        frame_homomorphism,
        complements_delta: nuclei
            .iter()
            .zip(&values)
            .all(|(j, &v)| v == s.all().difference(sa.delta(to_nuclear_set(d, j)))),
    }
}

pub fn delta_check(sa: &SpaceAssembly, front: &FiniteSpace) -> DeltaCheck {
    let x = sa.assembly.space();
    let sets = sa.assembly.sets();
    let values: Vec<Subset> = sets.iter().map(|&n| sa.delta(n)).collect();
    let pairs = || sets.iter().flat_map(|&a| sets.iter().map(move |&b| (a, b)));
    let homomorphism = sa.delta(Subset::EMPTY).is_empty()
        && sa.delta(nuclear_meet(x, &[])) == sa.space.all()
        && pairs().all(|(a, b)| {
            sa.delta(a.union(b)) == sa.delta(a).union(sa.delta(b))
                && sa.delta(nuclear_meet(x, &[a, b])) == sa.delta(a).intersection(sa.delta(b))
        });
    let distinct = sorted(values.clone());
    DeltaCheck {
        front_closed: values.iter().all(|&v| front.is_closed(v)),
        onto_coframe_homomorphism: homomorphism && distinct == front.closed_sets(),
        injective: distinct.len() == sets.len(),
        reflects_nonempty: sets
            .iter()
            .zip(&values)
            .all(|(n, v)| n.is_empty() || !v.is_empty()),
    }
}

pub fn simmons_isbell_report(s: &FiniteSpace) -> Result<SimmonsReport> {
    let sa = SpaceAssembly::new(s)?;
    let l = sa.frame.lattice();
    let nuclei = enumerate_nuclei_oracle(l, &Bounds::default())?;
    let front = front_topology(s);
    let sigma = sigma_check(&sa, &nuclei, &front);
    let delta = delta_check(&sa, &front);

    let flags = scatter_flags_closed(s);
    let sob_flags = scatter_flags_closed(&soberification(s).space);
    let t0 = s.is_t0();
    let sober = is_sober(s);
    let assembly_spatial = is_spatial(sa.assembly.lattice()).spatial;
    let assembly_boolean = sa.assembly.lattice().is_boolean();
    let frame_scattered = is_scattered_frame(l);
    let ws = flags.weakly_scattered;
    let agreement = SimmonsAgreement {
        sigma_injective_iff_weakly_scattered: ws == sigma.injective,
        delta_criteria: ws == delta.reflects_nonempty && ws == delta.injective,
        spatial_iff_soberification_weakly_scattered: assembly_spatial == sob_flags.weakly_scattered,
        t0_criterion: !t0 || (sober && assembly_spatial) == ws,
        boolean_iff_dispersed_iff_frame_scattered: assembly_boolean == flags.dispersed
            && assembly_boolean == frame_scattered,
    };
    Ok(SimmonsReport {
        points: s.len(),
        nuclei: nuclei.len(),
        weakly_scattered: ws,
        dispersed: flags.dispersed,
        t0,
        sober,
        soberification_weakly_scattered: sob_flags.weakly_scattered,
        assembly_spatial,
        assembly_boolean,
        frame_scattered,
        sigma,
        delta,
        agreement,
    })
}

//! The suites a scenario can request, by id.

use std::time::Instant;

use symspec_core::corrcat::{check_enriched_category, CorrCategory};
use symspec_core::homology::{normalized_chains, reduced_homology, spectrum_homology, HomologyGroup, PivotStrategy};
use symspec_core::ptset::{PtMap, PtSet};
use symspec_core::ringmod::{
    check_centrality, check_commutative, check_module, check_ring, check_symmetric_spectrum, RightModule,
};
use symspec_core::spectral::{
    build_one_e, build_spectral_category, check_spectral_category, check_sphere_reconstruction,
    check_symmetric_spectrum as check_s1_spectrum, delta_sphere_map, module_action_theta, ring_structure_nu, OneE,
};
use symspec_core::sset::{sphere, sphere_model, SimplicialSet};
use symspec_core::symseq::{brute_force_level_size, check_seq_map, smash_seq, twist_seq};
use symspec_core::verify::mutation::run_mutation_suite;
use symspec_core::verify::{check_value, failure_outcome, Report};
use symspec_core::Error;

use crate::scenario::{RingBase, Resolved};

type Runner = fn(&Resolved) -> Result<Report, Error>;

pub struct Suite {
    pub id: &'static str,
    pub description: &'static str,
    run: Runner,
}

pub const MUTATION_PREFIX: &str = "mutation:";

pub static CATALOG: &[Suite] = &[
    Suite { id: "ring", description: "equivariance, associativity and unit diagrams of E", run: ring },
    Suite { id: "commutative", description: "commutativity squares of E with χ_{n,m}", run: commutative },
    Suite { id: "centrality", description: "centrality of ι₁ with χ_{n,1}", run: centrality },
    Suite { id: "module", description: "E as a right module over itself", run: module },
    Suite { id: "t-spectrum", description: "the underlying symmetric T-spectrum of E", run: t_spectrum },
    Suite {
        id: "smash-cardinality",
        description: "|(E ∧ E)_n| from the count formula against brute-force orbit enumeration",
        run: smash_cardinality,
    },
    Suite { id: "twist", description: "the twist of E ∧ E is a map of symmetric sequences", run: twist },
    Suite {
        id: "enriched-category",
        description: "corr^E on the objects: action, φ, units, ψ and interchange",
        run: enriched_category,
    },
    Suite {
        id: "spectral-category",
        description: "corr^{E,σ}: Hom-spectra, φ^σ in every degree, bilinearity",
        run: spectral_category,
    },
    Suite { id: "theta", description: "the right 1^E-action θ and its compatibility diagram", run: theta },
    Suite { id: "s1-spectrum", description: "1^E is a symmetric S¹-spectrum", run: s1_spectrum },
    Suite { id: "ring-nu", description: "ν, i₀, i₁ on 1^E", run: ring_nu },
    Suite { id: "delta", description: "δ from the sphere spectrum is a ring map", run: delta },
    Suite {
        id: "sphere-reconstruction",
        description: "1^E against the sphere spectrum (needs P = T = S⁰ and E = Sym(S⁰))",
        run: sphere_reconstruction,
    },
    Suite {
        id: "homology",
        description: "reduced homology of spheres and of the levels of 1^E, ∂∂ = 0, Euler characteristics",
        run: homology,
    },
];

pub fn is_known(id: &str) -> bool {
    if let Some(rest) = id.strip_prefix(MUTATION_PREFIX) {
        return rest == "all"
            || symspec_core::verify::mutation::registry().iter().any(|m| m.id == rest || m.suite == rest);
    }
    CATALOG.iter().any(|s| s.id == id)
}

/// Runs one suite; construction errors become a failing report.
pub fn run(id: &str, r: &Resolved) -> Report {
    let started = Instant::now();
    let result = match id.strip_prefix(MUTATION_PREFIX) {
        Some(rest) => run_mutation_suite(rest),
        None => match CATALOG.iter().find(|s| s.id == id) {
            Some(s) => (s.run)(r),
            None => Err(Error::UnknownSuite(id.to_string())),
        },
    };
    let mut report = match result {
        Ok(report) => report,
        Err(e) => {
            log::warn!("{id}: {e}");
            Report::from_outcomes(id, vec![failure_outcome(&e)], started)
        }
    };
    report.suite = id.to_string();
    report
}

fn ring(r: &Resolved) -> Result<Report, Error> {
    Ok(check_ring(r.e.ring()))
}

fn commutative(r: &Resolved) -> Result<Report, Error> {
    Ok(check_commutative(r.e.ring()))
}

fn centrality(r: &Resolved) -> Result<Report, Error> {
    Ok(check_centrality(&r.e))
}

fn module(r: &Resolved) -> Result<Report, Error> {
    Ok(check_module(&RightModule::regular(r.e.ring()), r.e.ring()))
}

fn t_spectrum(r: &Resolved) -> Result<Report, Error> {
    Ok(check_symmetric_spectrum(&r.e.spectrum()))
}

fn smash_cardinality(r: &Resolved) -> Result<Report, Error> {
    let started = Instant::now();
    let x = r.e.ring().seq();
    let xx = smash_seq(x, x)?;
    let outcomes = (0..=x.bound())
        .flat_map(|n| {
            let size = xx.carrier(n).size();
            [
                check_value(format!("smash/formula({n})"), size, xx.expected_size(n)),
                check_value(format!("smash/orbits({n})"), size, brute_force_level_size(x, x, n)),
            ]
        })
        .collect();
    Ok(Report::from_outcomes("smash-cardinality", outcomes, started))
}

fn twist(r: &Resolved) -> Result<Report, Error> {
    let x = r.e.ring().seq();
    let xx = smash_seq(x, x)?;
    check_seq_map("twist", &twist_seq(&xx, &xx)?, xx.seq(), xx.seq())
}

fn enriched_category(r: &Resolved) -> Result<Report, Error> {
    let cat = CorrCategory::new(&r.objects, r.p, r.e.ring().clone())?;
    Ok(check_enriched_category(&cat))
}

fn spectral_category(r: &Resolved) -> Result<Report, Error> {
    let s = &r.scenario;
    let cat = build_spectral_category(&r.objects, &r.e, r.p, &r.sigma, s.bound, s.dim_cap)?;
    Ok(check_spectral_category(&cat))
}

fn one_e(r: &Resolved) -> Result<OneE, Error> {
    build_one_e(&r.e, r.p, &r.sigma, r.scenario.bound, r.scenario.dim_cap)
}

fn theta(r: &Resolved) -> Result<Report, Error> {
    let s = &r.scenario;
    let cat = build_spectral_category(&r.objects, &r.e, r.p, &r.sigma, s.bound, s.dim_cap)?;
    let one = one_e(r)?;
    Ok(module_action_theta(&cat, &one)?.1)
}

fn s1_spectrum(r: &Resolved) -> Result<Report, Error> {
    Ok(check_s1_spectrum(one_e(r)?.spectrum()))
}

fn ring_nu(r: &Resolved) -> Result<Report, Error> {
    Ok(ring_structure_nu(&one_e(r)?).1)
}

fn delta(r: &Resolved) -> Result<Report, Error> {
    Ok(delta_sphere_map(&one_e(r)?)?.1)
}

fn sphere_reconstruction(r: &Resolved) -> Result<Report, Error> {
    check_sphere_reconstruction(&one_e(r)?)
}

fn is_sphere_ring(r: &Resolved) -> bool {
    let s = &r.scenario;
    r.t == PtSet::s0() && r.p == PtSet::s0() && s.ring.base == RingBase::SymT && s.ring.mu_overrides.is_empty() && s.ring.iota1.is_none()
}

/// Spheres up to dimension `D` have the homology of spheres; every complex
/// built here has `∂∂ = 0` and matching Euler characteristics. For
/// `E = Sym(S⁰)` the degree-0 homology of `1^E` is stably `ℤ` across levels
/// `1..=D`. Uses dimension cap `max(dim_cap, D + 2)` so that `H̃_D` is visible.
fn homology(r: &Resolved) -> Result<Report, Error> {
    let started = Instant::now();
    let d = r.scenario.bound;
    let cap = r.scenario.dim_cap.max(d + 2);
    let mut outcomes = Vec::new();
    let z = HomologyGroup { rank: 1, torsion: vec![] };
    let one = build_one_e(&r.e, r.p, &r.sigma, d, cap)?;
    let mut complexes: Vec<(String, Box<dyn SimplicialSet>)> = Vec::new();
    for n in 0..=d {
        let s = sphere(n, cap);
        for k in 0..=n + 1 {
            let h = reduced_homology(&s, k)?;
            let expected = if k == n { &z } else { &HomologyGroup::zero() };
            outcomes.push(check_value(format!("homology/sphere({n})/H{k}"), usize::from(&h == expected), 1));
        }
        complexes.push((format!("sphere({n})"), Box::new(s)));
        complexes.push((format!("sphere-model({n})"), Box::new(sphere_model(n, cap))));
        complexes.push((format!("one-e({n})"), Box::new(one.spectrum().level(n).clone())));
    }
    for (name, x) in &complexes {
        let c = normalized_chains(x.as_ref(), cap - 1)?;
        outcomes.push(check_value(format!("homology/{name}/boundary"), usize::from(c.boundary_squares_vanish()), 1));
        for strategy in [PivotStrategy::MinAbs, PivotStrategy::FirstNonzero] {
            let (chains, homology) = c.euler_characteristics(strategy);
            outcomes.push(check_value(format!("homology/{name}/euler({strategy:?})"), usize::from(chains == homology), 1));
        }
        let a = c.homology(PivotStrategy::MinAbs);
        let b = c.homology(PivotStrategy::FirstNonzero);
        outcomes.push(check_value(format!("homology/{name}/pivots"), usize::from(a == b), 1));
    }
    if is_sphere_ring(r) && d >= 1 {
        let levels: Vec<&dyn SimplicialSet> = (0..=d).map(|n| one.spectrum().level(n) as &dyn SimplicialSet).collect();
        let window: Vec<usize> = (1..=d).collect();
        let h = spectrum_homology(&levels, 0, &window)?;
        outcomes.push(check_value("homology/one-e/stable", usize::from(h.stabilizes && h.stable == Some(z)), 1));
    }
    Ok(Report::from_outcomes("homology", outcomes, started))
}

/// `σ` as the identity on `S⁰`; used by subcommands that fix `P = T = S⁰`.
pub fn s0_identity() -> PtMap {
    PtMap::identity(PtSet::s0())
}

//! Registered mutations. Each one breaks a single ingredient of a correct
//! construction and names the checker that has to notice.

use std::time::Instant;

use super::{check_value, failure_outcome, Report};
use crate::corrcat::{check_enriched_category, Composition, Conjugation, CorrCategory};
use crate::error::{Error, Result};
use crate::ptset::{twist, PtMap, PtSet};
use crate::ringmod::{check_commutative, check_module, check_ring, check_t_ring_morphism, sym_t, tensor_algebra, RightModule};
use crate::spectral::{
    bilinearity_outcomes, build_one_e, build_spectral_category, check_spectral_category, check_symmetric_spectrum,
    Bilinearity,
};
use crate::symseq::{check_seq_map, naive_twist_seq, smash_seq, SymSeq, SymSeqMap};

#[derive(Debug, Clone, Copy)]
pub struct Mutation {
    pub id: &'static str,
    pub suite: &'static str,
    pub description: &'static str,
    /// False only for the no-op control.
    pub expect_caught: bool,
    run: fn() -> Result<Report>,
}

impl Mutation {
    /// Runs the checker on the mutated construction.
    pub fn run(&self) -> Result<Report> {
        (self.run)()
    }
}

fn pt(n: usize) -> PtSet {
    PtSet::new(n).expect("nonempty")
}

fn twist_no_shuffle() -> Result<Report> {
    let x = SymSeq::smash_powers(pt(3), 3);
    let xy = smash_seq(&x, &x)?;
    let naive = naive_twist_seq(&xy, &xy)?;
    check_seq_map("twist", &naive, xy.seq(), xy.seq())
}

fn ring_mu_swapped() -> Result<Report> {
    let e = sym_t(pt(3), 3);
    let mu = e.ring().mu(1, 1);
    let t1 = e.ring().seq().carrier(1);
    let swapped = mu.compose(&twist(t1, t1))?;
    Ok(check_ring(&e.ring().clone().with_mu(1, 1, swapped)?))
}

fn noncommutative_ring() -> Result<Report> {
    Ok(check_commutative(tensor_algebra(pt(3), 2).ring()))
}

fn zero_iota1() -> Result<Report> {
    let e = sym_t(pt(3), 3);
    let zero = PtMap::zero(e.t(), e.ring().seq().carrier(1));
    let z = e.clone().with_iota1(zero)?;
    Ok(check_t_ring_morphism(&SymSeqMap::identity(e.ring().seq()), &e, &z))
}

fn module_alpha() -> Result<Report> {
    let e = sym_t(pt(3), 3);
    let m = RightModule::regular(e.ring());
    let a = m.alpha(1, 1);
    let shifted = PtMap::from_fn(a.source(), a.target(), |x| if x == 1 { a.apply(2) } else { a.apply(x) })?;
    Ok(check_module(&m.clone().with_alpha(1, 1, shifted)?, e.ring()))
}

fn phi_ring_factors_swapped() -> Result<Report> {
    let e = sym_t(pt(3), 3);
    let cat = CorrCategory::new(&[PtSet::s0()], PtSet::s0(), e.ring().clone())?;
    Ok(check_enriched_category(&cat.with_composition(Composition::RingFactorsSwapped)))
}

fn s0_spectral(objects: &[PtSet], bound: usize, cap: usize) -> Result<crate::spectral::SpectralCategory> {
    let s0 = PtSet::s0();
    build_spectral_category(objects, &sym_t(s0, bound), s0, &PtMap::identity(s0), bound, cap)
}

fn bilinearity_without_chi() -> Result<Report> {
    let started = Instant::now();
    let cat = s0_spectral(&[PtSet::s0()], 2, 2)?;
    Ok(Report::from_outcomes("bilinearity", bilinearity_outcomes(&cat, Bilinearity::Uncorrected), started))
}

fn phi_spheres_swapped() -> Result<Report> {
    let cat = s0_spectral(&[PtSet::s0()], 2, 2)?;
    Ok(check_spectral_category(&cat.with_composition(Composition::SpheresSwapped)))
}

fn one_e_spheres_fixed() -> Result<Report> {
    let s0 = PtSet::s0();
    let one = build_one_e(&sym_t(s0, 2), s0, &PtMap::identity(s0), 2, 2)?;
    let fixed = one.category().clone().with_conjugation(Conjugation::SpheresFixed)?;
    Ok(check_symmetric_spectrum(&fixed.hom_spectrum(s0, s0)?))
}

fn identity() -> Result<Report> {
    Ok(check_ring(sym_t(pt(3), 3).ring()))
}

static REGISTRY: &[Mutation] = &[
    Mutation {
        id: "twist-no-shuffle",
        suite: "symseq",
        description: "twist of Sym(T) ∧ Sym(T) without the block shuffle, |T| = 3, D = 3",
        expect_caught: true,
        run: twist_no_shuffle,
    },
    Mutation {
        id: "ring-mu-swapped",
        suite: "ringmod",
        description: "μ_{1,1} of Sym(T) precomposed with the twist of T ∧ T",
        expect_caught: true,
        run: ring_mu_swapped,
    },
    Mutation {
        id: "noncommutative-ring",
        suite: "ringmod",
        description: "the tensor algebra on T in place of Sym(T), against the commutativity square",
        expect_caught: true,
        run: noncommutative_ring,
    },
    Mutation {
        id: "zero-iota1",
        suite: "ringmod",
        description: "ι₁ replaced by the zero map, compared with Sym(T) along the identity",
        expect_caught: true,
        run: zero_iota1,
    },
    Mutation {
        id: "module-alpha",
        suite: "ringmod",
        description: "one value of α_{1,1} of the regular module moved",
        expect_caught: true,
        run: module_alpha,
    },
    Mutation {
        id: "phi-ring-factors-swapped",
        suite: "corrcat",
        description: "φ multiplies the ring factors in the opposite order",
        expect_caught: true,
        run: phi_ring_factors_swapped,
    },
    Mutation {
        id: "bilinearity-without-chi",
        suite: "spectral",
        description: "bilinearity diagram without the 1 × χ_{1,q} correction",
        expect_caught: true,
        run: bilinearity_without_chi,
    },
    Mutation {
        id: "phi-spheres-swapped",
        suite: "spectral",
        description: "φ^σ concatenates the sphere coordinates in the opposite order",
        expect_caught: true,
        run: phi_spheres_swapped,
    },
    Mutation {
        id: "one-e-spheres-fixed",
        suite: "spectral",
        description: "Σ_n acts on 1^E without permuting the sphere coordinates",
        expect_caught: true,
        run: one_e_spheres_fixed,
    },
    Mutation {
        id: "identity",
        suite: "control",
        description: "no-op: Sym(T) against the ring diagrams",
        expect_caught: false,
        run: identity,
    },
];

pub fn registry() -> &'static [Mutation] {
    REGISTRY
}

pub fn suites() -> Vec<&'static str> {
    let mut s: Vec<&str> = REGISTRY.iter().map(|m| m.suite).collect();
    s.dedup();
    s.push("all");
    s
}

/// Runs every mutation of `suite` (or all of them for `"all"`, or the one
/// mutation whose id is `suite`). Outcome
/// `mutation/<id>` compares "caught" with "expected to be caught", so the
/// report passes iff every mutation is caught and the control is not.
pub fn run_mutation_suite(suite: &str) -> Result<Report> {
    let started = Instant::now();
    let chosen: Vec<&Mutation> = REGISTRY.iter().filter(|m| suite == "all" || m.suite == suite || m.id == suite).collect();
    if chosen.is_empty() {
        return Err(Error::UnknownSuite(suite.to_string()));
    }
    let outcomes = chosen
        .iter()
        .map(|m| {
            let id = format!("mutation/{}", m.id);
            match m.run() {
                Ok(r) => {
                    log::debug!("{}: {} violations", m.id, r.total_violations);
                    check_value(id, usize::from(!r.passed()), usize::from(m.expect_caught))
                }
                Err(e) => {
                    log::warn!("{}: {e}", m.id);
                    let mut o = failure_outcome(&e);
                    o.id = id;
                    o
                }
            }
        })
        .collect();
    Ok(Report::from_outcomes(format!("mutation/{suite}"), outcomes, started))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suites_are_rejected() {
        assert!(matches!(run_mutation_suite("nope"), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn control_is_not_caught() {
        let r = run_mutation_suite("control").unwrap();
        assert!(r.passed());
        assert!(REGISTRY.iter().find(|m| m.id == "identity").unwrap().run().unwrap().passed());
    }

    #[test]
    fn every_registered_mutation_is_caught() {
        for m in REGISTRY.iter().filter(|m| m.expect_caught) {
            let r = m.run().unwrap();
            assert!(!r.passed(), "{} slipped through", m.id);
            assert!(r.violations.iter().all(|v| v.lhs != v.rhs));
        }
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = REGISTRY.iter().map(|m| m.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), REGISTRY.len());
        assert_eq!(suites().last(), Some(&"all"));
    }
}

use proptest::prelude::*;
use symspec_core::corrcat::{check_enriched_category, compose_phi, conj_act, monoidal_psi, unit_u, CorrCategory};
use symspec_core::permgroup::{all_permutations, Permutation};
use symspec_core::ptset::PtSet;
use symspec_core::ringmod::sym_t;

fn pt(n: usize) -> PtSet {
    PtSet::new(n).unwrap()
}

fn over_sphere() -> CorrCategory {
    CorrCategory::new(&[pt(1), pt(2)], PtSet::s0(), sym_t(PtSet::s0(), 2).ring().clone()).unwrap()
}

#[test]
fn sizes_one_and_two_over_the_sphere() {
    let r = check_enriched_category(&over_sphere());
    assert!(r.passed(), "{:?}", r.violations);
    assert!(r.diagrams > 0 && r.elements > 0);
}

#[test]
fn hom_counts_follow_the_formula() {
    let t = pt(3);
    let cat = CorrCategory::new(&[pt(1), pt(2)], t, sym_t(t, 2).ring().clone()).unwrap();
    for x in [pt(1), pt(2)] {
        for y in [pt(1), pt(2)] {
            for n in 0..=2 {
                let exponent = x.smash(&t.smash_power(n)).size() - 1;
                let base = y.smash(&t.smash_power(n)).size();
                assert_eq!(cat.hom(x, y, n).unwrap().len(), base.pow(exponent as u32));
            }
        }
    }
}

#[test]
fn psi_of_units_is_a_unit() {
    let cat = over_sphere();
    let u = unit_u(&cat, pt(2)).unwrap();
    assert_eq!(monoidal_psi(&cat, &u, &u).unwrap().map(), u.map());
}

// P = S⁰ keeps level 3 small while Σ_n still acts through E_n = T^∧n
fn cat_t2() -> CorrCategory {
    CorrCategory::new(&[pt(2), pt(3)], PtSet::s0(), sym_t(pt(3), 3).ring().clone()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phi_is_block_equivariant(f in 0usize..1000, g in 0usize..1000, tau in 0usize..2, pi in 0usize..1) {
        let cat = cat_t2();
        let x = pt(3);
        let (cf, cg) = (cat.hom(x, x, 2).unwrap(), cat.hom(x, x, 1).unwrap());
        let f = cat.mor(x, x, 2, cf.map(f % cf.len())).unwrap();
        let g = cat.mor(x, x, 1, cg.map(g % cg.len())).unwrap();
        let (tau, pi) = (&all_permutations(2)[tau], &all_permutations(1)[pi]);
        let lhs = compose_phi(&cat, &conj_act(&cat, tau, &f).unwrap(), &conj_act(&cat, pi, &g).unwrap()).unwrap();
        let rhs = conj_act(&cat, &Permutation::block_sum(tau, pi), &compose_phi(&cat, &f, &g).unwrap()).unwrap();
        prop_assert_eq!(lhs.map(), rhs.map());
    }

    #[test]
    fn units_are_neutral(f in 0usize..1000, n in 0usize..3) {
        let cat = cat_t2();
        let x = pt(2);
        let c = cat.hom(x, x, n).unwrap();
        let f = cat.mor(x, x, n, c.map(f % c.len())).unwrap();
        let u = unit_u(&cat, x).unwrap();
        prop_assert_eq!(compose_phi(&cat, &u, &f).unwrap().map().clone(), f.map().clone());
        prop_assert_eq!(compose_phi(&cat, &f, &u).unwrap().map().clone(), f.map().clone());
    }

    #[test]
    fn phi_is_associative(a in 0usize..1000, b in 0usize..1000, c in 0usize..1000) {
        let cat = cat_t2();
        let x = pt(2);
        let h = cat.hom(x, x, 1).unwrap();
        let m = |i: usize| cat.mor(x, x, 1, h.map(i % h.len())).unwrap();
        let (f, g, k) = (m(a), m(b), m(c));
        let left = compose_phi(&cat, &compose_phi(&cat, &f, &g).unwrap(), &k);
        let right = compose_phi(&cat, &f, &compose_phi(&cat, &g, &k).unwrap());
        prop_assert_eq!(left.map(|m| m.map().clone()), right.map(|m| m.map().clone()));
    }
}

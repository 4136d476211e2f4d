use num_bigint::BigInt;
use proptest::prelude::*;
use symspec_core::homology::{
    normalized_chains, reduced_homology, smith_decomposition, smith_normal_form, spectrum_homology, HomologyGroup, Matrix,
    PivotStrategy,
};
use symspec_core::ptset::PtSet;
use symspec_core::ringmod::sym_t;
use symspec_core::spectral::build_one_e;
use symspec_core::sset::{
    check_simplicial_identities, levelwise_smash, point, sphere, sphere_comparison, sphere_model, SimplicialSet,
};
use symspec_core::ptset::PtMap;

fn z() -> HomologyGroup {
    HomologyGroup { rank: 1, torsion: vec![] }
}

#[test]
fn reduced_homology_of_spheres() {
    for n in 0..=3 {
        let s = sphere(n, n + 2);
        for k in 0..=n + 1 {
            let h = reduced_homology(&s, k).unwrap();
            assert_eq!(h, if k == n { z() } else { HomologyGroup::zero() }, "n={n} k={k}");
        }
    }
}

#[test]
fn smash_model_has_the_homology_of_a_sphere() {
    for n in 1..=3 {
        let s = sphere_model(n, n + 2);
        for k in 0..=n + 1 {
            let h = reduced_homology(&s, k).unwrap();
            assert_eq!(h, if k == n { z() } else { HomologyGroup::zero() }, "n={n} k={k}");
        }
    }
}

#[test]
fn model_counts() {
    for n in 0..=3 {
        let (model, delta, maps) = sphere_comparison(n, 4);
        for l in 0..=4 {
            assert_eq!(model.level_size(l), l.pow(n as u32) + 1);
            let binom = (0..n).fold(1usize, |acc, i| if l < n { 0 } else { acc * (l - i) / (i + 1) });
            assert_eq!(delta.level_size(l), binom + 1);
            assert_eq!(maps[l].source().size(), model.level_size(l));
        }
    }
}

#[test]
fn sphere_spectrum_degree_zero_is_stable() {
    let s0 = PtSet::s0();
    let one = build_one_e(&sym_t(s0, 3), s0, &PtMap::identity(s0), 3, 5).unwrap();
    let levels: Vec<&dyn SimplicialSet> = (0..=3).map(|n| one.spectrum().level(n) as &dyn SimplicialSet).collect();
    let h = spectrum_homology(&levels, 0, &[1, 2, 3]).unwrap();
    assert!(h.stabilizes);
    assert_eq!(h.stable, Some(z()));
}

#[test]
fn every_constructed_complex_is_a_complex() {
    let s1 = sphere(1, 4);
    let s2 = sphere(2, 4);
    let sm = levelwise_smash(&[&s1, &s1]).unwrap();
    let sets: Vec<Box<dyn SimplicialSet>> =
        vec![Box::new(point(3)), Box::new(s1.clone()), Box::new(s2), Box::new(sm), Box::new(sphere_model(3, 4))];
    for x in &sets {
        assert!(check_simplicial_identities("x", x.as_ref()).passed());
        let c = normalized_chains(x.as_ref(), 3).unwrap();
        assert!(c.boundary_squares_vanish());
        for strategy in [PivotStrategy::MinAbs, PivotStrategy::FirstNonzero] {
            let (chains, homology) = c.euler_characteristics(strategy);
            assert_eq!(chains, homology);
        }
    }
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-6i64..7, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn pivot_strategies_agree(rows in matrix()) {
        let m = Matrix::from_rows(&rows);
        prop_assert_eq!(smith_normal_form(&m, PivotStrategy::MinAbs), smith_normal_form(&m, PivotStrategy::FirstNonzero));
    }

    #[test]
    fn smith_decomposition_is_unimodular(rows in matrix()) {
        let m = Matrix::from_rows(&rows);
        let d = smith_decomposition(&m, PivotStrategy::MinAbs);
        prop_assert_eq!(d.u.mul(&m).mul(&d.v), d.diagonal.clone());
        prop_assert!(d.u.determinant() == BigInt::from(1) || d.u.determinant() == BigInt::from(-1));
        prop_assert!(d.v.determinant() == BigInt::from(1) || d.v.determinant() == BigInt::from(-1));
        let snf = smith_normal_form(&m, PivotStrategy::MinAbs);
        for w in snf.factors.windows(2) {
            prop_assert_eq!(&w[1] % &w[0], BigInt::from(0));
        }
    }

    #[test]
    fn smashes_of_spheres_satisfy_euler(a in 0usize..3, b in 0usize..3) {
        let (x, y) = (sphere(a, 4), sphere(b, 4));
        let s = levelwise_smash(&[&x, &y]).unwrap();
        let c = normalized_chains(&s, 3).unwrap();
        prop_assert!(c.boundary_squares_vanish());
        let (chains, homology) = c.euler_characteristics(PivotStrategy::MinAbs);
        prop_assert_eq!(chains, homology);
        for l in 0..=4 {
            prop_assert_eq!(s.level_size(l), (x.level_size(l) - 1) * (y.level_size(l) - 1) + 1);
        }
    }
}

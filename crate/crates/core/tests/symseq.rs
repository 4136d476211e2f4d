use symspec_core::ptset::{PtMap, PtSet};
use symspec_core::ringmod::sym_map;
use symspec_core::symseq::{
    associator_seq, binomial, brute_force_level_size, check_seq_map, naive_twist_seq, smash_seq, smash_seq_map,
    twist_seq, SymSeq, SymSeqMap,
};

fn pt(n: usize) -> PtSet {
    PtSet::new(n).unwrap()
}

fn sym(t: usize, d: usize) -> SymSeq {
    SymSeq::smash_powers(pt(t), d)
}

#[test]
fn smash_levels_follow_the_count_formula_and_the_orbit_count() {
    for (a, b) in [(2, 2), (2, 3), (3, 3), (1, 3)] {
        let (x, y) = (sym(a, 4), sym(b, 4));
        let xy = smash_seq(&x, &y).unwrap();
        for n in 0..=4 {
            let formula: usize = (0..=n)
                .map(|p| binomial(n, p) * x.carrier(p).non_base() * y.carrier(n - p).non_base())
                .sum::<usize>()
                + 1;
            assert_eq!(xy.carrier(n).size(), formula);
            if n <= 3 || a * b <= 6 {
                assert_eq!(brute_force_level_size(&x, &y, n), formula);
            }
        }
    }
}

#[test]
fn sym_of_two_point_set_squared_has_two_to_the_n_plus_one() {
    let x = sym(2, 4);
    let xy = smash_seq(&x, &x).unwrap();
    for n in 0..=4 {
        assert_eq!(xy.carrier(n).size(), (1 << n) + 1);
        assert_eq!(brute_force_level_size(&x, &x, n), (1 << n) + 1);
    }
}

#[test]
fn twist_is_a_map_and_the_naive_twist_is_not() {
    let x = sym(3, 3);
    let y = sym(2, 3);
    let (xy, yx) = (smash_seq(&x, &y).unwrap(), smash_seq(&y, &x).unwrap());
    let t = twist_seq(&xy, &yx).unwrap();
    assert!(check_seq_map("twist", &t, xy.seq(), yx.seq()).unwrap().passed());
    let back = twist_seq(&yx, &xy).unwrap();
    assert_eq!(back.compose(&t).unwrap(), SymSeqMap::identity(xy.seq()));
    let naive = naive_twist_seq(&xy, &yx).unwrap();
    let r = check_seq_map("naive", &naive, xy.seq(), yx.seq()).unwrap();
    assert!(!r.passed());
    assert!(r.violations.iter().all(|v| v.lhs != v.rhs));
}

#[test]
fn associator_is_a_natural_isomorphism() {
    let (x, y, z) = (sym(2, 3), sym(3, 3), sym(2, 3));
    let xy = smash_seq(&x, &y).unwrap();
    let yz = smash_seq(&y, &z).unwrap();
    let outer = smash_seq(xy.seq(), &z).unwrap();
    let target = smash_seq(&x, yz.seq()).unwrap();
    let a = associator_seq(&outer, &xy, &yz, &target).unwrap();
    assert!(check_seq_map("assoc", &a, outer.seq(), target.seq()).unwrap().passed());
    assert!(a.maps().iter().all(PtMap::is_bijection));

    // naturality in the middle variable along a map collapsing two letters
    let f = sym_map(&PtMap::new(pt(3), pt(3), vec![0, 1, 1]).unwrap(), 3);
    let (idx, idz) = (SymSeqMap::identity(&x), SymSeqMap::identity(&z));
    let left = smash_seq_map(&smash_seq_map(&idx, &f, &xy, &xy).unwrap(), &idz, &outer, &outer).unwrap();
    let right = smash_seq_map(&idx, &smash_seq_map(&f, &idz, &yz, &yz).unwrap(), &target, &target).unwrap();
    assert_eq!(a.compose(&left).unwrap(), right.compose(&a).unwrap());
}

use proptest::prelude::*;
use symspec_core::permgroup::{
    all_permutations, coset_factor, enumerate_shuffle_reps, induce, shuffle, young_subgroup, GAction, Permutation,
};
use symspec_core::ptset::PtSet;
use symspec_core::symseq::power_action;

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle()).prop_map(|v| Permutation::new(v).unwrap())
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn shuffle_inverse_is_the_opposite_shuffle() {
    for p in 0..=5 {
        for q in 0..=5 {
            assert_eq!(shuffle(q, p).inverse(), shuffle(p, q), "p={p} q={q}");
        }
    }
}

#[test]
fn shuffle_one_line_examples() {
    assert_eq!(shuffle(1, 2).one_line(), vec![3, 1, 2]);
    assert_eq!(shuffle(2, 1).one_line(), vec![2, 3, 1]);
    assert!(shuffle(0, 4).is_identity());
}

#[test]
fn coset_factorization_is_unique() {
    for n in 0..=5 {
        for p in 0..=n {
            let reps = enumerate_shuffle_reps(p, n - p);
            let young = young_subgroup(&[p, n - p]);
            assert_eq!(reps.len() * young.len(), factorial(n));
            for w in all_permutations(n) {
                let matches = reps
                    .iter()
                    .flat_map(|r| young.iter().map(move |h| (r, h)))
                    .filter(|(r, h)| r.compose(h).unwrap() == w)
                    .count();
                assert_eq!(matches, 1);
                let (rho, h) = coset_factor(&w, p);
                assert!(reps.contains(&rho));
                assert!(h.preserves_blocks(&[p, n - p]));
            }
        }
    }
}

#[test]
fn induced_sets_have_index_many_copies() {
    let t = PtSet::new(3).unwrap();
    for p in 0..=3 {
        for q in 0..=3 - p {
            let a = GAction::smash(&power_action(t, p), &power_action(t, q));
            let ind = induce(p + q, p, q, &a).unwrap();
            let index = factorial(p + q) / (factorial(p) * factorial(q));
            assert_eq!(ind.carrier().non_base(), index * a.carrier().non_base());
            assert!(ind.action().validate().is_ok());
            assert!(ind.action().check_action_law().is_none());
        }
    }
}

#[test]
fn induce_rejects_the_wrong_degree() {
    let a = GAction::trivial(PtSet::s0(), vec![1, 1]);
    assert!(induce(3, 1, 1, &a).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn inverse_cancels(p in permutation(6)) {
        let id = Permutation::identity(p.degree());
        prop_assert_eq!(p.compose(&p.inverse()).unwrap(), id.clone());
        prop_assert_eq!(p.inverse().compose(&p).unwrap(), id);
    }

    #[test]
    fn permute_is_a_left_action(n in 0usize..6, seed in any::<u64>()) {
        let perms = all_permutations(n);
        let (a, b) = (&perms[seed as usize % perms.len()], &perms[(seed >> 32) as usize % perms.len()]);
        let v: Vec<usize> = (10..10 + n).collect();
        prop_assert_eq!(a.permute(&b.permute(&v)), a.compose(b).unwrap().permute(&v));
    }

    #[test]
    fn descent_words_rebuild_the_permutation(p in permutation(6)) {
        let n = p.degree();
        let rebuilt = p
            .descent_word()
            .iter()
            .fold(Permutation::identity(n), |acc, &i| Permutation::adjacent(n, i).compose(&acc).unwrap());
        prop_assert_eq!(rebuilt, p);
    }

    #[test]
    fn block_sums_split_back(a in permutation(4), b in permutation(4)) {
        let s = Permutation::block_sum(&a, &b);
        prop_assert_eq!(s.split_at(a.degree()), Some((a, b)));
    }

    #[test]
    fn power_actions_are_actions(size in 1usize..4, n in 0usize..4) {
        let act = power_action(PtSet::new(size).unwrap(), n);
        prop_assert!(act.check_action_law().is_none());
    }
}

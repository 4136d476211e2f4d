use proptest::prelude::*;
use symspec_core::ptset::{associator, hom, left_unitor, right_unitor, smash_maps, twist, HomSet, PtMap, PtSet, Smash};

fn pt(n: usize) -> PtSet {
    PtSet::new(n).unwrap()
}

fn map_between(max: usize) -> impl Strategy<Value = PtMap> {
    (1..=max, 1..=max).prop_flat_map(|(a, b)| {
        proptest::collection::vec(0..b, a - 1).prop_map(move |tail| {
            let mut images = vec![0];
            images.extend(tail);
            PtMap::new(pt(a), pt(b), images).unwrap()
        })
    })
}

fn composable() -> impl Strategy<Value = (PtMap, PtMap)> {
    map_between(4).prop_flat_map(|f| {
        let b = f.target().size();
        (Just(f), 1usize..=4).prop_flat_map(move |(f, c)| {
            proptest::collection::vec(0..c, b - 1).prop_map(move |tail| {
                let mut images = vec![0];
                images.extend(tail);
                (f.clone(), PtMap::new(pt(b), pt(c), images).unwrap())
            })
        })
    })
}

#[test]
fn pentagon_and_hexagon_on_small_sets() {
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 1..=3 {
                let (a, b, c) = (pt(a), pt(b), pt(c));
                let hex_left = associator(b, c, a)
                    .compose(&twist(a, b.smash(&c)))
                    .unwrap()
                    .compose(&associator(a, b, c))
                    .unwrap();
                let hex_right = smash_maps(&PtMap::identity(b), &twist(a, c))
                    .compose(&associator(b, a, c))
                    .unwrap()
                    .compose(&smash_maps(&twist(a, b), &PtMap::identity(c)))
                    .unwrap();
                assert_eq!(hex_left, hex_right);
                assert_eq!(twist(b, a).compose(&twist(a, b)).unwrap(), PtMap::identity(a.smash(&b)));
                for d in 1..=3 {
                    let d = pt(d);
                    let top = associator(a, b, c.smash(&d)).compose(&associator(a.smash(&b), c, d)).unwrap();
                    let bottom = smash_maps(&PtMap::identity(a), &associator(b, c, d))
                        .compose(&associator(a, b.smash(&c), d))
                        .unwrap()
                        .compose(&smash_maps(&associator(a, b, c), &PtMap::identity(d)))
                        .unwrap();
                    assert_eq!(top, bottom);
                }
            }
        }
        let a = pt(a);
        assert!(left_unitor(a).is_bijection());
        assert!(right_unitor(a).is_bijection());
    }
}

#[test]
fn one_point_set_is_a_zero_object() {
    let z = PtSet::zero();
    for n in 1..=4 {
        assert_eq!(hom(z, pt(n)).unwrap().len(), 1);
        assert_eq!(hom(pt(n), z).unwrap().len(), 1);
    }
}

#[test]
fn hom_counts_are_powers() {
    for a in 1..=4 {
        for b in 1..=4 {
            assert_eq!(HomSet::new(pt(a), pt(b)).unwrap().len(), b.pow(a as u32 - 1));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn smash_codec_round_trips(sizes in proptest::collection::vec(2usize..5, 0..4), seed in any::<u64>()) {
        let codec = Smash::new(sizes.iter().map(|&s| pt(s)).collect());
        let coords: Vec<usize> = sizes.iter().enumerate().map(|(i, &s)| 1 + (seed as usize >> (4 * i)) % (s - 1)).collect();
        let idx = codec.encode(&coords);
        prop_assert!(idx > 0 && idx < codec.result().size());
        prop_assert_eq!(codec.decode(idx), Some(coords));
    }

    #[test]
    fn smash_of_maps_is_functorial((f, f2) in composable(), (g, g2) in composable()) {
        let lhs = smash_maps(&f2.compose(&f).unwrap(), &g2.compose(&g).unwrap());
        let rhs = smash_maps(&f2, &g2).compose(&smash_maps(&f, &g)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hom_codec_round_trips(f in map_between(5)) {
        let h = HomSet::new(f.source(), f.target()).unwrap();
        prop_assert_eq!(h.decode(h.encode(&f)), f);
    }
}

//! Symmetric sequences of pointed sets, truncated at a degree bound `D`.
//!
//! Level `n` is a pointed `Σ_n`-set. Everything here is valid up to degree
//! `D`: the smash product and the twist are computed exactly on levels
//! `0..=D` and nothing is claimed above.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::permgroup::{all_permutations, coset_factor, induce, shuffle, GAction, Induced, Permutation};
use crate::ptset::{PtMap, PtSet, Smash, Wedge};
use crate::verify::{check_equivariance_map, check_pointwise, Report};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymSeq {
    levels: Vec<GAction>,
}

impl SymSeq {
    /// Level `n` must be an action of the full group `Σ_n`.
    pub fn new(levels: Vec<GAction>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::ShapeMismatch("a symmetric sequence needs level 0".into()));
        }
        for (n, l) in levels.iter().enumerate() {
            if l.degree() != n {
                return Err(Error::DegreeMismatch { expected: n, found: l.degree() });
            }
            if l.generator_indices().count() != n.saturating_sub(1) {
                return Err(Error::MalformedAction(format!("level {n} is not a Σ_{n}-set")));
            }
            l.validate()?;
        }
        Ok(SymSeq { levels })
    }

    /// The sequence `(X_0, .., X_D)` with `Σ_n` acting on `X_n` by `swap(n, i, x)`.
    pub fn from_fn(
        bound: usize,
        carrier: impl Fn(usize) -> PtSet,
        swap: impl Fn(usize, usize, usize) -> usize,
    ) -> Result<Self> {
        let levels = (0..=bound)
            .map(|n| GAction::symmetric(carrier(n), n, |i, x| swap(n, i, x)))
            .collect::<Result<Vec<_>>>()?;
        SymSeq::new(levels)
    }

    /// `(S, *, *, ..)`.
    pub fn unit(bound: usize) -> Self {
        let levels = (0..=bound)
            .map(|n| GAction::trivial(if n == 0 { PtSet::s0() } else { PtSet::zero() }, vec![n]))
            .collect();
        SymSeq { levels }
    }

    pub fn zero(bound: usize) -> Self {
        SymSeq { levels: (0..=bound).map(|n| GAction::trivial(PtSet::zero(), vec![n])).collect() }
    }

    /// `(S, T, T^∧2, ..)` with `Σ_n` permuting smash factors.
    pub fn smash_powers(t: PtSet, bound: usize) -> Self {
        let levels = (0..=bound).map(|n| power_action(t, n)).collect();
        SymSeq { levels }
    }

    pub fn bound(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &GAction {
        &self.levels[n]
    }

    pub fn carrier(&self, n: usize) -> PtSet {
        self.levels[n].carrier()
    }

    pub fn levels(&self) -> &[GAction] {
        &self.levels
    }

    pub fn truncate(&self, bound: usize) -> Result<SymSeq> {
        if bound > self.bound() {
            return Err(Error::BoundExceeded { degree: bound, bound: self.bound() });
        }
        Ok(SymSeq { levels: self.levels[..=bound].to_vec() })
    }
}

/// `T^∧n` with `Σ_n` permuting coordinates.
pub fn power_action(t: PtSet, n: usize) -> GAction {
    let codec = Smash::power(t, n);
    let mut coords = Vec::with_capacity(n);
    let tables: Vec<Vec<usize>> = (0..n.saturating_sub(1))
        .map(|i| {
            codec
                .result()
                .elements()
                .map(|x| {
                    if !codec.decode_into(x, &mut coords) {
                        return 0;
                    }
                    coords.swap(i, i + 1);
                    codec.encode(&coords)
                })
                .collect()
        })
        .collect();
    GAction::symmetric(codec.result(), n, |i, x| tables[i][x]).expect("coordinate permutation is an action")
}

/// Levelwise pointed maps `f_n : X_n -> Y_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymSeqMap {
    maps: Vec<PtMap>,
}

impl SymSeqMap {
    pub fn new(maps: Vec<PtMap>) -> Result<Self> {
        if maps.is_empty() {
            return Err(Error::ShapeMismatch("a map of symmetric sequences needs level 0".into()));
        }
        Ok(SymSeqMap { maps })
    }

    pub fn identity(x: &SymSeq) -> Self {
        SymSeqMap { maps: x.levels.iter().map(|l| PtMap::identity(l.carrier())).collect() }
    }

    pub fn zero(x: &SymSeq, y: &SymSeq) -> Result<Self> {
        if x.bound() != y.bound() {
            return Err(Error::BoundExceeded { degree: x.bound(), bound: y.bound() });
        }
        Ok(SymSeqMap {
            maps: (0..=x.bound()).map(|n| PtMap::zero(x.carrier(n), y.carrier(n))).collect(),
        })
    }

    pub fn bound(&self) -> usize {
        self.maps.len() - 1
    }

    pub fn level(&self, n: usize) -> &PtMap {
        &self.maps[n]
    }

    pub fn maps(&self) -> &[PtMap] {
        &self.maps
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &SymSeqMap) -> Result<SymSeqMap> {
        if self.bound() != inner.bound() {
            return Err(Error::BoundExceeded { degree: inner.bound(), bound: self.bound() });
        }
        let maps = self.maps.iter().zip(&inner.maps).map(|(f, g)| f.compose(g)).collect::<Result<_>>()?;
        Ok(SymSeqMap { maps })
    }

    fn check_shape(&self, x: &SymSeq, y: &SymSeq) -> Result<()> {
        if self.bound() != x.bound() || self.bound() != y.bound() {
            return Err(Error::BoundExceeded { degree: self.bound(), bound: x.bound().min(y.bound()) });
        }
        for (n, f) in self.maps.iter().enumerate() {
            if f.source() != x.carrier(n) || f.target() != y.carrier(n) {
                return Err(Error::ShapeMismatch(format!(
                    "level {n}: map {} -> {} between {} and {}",
                    f.source(),
                    f.target(),
                    x.carrier(n),
                    y.carrier(n)
                )));
            }
        }
        Ok(())
    }
}

/// Verifies that every level of `f : X -> Y` is equivariant.
pub fn check_seq_map(id: &str, f: &SymSeqMap, x: &SymSeq, y: &SymSeq) -> Result<Report> {
    let started = Instant::now();
    f.check_shape(x, y)?;
    let mut outcomes = Vec::new();
    for n in 0..=f.bound() {
        outcomes.extend(check_equivariance_map(&format!("{id}/level {n}"), &f.maps[n], x.level(n), y.level(n))?);
    }
    Ok(Report::from_outcomes(id, outcomes, started))
}

/// An element `(p, ρ, x, y)` of `(X ∧ Y)_n` in normal form: `ρ` is the index
/// of a `(p, q)`-shuffle and `x`, `y` are non-basepoints of `X_p`, `Y_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmashElem {
    pub p: usize,
    pub rep: usize,
    pub x: usize,
    pub y: usize,
}

#[derive(Debug, Clone)]
struct SmashLevel {
    pairs: Vec<Smash>,
    summands: Vec<Induced>,
    wedge: Wedge,
}

/// `X ∧ Y` together with the codecs of its normal forms.
#[derive(Debug, Clone)]
pub struct SmashSeq {
    left: SymSeq,
    right: SymSeq,
    seq: SymSeq,
    levels: Vec<SmashLevel>,
}

/// `(X ∧ Y)_n = ⋁_{p+q=n} Σ_n ×_{Σ_p × Σ_q} X_p ∧ Y_q`, up to degree `D`.
pub fn smash_seq(x: &SymSeq, y: &SymSeq) -> Result<SmashSeq> {
    if x.bound() != y.bound() {
        return Err(Error::BoundExceeded { degree: x.bound(), bound: y.bound() });
    }
    let built = (0..=x.bound())
        .into_par_iter()
        .map(|n| smash_level(x, y, n))
        .collect::<Result<Vec<_>>>()?;
    let (levels, actions): (Vec<_>, Vec<_>) = built.into_iter().unzip();
    Ok(SmashSeq { left: x.clone(), right: y.clone(), seq: SymSeq { levels: actions }, levels })
}

fn smash_level(x: &SymSeq, y: &SymSeq, n: usize) -> Result<(SmashLevel, GAction)> {
    let mut pairs = Vec::with_capacity(n + 1);
    let mut summands = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let q = n - p;
        pairs.push(Smash::pair(x.carrier(p), y.carrier(q)));
        summands.push(induce(n, p, q, &GAction::smash(x.level(p), y.level(q)))?);
    }
    let wedge = Wedge::new(summands.iter().map(Induced::carrier).collect());
    let action = GAction::symmetric(wedge.result(), n, |i, e| match wedge.decode(e) {
        None => 0,
        Some((p, a)) => wedge.encode(p, summands[p].action().generator(i).expect("full group")[a]),
    })?;
    Ok((SmashLevel { pairs, summands, wedge }, action))
}

impl SmashSeq {
    pub fn seq(&self) -> &SymSeq {
        &self.seq
    }

    pub fn left(&self) -> &SymSeq {
        &self.left
    }

    pub fn right(&self) -> &SymSeq {
        &self.right
    }

    pub fn bound(&self) -> usize {
        self.seq.bound()
    }

    pub fn carrier(&self, n: usize) -> PtSet {
        self.seq.carrier(n)
    }

    /// The summand `Σ_n ×_{Σ_p × Σ_q} X_p ∧ Y_q` of level `n`.
    pub fn summand(&self, n: usize, p: usize) -> &Induced {
        &self.levels[n].summands[p]
    }

    pub fn shuffle_rep(&self, n: usize, p: usize, rep: usize) -> &Permutation {
        &self.levels[n].summands[p].reps()[rep]
    }

    pub fn encode(&self, n: usize, e: SmashElem) -> usize {
        let lvl = &self.levels[n];
        let a = lvl.pairs[e.p].encode(&[e.x, e.y]);
        lvl.wedge.encode(e.p, lvl.summands[e.p].encode(e.rep, a))
    }

    pub fn decode(&self, n: usize, idx: usize) -> Option<SmashElem> {
        let lvl = &self.levels[n];
        let (p, a) = lvl.wedge.decode(idx)?;
        let (rep, xy) = lvl.summands[p].decode(a)?;
        let c = lvl.pairs[p].decode(xy)?;
        Some(SmashElem { p, rep, x: c[0], y: c[1] })
    }

    /// Normal form of the class of `(w, x ∧ y)` for any `w ∈ Σ_n`.
    pub fn normalize(&self, n: usize, p: usize, w: &Permutation, x: usize, y: usize) -> usize {
        let lvl = &self.levels[n];
        let a = lvl.pairs[p].encode(&[x, y]);
        lvl.wedge.encode(p, lvl.summands[p].normalize(w, a))
    }

    /// Number of elements of level `n` predicted from the factor sizes.
    pub fn expected_size(&self, n: usize) -> usize {
        (0..=n)
            .map(|p| binomial(n, p) * self.left.carrier(p).non_base() * self.right.carrier(n - p).non_base())
            .sum::<usize>()
            + 1
    }

    fn levelwise(&self, target: &SmashSeq, f: impl Fn(usize, SmashElem) -> usize) -> SymSeqMap {
        let maps = (0..=self.bound())
            .map(|n| {
                let images = self
                    .carrier(n)
                    .elements()
                    .map(|e| self.decode(n, e).map_or(0, |d| f(n, d)))
                    .collect();
                PtMap::new(self.carrier(n), target.carrier(n), images).expect("normal forms stay in range")
            })
            .collect();
        SymSeqMap { maps }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `f ∧ g : X ∧ Y -> X' ∧ Y'`, acting summandwise by `f_p ∧ g_q`.
pub fn smash_seq_map(f: &SymSeqMap, g: &SymSeqMap, source: &SmashSeq, target: &SmashSeq) -> Result<SymSeqMap> {
    f.check_shape(&source.left, &target.left)?;
    g.check_shape(&source.right, &target.right)?;
    Ok(source.levelwise(target, |n, e| {
        let (x, y) = (f.maps[e.p].apply(e.x), g.maps[n - e.p].apply(e.y));
        target.encode(n, SmashElem { p: e.p, rep: e.rep, x, y })
    }))
}

fn check_swapped(xy: &SmashSeq, yx: &SmashSeq) -> Result<()> {
    if xy.left != yx.right || xy.right != yx.left {
        return Err(Error::ShapeMismatch("twist needs X ∧ Y and Y ∧ X".into()));
    }
    Ok(())
}

/// The symmetry `X ∧ Y -> Y ∧ X`: `(p, α, x, y) ↦ (q, α χ_{q,p}, y, x)`.
pub fn twist_seq(xy: &SmashSeq, yx: &SmashSeq) -> Result<SymSeqMap> {
    check_swapped(xy, yx)?;
    Ok(xy.levelwise(yx, |n, e| {
        let q = n - e.p;
        let w = xy.shuffle_rep(n, e.p, e.rep).then_after(&shuffle(q, e.p));
        yx.normalize(n, q, &w, e.y, e.x)
    }))
}

/// The twist without the block shuffle: `(p, α, x, y) ↦ (q, α, y, x)`.
/// Not a map of symmetric sequences in general.
pub fn naive_twist_seq(xy: &SmashSeq, yx: &SmashSeq) -> Result<SymSeqMap> {
    check_swapped(xy, yx)?;
    Ok(xy.levelwise(yx, |n, e| {
        let q = n - e.p;
        yx.normalize(n, q, xy.shuffle_rep(n, e.p, e.rep), e.y, e.x)
    }))
}

/// The inclusion `Y -> S ∧ Y` of the `p = 0` summand; inverse to the unitor.
pub fn left_unit_inclusion(sy: &SmashSeq) -> Result<SymSeqMap> {
    if sy.left != SymSeq::unit(sy.bound()) {
        return Err(Error::ShapeMismatch("left factor is not the unit".into()));
    }
    let maps = (0..=sy.bound())
        .map(|n| PtMap::from_fn(sy.right.carrier(n), sy.carrier(n), |y| sy.encode(n, SmashElem { p: 0, rep: 0, x: 1, y })))
        .collect::<Result<_>>()?;
    Ok(SymSeqMap { maps })
}

/// The associator `(X ∧ Y) ∧ Z -> X ∧ (Y ∧ Z)` on normal forms.
///
/// `outer` is `(X ∧ Y) ∧ Z` built on `xy`; `target` is `X ∧ (Y ∧ Z)` built on `yz`.
pub fn associator_seq(outer: &SmashSeq, xy: &SmashSeq, yz: &SmashSeq, target: &SmashSeq) -> Result<SymSeqMap> {
    if outer.left != xy.seq || target.right != yz.seq || xy.left != target.left || xy.right != yz.left || outer.right != yz.right {
        return Err(Error::ShapeMismatch("associator factors do not match".into()));
    }
    Ok(outer.levelwise(target, |n, e| {
        let inner = xy.decode(e.p, e.x).expect("non-basepoint");
        let (p, a) = (inner.p, e.p);
        let w = outer
            .shuffle_rep(n, a, e.rep)
            .then_after(&Permutation::block_sum(xy.shuffle_rep(a, p, inner.rep), &Permutation::identity(n - a)));
        let (rho, h) = coset_factor(&w, p);
        let (h1, h2) = h.split_at(p).expect("coset factor lies in the Young subgroup");
        let x = target.left.level(p).act(&h1, inner.x).expect("in Σ_p");
        let v = yz.normalize(n - p, a - p, &h2, inner.y, e.y);
        let rep = target.summand(n, p).rep_index(&rho).expect("shuffle representative");
        target.encode(n, SmashElem { p, rep, x, y: v })
    }))
}

/// Brute-force size of `Σ_{p+q} ×_{Σ_p × Σ_q} (X_p ∧ Y_q)`: the pairs `(w, a)`
/// are glued along `(w h, a) ~ (w, h a)` for generators `h` and the classes
/// are counted, plus the basepoint.
pub fn orbit_count(xp: &GAction, yq: &GAction) -> usize {
    let (p, q) = (xp.degree(), yq.degree());
    let n = p + q;
    let inner = GAction::smash(xp, yq);
    let nb = inner.carrier().non_base();
    if nb == 0 {
        return 1;
    }
    let perms = all_permutations(n);
    let index: HashMap<&Permutation, usize> = perms.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut parent: Vec<usize> = (0..perms.len() * nb).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in inner.generator_indices().collect::<Vec<_>>() {
        let h = Permutation::adjacent(n, i);
        let table = inner.generator(i).expect("present");
        for (wi, w) in perms.iter().enumerate() {
            let wh = index[&w.then_after(&h)];
            for a in 1..=nb {
                let (u, v) = (find(&mut parent, wh * nb + a - 1), find(&mut parent, wi * nb + table[a] - 1));
                parent[u] = v;
            }
        }
    }
    (0..parent.len()).filter(|&i| find(&mut parent, i) == i).count() + 1
}

/// Brute-force size of `(X ∧ Y)_n`.
pub fn brute_force_level_size(x: &SymSeq, y: &SymSeq, n: usize) -> usize {
    (0..=n).map(|p| orbit_count(x.level(p), y.level(n - p)) - 1).sum::<usize>() + 1
}

/// Compares two composites of symmetric-sequence maps on every level.
pub fn check_seq_maps_equal(id: &str, lhs: &SymSeqMap, rhs: &SymSeqMap) -> Result<Report> {
    let started = Instant::now();
    if lhs.bound() != rhs.bound() {
        return Err(Error::BoundExceeded { degree: lhs.bound(), bound: rhs.bound() });
    }
    let mut outcomes = Vec::new();
    for (n, (f, g)) in lhs.maps.iter().zip(&rhs.maps).enumerate() {
        if f.source() != g.source() || f.target() != g.target() {
            return Err(Error::ShapeMismatch(format!("{id}: level {n} composites have different shapes")));
        }
        outcomes.push(check_pointwise(format!("{id}/level {n}"), f.source().size(), |x| f.apply(x), |x| g.apply(x)));
    }
    Ok(Report::from_outcomes(id, outcomes, started))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(n: usize) -> PtSet {
        PtSet::new(n).unwrap()
    }

    #[test]
    fn smash_powers_have_expected_sizes() {
        let s = SymSeq::smash_powers(pt(3), 3);
        assert_eq!(s.carrier(2).size(), 5);
        let z = SymSeq::smash_powers(PtSet::zero(), 2);
        assert_eq!(z.carrier(0).size(), 2);
        assert_eq!(z.carrier(1).size(), 1);
    }

    #[test]
    fn smash_of_sym_two_point_sets() {
        let t = SymSeq::smash_powers(pt(2), 4);
        let tt = smash_seq(&t, &t).unwrap();
        for n in 0..=4 {
            assert_eq!(tt.carrier(n).size(), (1 << n) + 1);
            assert_eq!(tt.carrier(n).size(), brute_force_level_size(&t, &t, n));
        }
    }

    #[test]
    fn cardinality_formula_matches_orbit_count() {
        let x = SymSeq::smash_powers(pt(3), 3);
        let y = SymSeq::smash_powers(pt(2), 3);
        let xy = smash_seq(&x, &y).unwrap();
        for n in 0..=3 {
            assert_eq!(xy.carrier(n).size(), xy.expected_size(n));
            assert_eq!(xy.carrier(n).size(), brute_force_level_size(&x, &y, n));
        }
    }

    #[test]
    fn normal_forms_round_trip() {
        let x = SymSeq::smash_powers(pt(3), 3);
        let xx = smash_seq(&x, &x).unwrap();
        for n in 0..=3 {
            for e in 1..xx.carrier(n).size() {
                assert_eq!(xx.encode(n, xx.decode(n, e).unwrap()), e);
            }
        }
    }

    #[test]
    fn smash_with_zero_is_zero() {
        let x = SymSeq::smash_powers(pt(3), 3);
        let xz = smash_seq(&x, &SymSeq::zero(3)).unwrap();
        assert!((0..=3).all(|n| xz.carrier(n).is_zero()));
    }

    #[test]
    fn unit_inclusion_is_an_equivariant_bijection() {
        let y = SymSeq::smash_powers(pt(3), 3);
        let sy = smash_seq(&SymSeq::unit(3), &y).unwrap();
        let inc = left_unit_inclusion(&sy).unwrap();
        assert!(inc.maps().iter().all(PtMap::is_bijection));
        assert!(check_seq_map("unit", &inc, &y, sy.seq()).unwrap().passed());
    }

    #[test]
    fn twist_is_an_equivariant_involution() {
        let x = SymSeq::smash_powers(pt(3), 3);
        let y = SymSeq::smash_powers(pt(2), 3);
        let (xy, yx) = (smash_seq(&x, &y).unwrap(), smash_seq(&y, &x).unwrap());
        let t = twist_seq(&xy, &yx).unwrap();
        let back = twist_seq(&yx, &xy).unwrap();
        assert!(check_seq_map("twist", &t, xy.seq(), yx.seq()).unwrap().passed());
        assert_eq!(back.compose(&t).unwrap(), SymSeqMap::identity(xy.seq()));
    }

    #[test]
    fn twist_keeps_labels_on_the_outer_summands() {
        let x = SymSeq::smash_powers(pt(3), 3);
        let xx = smash_seq(&x, &x).unwrap();
        let t = twist_seq(&xx, &xx).unwrap();
        for n in 0..=3 {
            for (p, q) in [(0, n), (n, 0)] {
                let e = SmashElem { p, rep: 0, x: 1, y: 1 };
                let image = xx.decode(n, t.level(n).apply(xx.encode(n, e))).unwrap();
                assert_eq!(image, SmashElem { p: q, rep: 0, x: 1, y: 1 });
            }
        }
    }

    #[test]
    fn naive_twist_first_breaks_in_degree_three() {
        let t = SymSeq::smash_powers(pt(2), 3);
        let tt = smash_seq(&t, &t).unwrap();
        let naive = naive_twist_seq(&tt, &tt).unwrap();
        let failing: Vec<usize> = (0..=3)
            .filter(|&n| {
                let single = SymSeqMap::new(vec![naive.level(n).clone()]).unwrap();
                let src = SymSeq { levels: vec![tt.seq().level(n).clone()] };
                !check_equivariance_map("n", single.level(0), src.level(0), src.level(0))
                    .unwrap()
                    .iter()
                    .all(|o| o.passed())
            })
            .collect();
        assert_eq!(failing, vec![3]);
        assert!(!check_seq_map("naive", &naive, tt.seq(), tt.seq()).unwrap().passed());
    }

    #[test]
    fn associator_is_an_equivariant_bijection() {
        let (x, y, z) = (SymSeq::smash_powers(pt(3), 3), SymSeq::smash_powers(pt(2), 3), SymSeq::smash_powers(pt(3), 3));
        let xy = smash_seq(&x, &y).unwrap();
        let yz = smash_seq(&y, &z).unwrap();
        let outer = smash_seq(xy.seq(), &z).unwrap();
        let target = smash_seq(&x, yz.seq()).unwrap();
        let a = associator_seq(&outer, &xy, &yz, &target).unwrap();
        assert!(a.maps().iter().all(PtMap::is_bijection));
        assert!(check_seq_map("assoc", &a, outer.seq(), target.seq()).unwrap().passed());
    }

    #[test]
    fn smash_of_maps_is_functorial() {
        let x = SymSeq::smash_powers(pt(3), 2);
        let y = SymSeq::smash_powers(pt(2), 2);
        let xx = smash_seq(&x, &x).unwrap();
        let yy = smash_seq(&y, &y).unwrap();
        let id = smash_seq_map(&SymSeqMap::identity(&x), &SymSeqMap::identity(&x), &xx, &xx).unwrap();
        assert_eq!(id, SymSeqMap::identity(xx.seq()));
        let zero = SymSeqMap::zero(&x, &y).unwrap();
        let z = smash_seq_map(&zero, &zero, &xx, &yy).unwrap();
        assert!(z.maps().iter().all(PtMap::is_zero));
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let x = SymSeq::smash_powers(pt(3), 2);
        let y = SymSeq::smash_powers(pt(2), 2);
        let xx = smash_seq(&x, &x).unwrap();
        let f = SymSeqMap::identity(&y);
        assert!(smash_seq_map(&f, &f, &xx, &xx).is_err());
        assert!(smash_seq(&x, &SymSeq::smash_powers(pt(2), 3)).is_err());
    }
}

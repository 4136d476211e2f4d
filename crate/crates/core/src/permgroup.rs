//! Symmetric groups, Young subgroups and pointed sets with a group action.
//!
//! Permutations are given in one-line notation with letters `1..=n`. They act
//! on the left; on a tuple of coordinates `τ` moves the entry in position `i`
//! to position `τ(i)`.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ptset::PtSet;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // zero-based images
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from one-line notation with letters `1..=n`.
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &x in &one_line {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::NotAPermutation { degree: n, images: one_line });
            }
        }
        Ok(Permutation { images: one_line.into_iter().map(|x| x - 1).collect() })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// The adjacent transposition exchanging letters `i + 1` and `i + 2`.
    pub fn adjacent(n: usize, i: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, i + 1);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the letter `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`, i.e. `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: other.degree() });
        }
        Ok(self.then_after(other))
    }

    pub(crate) fn then_after(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&j| self.images[j]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// Acts as `p` on the first `n` letters and as `q` shifted by `n` on the rest.
    pub fn block_sum(p: &Permutation, q: &Permutation) -> Permutation {
        let n = p.degree();
        let images = p.images.iter().copied().chain(q.images.iter().map(|&x| x + n)).collect();
        Permutation { images }
    }

    /// Splits an element of `Σ_p × Σ_{n-p}` into its two blocks.
    pub fn split_at(&self, p: usize) -> Option<(Permutation, Permutation)> {
        if p > self.degree() || !self.preserves_blocks(&[p, self.degree() - p]) {
            return None;
        }
        let left = Permutation { images: self.images[..p].to_vec() };
        let right = Permutation { images: self.images[p..].iter().map(|&x| x - p).collect() };
        Some((left, right))
    }

    /// Moves coordinates: entry `i` of `coords` lands in position `self(i)`.
    pub fn permute<T: Clone>(&self, coords: &[T]) -> Vec<T> {
        debug_assert_eq!(coords.len(), self.degree());
        let mut out = coords.to_vec();
        for (i, c) in coords.iter().enumerate() {
            out[self.images[i]] = c.clone();
        }
        out
    }

    /// A word `[i_1, .., i_k]` with `self = s_{i_k} ⋯ s_{i_1}` (zero-based
    /// adjacent transpositions), so acting by `self` applies `s_{i_1}` first.
    pub fn descent_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut word = Vec::new();
        'outer: loop {
            for i in 0..w.len().saturating_sub(1) {
                if w[i] > w[i + 1] {
                    w.swap(i, i + 1);
                    word.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        word
    }

    /// Does `self` preserve each block of the composition `blocks`?
    pub fn preserves_blocks(&self, blocks: &[usize]) -> bool {
        let mut start = 0;
        for &b in blocks {
            if self.images[start..start + b].iter().any(|&x| x < start || x >= start + b) {
                return false;
            }
            start += b;
        }
        start == self.degree()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_line().iter().join(","))
    }
}

/// The `(q, p)`-shuffle `χ_{q,p}` in `Σ_{p+q}`: `i ↦ i + p` for `i ≤ q` and
/// `i ↦ i - q` otherwise. It moves the first `q` letters past the last `p`.
pub fn shuffle(q: usize, p: usize) -> Permutation {
    let images = (0..q).map(|i| i + p).chain((q..p + q).map(|i| i - q)).collect();
    Permutation { images }
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    (0..n).permutations(n).map(|images| Permutation { images }).collect()
}

/// The Young subgroup `Σ_{b_1} × .. × Σ_{b_k}` as block sums, in lexicographic order.
pub fn young_subgroup(blocks: &[usize]) -> Vec<Permutation> {
    let n: usize = blocks.iter().sum();
    let mut out = vec![Permutation::identity(0)];
    for &b in blocks {
        let factor = all_permutations(b);
        out = out
            .iter()
            .flat_map(|p| factor.iter().map(move |q| Permutation::block_sum(p, q)))
            .collect();
    }
    out.sort();
    debug_assert!(out.iter().all(|p| p.degree() == n));
    out
}

/// Minimal-length representatives of `Σ_{p+q} / (Σ_p × Σ_q)`: the
/// permutations increasing on `1..=p` and on `p+1..=p+q`, in lexicographic order.
pub fn enumerate_shuffle_reps(p: usize, q: usize) -> Vec<Permutation> {
    let n = p + q;
    (0..n)
        .combinations(p)
        .map(|first| {
            let rest = (0..n).filter(|x| !first.contains(x));
            Permutation { images: first.iter().copied().chain(rest).collect() }
        })
        .collect()
}

/// Writes `w = ρ ∘ h` with `ρ` a `(p, q)`-shuffle and `h ∈ Σ_p × Σ_q`.
pub fn coset_factor(w: &Permutation, p: usize) -> (Permutation, Permutation) {
    let mut first: Vec<usize> = w.images[..p].to_vec();
    let mut rest: Vec<usize> = w.images[p..].to_vec();
    first.sort_unstable();
    rest.sort_unstable();
    let rho = Permutation { images: first.into_iter().chain(rest).collect() };
    let h = rho.inverse().then_after(w);
    (rho, h)
}

fn generator_slots(blocks: &[usize]) -> Vec<bool> {
    let n: usize = blocks.iter().sum();
    let mut slots = vec![false; n.saturating_sub(1)];
    let mut start = 0;
    for &b in blocks {
        for i in start..(start + b).saturating_sub(1) {
            slots[i] = true;
        }
        start += b;
    }
    slots
}

/// A finite pointed set with a basepoint-fixing action of a Young subgroup
/// `Σ_{b_1} × .. × Σ_{b_k} ⊂ Σ_n`.
///
/// Only the adjacent transpositions inside blocks are tabulated; a general
/// element acts through its descent word.
#[derive(Clone, PartialEq, Eq)]
pub struct GAction {
    carrier: PtSet,
    blocks: Vec<usize>,
    generators: Vec<Option<Vec<usize>>>,
}

impl fmt::Debug for GAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GAction")
            .field("carrier", &self.carrier)
            .field("blocks", &self.blocks)
            .finish_non_exhaustive()
    }
}

impl GAction {
    /// Tabulates an action from its adjacent transpositions; `swap(i, x)` is
    /// the image of `x` under the transposition of letters `i + 1, i + 2`.
    pub fn from_generators(
        carrier: PtSet,
        blocks: Vec<usize>,
        swap: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let slots = generator_slots(&blocks);
        let generators = slots
            .iter()
            .enumerate()
            .map(|(i, &on)| on.then(|| carrier.elements().map(|x| swap(i, x)).collect()))
            .collect();
        let action = GAction { carrier, blocks, generators };
        action.validate()?;
        Ok(action)
    }

    /// As [`GAction::from_generators`] with the full symmetric group `Σ_n`.
    pub fn symmetric(carrier: PtSet, n: usize, swap: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::from_generators(carrier, vec![n], swap)
    }

    pub fn trivial(carrier: PtSet, blocks: Vec<usize>) -> Self {
        let slots = generator_slots(&blocks);
        let generators = slots.iter().map(|&on| on.then(|| carrier.elements().collect())).collect();
        GAction { carrier, blocks, generators }
    }

    pub fn carrier(&self) -> PtSet {
        self.carrier
    }

    pub fn degree(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Zero-based indices `i` of the tabulated transpositions `s_i`.
    pub fn generator_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.generators.iter().enumerate().filter_map(|(i, g)| g.as_ref().map(|_| i))
    }

    pub fn generator(&self, i: usize) -> Option<&[usize]> {
        self.generators.get(i).and_then(|g| g.as_deref())
    }

    /// Is `g` an element of the acting Young subgroup?
    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree() && g.preserves_blocks(&self.blocks)
    }

    /// Every element of the acting group.
    pub fn group(&self) -> Vec<Permutation> {
        young_subgroup(&self.blocks)
    }

    pub fn act(&self, g: &Permutation, x: usize) -> Result<usize> {
        self.require(g)?;
        Ok(self.act_unchecked(g, x))
    }

    pub(crate) fn act_unchecked(&self, g: &Permutation, x: usize) -> usize {
        g.descent_word().into_iter().fold(x, |y, i| self.generators[i].as_ref().expect("in group")[y])
    }

    /// The permutation of the carrier induced by `g`.
    pub fn table(&self, g: &Permutation) -> Result<Vec<usize>> {
        self.require(g)?;
        let mut t: Vec<usize> = self.carrier.elements().collect();
        for i in g.descent_word() {
            let s = self.generators[i].as_ref().expect("in group");
            for y in t.iter_mut() {
                *y = s[*y];
            }
        }
        Ok(t)
    }

    fn require(&self, g: &Permutation) -> Result<()> {
        if g.degree() != self.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: g.degree() });
        }
        if !self.contains(g) {
            return Err(Error::MalformedAction(format!("{g} is not in the Young subgroup {:?}", self.blocks)));
        }
        Ok(())
    }

    /// Product action on `A ∧ B` of `G × H`, blocks concatenated.
    pub fn smash(a: &GAction, b: &GAction) -> GAction {
        let codec = crate::ptset::Smash::pair(a.carrier, b.carrier);
        let carrier = codec.result();
        let na = a.degree();
        let mut blocks = a.blocks.clone();
        blocks.extend_from_slice(&b.blocks);
        let slots = generator_slots(&blocks);
        let generators = slots
            .iter()
            .enumerate()
            .map(|(i, &on)| {
                on.then(|| {
                    carrier
                        .elements()
                        .map(|x| match codec.decode(x) {
                            None => 0,
                            Some(c) if i < na => codec.encode(&[a.generators[i].as_ref().unwrap()[c[0]], c[1]]),
                            Some(c) => codec.encode(&[c[0], b.generators[i - na].as_ref().unwrap()[c[1]]]),
                        })
                        .collect()
                })
            })
            .collect();
        GAction { carrier, blocks, generators }
    }

    /// Restriction to the Young subgroup of a finer composition of the same degree.
    pub fn restrict(&self, blocks: Vec<usize>) -> Result<GAction> {
        let finer = generator_slots(&blocks);
        if blocks.iter().sum::<usize>() != self.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: blocks.iter().sum() });
        }
        let mut generators = Vec::with_capacity(finer.len());
        for (i, &on) in finer.iter().enumerate() {
            if on {
                let g = self.generators[i]
                    .clone()
                    .ok_or_else(|| Error::MalformedAction(format!("{blocks:?} is not finer than {:?}", self.blocks)))?;
                generators.push(Some(g));
            } else {
                generators.push(None);
            }
        }
        Ok(GAction { carrier: self.carrier, blocks, generators })
    }

    /// Checks that the tables define an action: each generator is an
    /// involution fixing the basepoint and the Coxeter relations hold.
    pub fn validate(&self) -> Result<()> {
        let size = self.carrier.size();
        for (i, g) in self.generators.iter().enumerate() {
            let Some(g) = g else { continue };
            if g.len() != size || g[0] != 0 {
                return Err(Error::MalformedAction(format!("generator s{} does not fix the basepoint", i + 1)));
            }
            if let Some(x) = (0..size).find(|&x| g[x] >= size || g[g[x]] != x) {
                return Err(Error::MalformedAction(format!("s{} is not an involution at {x}", i + 1)));
            }
        }
        let present: Vec<usize> = self.generator_indices().collect();
        for (a, &i) in present.iter().enumerate() {
            for &j in &present[a + 1..] {
                let (gi, gj) = (self.generators[i].as_ref().unwrap(), self.generators[j].as_ref().unwrap());
                let ok = if j == i + 1 {
                    (0..size).all(|x| gi[gj[gi[x]]] == gj[gi[gj[x]]])
                } else {
                    (0..size).all(|x| gi[gj[x]] == gj[gi[x]])
                };
                if !ok {
                    return Err(Error::MalformedAction(format!("Coxeter relation fails for s{} and s{}", i + 1, j + 1)));
                }
            }
        }
        Ok(())
    }

    /// Exhaustive action law: `(gh)·x = g·(h·x)` for all group elements and
    /// all `x`. Returns the first failing triple.
    pub fn check_action_law(&self) -> Option<(Permutation, Permutation, usize)> {
        let group = self.group();
        let tables: HashMap<&Permutation, Vec<usize>> =
            group.iter().map(|g| (g, self.table(g).expect("in group"))).collect();
        if tables[&Permutation::identity(self.degree())].iter().enumerate().any(|(i, &x)| i != x) {
            return Some((Permutation::identity(self.degree()), Permutation::identity(self.degree()), 0));
        }
        for g in &group {
            for h in &group {
                let gh = g.then_after(h);
                let (tg, th, tgh) = (&tables[g], &tables[h], &tables[&gh]);
                if let Some(x) = self.carrier.elements().find(|&x| tgh[x] != tg[th[x]]) {
                    return Some((g.clone(), h.clone(), x));
                }
            }
        }
        None
    }
}

/// The induced pointed set `Σ_{p+q} ×_{Σ_p × Σ_q} A`.
///
/// Non-basepoint elements are pairs `(ρ, a)` with `ρ` a shuffle
/// representative and `a` a non-basepoint of `A`, encoded as
/// `1 + r (|A| - 1) + (a - 1)` where `r` is the index of `ρ`.
#[derive(Debug, Clone)]
pub struct Induced {
    p: usize,
    q: usize,
    reps: Vec<Permutation>,
    rep_index: HashMap<Permutation, usize>,
    inner: GAction,
    action: GAction,
}

impl Induced {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn rep_index(&self, rho: &Permutation) -> Option<usize> {
        self.rep_index.get(rho).copied()
    }

    pub fn inner(&self) -> &GAction {
        &self.inner
    }

    pub fn action(&self) -> &GAction {
        &self.action
    }

    pub fn carrier(&self) -> PtSet {
        self.action.carrier
    }

    pub fn encode(&self, rep: usize, a: usize) -> usize {
        if a == 0 {
            0
        } else {
            1 + rep * self.inner.carrier.non_base() + (a - 1)
        }
    }

    pub fn decode(&self, x: usize) -> Option<(usize, usize)> {
        if x == 0 {
            return None;
        }
        let nb = self.inner.carrier.non_base();
        Some(((x - 1) / nb, (x - 1) % nb + 1))
    }

    /// Normal form of the class of `(w, a)` for an arbitrary `w ∈ Σ_{p+q}`.
    pub fn normalize(&self, w: &Permutation, a: usize) -> usize {
        if a == 0 {
            return 0;
        }
        let (rho, h) = coset_factor(w, self.p);
        self.encode(self.rep_index[&rho], self.inner.act_unchecked(&h, a))
    }
}

/// Induces a `Σ_p × Σ_q`-set up to `Σ_{p+q}`: `g·(ρ, a) = (ρ', h·a)` where
/// `gρ = ρ'h` is the coset factorization.
pub fn induce(ambient_degree: usize, p: usize, q: usize, a: &GAction) -> Result<Induced> {
    if ambient_degree != p + q {
        return Err(Error::DegreeMismatch { expected: p + q, found: ambient_degree });
    }
    if a.degree() != p + q {
        return Err(Error::DegreeMismatch { expected: p + q, found: a.degree() });
    }
    let expected = generator_slots(&[p, q]);
    let actual: Vec<bool> = a.generators.iter().map(Option::is_some).collect();
    if expected != actual {
        return Err(Error::MalformedAction(format!(
            "expected an action of Σ_{p} × Σ_{q}, found blocks {:?}",
            a.blocks
        )));
    }
    a.validate()?;
    let inner = a.restrict(vec![p, q])?;
    let reps = enumerate_shuffle_reps(p, q);
    let rep_index: HashMap<Permutation, usize> = reps.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    let n = p + q;
    let nb = inner.carrier.non_base();
    let carrier = PtSet::new(reps.len() * nb + 1)?;
    let mut induced = Induced {
        p,
        q,
        reps,
        rep_index,
        inner,
        action: GAction::trivial(carrier, vec![n]),
    };
    let action = GAction::symmetric(carrier, n, |i, x| match induced.decode(x) {
        None => 0,
        Some((r, y)) => {
            let w = Permutation::adjacent(n, i).then_after(&induced.reps[r]);
            induced.normalize(&w, y)
        }
    })?;
    induced.action = action;
    Ok(induced)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn compose_examples() {
        assert!(perm(&[2, 1]).compose(&perm(&[2, 1])).unwrap().is_identity());
        assert_eq!(perm(&[2, 3, 1]).compose(&perm(&[2, 3, 1])).unwrap(), perm(&[3, 1, 2]));
        let p = perm(&[3, 1, 4, 2]);
        assert_eq!(p.compose(&Permutation::identity(4)).unwrap(), p);
        assert_eq!(
            perm(&[1, 2]).compose(&perm(&[1])),
            Err(Error::DegreeMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn compose_is_pointwise() {
        let p = perm(&[3, 1, 4, 2]);
        let q = perm(&[2, 4, 1, 3]);
        let pq = p.compose(&q).unwrap();
        for i in 1..=4 {
            assert_eq!(pq.apply(i), p.apply(q.apply(i)));
        }
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
    }

    #[test]
    fn split_inverts_block_sum() {
        let (a, b) = (perm(&[2, 1, 3]), perm(&[2, 1]));
        let s = Permutation::block_sum(&a, &b);
        assert_eq!(s.split_at(3), Some((a, b)));
        assert_eq!(perm(&[2, 3, 1]).split_at(1), None);
    }

    #[test]
    fn block_sum_examples() {
        assert_eq!(Permutation::block_sum(&perm(&[2, 1]), &perm(&[1])), perm(&[2, 1, 3]));
        assert_eq!(
            Permutation::block_sum(&Permutation::identity(2), &Permutation::identity(3)),
            Permutation::identity(5)
        );
        assert_eq!(Permutation::block_sum(&perm(&[1]), &perm(&[2, 1])), perm(&[1, 3, 2]));
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffle(1, 1), perm(&[2, 1]));
        assert_eq!(shuffle(2, 1), perm(&[2, 3, 1]));
        for p in 0..5 {
            assert!(shuffle(0, p).is_identity());
            assert!(shuffle(p, 0).is_identity());
        }
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
    fn shuffle_reps_examples() {
        let r11 = enumerate_shuffle_reps(1, 1);
        assert_eq!(r11, vec![perm(&[1, 2]), perm(&[2, 1])]);
        let r21 = enumerate_shuffle_reps(2, 1);
        assert_eq!(r21, vec![perm(&[1, 2, 3]), perm(&[1, 3, 2]), perm(&[2, 3, 1])]);
        assert_eq!(enumerate_shuffle_reps(0, 3), vec![Permutation::identity(3)]);
        assert_eq!(enumerate_shuffle_reps(3, 2).len(), 10);
    }

    #[test]
    fn shuffle_reps_are_one_per_coset() {
        // brute force: group Σ_n by the set g({1..p})
        for n in 0..=5 {
            for p in 0..=n {
                let q = n - p;
                let mut cosets: Vec<Vec<usize>> = all_permutations(n)
                    .iter()
                    .map(|g| {
                        let mut s: Vec<usize> = (1..=p).map(|i| g.apply(i)).collect();
                        s.sort();
                        s
                    })
                    .collect();
                cosets.sort();
                cosets.dedup();
                let reps = enumerate_shuffle_reps(p, q);
                assert_eq!(reps.len(), cosets.len());
                let mut sorted = reps.clone();
                sorted.sort();
                assert_eq!(sorted, reps, "lexicographic order");
            }
        }
    }

    #[test]
    fn coset_factorization_is_unique() {
        for (p, q) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (0, 3)] {
            let n = p + q;
            let reps = enumerate_shuffle_reps(p, q);
            let sub = young_subgroup(&[p, q]);
            for g in all_permutations(n) {
                for rho in &reps {
                    let w = g.then_after(rho);
                    let hits = reps
                        .iter()
                        .flat_map(|r| sub.iter().map(move |h| (r, h)))
                        .filter(|(r, h)| r.then_after(h) == w)
                        .count();
                    assert_eq!(hits, 1);
                    let (r, h) = coset_factor(&w, p);
                    assert!(h.preserves_blocks(&[p, q]));
                    assert_eq!(r.then_after(&h), w);
                }
            }
        }
    }

    #[test]
    fn descent_word_reconstructs_the_permutation() {
        for g in all_permutations(4) {
            let word = g.descent_word();
            let rebuilt = word
                .iter()
                .fold(Permutation::identity(4), |acc, &i| Permutation::adjacent(4, i).then_after(&acc));
            assert_eq!(rebuilt, g);
        }
    }

    fn free_product_action(p: usize, q: usize) -> GAction {
        // Σ_p × Σ_q acting on itself by left multiplication, plus a basepoint
        let group = young_subgroup(&[p, q]);
        let index: HashMap<Permutation, usize> = group.iter().cloned().enumerate().map(|(i, g)| (g, i + 1)).collect();
        let carrier = PtSet::new(group.len() + 1).unwrap();
        GAction::from_generators(carrier, vec![p, q], |i, x| {
            if x == 0 {
                0
            } else {
                index[&Permutation::adjacent(p + q, i).then_after(&group[x - 1])]
            }
        })
        .unwrap()
    }

    #[test]
    fn induce_examples() {
        let one = GAction::trivial(PtSet::s0(), vec![1, 1]);
        let ind = induce(2, 1, 1, &one).unwrap();
        assert_eq!(ind.carrier().size(), 3);

        let zero = GAction::trivial(PtSet::zero(), vec![2, 1]);
        assert_eq!(induce(3, 2, 1, &zero).unwrap().carrier(), PtSet::zero());

        let a = free_product_action(2, 0);
        let ind = induce(2, 2, 0, &a).unwrap();
        assert_eq!(ind.carrier(), a.carrier());
    }

    #[test]
    fn induce_counts_and_action_law() {
        for (p, q) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)] {
            let a = free_product_action(p, q);
            let ind = induce(p + q, p, q, &a).unwrap();
            let index = enumerate_shuffle_reps(p, q).len();
            assert_eq!(ind.carrier().non_base(), index * a.carrier().non_base());
            assert_eq!(ind.action().check_action_law(), None, "p={p} q={q}");
        }
    }

    #[test]
    fn induce_rejects_wrong_group() {
        let a = GAction::trivial(PtSet::s0(), vec![2]);
        assert!(matches!(induce(2, 1, 1, &a), Err(Error::MalformedAction(_))));
        assert!(matches!(induce(3, 1, 1, &a), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn malformed_tables_are_rejected() {
        // s1 = (1 2) and s2 = (3 4) commute, so s1 s2 s1 != s2 s1 s2
        let c = PtSet::new(5).unwrap();
        let bad = GAction::from_generators(c, vec![3], |i, x| match (i, x) {
            (0, 1) => 2,
            (0, 2) => 1,
            (1, 3) => 4,
            (1, 4) => 3,
            (_, x) => x,
        });
        assert!(matches!(bad, Err(Error::MalformedAction(_))));
        let moves_base = GAction::from_generators(c, vec![2], |_, x| [1, 0, 2, 3, 4][x]);
        assert!(moves_base.is_err());
    }

    #[test]
    fn act_requires_group_membership() {
        let a = GAction::trivial(PtSet::s0(), vec![1, 1]);
        assert!(a.act(&perm(&[2, 1]), 1).is_err());
        assert_eq!(a.act(&perm(&[1, 2]), 1), Ok(1));
    }
}

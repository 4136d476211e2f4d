//! Finite pointed sets: the concrete base category.
//!
//! A pointed set of size `k` is `{0, 1, .., k-1}` with basepoint `0`. The
//! one-point set is the zero object and `S0` (size 2) is the monoidal unit.
//! Smash products use a row-major codec on non-basepoint coordinates, which
//! makes the associator and both unitors the identity on indices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest hom-set that [`HomSet`] will enumerate.
pub const HOM_LIMIT: usize = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PtSet {
    size: usize,
}

impl PtSet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::ShapeMismatch("a pointed set has at least its basepoint".into()));
        }
        Ok(PtSet { size })
    }

    /// The one-point set.
    pub const fn zero() -> Self {
        PtSet { size: 1 }
    }

    /// `S0 = {0, 1}`, the unit for the smash product.
    pub const fn s0() -> Self {
        PtSet { size: 2 }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of non-basepoint elements.
    pub fn non_base(&self) -> usize {
        self.size - 1
    }

    pub fn is_zero(&self) -> bool {
        self.size == 1
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn smash(&self, other: &PtSet) -> PtSet {
        PtSet { size: self.non_base() * other.non_base() + 1 }
    }

    pub fn smash_power(&self, n: usize) -> PtSet {
        PtSet { size: self.non_base().pow(n as u32) + 1 }
    }
}

impl fmt::Display for PtSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_+", self.size - 1)
    }
}

/// A basepoint-preserving map of finite pointed sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PtMap {
    source: PtSet,
    target: PtSet,
    images: Vec<usize>,
}

impl PtMap {
    pub fn new(source: PtSet, target: PtSet, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.size() {
            return Err(Error::ShapeMismatch(format!(
                "map on a set of size {} given {} images",
                source.size(),
                images.len()
            )));
        }
        if images[0] != 0 {
            return Err(Error::BasepointNotPreserved);
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= target.size()) {
            return Err(Error::ImageOutOfRange { image: bad, target: target.size() });
        }
        Ok(PtMap { source, target, images })
    }

    /// Tabulates `f` on the non-basepoint elements of `source`.
    pub fn from_fn(source: PtSet, target: PtSet, f: impl Fn(usize) -> usize) -> Result<Self> {
        let mut images = Vec::with_capacity(source.size());
        images.push(0);
        images.extend((1..source.size()).map(f));
        PtMap::new(source, target, images)
    }

    pub fn identity(a: PtSet) -> Self {
        PtMap { source: a, target: a, images: (0..a.size()).collect() }
    }

    pub fn zero(source: PtSet, target: PtSet) -> Self {
        PtMap { source, target, images: vec![0; source.size()] }
    }

    pub fn source(&self) -> PtSet {
        self.source
    }

    pub fn target(&self) -> PtSet {
        self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PtMap) -> Result<PtMap> {
        if inner.target != self.source {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.source, self.target, inner.source, inner.target
            )));
        }
        Ok(PtMap {
            source: inner.source,
            target: self.target,
            images: inner.images.iter().map(|&y| self.images[y]).collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|&y| y == 0)
    }

    pub fn is_bijection(&self) -> bool {
        if self.source.size() != self.target.size() {
            return false;
        }
        let mut seen = vec![false; self.target.size()];
        self.images.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn inverse(&self) -> Option<PtMap> {
        if !self.is_bijection() {
            return None;
        }
        let mut images = vec![0; self.source.size()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Some(PtMap { source: self.target, target: self.source, images })
    }
}

/// Row-major codec for an iterated smash product `F_1 ∧ .. ∧ F_k`.
///
/// A tuple of coordinates encodes to `0` as soon as one coordinate is a
/// basepoint. The empty smash is `S0`, whose non-basepoint is the empty tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smash {
    factors: Vec<PtSet>,
    strides: Vec<usize>,
    result: PtSet,
}

impl Smash {
    pub fn new(factors: Vec<PtSet>) -> Self {
        let mut strides = vec![1; factors.len()];
        let mut acc = 1usize;
        for (i, f) in factors.iter().enumerate().rev() {
            strides[i] = acc;
            acc = acc.saturating_mul(f.non_base());
        }
        Smash { factors, strides, result: PtSet { size: acc.saturating_add(1) } }
    }

    pub fn pair(a: PtSet, b: PtSet) -> Self {
        Smash::new(vec![a, b])
    }

    pub fn power(a: PtSet, n: usize) -> Self {
        Smash::new(vec![a; n])
    }

    pub fn factors(&self) -> &[PtSet] {
        &self.factors
    }

    pub fn result(&self) -> PtSet {
        self.result
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.factors.len());
        let mut idx = 1;
        for (c, s) in coords.iter().zip(&self.strides) {
            if *c == 0 {
                return 0;
            }
            idx += (c - 1) * s;
        }
        idx
    }

    /// Non-basepoint coordinates of `idx`, or `None` for the basepoint.
    pub fn decode(&self, idx: usize) -> Option<Vec<usize>> {
        if idx == 0 {
            return None;
        }
        let mut rest = idx - 1;
        let mut coords = Vec::with_capacity(self.factors.len());
        for s in &self.strides {
            coords.push(rest / s + 1);
            rest %= s;
        }
        Some(coords)
    }

    /// Decodes into a caller-owned buffer; returns false for the basepoint.
    pub fn decode_into(&self, idx: usize, out: &mut Vec<usize>) -> bool {
        out.clear();
        if idx == 0 {
            return false;
        }
        let mut rest = idx - 1;
        for s in &self.strides {
            out.push(rest / s + 1);
            rest %= s;
        }
        true
    }
}

/// `f ∧ g : A ∧ B -> A' ∧ B'`.
pub fn smash_maps(f: &PtMap, g: &PtMap) -> PtMap {
    let src = Smash::pair(f.source, g.source);
    let tgt = Smash::pair(f.target, g.target);
    let mut images = vec![0; src.result().size()];
    for (x, slot) in images.iter_mut().enumerate().skip(1) {
        let c = src.decode(x).expect("non-basepoint");
        *slot = tgt.encode(&[f.apply(c[0]), g.apply(c[1])]);
    }
    PtMap { source: src.result(), target: tgt.result(), images }
}

/// Codec for a finite wedge `A_1 ∨ .. ∨ A_k`; summands are laid out in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wedge {
    summands: Vec<PtSet>,
    offsets: Vec<usize>,
    result: PtSet,
}

impl Wedge {
    pub fn new(summands: Vec<PtSet>) -> Self {
        let mut offsets = Vec::with_capacity(summands.len());
        let mut acc = 0;
        for s in &summands {
            offsets.push(acc);
            acc += s.non_base();
        }
        Wedge { summands, offsets, result: PtSet { size: acc + 1 } }
    }

    pub fn summands(&self) -> &[PtSet] {
        &self.summands
    }

    pub fn result(&self) -> PtSet {
        self.result
    }

    pub fn encode(&self, summand: usize, a: usize) -> usize {
        if a == 0 {
            0
        } else {
            self.offsets[summand] + a
        }
    }

    pub fn decode(&self, idx: usize) -> Option<(usize, usize)> {
        if idx == 0 {
            return None;
        }
        let k = self.offsets.partition_point(|&o| o < idx) - 1;
        Some((k, idx - self.offsets[k]))
    }

    pub fn injection(&self, summand: usize) -> PtMap {
        let src = self.summands[summand];
        PtMap {
            source: src,
            target: self.result,
            images: (0..src.size()).map(|a| self.encode(summand, a)).collect(),
        }
    }
}

/// The pointed set `Hom(A, B)`, pointed at the zero map.
///
/// Maps are ordered lexicographically by their image sequence on
/// `1..|A|`, so index 0 is the zero map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomSet {
    source: PtSet,
    target: PtSet,
    len: usize,
}

impl HomSet {
    pub fn new(source: PtSet, target: PtSet) -> Result<Self> {
        let exponent = source.non_base();
        let mut len = 1usize;
        for _ in 0..exponent {
            len = len
                .checked_mul(target.size())
                .filter(|&l| l <= HOM_LIMIT)
                .ok_or(Error::HomTooLarge { base: target.size(), exponent })?;
        }
        Ok(HomSet { source, target, len })
    }

    pub fn source(&self) -> PtSet {
        self.source
    }

    pub fn target(&self) -> PtSet {
        self.target
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The hom-set as a pointed set.
    pub fn as_ptset(&self) -> PtSet {
        PtSet { size: self.len }
    }

    pub fn decode(&self, idx: usize) -> PtMap {
        PtMap { source: self.source, target: self.target, images: self.decode_images(idx) }
    }

    pub fn decode_images(&self, mut idx: usize) -> Vec<usize> {
        let b = self.target.size();
        let mut images = vec![0; self.source.size()];
        for slot in images.iter_mut().skip(1).rev() {
            *slot = idx % b;
            idx /= b;
        }
        images
    }

    pub fn encode(&self, f: &PtMap) -> usize {
        debug_assert_eq!(f.source, self.source);
        debug_assert_eq!(f.target, self.target);
        self.encode_images(&f.images)
    }

    pub fn encode_images(&self, images: &[usize]) -> usize {
        let b = self.target.size();
        images.iter().skip(1).fold(0, |acc, &y| acc * b + y)
    }

    pub fn iter(&self) -> impl Iterator<Item = PtMap> + '_ {
        (0..self.len).map(move |i| self.decode(i))
    }
}

/// Every pointed map `A -> B` in lexicographic order; index 0 is the zero map.
pub fn hom(a: PtSet, b: PtSet) -> Result<Vec<PtMap>> {
    let h = HomSet::new(a, b)?;
    Ok(h.iter().collect())
}

/// `(A ∧ B) ∧ C -> A ∧ (B ∧ C)`.
pub fn associator(a: PtSet, b: PtSet, c: PtSet) -> PtMap {
    let ab = Smash::pair(a, b);
    let left = Smash::pair(ab.result(), c);
    let bc = Smash::pair(b, c);
    let right = Smash::pair(a, bc.result());
    let images = (0..left.result().size())
        .map(|x| match left.decode(x) {
            None => 0,
            Some(outer) => {
                let inner = ab.decode(outer[0]).expect("non-basepoint");
                right.encode(&[inner[0], bc.encode(&[inner[1], outer[1]])])
            }
        })
        .collect();
    PtMap { source: left.result(), target: right.result(), images }
}

/// `S0 ∧ A -> A`.
pub fn left_unitor(a: PtSet) -> PtMap {
    let src = Smash::pair(PtSet::s0(), a);
    let images = (0..src.result().size()).map(|x| src.decode(x).map_or(0, |c| c[1])).collect();
    PtMap { source: src.result(), target: a, images }
}

/// `A ∧ S0 -> A`.
pub fn right_unitor(a: PtSet) -> PtMap {
    let src = Smash::pair(a, PtSet::s0());
    let images = (0..src.result().size()).map(|x| src.decode(x).map_or(0, |c| c[0])).collect();
    PtMap { source: src.result(), target: a, images }
}

/// The symmetry `A ∧ B -> B ∧ A`.
pub fn twist(a: PtSet, b: PtSet) -> PtMap {
    let src = Smash::pair(a, b);
    let tgt = Smash::pair(b, a);
    let images = (0..src.result().size())
        .map(|x| src.decode(x).map_or(0, |c| tgt.encode(&[c[1], c[0]])))
        .collect();
    PtMap { source: src.result(), target: tgt.result(), images }
}

/// The distributor `⋁(A_i ∧ B) -> (⋁ A_i) ∧ B`.
pub fn distributor(summands: &[PtSet], b: PtSet) -> PtMap {
    let left = Wedge::new(summands.iter().map(|a| a.smash(&b)).collect());
    let wedge = Wedge::new(summands.to_vec());
    let right = Smash::pair(wedge.result(), b);
    let images = (0..left.result().size())
        .map(|x| match left.decode(x) {
            None => 0,
            Some((k, ab)) => {
                let c = Smash::pair(summands[k], b).decode(ab).expect("non-basepoint");
                right.encode(&[wedge.encode(k, c[0]), c[1]])
            }
        })
        .collect();
    PtMap { source: left.result(), target: right.result(), images }
}

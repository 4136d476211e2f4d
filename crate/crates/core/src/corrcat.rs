//! The correspondence category `corr^E_*(B)`.
//!
//! Objects are finite pointed sets. Morphisms of level `n` from `X` to `Y`
//! are the pointed maps `X ∧ P^∧n -> Y ∧ E_n`, with `Σ_n` acting by
//! conjugation and composition given by the pairing `φ`.
//!
//! The same [`Kernel`] serves the spectral version, whose targets carry one
//! more factor `S^n_ℓ = (S¹_ℓ)^∧n` in each simplicial degree `ℓ`.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::permgroup::{all_permutations, shuffle, GAction, Permutation};
use crate::ptset::{HomSet, PtMap, PtSet, Smash};
use crate::ringmod::{check_commutative, check_ring_morphism, RingObject};
use crate::sset::{circle_degeneracy, circle_face};
use crate::symseq::SymSeqMap;
use crate::verify::{check_equivariance, check_equivariance_map, check_pointwise, check_value, failure_outcome, DiagramOutcome, Report};

/// Largest source enumerated by a single diagram.
pub const ENUMERATION_LIMIT: usize = 1 << 26;

/// How `φ` arranges the ring and sphere factors. Only `Standard` is correct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Composition {
    #[default]
    Standard,
    /// Multiplies `μ_{m,n}(e', e)`, skipping the second twist.
    RingFactorsSwapped,
    /// Puts the sphere coordinates of the second factor first.
    SpheresSwapped,
}

/// How `τ ∈ Σ_n` acts on a morphism. Only `Standard` is correct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Conjugation {
    #[default]
    Standard,
    /// Leaves the sphere coordinates in place.
    SpheresFixed,
}

/// `(|X|, |Y|, n, ℓ)`; `ℓ` is `None` in the discrete category.
pub type CellKey = (usize, usize, usize, Option<usize>);

/// One Hom-object `Hom(X ∧ P^∧n, Y ∧ E_n [∧ S^n_ℓ])` with its `Σ_n`-action.
#[derive(Debug, Clone)]
pub struct Cell {
    x: PtSet,
    y: PtSet,
    n: usize,
    ell: Option<usize>,
    src: Smash,
    tgt: Smash,
    hom: HomSet,
    action: GAction,
}

impl Cell {
    pub fn key(&self) -> CellKey {
        (self.x.size(), self.y.size(), self.n, self.ell)
    }

    pub fn source_object(&self) -> PtSet {
        self.x
    }

    pub fn target_object(&self) -> PtSet {
        self.y
    }

    pub fn level(&self) -> usize {
        self.n
    }

    pub fn simplicial_degree(&self) -> Option<usize> {
        self.ell
    }

    pub fn hom(&self) -> &HomSet {
        &self.hom
    }

    pub fn action(&self) -> &GAction {
        &self.action
    }

    pub fn carrier(&self) -> PtSet {
        self.hom.as_ptset()
    }

    pub fn len(&self) -> usize {
        self.hom.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Codec of `X ∧ P^∧n`, coordinates `[x, p_1, .., p_n]`.
    pub fn source_codec(&self) -> &Smash {
        &self.src
    }

    /// Codec of the target, coordinates `[y, e, j_1, .., j_n]`.
    pub fn target_codec(&self) -> &Smash {
        &self.tgt
    }

    pub fn map(&self, f: usize) -> PtMap {
        self.hom.decode(f)
    }

    pub fn index(&self, f: &PtMap) -> Result<usize> {
        if f.source() != self.hom.source() || f.target() != self.hom.target() {
            return Err(Error::ShapeMismatch(format!(
                "map {} -> {} is not in Hom({} -> {})",
                f.source(),
                f.target(),
                self.hom.source(),
                self.hom.target()
            )));
        }
        Ok(self.hom.encode(f))
    }
}

/// The data every construction on correspondences is built from: the ring
/// object `E`, the object `P`, and in the spectral case `ι₁ ∘ σ : P -> E_1`.
#[derive(Debug, Clone)]
pub struct Kernel {
    ring: RingObject,
    p: PtSet,
    unit1: Option<PtMap>,
    composition: Composition,
    conjugation: Conjugation,
}

impl Kernel {
    pub fn new(ring: RingObject, p: PtSet) -> Self {
        Kernel { ring, p, unit1: None, composition: Composition::Standard, conjugation: Conjugation::Standard }
    }

    /// Sets `ι₁ ∘ σ`, needed by the structure maps of the spectral version.
    pub fn with_unit1(mut self, unit1: PtMap) -> Result<Self> {
        if unit1.source() != self.p || self.ring.bound() == 0 || unit1.target() != self.ring.seq().carrier(1) {
            return Err(Error::ShapeMismatch("ι₁σ must be P -> E_1".into()));
        }
        self.unit1 = Some(unit1);
        Ok(self)
    }

    pub fn with_composition(mut self, c: Composition) -> Self {
        self.composition = c;
        self
    }

    pub fn with_conjugation(mut self, c: Conjugation) -> Self {
        self.conjugation = c;
        self
    }

    pub fn ring(&self) -> &RingObject {
        &self.ring
    }

    pub fn p(&self) -> PtSet {
        self.p
    }

    pub fn unit1(&self) -> Option<&PtMap> {
        self.unit1.as_ref()
    }

    pub fn composition(&self) -> Composition {
        self.composition
    }

    pub fn conjugation(&self) -> Conjugation {
        self.conjugation
    }

    /// Builds the Hom-object and tabulates its conjugation action.
    pub fn cell(&self, x: PtSet, y: PtSet, n: usize, ell: Option<usize>) -> Result<Cell> {
        if n > self.ring.bound() {
            return Err(Error::BoundExceeded { degree: n, bound: self.ring.bound() });
        }
        let mut sf = vec![x];
        sf.extend(std::iter::repeat_n(self.p, n));
        let mut tf = vec![y, self.ring.seq().carrier(n)];
        if let Some(l) = ell {
            tf.extend(std::iter::repeat_n(PtSet::new(l + 1)?, n));
        }
        let (src, tgt) = (Smash::new(sf), Smash::new(tf));
        if src.result().size() > ENUMERATION_LIMIT || tgt.result().size() > ENUMERATION_LIMIT {
            return Err(Error::EnumerationLimit { size: src.result().size().max(tgt.result().size()), limit: ENUMERATION_LIMIT });
        }
        let hom = HomSet::new(src.result(), tgt.result())?;
        let mut cell = Cell { x, y, n, ell, src, tgt, hom, action: GAction::trivial(hom.as_ptset(), vec![n]) };
        let swaps: Vec<Permutation> = (0..n.saturating_sub(1)).map(|i| Permutation::adjacent(n, i)).collect();
        let tables: Vec<Vec<usize>> = swaps
            .par_iter()
            .map(|s| (0..hom.len()).map(|f| self.conj(&cell, s, f)).collect())
            .collect();
        cell.action = GAction::symmetric(hom.as_ptset(), n, |i, f| tables[i][f])?;
        Ok(cell)
    }

    /// Tabulates a morphism of `cell` from its value on source coordinates.
    /// `value` writes target coordinates into its buffer, or returns false
    /// for the basepoint.
    fn build(&self, cell: &Cell, value: impl Fn(&[usize], &mut Vec<usize>) -> bool) -> usize {
        let size = cell.src.result().size();
        let mut images = vec![0; size];
        let (mut coords, mut out) = (Vec::new(), Vec::new());
        for (s, slot) in images.iter_mut().enumerate().skip(1) {
            cell.src.decode_into(s, &mut coords);
            if value(&coords, &mut out) {
                *slot = cell.tgt.encode(&out);
            }
        }
        cell.hom.encode_images(&images)
    }

    /// Post-composes with a map of target coordinates, landing in `to`
    /// (same source). `h` edits the coordinates or returns false for zero.
    fn post_compose(&self, from: &Cell, to: &Cell, f: usize, h: impl Fn(&mut Vec<usize>) -> bool) -> usize {
        let img = from.hom.decode_images(f);
        let mut out = Vec::new();
        let images: Vec<usize> = img
            .iter()
            .map(|&t| if from.tgt.decode_into(t, &mut out) && h(&mut out) { to.tgt.encode(&out) } else { 0 })
            .collect();
        to.hom.encode_images(&images)
    }

    /// `τ·f = (Y ∧ τ ∧ τ) ∘ f ∘ (X ∧ τ⁻¹)`.
    pub fn conj(&self, cell: &Cell, tau: &Permutation, f: usize) -> usize {
        let img = cell.hom.decode_images(f);
        let etable = self.ring.seq().level(cell.n).table(tau).expect("degree checked by caller");
        let inv = tau.inverse();
        let move_spheres = cell.ell.is_some() && self.conjugation == Conjugation::Standard;
        self.build(cell, |c, out| {
            let mut pre = Vec::with_capacity(c.len());
            pre.push(c[0]);
            pre.extend(inv.permute(&c[1..]));
            if !cell.tgt.decode_into(img[cell.src.encode(&pre)], out) {
                return false;
            }
            out[1] = etable[out[1]];
            if move_spheres {
                let moved = tau.permute(&out[2..]);
                out[2..].copy_from_slice(&moved);
            }
            true
        })
    }

    /// `φ(f, g)` for `f ∈ (X, Y, n)`, `g ∈ (Y, Z, m)`, landing in `(X, Z, n + m)`:
    /// `(x, p, p') ↦ (z, μ_{n,m}(e, e'), s, s')` where `f(x, p) = (y, e, s)`
    /// and `g(y, p') = (z, e', s')`.
    pub fn compose(&self, c1: &Cell, c2: &Cell, c3: &Cell, f: usize, g: usize) -> usize {
        let (n, m) = (c1.n, c2.n);
        let (fi, gi) = (c1.hom.decode_images(f), c2.hom.decode_images(g));
        self.build(c3, |c, out| {
            let mut a = vec![c[0]];
            a.extend_from_slice(&c[1..1 + n]);
            let Some(fa) = c1.tgt.decode(fi[c1.src.encode(&a)]) else { return false };
            let mut b = vec![fa[0]];
            b.extend_from_slice(&c[1 + n..]);
            let Some(gb) = c2.tgt.decode(gi[c2.src.encode(&b)]) else { return false };
            let e = match self.composition {
                Composition::RingFactorsSwapped => self.ring.mul(m, n, gb[1], fa[1]),
                _ => self.ring.mul(n, m, fa[1], gb[1]),
            };
            out.clear();
            out.push(gb[0]);
            out.push(e);
            if self.composition == Composition::SpheresSwapped {
                out.extend_from_slice(&gb[2..]);
                out.extend_from_slice(&fa[2..]);
            } else {
                out.extend_from_slice(&fa[2..]);
                out.extend_from_slice(&gb[2..]);
            }
            true
        })
    }

    /// `ψ(f, g)` for `f ∈ (X, X', p)`, `g ∈ (Y, Y', q)`, landing in
    /// `(X ∧ Y, X' ∧ Y', p + q)`.
    pub fn tensor(&self, c1: &Cell, c2: &Cell, c3: &Cell, f: usize, g: usize) -> usize {
        let (p, q) = (c1.n, c2.n);
        let (fi, gi) = (c1.hom.decode_images(f), c2.hom.decode_images(g));
        let xy = Smash::pair(c1.x, c2.x);
        let xy2 = Smash::pair(c1.y, c2.y);
        self.build(c3, |c, out| {
            let Some(w) = xy.decode(c[0]) else { return false };
            let mut a = vec![w[0]];
            a.extend_from_slice(&c[1..1 + p]);
            let Some(fa) = c1.tgt.decode(fi[c1.src.encode(&a)]) else { return false };
            let mut b = vec![w[1]];
            b.extend_from_slice(&c[1 + p..1 + p + q]);
            let Some(gb) = c2.tgt.decode(gi[c2.src.encode(&b)]) else { return false };
            out.clear();
            out.push(xy2.encode(&[fa[0], gb[0]]));
            out.push(self.ring.mul(p, q, fa[1], gb[1]));
            out.extend_from_slice(&fa[2..]);
            out.extend_from_slice(&gb[2..]);
            true
        })
    }

    /// `u_X : X ≅ X ∧ S -> X ∧ E_0` through `ι₀`.
    pub fn unit(&self, cell: &Cell) -> usize {
        let one = self.ring.one();
        self.build(cell, |c, out| {
            out.clear();
            out.extend([c[0], one]);
            true
        })
    }

    /// Structure map `(g, k) ↦ ((x, p, r) ↦ (y, μ_{q,1}(e, ι₁σ(r)), s, k))`
    /// from `(X, Y, q, ℓ)` to `(X, Y, q + 1, ℓ)`.
    pub fn suspend(&self, c: &Cell, next: &Cell, g: usize, k: usize) -> usize {
        let unit1 = self.unit1.as_ref().expect("spectral kernel");
        let q = c.n;
        let gi = c.hom.decode_images(g);
        self.build(next, |coords, out| {
            if k == 0 {
                return false;
            }
            let Some(ga) = c.tgt.decode(gi[c.src.encode(&coords[..=q])]) else { return false };
            out.clear();
            out.push(ga[0]);
            out.push(self.ring.mul(q, 1, ga[1], unit1.apply(coords[q + 1])));
            out.extend_from_slice(&ga[2..]);
            out.push(k);
            true
        })
    }

    /// `i₁(j) : P --σ--> T --ι₁--> E_1`, into the `j`th summand of `E_1 ∧ S¹_ℓ`;
    /// `cell` is `(X, X, 1, ℓ)` with `X = S⁰`.
    pub fn degree_one_unit(&self, cell: &Cell, j: usize) -> usize {
        let unit1 = self.unit1.as_ref().expect("spectral kernel");
        self.build(cell, |c, out| {
            out.clear();
            out.extend([c[0], unit1.apply(c[1]), j]);
            true
        })
    }

    /// `θ(f, h)` for `f ∈ (U, V, p)` and `h ∈ (S⁰, S⁰, r)`, landing in
    /// `(U, V, p + r)`: `(u, p, p') ↦ (v, μ_{p,r}(e, e'), s, s')`.
    pub fn act_right(&self, c1: &Cell, c2: &Cell, c3: &Cell, f: usize, h: usize) -> usize {
        let (p, r) = (c1.n, c2.n);
        let (fi, hi) = (c1.hom.decode_images(f), c2.hom.decode_images(h));
        self.build(c3, |c, out| {
            let Some(fa) = c1.tgt.decode(fi[c1.src.encode(&c[..=p])]) else { return false };
            let mut b = vec![1];
            b.extend_from_slice(&c[1 + p..]);
            let Some(hb) = c2.tgt.decode(hi[c2.src.encode(&b)]) else { return false };
            out.clear();
            out.push(fa[0]);
            out.push(self.ring.mul(p, r, fa[1], hb[1]));
            out.extend_from_slice(&fa[2..]);
            out.extend_from_slice(&hb[2..]);
            true
        })
    }

    /// `d_i ∘ f` from simplicial degree `ℓ` of `from` to `ℓ - 1` of `to`.
    pub fn face(&self, from: &Cell, to: &Cell, i: usize, f: usize) -> usize {
        let l = from.ell.expect("spectral cell");
        self.post_compose(from, to, f, |c| {
            for j in c[2..].iter_mut() {
                *j = circle_face(l, i, *j);
            }
            true
        })
    }

    /// `s_i ∘ f` from degree `ℓ` to `ℓ + 1`.
    pub fn degeneracy(&self, from: &Cell, to: &Cell, i: usize, f: usize) -> usize {
        self.post_compose(from, to, f, |c| {
            for j in c[2..].iter_mut() {
                *j = circle_degeneracy(i, *j);
            }
            true
        })
    }

    /// `(Y ∧ γ_n) ∘ f` into the cell of another kernel with the same shape.
    pub fn push(&self, gamma: &PtMap, from: &Cell, to: &Cell, f: usize) -> usize {
        self.post_compose(from, to, f, |c| {
            c[1] = gamma.apply(c[1]);
            true
        })
    }
}

pub(crate) fn sorted_objects(objects: &[PtSet]) -> Vec<PtSet> {
    let mut objs = objects.to_vec();
    objs.sort();
    objs.dedup();
    objs
}

pub(crate) fn build_cells(
    kernel: &Kernel,
    objects: &[PtSet],
    bound: usize,
    ells: &[Option<usize>],
) -> Result<BTreeMap<CellKey, Cell>> {
    let mut keys = Vec::new();
    for &x in objects {
        for &y in objects {
            for n in 0..=bound {
                for &ell in ells {
                    keys.push((x, y, n, ell));
                }
            }
        }
    }
    let cells = keys
        .into_par_iter()
        .map(|(x, y, n, ell)| kernel.cell(x, y, n, ell))
        .collect::<Result<Vec<Cell>>>()?;
    Ok(cells.into_iter().map(|c| (c.key(), c)).collect())
}

/// The Hom-objects of one simplicial degree (or of the discrete category),
/// with everything needed to check the enriched-category axioms there.
pub(crate) struct Slice<'a> {
    pub kernel: &'a Kernel,
    pub cells: &'a BTreeMap<CellKey, Cell>,
    pub objects: &'a [PtSet],
    pub bound: usize,
    pub ell: Option<usize>,
    pub prefix: String,
}

fn guard(size: usize) -> Result<()> {
    if size > ENUMERATION_LIMIT {
        return Err(Error::EnumerationLimit { size, limit: ENUMERATION_LIMIT });
    }
    Ok(())
}

fn tag(objects: &[PtSet]) -> String {
    objects.iter().map(|o| o.size().to_string()).collect::<Vec<_>>().join(",")
}

pub(crate) fn collect(parts: Vec<Result<Vec<DiagramOutcome>>>) -> Vec<DiagramOutcome> {
    parts
        .into_iter()
        .flat_map(|r| r.unwrap_or_else(|e| vec![failure_outcome(&e)]))
        .collect()
}

impl<'a> Slice<'a> {
    pub fn cell(&self, x: PtSet, y: PtSet, n: usize) -> &'a Cell {
        &self.cells[&(x.size(), y.size(), n, self.ell)]
    }

    pub fn product(&self, x: PtSet, y: PtSet) -> Option<PtSet> {
        let xy = x.smash(&y);
        self.objects.contains(&xy).then_some(xy)
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        (0..=self.bound).flat_map(|n| (0..=self.bound - n).map(move |m| (n, m))).collect()
    }

    /// Conjugation is an action: identity and `(στ)·f = σ·(τ·f)`.
    pub fn action_outcomes(&self) -> Vec<DiagramOutcome> {
        let k = self.kernel;
        let parts = self
            .cells
            .values()
            .filter(|c| c.ell == self.ell)
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|c| {
                let id = format!("{}/action({};{})", self.prefix, tag(&[c.x, c.y]), c.n);
                let group = all_permutations(c.n);
                let mut out = vec![check_pointwise(format!("{id}/identity"), c.len(), |f| k.conj(c, &group[0], f), |f| f)];
                for s in &group {
                    for t in &group {
                        let st = s.compose(t).expect("same degree");
                        out.push(check_pointwise(
                            format!("{id}/{s}{t}"),
                            c.len(),
                            |f| k.conj(c, &st, f),
                            |f| k.conj(c, s, k.conj(c, t, f)),
                        ));
                    }
                }
                Ok(out)
            })
            .collect();
        collect(parts)
    }

    /// `φ` is `Σ_n × Σ_m`-equivariant, associative and unital.
    pub fn composition_outcomes(&self) -> Vec<DiagramOutcome> {
        let k = self.kernel;
        let objs = self.objects;
        let mut jobs: Vec<Box<dyn Fn() -> Result<Vec<DiagramOutcome>> + Send + Sync + '_>> = Vec::new();
        for &x in objs {
            for &y in objs {
                for &z in objs {
                    for (n, m) in self.pairs() {
                        jobs.push(Box::new(move || {
                            let (c1, c2, c3) = (self.cell(x, y, n), self.cell(y, z, m), self.cell(x, z, n + m));
                            let codec = Smash::pair(c1.carrier(), c2.carrier());
                            guard(codec.result().size())?;
                            check_equivariance(
                                &format!("{}/phi({};{},{})", self.prefix, tag(&[x, y, z]), n, m),
                                |w| codec.decode(w).map_or(0, |c| k.compose(c1, c2, c3, c[0], c[1])),
                                &GAction::smash(&c1.action, &c2.action),
                                &c3.action,
                            )
                        }));
                    }
                    for w in objs.iter().copied() {
                        for (n, m) in self.pairs() {
                            for p in 0..=self.bound - n - m {
                                jobs.push(Box::new(move || {
                                    let (f, g, h) = (self.cell(x, y, n), self.cell(y, z, m), self.cell(z, w, p));
                                    let (fg, gh) = (self.cell(x, z, n + m), self.cell(y, w, m + p));
                                    let total = self.cell(x, w, n + m + p);
                                    let codec = Smash::new(vec![f.carrier(), g.carrier(), h.carrier()]);
                                    guard(codec.result().size())?;
                                    Ok(vec![check_pointwise(
                                        format!("{}/assoc({};{},{},{})", self.prefix, tag(&[x, y, z, w]), n, m, p),
                                        codec.result().size(),
                                        |t| {
                                            codec.decode(t).map_or(0, |c| {
                                                k.compose(fg, h, total, k.compose(f, g, fg, c[0], c[1]), c[2])
                                            })
                                        },
                                        |t| {
                                            codec.decode(t).map_or(0, |c| {
                                                k.compose(f, gh, total, c[0], k.compose(g, h, gh, c[1], c[2]))
                                            })
                                        },
                                    )])
                                }));
                            }
                        }
                    }
                }
                for n in 0..=self.bound {
                    jobs.push(Box::new(move || {
                        let c = self.cell(x, y, n);
                        let (ux, uy) = (self.cell(x, x, 0), self.cell(y, y, 0));
                        let (ex, ey) = (k.unit(ux), k.unit(uy));
                        let id = format!("{}/unit({};{})", self.prefix, tag(&[x, y]), n);
                        Ok(vec![
                            check_pointwise(format!("{id}/left"), c.len(), |f| k.compose(ux, c, c, ex, f), |f| f),
                            check_pointwise(format!("{id}/right"), c.len(), |f| k.compose(c, uy, c, f, ey), |f| f),
                        ])
                    }));
                }
            }
        }
        collect(jobs.par_iter().map(|j| j()).collect())
    }

    /// `ψ` is equivariant, sends units to units, and satisfies the
    /// interchange law `χ̃_{s,q}·ψ(φ(f, f'), φ(g, g')) = φ(ψ(f, g), ψ(f', g'))`
    /// with `χ̃_{s,q} = id_p × χ_{s,q} × id_t`.
    pub fn tensor_outcomes(&self) -> Vec<DiagramOutcome> {
        let k = self.kernel;
        let objs = self.objects;
        let quads: Vec<[usize; 4]> = (0..=self.bound)
            .flat_map(|p| (0..=self.bound - p).map(move |s| (p, s)))
            .flat_map(|(p, s)| (0..=self.bound - p - s).map(move |q| (p, s, q)))
            .flat_map(|(p, s, q)| (0..=self.bound - p - s - q).map(move |t| [p, s, q, t]))
            .collect();
        let mut jobs: Vec<Box<dyn Fn() -> Result<Vec<DiagramOutcome>> + Send + Sync + '_>> = Vec::new();
        for &x in objs {
            for &x2 in objs {
                for &y in objs {
                    for &y2 in objs {
                        let (Some(xy), Some(xy2)) = (self.product(x, y), self.product(x2, y2)) else { continue };
                        for (p, q) in self.pairs() {
                            jobs.push(Box::new(move || {
                                let (c1, c2, c3) = (self.cell(x, x2, p), self.cell(y, y2, q), self.cell(xy, xy2, p + q));
                                let codec = Smash::pair(c1.carrier(), c2.carrier());
                                guard(codec.result().size())?;
                                check_equivariance(
                                    &format!("{}/psi({};{},{})", self.prefix, tag(&[x, x2, y, y2]), p, q),
                                    |w| codec.decode(w).map_or(0, |c| k.tensor(c1, c2, c3, c[0], c[1])),
                                    &GAction::smash(&c1.action, &c2.action),
                                    &c3.action,
                                )
                            }));
                        }
                        if x == x2 && y == y2 {
                            jobs.push(Box::new(move || {
                                let (ux, uy, uxy) = (self.cell(x, x, 0), self.cell(y, y, 0), self.cell(xy, xy, 0));
                                Ok(vec![check_value(
                                    format!("{}/psi-unit({})", self.prefix, tag(&[x, y])),
                                    k.tensor(ux, uy, uxy, k.unit(ux), k.unit(uy)),
                                    k.unit(uxy),
                                )])
                            }));
                        }
                        for &x3 in objs {
                            for &y3 in objs {
                                let Some(xy3) = self.product(x3, y3) else { continue };
                                for &[p, s, q, t] in &quads {
                                    jobs.push(Box::new(move || {
                                        let (f, f2) = (self.cell(x, x2, p), self.cell(x2, x3, s));
                                        let (g, g2) = (self.cell(y, y2, q), self.cell(y2, y3, t));
                                        let (ff, gg) = (self.cell(x, x3, p + s), self.cell(y, y3, q + t));
                                        let (fg, fg2) = (self.cell(xy, xy2, p + q), self.cell(xy2, xy3, s + t));
                                        let n = p + s + q + t;
                                        let total = self.cell(xy, xy3, n);
                                        let chi = Permutation::block_sum(
                                            &Permutation::block_sum(&Permutation::identity(p), &shuffle(s, q)),
                                            &Permutation::identity(t),
                                        );
                                        let codec = Smash::new(vec![f.carrier(), f2.carrier(), g.carrier(), g2.carrier()]);
                                        guard(codec.result().size())?;
                                        Ok(vec![check_pointwise(
                                            format!(
                                                "{}/interchange({};{},{},{},{})",
                                                self.prefix,
                                                tag(&[x, x2, x3, y, y2, y3]),
                                                p,
                                                s,
                                                q,
                                                t
                                            ),
                                            codec.result().size(),
                                            |w| {
                                                codec.decode(w).map_or(0, |c| {
                                                    let a = k.compose(f, f2, ff, c[0], c[1]);
                                                    let b = k.compose(g, g2, gg, c[2], c[3]);
                                                    k.conj(total, &chi, k.tensor(ff, gg, total, a, b))
                                                })
                                            },
                                            |w| {
                                                codec.decode(w).map_or(0, |c| {
                                                    let a = k.tensor(f, g, fg, c[0], c[2]);
                                                    let b = k.tensor(f2, g2, fg2, c[1], c[3]);
                                                    k.compose(fg, fg2, total, a, b)
                                                })
                                            },
                                        )])
                                    }));
                                }
                            }
                        }
                    }
                }
            }
        }
        collect(jobs.par_iter().map(|j| j()).collect())
    }
}

/// `corr^E_*(B)` for a finite list of objects `B`, truncated at level `D`.
#[derive(Debug, Clone)]
pub struct CorrCategory {
    kernel: Kernel,
    objects: Vec<PtSet>,
    bound: usize,
    commutative: bool,
    cells: BTreeMap<CellKey, Cell>,
}

impl CorrCategory {
    /// Levels up to the truncation bound of `E`.
    pub fn new(objects: &[PtSet], p: PtSet, ring: RingObject) -> Result<Self> {
        let bound = ring.bound();
        Self::from_kernel(Kernel::new(ring, p), objects, bound)
    }

    pub fn from_kernel(kernel: Kernel, objects: &[PtSet], bound: usize) -> Result<Self> {
        if bound > kernel.ring.bound() {
            return Err(Error::BoundExceeded { degree: bound, bound: kernel.ring.bound() });
        }
        let objects = sorted_objects(objects);
        let commutative = check_commutative(&kernel.ring).passed();
        let cells = build_cells(&kernel, &objects, bound, &[None])?;
        Ok(CorrCategory { kernel, objects, bound, commutative, cells })
    }

    /// The same category with a different (possibly mutated) composition.
    pub fn with_composition(mut self, c: Composition) -> Self {
        self.kernel.composition = c;
        self
    }

    pub fn kernel(&self) -> &Kernel {
        &self.kernel
    }

    pub fn objects(&self) -> &[PtSet] {
        &self.objects
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn contains(&self, x: PtSet) -> bool {
        self.objects.contains(&x)
    }

    pub fn hom(&self, x: PtSet, y: PtSet, n: usize) -> Result<&Cell> {
        for o in [x, y] {
            if !self.contains(o) {
                return Err(Error::UnknownObject(o.size()));
            }
        }
        self.cells
            .get(&(x.size(), y.size(), n, None))
            .ok_or(Error::BoundExceeded { degree: n, bound: self.bound })
    }

    pub fn cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.values()
    }

    /// Wraps a pointed map as a morphism, checking its shape.
    pub fn mor(&self, x: PtSet, y: PtSet, n: usize, map: PtMap) -> Result<CorrMor> {
        self.hom(x, y, n)?.index(&map)?;
        Ok(CorrMor { x, y, n, map })
    }

    fn mor_at(&self, x: PtSet, y: PtSet, n: usize, f: usize) -> Result<CorrMor> {
        Ok(CorrMor { x, y, n, map: self.hom(x, y, n)?.map(f) })
    }

    fn index_of(&self, f: &CorrMor) -> Result<(&Cell, usize)> {
        let c = self.hom(f.x, f.y, f.n)?;
        Ok((c, c.index(&f.map)?))
    }

    pub(crate) fn slice(&self) -> Slice<'_> {
        Slice {
            kernel: &self.kernel,
            cells: &self.cells,
            objects: &self.objects,
            bound: self.bound,
            ell: None,
            prefix: "corr".into(),
        }
    }
}

/// An element of `corr^E_n(X, Y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrMor {
    x: PtSet,
    y: PtSet,
    n: usize,
    map: PtMap,
}

impl CorrMor {
    pub fn source(&self) -> PtSet {
        self.x
    }

    pub fn target(&self) -> PtSet {
        self.y
    }

    pub fn level(&self) -> usize {
        self.n
    }

    pub fn map(&self) -> &PtMap {
        &self.map
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_zero()
    }
}

pub fn conj_act(cat: &CorrCategory, tau: &Permutation, f: &CorrMor) -> Result<CorrMor> {
    if tau.degree() != f.n {
        return Err(Error::DegreeMismatch { expected: f.n, found: tau.degree() });
    }
    let (c, i) = cat.index_of(f)?;
    cat.mor_at(f.x, f.y, f.n, cat.kernel.conj(c, tau, i))
}

/// `φ(f, g)`: `f` is applied first.
pub fn compose_phi(cat: &CorrCategory, f: &CorrMor, g: &CorrMor) -> Result<CorrMor> {
    if f.y != g.x {
        return Err(Error::ShapeMismatch(format!("target {} of f is not the source {} of g", f.y, g.x)));
    }
    if f.n + g.n > cat.bound {
        return Err(Error::BoundExceeded { degree: f.n + g.n, bound: cat.bound });
    }
    let ((c1, i), (c2, j)) = (cat.index_of(f)?, cat.index_of(g)?);
    let c3 = cat.hom(f.x, g.y, f.n + g.n)?;
    cat.mor_at(f.x, g.y, f.n + g.n, cat.kernel.compose(c1, c2, c3, i, j))
}

pub fn unit_u(cat: &CorrCategory, x: PtSet) -> Result<CorrMor> {
    let c = cat.hom(x, x, 0)?;
    cat.mor_at(x, x, 0, cat.kernel.unit(c))
}

pub fn monoidal_psi(cat: &CorrCategory, f: &CorrMor, g: &CorrMor) -> Result<CorrMor> {
    if !cat.commutative {
        return Err(Error::NotCommutative);
    }
    if f.n + g.n > cat.bound {
        return Err(Error::BoundExceeded { degree: f.n + g.n, bound: cat.bound });
    }
    let (xy, xy2) = (f.x.smash(&g.x), f.y.smash(&g.y));
    let ((c1, i), (c2, j)) = (cat.index_of(f)?, cat.index_of(g)?);
    let c3 = cat.hom(xy, xy2, f.n + g.n)?;
    cat.mor_at(xy, xy2, f.n + g.n, cat.kernel.tensor(c1, c2, c3, i, j))
}

/// Action law, equivariance, associativity and units of `φ`, and when `E`
/// is commutative the enriched-functor axioms of `ψ`.
pub fn check_enriched_category(cat: &CorrCategory) -> Report {
    let started = Instant::now();
    let slice = cat.slice();
    let mut outcomes = slice.action_outcomes();
    outcomes.extend(slice.composition_outcomes());
    if cat.commutative {
        outcomes.extend(slice.tensor_outcomes());
    }
    Report::from_outcomes("enriched-category", outcomes, started)
}

/// `γ_*` on every Hom-object: post-composition with `Y ∧ γ_n`.
#[derive(Debug, Clone)]
pub struct PushForward {
    maps: BTreeMap<CellKey, PtMap>,
    homs: BTreeMap<CellKey, (HomSet, HomSet)>,
}

impl PushForward {
    pub fn on(&self, x: PtSet, y: PtSet, n: usize) -> Option<&PtMap> {
        self.maps.get(&(x.size(), y.size(), n, None))
    }

    pub fn apply(&self, f: &CorrMor) -> Result<CorrMor> {
        let key = (f.x.size(), f.y.size(), f.n, None);
        let (g, (src, tgt)) = match (self.maps.get(&key), self.homs.get(&key)) {
            (Some(g), Some(h)) => (g, h),
            _ => return Err(Error::UnknownObject(f.x.size())),
        };
        if f.map.source() != src.source() || f.map.target() != src.target() {
            return Err(Error::ShapeMismatch("morphism does not belong to the source category".into()));
        }
        Ok(CorrMor { x: f.x, y: f.y, n: f.n, map: tgt.decode(g.apply(src.encode(&f.map))) })
    }
}

fn compatible(gamma: &SymSeqMap, source: &CorrCategory, target: &CorrCategory) -> Result<()> {
    if source.objects != target.objects || source.kernel.p != target.kernel.p || source.bound != target.bound {
        return Err(Error::ShapeMismatch("push-forward between categories with different B, P or bound".into()));
    }
    if gamma.bound() < source.bound {
        return Err(Error::BoundExceeded { degree: source.bound, bound: gamma.bound() });
    }
    for n in 0..=source.bound {
        let g = gamma.level(n);
        if g.source() != source.kernel.ring.seq().carrier(n) || g.target() != target.kernel.ring.seq().carrier(n) {
            return Err(Error::ShapeMismatch(format!("γ_{n} does not go E_{n} -> E'_{n}")));
        }
    }
    Ok(())
}

/// `γ_*` for a verified ring morphism `γ : E -> E'`.
pub fn push_forward(gamma: &SymSeqMap, source: &CorrCategory, target: &CorrCategory) -> Result<PushForward> {
    let report = check_ring_morphism(gamma, &source.kernel.ring, &target.kernel.ring);
    if !report.passed() {
        return Err(Error::Unverified(format!("γ fails {} ring-morphism diagrams", report.total_violations)));
    }
    push_forward_unchecked(gamma, source, target)
}

/// `γ_*` without verifying `γ` first, for paired runs against the checker.
pub fn push_forward_unchecked(gamma: &SymSeqMap, source: &CorrCategory, target: &CorrCategory) -> Result<PushForward> {
    compatible(gamma, source, target)?;
    let maps = source
        .cells
        .par_iter()
        .map(|(key, c)| {
            let to = &target.cells[key];
            let images = (0..c.len()).map(|f| source.kernel.push(gamma.level(c.n), c, to, f)).collect();
            Ok((*key, PtMap::new(c.carrier(), to.carrier(), images)?))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    let homs = source.cells.iter().map(|(key, c)| (*key, (c.hom, target.cells[key].hom))).collect();
    Ok(PushForward { maps, homs })
}

/// `γ_*` commutes with the actions, with `φ` and with the units.
pub fn check_push_forward(push: &PushForward, source: &CorrCategory, target: &CorrCategory) -> Report {
    let started = Instant::now();
    let (k, k2) = (&source.kernel, &target.kernel);
    let mut parts: Vec<Result<Vec<DiagramOutcome>>> = source
        .cells
        .iter()
        .map(|(key, c)| {
            check_equivariance_map(
                &format!("push/action({};{})", tag(&[c.x, c.y]), c.n),
                &push.maps[key],
                &c.action,
                &target.cells[key].action,
            )
        })
        .collect();
    let (s, t) = (source.slice(), target.slice());
    for &x in &source.objects {
        for &y in &source.objects {
            for &z in &source.objects {
                for (n, m) in s.pairs() {
                    let (c1, c2, c3) = (s.cell(x, y, n), s.cell(y, z, m), s.cell(x, z, n + m));
                    let (d1, d2, d3) = (t.cell(x, y, n), t.cell(y, z, m), t.cell(x, z, n + m));
                    let (g1, g2, g3) = (&push.maps[&c1.key()], &push.maps[&c2.key()], &push.maps[&c3.key()]);
                    let codec = Smash::pair(c1.carrier(), c2.carrier());
                    parts.push(guard(codec.result().size()).map(|_| {
                        vec![check_pointwise(
                            format!("push/phi({};{},{})", tag(&[x, y, z]), n, m),
                            codec.result().size(),
                            |w| codec.decode(w).map_or(0, |c| g3.apply(k.compose(c1, c2, c3, c[0], c[1]))),
                            |w| codec.decode(w).map_or(0, |c| k2.compose(d1, d2, d3, g1.apply(c[0]), g2.apply(c[1]))),
                        )]
                    }));
                }
            }
        }
        let (u, u2) = (s.cell(x, x, 0), t.cell(x, x, 0));
        parts.push(Ok(vec![check_value(
            format!("push/unit({})", x.size()),
            push.maps[&u.key()].apply(k.unit(u)),
            k2.unit(u2),
        )]));
    }
    Report::from_outcomes("push-forward", collect(parts), started)
}

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use super::{check_symmetric_spectrum_as, circle, OneE, SymS1Spectrum};
use crate::corrcat::{build_cells, collect, sorted_objects, Cell, CellKey, Composition, Conjugation, Kernel, Slice};
use crate::error::{Error, Result};
use crate::permgroup::{shuffle, GAction, Permutation};
use crate::ptset::{PtMap, PtSet, Smash};
use crate::ringmod::{check_commutative, check_ring, RingTSpectrum};
use crate::sset::Tabulated;
use crate::verify::{check_equivariance, check_pointwise, DiagramOutcome, Report};

/// `corr^{E,σ}_*(B)`: Hom-spectra with level `n`, degree `ℓ` equal to
/// `Hom(X ∧ P^∧n, Y ∧ E_n ∧ S^n_ℓ)` and composition `φ^σ`.
#[derive(Debug, Clone)]
pub struct SpectralCategory {
    kernel: Kernel,
    objects: Vec<PtSet>,
    bound: usize,
    cap: usize,
    commutative: bool,
    cells: BTreeMap<CellKey, Cell>,
}

pub fn build_spectral_category(
    objects: &[PtSet],
    e: &RingTSpectrum,
    p: PtSet,
    sigma: &PtMap,
    bound: usize,
    cap: usize,
) -> Result<SpectralCategory> {
    if sigma.source() != p || sigma.target() != e.t() {
        return Err(Error::ShapeMismatch(format!("σ must be P -> T, found {} -> {}", sigma.source(), sigma.target())));
    }
    let ring_report = check_ring(e.ring());
    if !ring_report.passed() {
        return Err(Error::Unverified(format!("E fails {} ring diagrams", ring_report.total_violations)));
    }
    let kernel = Kernel::new(e.ring().clone(), p).with_unit1(e.iota1().compose(sigma)?)?;
    SpectralCategory::from_kernel(kernel, objects, bound, cap)
}

impl SpectralCategory {
    pub fn from_kernel(kernel: Kernel, objects: &[PtSet], bound: usize, cap: usize) -> Result<Self> {
        if kernel.unit1().is_none() {
            return Err(Error::ShapeMismatch("the spectral category needs ι₁σ".into()));
        }
        if bound > kernel.ring().bound() {
            return Err(Error::BoundExceeded { degree: bound, bound: kernel.ring().bound() });
        }
        let objects = sorted_objects(objects);
        let commutative = check_commutative(kernel.ring()).passed();
        let ells: Vec<Option<usize>> = (0..=cap).map(Some).collect();
        let cells = build_cells(&kernel, &objects, bound, &ells)?;
        Ok(SpectralCategory { kernel, objects, bound, cap, commutative, cells })
    }

    /// The same category with a different (possibly mutated) composition.
    pub fn with_composition(mut self, c: Composition) -> Self {
        self.kernel = self.kernel.with_composition(c);
        self
    }

    /// Rebuilds the actions with a different (possibly mutated) conjugation.
    pub fn with_conjugation(self, c: Conjugation) -> Result<Self> {
        let kernel = self.kernel.with_conjugation(c);
        SpectralCategory::from_kernel(kernel, &self.objects, self.bound, self.cap)
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

    pub fn dim_cap(&self) -> usize {
        self.cap
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn hom(&self, x: PtSet, y: PtSet, n: usize, l: usize) -> Result<&Cell> {
        for o in [x, y] {
            if !self.objects.contains(&o) {
                return Err(Error::UnknownObject(o.size()));
            }
        }
        if l > self.cap {
            return Err(Error::CapExceeded { degree: l, cap: self.cap });
        }
        self.cells
            .get(&(x.size(), y.size(), n, Some(l)))
            .ok_or(Error::BoundExceeded { degree: n, bound: self.bound })
    }

    pub(crate) fn cell(&self, x: PtSet, y: PtSet, n: usize, l: usize) -> &Cell {
        &self.cells[&(x.size(), y.size(), n, Some(l))]
    }

    /// The Hom-spectrum `corr^{E,σ}_*(X, Y)` as a symmetric `S¹`-spectrum.
    pub fn hom_spectrum(&self, x: PtSet, y: PtSet) -> Result<SymS1Spectrum> {
        self.hom(x, y, 0, 0)?;
        let (k, cap) = (&self.kernel, self.cap);
        let levels = (0..=self.bound)
            .map(|n| {
                let sizes = (0..=cap).map(|l| self.cell(x, y, n, l).len()).collect();
                Tabulated::new(
                    cap,
                    sizes,
                    |l, i, f| k.face(self.cell(x, y, n, l), self.cell(x, y, n, l - 1), i, f),
                    |l, i, f| k.degeneracy(self.cell(x, y, n, l), self.cell(x, y, n, l + 1), i, f),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        let actions = (0..=self.bound)
            .map(|n| (0..=cap).map(|l| self.cell(x, y, n, l).action().clone()).collect())
            .collect();
        let structure = (0..self.bound)
            .map(|n| {
                (0..=cap)
                    .map(|l| {
                        let (c, next) = (self.cell(x, y, n, l), self.cell(x, y, n + 1, l));
                        let codec = Smash::pair(c.carrier(), circle(l));
                        PtMap::from_fn(codec.result(), next.carrier(), |w| {
                            codec.decode(w).map_or(0, |a| k.suspend(c, next, a[0], a[1]))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SymS1Spectrum::new(levels, actions, structure)
    }

    pub(crate) fn slice(&self, l: usize) -> Slice<'_> {
        Slice {
            kernel: &self.kernel,
            cells: &self.cells,
            objects: &self.objects,
            bound: self.bound,
            ell: Some(l),
            prefix: format!("spectral[{l}]"),
        }
    }

    fn triples(&self) -> Vec<(PtSet, PtSet, PtSet)> {
        let o = &self.objects;
        o.iter().flat_map(|&x| o.iter().flat_map(move |&y| o.iter().map(move |&z| (x, y, z)))).collect()
    }
}

fn tag(objects: &[PtSet]) -> String {
    objects.iter().map(|o| o.size().to_string()).collect::<Vec<_>>().join(",")
}

/// Whether the bilinearity diagram includes its `1 × χ_{1,q}` correction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bilinearity {
    Corrected,
    Uncorrected,
}

/// The bilinearity diagram of `φ^σ` in every degree:
/// `φ(f, σ(g, k)) = σ(φ(f, g), k) = (1 × χ_{1,q})·φ(σ(f, k), g)`.
pub fn bilinearity_outcomes(cat: &SpectralCategory, mode: Bilinearity) -> Vec<DiagramOutcome> {
    let k = &cat.kernel;
    let mut jobs = Vec::new();
    for l in 0..=cat.cap {
        for (x, y, z) in cat.triples() {
            for p in 0..cat.bound {
                for q in 0..cat.bound - p {
                    jobs.push((l, x, y, z, p, q));
                }
            }
        }
    }
    let parts = jobs
        .into_par_iter()
        .map(|(l, x, y, z, p, q)| {
            let (cf, cg) = (cat.cell(x, y, p, l), cat.cell(y, z, q, l));
            let (cf1, cg1) = (cat.cell(x, y, p + 1, l), cat.cell(y, z, q + 1, l));
            let (fg, total) = (cat.cell(x, z, p + q, l), cat.cell(x, z, p + q + 1, l));
            let codec = Smash::new(vec![cf.carrier(), cg.carrier(), circle(l)]);
            let chi = Permutation::block_sum(&Permutation::identity(p), &shuffle(1, q));
            let id = format!("spectral[{l}]/bilinear({};{},{})", tag(&[x, y, z]), p, q);
            let middle = |w: usize| codec.decode(w).map_or(0, |c| k.suspend(fg, total, k.compose(cf, cg, fg, c[0], c[1]), c[2]));
            Ok(vec![
                check_pointwise(
                    format!("{id}/left"),
                    codec.result().size(),
                    |w| codec.decode(w).map_or(0, |c| k.compose(cf, cg1, total, c[0], k.suspend(cg, cg1, c[1], c[2]))),
                    middle,
                ),
                check_pointwise(format!("{id}/right"), codec.result().size(), middle, |w| {
                    codec.decode(w).map_or(0, |c| {
                        let b = k.compose(cf1, cg, total, k.suspend(cf, cf1, c[0], c[2]), c[1]);
                        match mode {
                            Bilinearity::Corrected => k.conj(total, &chi, b),
                            Bilinearity::Uncorrected => b,
                        }
                    })
                }),
            ])
        })
        .collect();
    collect(parts)
}

/// `φ^σ` commutes with faces and degeneracies.
pub(crate) fn simplicial_composition_outcomes(cat: &SpectralCategory) -> Vec<DiagramOutcome> {
    let k = &cat.kernel;
    let mut jobs = Vec::new();
    for l in 0..=cat.cap {
        for (x, y, z) in cat.triples() {
            for n in 0..=cat.bound {
                for m in 0..=cat.bound - n {
                    jobs.push((l, x, y, z, n, m));
                }
            }
        }
    }
    let parts = jobs
        .into_par_iter()
        .map(|(l, x, y, z, n, m)| {
            let (c1, c2, c3) = (cat.cell(x, y, n, l), cat.cell(y, z, m, l), cat.cell(x, z, n + m, l));
            let codec = Smash::pair(c1.carrier(), c2.carrier());
            let id = format!("spectral[{l}]/phi-simplicial({};{},{})", tag(&[x, y, z]), n, m);
            let mut out = Vec::new();
            for i in 0..=l {
                if l > 0 {
                    let (d1, d2, d3) = (cat.cell(x, y, n, l - 1), cat.cell(y, z, m, l - 1), cat.cell(x, z, n + m, l - 1));
                    out.push(check_pointwise(
                        format!("{id}/d{i}"),
                        codec.result().size(),
                        |w| codec.decode(w).map_or(0, |c| k.face(c3, d3, i, k.compose(c1, c2, c3, c[0], c[1]))),
                        |w| codec.decode(w).map_or(0, |c| k.compose(d1, d2, d3, k.face(c1, d1, i, c[0]), k.face(c2, d2, i, c[1]))),
                    ));
                }
                if l < cat.cap {
                    let (u1, u2, u3) = (cat.cell(x, y, n, l + 1), cat.cell(y, z, m, l + 1), cat.cell(x, z, n + m, l + 1));
                    out.push(check_pointwise(
                        format!("{id}/s{i}"),
                        codec.result().size(),
                        |w| codec.decode(w).map_or(0, |c| k.degeneracy(c3, u3, i, k.compose(c1, c2, c3, c[0], c[1]))),
                        |w| {
                            codec.decode(w).map_or(0, |c| {
                                k.compose(u1, u2, u3, k.degeneracy(c1, u1, i, c[0]), k.degeneracy(c2, u2, i, c[1]))
                            })
                        },
                    ));
                }
            }
            Ok(out)
        })
        .collect();
    collect(parts)
}

/// Every Hom-spectrum is a symmetric `S¹`-spectrum; in every degree `φ^σ`
/// is equivariant, associative and unital; it is simplicial and satisfies the
/// bilinearity diagram; with `E` commutative `ψ^σ` satisfies the interchange law.
pub fn check_spectral_category(cat: &SpectralCategory) -> Report {
    let started = Instant::now();
    let mut outcomes = Vec::new();
    for l in 0..=cat.cap {
        let slice = cat.slice(l);
        outcomes.extend(slice.action_outcomes());
        outcomes.extend(slice.composition_outcomes());
        if cat.commutative {
            outcomes.extend(slice.tensor_outcomes());
        }
    }
    outcomes.extend(simplicial_composition_outcomes(cat));
    outcomes.extend(bilinearity_outcomes(cat, Bilinearity::Corrected));
    let mut report = Report::from_outcomes("spectral-category", outcomes, started);
    for &x in &cat.objects {
        for &y in &cat.objects {
            let prefix = format!("spectral/hom({})", tag(&[x, y]));
            let mut r = match cat.hom_spectrum(x, y) {
                Ok(s) => check_symmetric_spectrum_as(&prefix, &s),
                Err(e) => Report::from_outcomes(prefix, vec![crate::verify::failure_outcome(&e)], Instant::now()),
            };
            r.millis = 0;
            report.merge(r);
        }
    }
    report.millis = started.elapsed().as_millis() as u64;
    report
}

/// The right `1^E`-action `θ_{p,r}` on the Hom-spectra of a spectral category.
#[derive(Debug, Clone, Copy)]
pub struct Theta<'a> {
    cat: &'a SpectralCategory,
    one: &'a OneE,
}

impl Theta<'_> {
    /// `θ_{p,r}(f, h)` for `f ∈ (U, V, p)` and `h ∈ (1^E)_r` in degree `ℓ`.
    pub fn apply(&self, u: PtSet, v: PtSet, p: usize, r: usize, l: usize, f: usize, h: usize) -> Result<usize> {
        if p + r > self.cat.bound {
            return Err(Error::BoundExceeded { degree: p + r, bound: self.cat.bound });
        }
        let (c1, c3) = (self.cat.hom(u, v, p, l)?, self.cat.hom(u, v, p + r, l)?);
        let c2 = self.one.cell(r, l);
        Ok(self.cat.kernel.act_right(c1, c2, c3, f, h))
    }
}

/// Builds `θ` and checks the module axioms, its equivariance, the
/// compatibility diagram with composition (corrected by `1 × χ_{r,q}`) and,
/// when `S⁰ ∈ B`, agreement with `ψ^σ(f, h)`.
pub fn module_action_theta<'a>(cat: &'a SpectralCategory, one: &'a OneE) -> Result<(Theta<'a>, Report)> {
    let started = Instant::now();
    if !cat.commutative {
        return Err(Error::NotCommutative);
    }
    let ok = one.category().kernel().ring() == cat.kernel.ring()
        && one.category().kernel().p() == cat.kernel.p()
        && one.category().kernel().unit1() == cat.kernel.unit1()
        && one.bound() == cat.bound
        && one.dim_cap() == cat.cap;
    if !ok {
        return Err(Error::ShapeMismatch("1^E was built from different data".into()));
    }
    let theta = Theta { cat, one };
    let k = &cat.kernel;
    let d = cat.bound;
    let objs = &cat.objects;
    let mut jobs: Vec<Box<dyn Fn() -> Result<Vec<DiagramOutcome>> + Send + Sync + '_>> = Vec::new();
    for l in 0..=cat.cap {
        for &u in objs {
            for &v in objs {
                for p in 0..=d {
                    jobs.push(Box::new(move || {
                        let c = cat.cell(u, v, p, l);
                        let unit = k.unit(one.cell(0, l));
                        Ok(vec![check_pointwise(
                            format!("theta[{l}]/unit({};{p})", tag(&[u, v])),
                            c.len(),
                            |f| k.act_right(c, one.cell(0, l), c, f, unit),
                            |f| f,
                        )])
                    }));
                    for r in 0..=d - p {
                        jobs.push(Box::new(move || {
                            let (c1, c2, c3) = (cat.cell(u, v, p, l), one.cell(r, l), cat.cell(u, v, p + r, l));
                            let codec = Smash::pair(c1.carrier(), c2.carrier());
                            let mut out = check_equivariance(
                                &format!("theta[{l}]/action({};{p},{r})", tag(&[u, v])),
                                |w| codec.decode(w).map_or(0, |c| k.act_right(c1, c2, c3, c[0], c[1])),
                                &GAction::smash(c1.action(), c2.action()),
                                c3.action(),
                            )?;
                            let s0 = PtSet::s0();
                            if objs.contains(&s0) {
                                let (cs, ct) = (cat.cell(s0, s0, r, l), cat.cell(u, v, p + r, l));
                                out.push(check_pointwise(
                                    format!("theta[{l}]/psi({};{p},{r})", tag(&[u, v])),
                                    codec.result().size(),
                                    |w| codec.decode(w).map_or(0, |c| k.act_right(c1, c2, c3, c[0], c[1])),
                                    |w| codec.decode(w).map_or(0, |c| k.tensor(c1, cs, ct, c[0], c[1])),
                                ));
                            }
                            for r2 in 0..=d - p - r {
                                let (c4, c5, rr) = (one.cell(r2, l), cat.cell(u, v, p + r + r2, l), one.cell(r + r2, l));
                                let codec3 = Smash::new(vec![c1.carrier(), c2.carrier(), c4.carrier()]);
                                out.push(check_pointwise(
                                    format!("theta[{l}]/assoc({};{p},{r},{r2})", tag(&[u, v])),
                                    codec3.result().size(),
                                    |w| codec3.decode(w).map_or(0, |c| k.act_right(c3, c4, c5, k.act_right(c1, c2, c3, c[0], c[1]), c[2])),
                                    |w| {
                                        codec3.decode(w).map_or(0, |c| {
                                            let h = k.compose(c2, c4, rr, c[1], c[2]);
                                            k.act_right(c1, rr, c5, c[0], h)
                                        })
                                    },
                                ));
                            }
                            Ok(out)
                        }));
                    }
                }
                for &w in objs {
                    for p in 0..=d {
                        for q in 0..=d - p {
                            for r in 0..=d - p - q {
                                jobs.push(Box::new(move || {
                                    let (cf, cg, ch) = (cat.cell(u, v, p, l), cat.cell(v, w, q, l), one.cell(r, l));
                                    let (cg_r, cf_r) = (cat.cell(v, w, q + r, l), cat.cell(u, v, p + r, l));
                                    let (fg, total) = (cat.cell(u, w, p + q, l), cat.cell(u, w, p + q + r, l));
                                    let chi = Permutation::block_sum(&Permutation::identity(p), &shuffle(r, q));
                                    let codec = Smash::new(vec![cf.carrier(), cg.carrier(), ch.carrier()]);
                                    let id = format!("theta[{l}]/bimorphism({};{p},{q},{r})", tag(&[u, v, w]));
                                    let middle = |x: usize| {
                                        codec.decode(x).map_or(0, |c| k.act_right(fg, ch, total, k.compose(cf, cg, fg, c[0], c[1]), c[2]))
                                    };
                                    Ok(vec![
                                        check_pointwise(
                                            format!("{id}/left"),
                                            codec.result().size(),
                                            |x| {
                                                codec.decode(x).map_or(0, |c| {
                                                    k.compose(cf, cg_r, total, c[0], k.act_right(cg, ch, cg_r, c[1], c[2]))
                                                })
                                            },
                                            middle,
                                        ),
                                        check_pointwise(format!("{id}/right"), codec.result().size(), middle, |x| {
                                            codec.decode(x).map_or(0, |c| {
                                                let b = k.compose(cf_r, cg, total, k.act_right(cf, ch, cf_r, c[0], c[2]), c[1]);
                                                k.conj(total, &chi, b)
                                            })
                                        }),
                                    ])
                                }));
                            }
                        }
                    }
                }
            }
        }
    }
    let outcomes = collect(jobs.par_iter().map(|j| j()).collect());
    Ok((theta, Report::from_outcomes("theta", outcomes, started)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{build_one_e, check_symmetric_spectrum, sphere_bijection};
    use crate::ringmod::{sym_t, tensor_algebra};

    fn pt(n: usize) -> PtSet {
        PtSet::new(n).unwrap()
    }

    fn over_s0(objects: &[PtSet], bound: usize, cap: usize) -> SpectralCategory {
        let s0 = PtSet::s0();
        build_spectral_category(objects, &sym_t(s0, bound), s0, &PtMap::identity(s0), bound, cap).unwrap()
    }

    #[test]
    fn small_category_passes_every_diagram() {
        let cat = over_s0(&[pt(1), pt(2)], 2, 3);
        let r = check_spectral_category(&cat);
        assert!(r.passed(), "{:?}", r.violations);
        assert!(r.diagrams > 100);
    }

    #[test]
    fn nontrivial_coefficients_pass() {
        let t = pt(3);
        let cat = build_spectral_category(&[pt(2)], &sym_t(t, 2), t, &PtMap::identity(t), 2, 2).unwrap();
        let r = check_spectral_category(&cat);
        assert!(r.passed(), "{:?}", r.violations);
    }

    #[test]
    fn zero_object_category_is_trivial() {
        let cat = over_s0(&[pt(1)], 2, 2);
        assert!(check_spectral_category(&cat).passed());
        for n in 0..=2 {
            for l in 0..=2 {
                assert_eq!(cat.hom(pt(1), pt(1), n, l).unwrap().len(), 1);
            }
        }
    }

    #[test]
    fn hom_counts() {
        let cat = over_s0(&[pt(2)], 2, 3);
        for n in 0..=2 {
            for l in 0..=3 {
                // Hom(S⁰, S^n_ℓ) has ℓⁿ + 1 elements
                assert_eq!(cat.hom(pt(2), pt(2), n, l).unwrap().len(), l.pow(n as u32) + 1);
            }
        }
        assert!(cat.hom(pt(3), pt(2), 0, 0).is_err());
        assert!(cat.hom(pt(2), pt(2), 0, 4).is_err());
    }

    #[test]
    fn endomorphisms_of_s0_form_the_sphere_spectrum() {
        let cat = over_s0(&[pt(2)], 3, 3);
        let s = cat.hom_spectrum(pt(2), pt(2)).unwrap();
        assert!(check_symmetric_spectrum(&s).passed());
        let s0 = PtSet::s0();
        let one = build_one_e(&sym_t(s0, 3), s0, &PtMap::identity(s0), 3, 3).unwrap();
        assert!(sphere_bijection(&one).unwrap().iter().flatten().all(PtMap::is_bijection));
    }

    #[test]
    fn dropping_the_shuffle_breaks_bilinearity() {
        let cat = over_s0(&[pt(2)], 2, 2);
        let good = bilinearity_outcomes(&cat, Bilinearity::Corrected);
        assert!(good.iter().all(DiagramOutcome::passed));
        let bad = bilinearity_outcomes(&cat, Bilinearity::Uncorrected);
        assert!(bad.iter().any(|o| !o.passed()));
    }

    #[test]
    fn mutated_kernels_are_caught() {
        let cat = over_s0(&[pt(2)], 2, 2);
        let swapped = cat.clone().with_composition(Composition::SpheresSwapped);
        assert!(!check_spectral_category(&swapped).passed());
        let fixed = cat.with_conjugation(Conjugation::SpheresFixed).unwrap();
        assert!(!check_spectral_category(&fixed).passed());
    }

    #[test]
    fn theta_is_a_module_action() {
        let s0 = PtSet::s0();
        let e = sym_t(s0, 2);
        let cat = build_spectral_category(&[pt(1), pt(2)], &e, s0, &PtMap::identity(s0), 2, 2).unwrap();
        let one = build_one_e(&e, s0, &PtMap::identity(s0), 2, 2).unwrap();
        let (theta, r) = module_action_theta(&cat, &one).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert!(r.violations_of("theta[1]/bimorphism").count() == 0 && r.diagrams > 50);
        // zero stays zero
        assert_eq!(theta.apply(pt(2), pt(2), 1, 1, 1, 0, 1).unwrap(), 0);
        assert!(theta.apply(pt(2), pt(2), 2, 1, 1, 0, 0).is_err());
    }

    #[test]
    fn theta_needs_a_commutative_ring() {
        let t = pt(3);
        let e = tensor_algebra(t, 2);
        let cat = build_spectral_category(&[pt(2)], &e, t, &PtMap::identity(t), 2, 1).unwrap();
        let one = build_one_e(&e, t, &PtMap::identity(t), 2, 1).unwrap();
        assert!(matches!(module_action_theta(&cat, &one), Err(Error::NotCommutative)));
    }

    #[test]
    fn sigma_must_land_in_t() {
        let s0 = PtSet::s0();
        let r = build_spectral_category(&[s0], &sym_t(pt(3), 1), s0, &PtMap::identity(s0), 1, 1);
        assert!(r.is_err());
    }
}

use std::time::Instant;

use rayon::prelude::*;

use super::category::simplicial_composition_outcomes;
use super::{build_spectral_category, circle, SpectralCategory, SymS1Spectrum};
use crate::corrcat::{collect, Cell};
use crate::error::{Error, Result};
use crate::homology::is_homology_isomorphism;
use crate::permgroup::shuffle;
use crate::ptset::{PtMap, PtSet, Smash};
use crate::ringmod::RingTSpectrum;
use crate::sset::{check_simplicial_map, circle_degeneracy, circle_face, sphere, sphere_comparison, sphere_model, SimplicialSet};
use crate::symseq::power_action;
use crate::verify::{check_equivariance_map, check_pointwise, check_value, failure_outcome, Report};

/// The symmetric ring `S¹`-spectrum `1^E`: level `n`, degree `ℓ` is
/// `Hom(P^∧n, E_n ∧ S^n_ℓ)`, realized as `End(S⁰)` in `corr^{E,σ}_*({S⁰})`.
#[derive(Debug, Clone)]
pub struct OneE {
    cat: SpectralCategory,
    spectrum: SymS1Spectrum,
}

pub fn build_one_e(e: &RingTSpectrum, p: PtSet, sigma: &PtMap, bound: usize, cap: usize) -> Result<OneE> {
    let cat = build_spectral_category(&[PtSet::s0()], e, p, sigma, bound, cap)?;
    let spectrum = cat.hom_spectrum(PtSet::s0(), PtSet::s0())?;
    Ok(OneE { cat, spectrum })
}

impl OneE {
    pub fn category(&self) -> &SpectralCategory {
        &self.cat
    }

    pub fn spectrum(&self) -> &SymS1Spectrum {
        &self.spectrum
    }

    pub fn bound(&self) -> usize {
        self.cat.bound()
    }

    pub fn dim_cap(&self) -> usize {
        self.cat.dim_cap()
    }

    /// `(1^E)_n` in degree `ℓ`.
    pub fn cell(&self, n: usize, l: usize) -> &Cell {
        self.cat.cell(PtSet::s0(), PtSet::s0(), n, l)
    }
}

/// Multiplication `ν_{n,m}` and the units `i₀`, `i₁` of `1^E`.
#[derive(Debug, Clone, Copy)]
pub struct OneERing<'a> {
    one: &'a OneE,
}

impl OneERing<'_> {
    pub fn nu(&self, n: usize, m: usize, l: usize, a: usize, b: usize) -> usize {
        let o = self.one;
        o.cat.kernel().compose(o.cell(n, l), o.cell(m, l), o.cell(n + m, l), a, b)
    }

    pub fn i0(&self, l: usize) -> usize {
        self.one.cat.kernel().unit(self.one.cell(0, l))
    }

    /// `i₁` on the simplex `j` of `S¹_ℓ`; zero for `j = 0`.
    pub fn i1(&self, l: usize, j: usize) -> usize {
        self.one.cat.kernel().degree_one_unit(self.one.cell(1, l), j)
    }
}

/// Builds `ν`, `i₀`, `i₁` and checks equivariance, associativity, units,
/// centrality, simplicial compatibility, that `u_n = ν_{n,1}(·, i₁)`, and
/// with `E` commutative the commutativity square with `χ_{n,m}`.
pub fn ring_structure_nu(one: &OneE) -> (OneERing<'_>, Report) {
    let started = Instant::now();
    let ring = OneERing { one };
    let (d, cap) = (one.bound(), one.dim_cap());
    let k = one.cat.kernel();
    let mut outcomes = Vec::new();
    for l in 0..=cap {
        outcomes.extend(one.cat.slice(l).composition_outcomes());
    }
    outcomes.extend(simplicial_composition_outcomes(&one.cat));
    let jobs: Vec<(usize, usize)> = (0..=cap).flat_map(|l| (0..=d).map(move |n| (l, n))).collect();
    let parts = jobs
        .into_par_iter()
        .map(|(l, n)| {
            let mut out = Vec::new();
            let c = one.cell(n, l);
            if n < d {
                let chi = shuffle(n, 1);
                let next = one.cell(n + 1, l);
                for j in 1..=l {
                    let i1 = ring.i1(l, j);
                    out.push(check_pointwise(
                        format!("nu[{l}]/centrality({n};{j})"),
                        c.len(),
                        |x| k.conj(next, &chi, ring.nu(n, 1, l, x, i1)),
                        |x| ring.nu(1, n, l, i1, x),
                    ));
                }
                let codec = Smash::pair(c.carrier(), circle(l));
                let u = one.spectrum.structure(n, l);
                out.push(check_pointwise(
                    format!("nu[{l}]/structure({n})"),
                    codec.result().size(),
                    |w| u.apply(w),
                    |w| codec.decode(w).map_or(0, |a| ring.nu(n, 1, l, a[0], ring.i1(l, a[1]))),
                ));
            }
            if one.cat.is_commutative() {
                for m in 0..=d - n {
                    let (c2, c3) = (one.cell(m, l), one.cell(n + m, l));
                    let chi = shuffle(n, m);
                    let codec = Smash::pair(c.carrier(), c2.carrier());
                    out.push(check_pointwise(
                        format!("nu[{l}]/commutative({n},{m})"),
                        codec.result().size(),
                        |w| codec.decode(w).map_or(0, |a| k.conj(c3, &chi, ring.nu(n, m, l, a[0], a[1]))),
                        |w| codec.decode(w).map_or(0, |a| ring.nu(m, n, l, a[1], a[0])),
                    ));
                }
            }
            if n == 0 && l > 0 {
                for i in 0..=l {
                    let lower = one.cell(0, l - 1);
                    out.push(check_value(format!("nu/i0/d{i}({l})"), k.face(c, lower, i, ring.i0(l)), ring.i0(l - 1)));
                }
            }
            if n == 0 && l < cap {
                for i in 0..=l {
                    let upper = one.cell(0, l + 1);
                    out.push(check_value(format!("nu/i0/s{i}({l})"), k.degeneracy(c, upper, i, ring.i0(l)), ring.i0(l + 1)));
                }
            }
            if n == 1 {
                for j in 0..=l {
                    for i in 0..=l {
                        if l > 0 {
                            out.push(check_value(
                                format!("nu/i1/d{i}({l};{j})"),
                                k.face(c, one.cell(1, l - 1), i, ring.i1(l, j)),
                                ring.i1(l - 1, circle_face(l, i, j)),
                            ));
                        }
                        if l < cap {
                            out.push(check_value(
                                format!("nu/i1/s{i}({l};{j})"),
                                k.degeneracy(c, one.cell(1, l + 1), i, ring.i1(l, j)),
                                ring.i1(l + 1, circle_degeneracy(i, j)),
                            ));
                        }
                    }
                }
            }
            Ok(out)
        })
        .collect();
    outcomes.extend(collect(parts));
    (ring, Report::from_outcomes("ring-nu", outcomes, started))
}

/// The ring map `δ : S -> 1^E` from the sphere spectrum in its smash model.
#[derive(Debug, Clone)]
pub struct Delta {
    maps: Vec<Vec<PtMap>>,
}

impl Delta {
    /// `δ_n` in degree `ℓ`, from `ℓ_+^∧n` to `(1^E)_n`.
    pub fn level(&self, n: usize, l: usize) -> &PtMap {
        &self.maps[n][l]
    }

    pub fn levels(&self, n: usize) -> &[PtMap] {
        &self.maps[n]
    }
}

/// `δ_n(j_1, .., j_n) = ν(.. ν(i₁ j_1, i₁ j_2) .., i₁ j_n)`, `δ_0 = i₀`.
fn delta_value(ring: &OneERing<'_>, l: usize, js: &[usize]) -> usize {
    let Some((&first, rest)) = js.split_first() else { return ring.i0(l) };
    let mut acc = ring.i1(l, first);
    for (k, &j) in rest.iter().enumerate() {
        acc = ring.nu(k + 1, 1, l, acc, ring.i1(l, j));
    }
    acc
}

/// Builds `δ` and checks that it is a morphism of symmetric ring spectra:
/// units, equivariance, multiplicativity, simplicial maps and compatibility
/// with the structure maps.
pub fn delta_sphere_map(one: &OneE) -> Result<(Delta, Report)> {
    let started = Instant::now();
    let (d, cap) = (one.bound(), one.dim_cap());
    let ring = OneERing { one };
    let maps = (0..=d)
        .map(|n| {
            (0..=cap)
                .map(|l| {
                    let codec = Smash::power(circle(l), n);
                    PtMap::from_fn(codec.result(), one.cell(n, l).carrier(), |w| {
                        codec.decode(w).map_or(0, |js| delta_value(&ring, l, &js))
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let delta = Delta { maps };
    let mut outcomes = Vec::new();
    let model: Vec<_> = (0..=d).map(|n| sphere_model(n, cap)).collect();
    for l in 0..=cap {
        outcomes.push(check_value(format!("delta[{l}]/i0"), delta.maps[0][l].apply(1), ring.i0(l)));
        if d >= 1 {
            outcomes.push(check_pointwise(format!("delta[{l}]/i1"), l + 1, |j| delta.maps[1][l].apply(j), |j| ring.i1(l, j)));
        }
        for n in 1..=d {
            let o = check_equivariance_map(
                &format!("delta[{l}]/action({n})"),
                &delta.maps[n][l],
                &power_action(circle(l), n),
                one.cell(n, l).action(),
            )?;
            outcomes.extend(o);
        }
        for n in 0..=d {
            for m in 0..=d - n {
                let (a, b) = (Smash::power(circle(l), n), Smash::power(circle(l), m));
                let both = Smash::power(circle(l), n + m);
                let codec = Smash::pair(a.result(), b.result());
                outcomes.push(check_pointwise(
                    format!("delta[{l}]/multiplicative({n},{m})"),
                    codec.result().size(),
                    |w| {
                        codec.decode(w).map_or(0, |c| {
                            let (mut js, ks) = (a.decode(c[0]).expect("nonzero"), b.decode(c[1]).expect("nonzero"));
                            js.extend(ks);
                            delta.maps[n + m][l].apply(both.encode(&js))
                        })
                    },
                    |w| codec.decode(w).map_or(0, |c| ring.nu(n, m, l, delta.maps[n][l].apply(c[0]), delta.maps[m][l].apply(c[1]))),
                ));
            }
            if n < d {
                let (a, next) = (Smash::power(circle(l), n), Smash::power(circle(l), n + 1));
                let codec = Smash::pair(a.result(), circle(l));
                let u = one.spectrum.structure(n, l);
                let cn = one.cell(n, l).carrier();
                let pair = Smash::pair(cn, circle(l));
                outcomes.push(check_pointwise(
                    format!("delta[{l}]/structure({n})"),
                    codec.result().size(),
                    |w| {
                        codec.decode(w).map_or(0, |c| {
                            let mut js = a.decode(c[0]).expect("nonzero");
                            js.push(c[1]);
                            delta.maps[n + 1][l].apply(next.encode(&js))
                        })
                    },
                    |w| codec.decode(w).map_or(0, |c| u.apply(pair.encode(&[delta.maps[n][l].apply(c[0]), c[1]]))),
                ));
            }
        }
    }
    let mut report = Report::from_outcomes("delta", outcomes, started);
    for (n, m) in model.iter().enumerate() {
        let mut r = check_simplicial_map(&format!("delta/simplicial({n})"), &delta.maps[n], m, one.spectrum.level(n))?;
        r.millis = 0;
        report.merge(r);
    }
    report.millis = started.elapsed().as_millis() as u64;
    Ok((delta, report))
}

/// For `P = S⁰` and `E_n = S⁰` for all `n`: `(1^E)_n` in degree `ℓ` is
/// `Hom(S⁰, S⁰ ∧ S⁰ ∧ S^n_ℓ) ≅ S^n_ℓ`, by evaluation at the non-basepoint.
/// Returns the maps `[n][ℓ]` into the smash model of the spheres.
pub fn sphere_bijection(one: &OneE) -> Result<Vec<Vec<PtMap>>> {
    let k = one.cat.kernel();
    if k.p() != PtSet::s0() || (0..=one.bound()).any(|n| k.ring().seq().carrier(n) != PtSet::s0()) {
        return Err(Error::ShapeMismatch("the sphere comparison needs P = S⁰ and E_n = S⁰".into()));
    }
    (0..=one.bound())
        .map(|n| {
            (0..=one.dim_cap())
                .map(|l| {
                    let c = one.cell(n, l);
                    let spheres = Smash::power(circle(l), n);
                    PtMap::from_fn(c.carrier(), spheres.result(), |f| {
                        c.target_codec().decode(c.map(f).apply(1)).map_or(0, |t| spheres.encode(&t[2..]))
                    })
                })
                .collect()
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Identifies `1^E` with the sphere spectrum. The evaluation bijection must
/// commute with the actions, structure maps, `ν`, `i₀`, `i₁` and the
/// simplicial operators, and invert `δ`. The smash model of `S^n` has
/// `ℓⁿ + 1` simplices in degree `ℓ`; the collapse to `Δⁿ/∂Δⁿ`, with
/// `C(ℓ, n) + 1`, must be a homology isomorphism.
pub fn check_sphere_reconstruction(one: &OneE) -> Result<Report> {
    let started = Instant::now();
    let bij = sphere_bijection(one)?;
    let (ring, _) = ring_structure_nu(one);
    let (delta, _) = delta_sphere_map(one)?;
    let (d, cap) = (one.bound(), one.dim_cap());
    let mut outcomes = Vec::new();
    let mut simplicial = Vec::new();
    for n in 0..=d {
        let model = sphere_model(n, cap);
        let delta_model = sphere(n, cap);
        for l in 0..=cap {
            let b = &bij[n][l];
            let spheres = Smash::power(circle(l), n);
            outcomes.push(check_value(format!("sphere/bijection({n})[{l}]"), usize::from(b.is_bijection()), 1));
            outcomes.push(check_value(format!("sphere/count({n})[{l}]"), b.source().size(), l.pow(n as u32) + 1));
            outcomes.push(check_value(format!("sphere/model-count({n})[{l}]"), model.level_size(l), l.pow(n as u32) + 1));
            outcomes.push(check_value(format!("sphere/delta-count({n})[{l}]"), delta_model.level_size(l), binomial(l, n) + 1));
            if n >= 1 {
                match check_equivariance_map(&format!("sphere/action({n})[{l}]"), b, one.cell(n, l).action(), &power_action(circle(l), n)) {
                    Ok(o) => outcomes.extend(o),
                    Err(e) => outcomes.push(failure_outcome(&e)),
                }
            }
            outcomes.push(check_pointwise(format!("sphere/delta({n})[{l}]"), b.target().size(), |w| b.apply(delta.level(n, l).apply(w)), |w| w));
            if n < d {
                let codec = Smash::pair(b.source(), circle(l));
                let next = Smash::power(circle(l), n + 1);
                let u = one.spectrum.structure(n, l);
                outcomes.push(check_pointwise(
                    format!("sphere/structure({n})[{l}]"),
                    codec.result().size(),
                    |w| bij[n + 1][l].apply(u.apply(w)),
                    |w| {
                        codec.decode(w).map_or(0, |c| match spheres.decode(b.apply(c[0])) {
                            Some(mut js) => {
                                js.push(c[1]);
                                next.encode(&js)
                            }
                            None => 0,
                        })
                    },
                ));
            }
            for m in 0..=d - n {
                let b2 = &bij[m][l];
                let (s2, both) = (Smash::power(circle(l), m), Smash::power(circle(l), n + m));
                let codec = Smash::pair(b.source(), b2.source());
                outcomes.push(check_pointwise(
                    format!("sphere/nu({n},{m})[{l}]"),
                    codec.result().size(),
                    |w| codec.decode(w).map_or(0, |c| bij[n + m][l].apply(ring.nu(n, m, l, c[0], c[1]))),
                    |w| {
                        codec.decode(w).map_or(0, |c| match (spheres.decode(b.apply(c[0])), s2.decode(b2.apply(c[1]))) {
                            (Some(mut js), Some(ks)) => {
                                js.extend(ks);
                                both.encode(&js)
                            }
                            _ => 0,
                        })
                    },
                ));
            }
        }
        simplicial.push(check_simplicial_map(&format!("sphere/simplicial({n})"), &bij[n], one.spectrum.level(n), &model)?);
        // the collapse needs two degrees above n to see H_n and H_{n+1}
        let (sm, dm, collapse) = sphere_comparison(n, n + 2);
        let iso = is_homology_isomorphism(&collapse, &sm, &dm, n)?;
        outcomes.push(check_value(format!("sphere/collapse({n})"), usize::from(iso), 1));
    }
    for l in 0..=cap {
        outcomes.push(check_value(format!("sphere/i0[{l}]"), bij[0][l].apply(ring.i0(l)), 1));
        if d >= 1 {
            outcomes.push(check_pointwise(format!("sphere/i1[{l}]"), l + 1, |j| bij[1][l].apply(ring.i1(l, j)), |j| j));
        }
    }
    let mut report = Report::from_outcomes("sphere-reconstruction", outcomes, started);
    for mut r in simplicial {
        r.millis = 0;
        report.merge(r);
    }
    report.millis = started.elapsed().as_millis() as u64;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringmod::sym_t;

    fn s0_one(bound: usize, cap: usize) -> OneE {
        let s0 = PtSet::s0();
        build_one_e(&sym_t(s0, bound), s0, &PtMap::identity(s0), bound, cap).unwrap()
    }

    #[test]
    fn levels_follow_the_hom_count() {
        let t = PtSet::new(3).unwrap();
        let e = sym_t(t, 2);
        let one = build_one_e(&e, t, &PtMap::identity(t), 2, 2).unwrap();
        // |E_1 ∧ S¹_1|^{|P| - 1} with E_1 = T
        let target = e.ring().seq().carrier(1).smash(&circle(1));
        assert_eq!(one.cell(1, 1).len(), target.size().pow(2));
        assert_eq!(one.cell(0, 0).len(), 2);
    }

    #[test]
    fn sphere_spectrum_is_recovered() {
        let one = s0_one(3, 3);
        assert!(crate::spectral::check_symmetric_spectrum(one.spectrum()).passed());
        let (_, r) = ring_structure_nu(&one);
        assert!(r.passed(), "{:?}", r.violations);
        let (_, r) = delta_sphere_map(&one).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        let r = check_sphere_reconstruction(&one).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
    }

    #[test]
    fn structure_maps_match_summand_inclusions() {
        // independent oracle: for E = Sym(S⁰), u_n sends the map with sphere
        // coordinates js to the one with coordinates (js, j)
        let one = s0_one(2, 2);
        for n in 0..2 {
            for l in 0..=2 {
                let (c, next) = (one.cell(n, l), one.cell(n + 1, l));
                for f in 1..c.len() {
                    for j in 1..=l {
                        let g = one.spectrum().iterate(n, l, f, &[j]);
                        let img = c.target_codec().decode(c.map(f).apply(1)).unwrap();
                        let out = next.target_codec().decode(next.map(g).apply(1)).unwrap();
                        assert_eq!(out[..out.len() - 1], img[..]);
                        assert_eq!(out[out.len() - 1], j);
                    }
                }
            }
        }
    }

    #[test]
    fn bijection_needs_trivial_coefficients() {
        let t = PtSet::new(3).unwrap();
        let one = build_one_e(&sym_t(t, 1), t, &PtMap::identity(t), 1, 1).unwrap();
        assert!(sphere_bijection(&one).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(3, 0), 1);
    }
}

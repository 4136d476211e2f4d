//! Symmetric `S¹`-spectra with finite simplicial levels, the ring spectrum
//! `1^E`, and the spectral category `corr^{E,σ}_*(B)`.
//!
//! Everything is computed termwise in each simplicial degree `ℓ ≤ dim_cap`:
//! the circle is `S¹_ℓ = {0, .., ℓ}` and `S^n_ℓ = (S¹_ℓ)^∧n`.

mod category;
mod one_e;

pub use category::{
    bilinearity_outcomes, build_spectral_category, check_spectral_category, module_action_theta, Bilinearity,
    SpectralCategory, Theta,
};
pub use one_e::{
    build_one_e, check_sphere_reconstruction, delta_sphere_map, ring_structure_nu, sphere_bijection, Delta, OneE,
    OneERing,
};

use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::permgroup::GAction;
use crate::ptset::{PtMap, PtSet, Smash};
use crate::sset::{check_simplicial_identities, circle_degeneracy, circle_face, SimplicialSet, Tabulated};
use crate::symseq::power_action;
use crate::verify::{check_equivariance, check_pointwise, DiagramOutcome, Report};

/// Level `n` of a symmetric `S¹`-spectrum: a simplicial set with a `Σ_n`-action
/// in every simplicial degree.
#[derive(Debug, Clone)]
pub struct SymS1Spectrum {
    levels: Vec<Tabulated>,
    actions: Vec<Vec<GAction>>,
    structure: Vec<Vec<PtMap>>,
}

pub(crate) fn circle(l: usize) -> PtSet {
    PtSet::new(l + 1).expect("nonempty")
}

impl SymS1Spectrum {
    /// `actions[n][ℓ]` acts on degree `ℓ` of `levels[n]`; `structure[n][ℓ]`
    /// is `u_n : (Y_n)_ℓ ∧ S¹_ℓ -> (Y_{n+1})_ℓ`.
    pub fn new(levels: Vec<Tabulated>, actions: Vec<Vec<GAction>>, structure: Vec<Vec<PtMap>>) -> Result<Self> {
        let Some(cap) = levels.first().map(|l| l.dim_cap()) else {
            return Err(Error::ShapeMismatch("a spectrum needs level 0".into()));
        };
        let bound = levels.len() - 1;
        if actions.len() != levels.len() || structure.len() != bound {
            return Err(Error::ShapeMismatch("one action per level and one structure map per level below the bound".into()));
        }
        for (n, y) in levels.iter().enumerate() {
            if y.dim_cap() != cap || actions[n].len() != cap + 1 {
                return Err(Error::ShapeMismatch(format!("level {n} does not reach dimension {cap}")));
            }
            for (l, a) in actions[n].iter().enumerate() {
                if a.carrier().size() != y.level_size(l) || a.degree() != n || a.blocks() != [n] {
                    return Err(Error::MalformedAction(format!("level {n}, degree {l}: need Σ_{n} on the simplices")));
                }
            }
        }
        for (n, maps) in structure.iter().enumerate() {
            if maps.len() != cap + 1 {
                return Err(Error::ShapeMismatch(format!("structure map {n} does not reach dimension {cap}")));
            }
            for (l, u) in maps.iter().enumerate() {
                let src = PtSet::new(levels[n].level_size(l))?.smash(&circle(l));
                if u.source() != src || u.target().size() != levels[n + 1].level_size(l) {
                    return Err(Error::ShapeMismatch(format!("structure map {n} in degree {l} has the wrong shape")));
                }
            }
        }
        Ok(SymS1Spectrum { levels, actions, structure })
    }

    /// The zero spectrum: a point in every level.
    pub fn zero(bound: usize, cap: usize) -> Self {
        let point = Tabulated::constant(PtSet::zero(), cap);
        let actions = (0..=bound).map(|n| vec![GAction::trivial(PtSet::zero(), vec![n]); cap + 1]).collect();
        let structure = (0..bound)
            .map(|_| (0..=cap).map(|l| PtMap::zero(PtSet::zero().smash(&circle(l)), PtSet::zero())).collect())
            .collect();
        SymS1Spectrum { levels: vec![point; bound + 1], actions, structure }
    }

    pub fn bound(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn dim_cap(&self) -> usize {
        self.levels[0].dim_cap()
    }

    pub fn level(&self, n: usize) -> &Tabulated {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[Tabulated] {
        &self.levels
    }

    pub fn action(&self, n: usize, l: usize) -> &GAction {
        &self.actions[n][l]
    }

    pub fn structure(&self, n: usize, l: usize) -> &PtMap {
        &self.structure[n][l]
    }

    /// `u_{n+k-1} ∘ .. ∘ (u_n ∧ id)` on `x ∈ (Y_n)_ℓ` and circle coordinates `js`.
    pub fn iterate(&self, n: usize, l: usize, x: usize, js: &[usize]) -> usize {
        let mut cur = x;
        for (k, &j) in js.iter().enumerate() {
            let codec = Smash::pair(PtSet::new(self.levels[n + k].level_size(l)).expect("nonempty"), circle(l));
            cur = self.structure[n + k][l].apply(codec.encode(&[cur, j]));
        }
        cur
    }
}

/// Simplicial identities of every level, compatibility of the actions and
/// structure maps with faces and degeneracies, and `Σ_n × Σ_k`-equivariance
/// of the iterated structure maps for `n + k ≤ D` in every degree.
pub fn check_symmetric_spectrum(s: &SymS1Spectrum) -> Report {
    check_symmetric_spectrum_as("s1-spectrum", s)
}

pub(crate) fn check_symmetric_spectrum_as(prefix: &str, s: &SymS1Spectrum) -> Report {
    let started = Instant::now();
    let mut report = Report::from_outcomes(prefix, spectrum_outcomes(prefix, s), started);
    for (n, y) in s.levels.iter().enumerate() {
        let mut r = check_simplicial_identities(&format!("{prefix}/level {n}"), y);
        r.millis = 0;
        report.merge(r);
    }
    report.millis = started.elapsed().as_millis() as u64;
    report
}

fn spectrum_outcomes(prefix: &str, s: &SymS1Spectrum) -> Vec<DiagramOutcome> {
    let (d, cap) = (s.bound(), s.dim_cap());
    let cells: Vec<(usize, usize)> = (0..=d).flat_map(|n| (0..=cap).map(move |l| (n, l))).collect();
    let per_cell: Vec<Vec<DiagramOutcome>> = cells
        .par_iter()
        .map(|&(n, l)| {
            let y = &s.levels[n];
            let a = &s.actions[n][l];
            let size = y.level_size(l);
            let mut out = Vec::new();
            for g in a.generator_indices() {
                let t = a.generator(g).expect("present");
                if l > 0 {
                    let lower = s.actions[n][l - 1].generator(g).expect("same group");
                    for i in 0..=l {
                        out.push(check_pointwise(
                            format!("{prefix}/action({n})/s{}d{i}({l})", g + 1),
                            size,
                            |x| y.face(l, i, t[x]),
                            |x| lower[y.face(l, i, x)],
                        ));
                    }
                }
                if l < cap {
                    let upper = s.actions[n][l + 1].generator(g).expect("same group");
                    for i in 0..=l {
                        out.push(check_pointwise(
                            format!("{prefix}/action({n})/s{}s{i}({l})", g + 1),
                            size,
                            |x| y.degeneracy(l, i, t[x]),
                            |x| upper[y.degeneracy(l, i, x)],
                        ));
                    }
                }
            }
            if n < d {
                let codec = Smash::pair(PtSet::new(size).expect("nonempty"), circle(l));
                let next = &s.levels[n + 1];
                let u = &s.structure[n][l];
                if l > 0 {
                    let lower = Smash::pair(PtSet::new(y.level_size(l - 1)).expect("nonempty"), circle(l - 1));
                    for i in 0..=l {
                        out.push(check_pointwise(
                            format!("{prefix}/structure({n})/d{i}({l})"),
                            codec.result().size(),
                            |w| next.face(l, i, u.apply(w)),
                            |w| {
                                codec.decode(w).map_or(0, |c| {
                                    s.structure[n][l - 1].apply(lower.encode(&[y.face(l, i, c[0]), circle_face(l, i, c[1])]))
                                })
                            },
                        ));
                    }
                }
                if l < cap {
                    let upper = Smash::pair(PtSet::new(y.level_size(l + 1)).expect("nonempty"), circle(l + 1));
                    for i in 0..=l {
                        out.push(check_pointwise(
                            format!("{prefix}/structure({n})/s{i}({l})"),
                            codec.result().size(),
                            |w| next.degeneracy(l, i, u.apply(w)),
                            |w| {
                                codec.decode(w).map_or(0, |c| {
                                    s.structure[n][l + 1]
                                        .apply(upper.encode(&[y.degeneracy(l, i, c[0]), circle_degeneracy(i, c[1])]))
                                })
                            },
                        ));
                    }
                }
            }
            for k in 1..=d - n {
                let spheres = power_action(circle(l), k);
                let codec = Smash::pair(PtSet::new(size).expect("nonempty"), spheres.carrier());
                let powers = Smash::power(circle(l), k);
                let source = GAction::smash(a, &spheres);
                match check_equivariance(
                    &format!("{prefix}/iterate({n},{k})[{l}]"),
                    |w| match codec.decode(w) {
                        None => 0,
                        Some(c) => powers.decode(c[1]).map_or(0, |js| s.iterate(n, l, c[0], &js)),
                    },
                    &source,
                    &s.actions[n + k][l],
                ) {
                    Ok(o) => out.extend(o),
                    Err(e) => out.push(crate::verify::failure_outcome(&e)),
                }
            }
            out
        })
        .collect();
    per_cell.into_iter().flatten().collect()
}

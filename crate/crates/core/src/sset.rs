//! Finite pointed simplicial sets truncated at a dimension cap.
//!
//! Two representations share the [`SimplicialSet`] trait: [`FinSimplicialSet`]
//! is presented by nondegenerate generators and their faces, [`Tabulated`]
//! stores explicit face and degeneracy tables. In both, index 0 of every
//! level is the basepoint.

use std::collections::HashMap;
use std::time::Instant;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ptset::{PtMap, PtSet, Smash};
use crate::verify::{check_pointwise, DiagramOutcome, Report};

pub trait SimplicialSet: Sync {
    fn dim_cap(&self) -> usize;

    fn level_size(&self, l: usize) -> usize;

    /// `d_i` from level `l` to level `l - 1`.
    fn face(&self, l: usize, i: usize, x: usize) -> usize;

    /// `s_i` from level `l` to level `l + 1`; requires `l < dim_cap`.
    fn degeneracy(&self, l: usize, i: usize, x: usize) -> usize;

    fn level(&self, l: usize) -> Result<PtSet> {
        if l > self.dim_cap() {
            return Err(Error::CapExceeded { degree: l, cap: self.dim_cap() });
        }
        PtSet::new(self.level_size(l))
    }

    /// `x` is degenerate iff `x = s_j d_j x` for some `j`.
    fn is_degenerate(&self, l: usize, x: usize) -> bool {
        l > 0 && (0..l).any(|j| self.degeneracy(l - 1, j, self.face(l, j, x)) == x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operator {
    Face(usize),
    Degeneracy(usize),
}

/// Applies `op` to `x` at level `l`, returning the new level and simplex.
pub fn apply_operator(set: &dyn SimplicialSet, l: usize, op: Operator, x: usize) -> Result<(usize, usize)> {
    if l > set.dim_cap() || x >= set.level_size(l) {
        return Err(Error::CapExceeded { degree: l, cap: set.dim_cap() });
    }
    match op {
        Operator::Face(i) if l > 0 && i <= l => Ok((l - 1, set.face(l, i, x))),
        Operator::Degeneracy(i) if i <= l && l < set.dim_cap() => Ok((l + 1, set.degeneracy(l, i, x))),
        Operator::Face(i) | Operator::Degeneracy(i) => Err(Error::InvalidOperator { index: i, degree: l }),
    }
}

/// A simplex in Eilenberg–Zilber normal form: a generator and a strictly
/// decreasing degeneracy word `[j_k, .., j_1]`, meaning `s_{j_k} ⋯ s_{j_1} g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Simplex {
    pub generator: usize,
    pub word: Vec<usize>,
}

impl Simplex {
    pub fn new(generator: usize, word: Vec<usize>) -> Self {
        Simplex { generator, word }
    }

    /// The basepoint at level `l`.
    pub fn base(l: usize) -> Self {
        Simplex { generator: 0, word: (0..l).rev().collect() }
    }

    fn surjection(&self, dim: usize) -> Vec<usize> {
        let l = dim + self.word.len();
        (0..=l).map(|v| v - self.word.iter().filter(|&&j| j < v).count()).collect()
    }

    fn from_surjection(generator: usize, eta: &[usize]) -> Self {
        let word = (0..eta.len().saturating_sub(1)).rev().filter(|&v| eta[v] == eta[v + 1]).collect();
        Simplex { generator, word }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub dim: usize,
    pub faces: Vec<Simplex>,
}

#[derive(Debug, Clone)]
struct LevelTable {
    simplices: Vec<(usize, Vec<usize>)>,
    faces: Vec<Vec<usize>>,
    degens: Vec<Vec<usize>>,
}

/// A simplicial set presented by generators; all level tables are built
/// once at construction and read-only afterwards.
#[derive(Debug, Clone)]
pub struct FinSimplicialSet {
    cap: usize,
    generators: Vec<Generator>,
    levels: Vec<LevelTable>,
    index: Vec<HashMap<(usize, Vec<usize>), usize>>,
}

impl FinSimplicialSet {
    /// Generator 0 must be the basepoint vertex.
    pub fn new(cap: usize, generators: Vec<Generator>) -> Result<Self> {
        match generators.first() {
            Some(g) if g.dim == 0 => {}
            _ => return Err(Error::SimplicialIdentity("generator 0 must be the basepoint vertex".into())),
        }
        for (k, g) in generators.iter().enumerate() {
            let expected = if g.dim == 0 { 0 } else { g.dim + 1 };
            if g.faces.len() != expected {
                return Err(Error::SimplicialIdentity(format!("{} needs {expected} faces", g.name)));
            }
            for f in &g.faces {
                let target = generators
                    .get(f.generator)
                    .ok_or_else(|| Error::SimplicialIdentity(format!("{}: unknown generator {}", g.name, f.generator)))?;
                let level = target.dim + f.word.len();
                let admissible = f.word.windows(2).all(|w| w[0] > w[1]) && f.word.iter().all(|&j| j < level);
                if level + 1 != g.dim || !admissible || f.generator == k {
                    return Err(Error::SimplicialIdentity(format!("{}: malformed face {f:?}", g.name)));
                }
            }
        }
        let mut set = FinSimplicialSet { cap, generators, levels: Vec::new(), index: Vec::new() };
        set.seal();
        Ok(set)
    }

    fn seal(&mut self) {
        for l in 0..=self.cap {
            let mut simplices = vec![(0, vec![0; l + 1])];
            for (g, gen) in self.generators.iter().enumerate().skip(1) {
                if gen.dim > l {
                    continue;
                }
                for jumps in (1..=l).combinations(gen.dim) {
                    let eta = (0..=l).map(|v| jumps.iter().filter(|&&p| p <= v).count()).collect();
                    simplices.push((g, eta));
                }
            }
            let index = simplices.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
            self.index.push(index);
            self.levels.push(LevelTable { simplices, faces: Vec::new(), degens: Vec::new() });
        }
        for l in 0..=self.cap {
            let faces: Vec<Vec<usize>> = if l == 0 {
                Vec::new()
            } else {
                (0..=l)
                    .map(|i| {
                        let coface: Vec<usize> = (0..l).map(|v| if v < i { v } else { v + 1 }).collect();
                        self.tabulate(l, &coface, l - 1)
                    })
                    .collect()
            };
            let degens: Vec<Vec<usize>> = if l == self.cap {
                Vec::new()
            } else {
                (0..=l)
                    .map(|i| {
                        let codeg: Vec<usize> = (0..=l + 1).map(|v| if v <= i { v } else { v - 1 }).collect();
                        self.tabulate(l, &codeg, l + 1)
                    })
                    .collect()
            };
            self.levels[l].faces = faces;
            self.levels[l].degens = degens;
        }
    }

    fn tabulate(&self, l: usize, theta: &[usize], target: usize) -> Vec<usize> {
        self.levels[l]
            .simplices
            .iter()
            .map(|(g, eta)| {
                let composite: Vec<usize> = theta.iter().map(|&v| eta[v]).collect();
                let (g2, eta2) = self.restrict(*g, composite);
                self.index[target][&(g2, eta2)]
            })
            .collect()
    }

    // Normal form of `α^* g` for a monotone `α : [m] -> [dim g]`: split off
    // the missing vertices one face at a time, largest first.
    fn restrict(&self, g: usize, alpha: Vec<usize>) -> (usize, Vec<usize>) {
        let dim = self.generators[g].dim;
        let missing = (0..=dim).rev().find(|v| !alpha.contains(v));
        match missing {
            None => (g, alpha),
            Some(b) => {
                let face = &self.generators[g].faces[b];
                let eta = face.surjection(self.generators[face.generator].dim);
                let shifted = alpha.iter().map(|&v| eta[if v < b { v } else { v - 1 }]).collect();
                self.restrict(face.generator, shifted)
            }
        }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn simplex(&self, l: usize, x: usize) -> Simplex {
        let (g, eta) = &self.levels[l].simplices[x];
        Simplex::from_surjection(*g, eta)
    }

    pub fn index_of(&self, s: &Simplex) -> Result<usize> {
        let g = self.generators.get(s.generator).ok_or(Error::UnknownObject(s.generator))?;
        let l = g.dim + s.word.len();
        if l > self.cap {
            return Err(Error::CapExceeded { degree: l, cap: self.cap });
        }
        let eta = s.surjection(g.dim);
        let key = if s.generator == 0 { (0, vec![0; l + 1]) } else { (s.generator, eta) };
        self.index[l]
            .get(&key)
            .copied()
            .ok_or_else(|| Error::SimplicialIdentity(format!("{s:?} is not in normal form")))
    }

    /// Applies a face or degeneracy to a normal-form simplex.
    pub fn apply(&self, op: Operator, s: &Simplex) -> Result<Simplex> {
        let x = self.index_of(s)?;
        let l = self.generators[s.generator].dim + s.word.len();
        let (l2, y) = apply_operator(self, l, op, x)?;
        Ok(self.simplex(l2, y))
    }

    /// Re-presents any simplicial set by its nondegenerate simplices.
    /// Returns the set and, per level, the new index of every old simplex.
    pub fn from_levels(src: &dyn SimplicialSet) -> Result<(FinSimplicialSet, Vec<Vec<usize>>)> {
        let cap = src.dim_cap();
        let mut generators = vec![Generator { name: "*".into(), dim: 0, faces: Vec::new() }];
        let mut gen_of: Vec<HashMap<usize, usize>> = vec![HashMap::new(); cap + 1];
        let mut decomp: Vec<Vec<(usize, Vec<usize>)>> = Vec::with_capacity(cap + 1);
        for l in 0..=cap {
            let mut row = Vec::with_capacity(src.level_size(l));
            for x in 0..src.level_size(l) {
                if x == 0 {
                    row.push((0, vec![0; l + 1]));
                    continue;
                }
                let j = (0..l).find(|&j| src.degeneracy(l - 1, j, src.face(l, j, x)) == x);
                match j {
                    Some(j) => {
                        let (g, eta) = &decomp[l - 1][src.face(l, j, x)];
                        let eta = (0..=l).map(|v| eta[if v <= j { v } else { v - 1 }]).collect();
                        row.push((*g, eta));
                    }
                    None => {
                        let faces = (0..=l)
                            .filter(|_| l > 0)
                            .map(|i| {
                                let (g, eta) = &decomp[l - 1][src.face(l, i, x)];
                                Simplex::from_surjection(*g, eta)
                            })
                            .collect();
                        generators.push(Generator { name: format!("x{l}_{x}"), dim: l, faces });
                        gen_of[l].insert(x, generators.len() - 1);
                        row.push((generators.len() - 1, (0..=l).collect()));
                    }
                }
            }
            decomp.push(row);
        }
        let set = FinSimplicialSet::new(cap, generators)?;
        let relabel = decomp
            .iter()
            .enumerate()
            .map(|(l, row)| row.iter().map(|key| set.index[l][key]).collect())
            .collect();
        Ok((set, relabel))
    }
}

impl SimplicialSet for FinSimplicialSet {
    fn dim_cap(&self) -> usize {
        self.cap
    }

    fn level_size(&self, l: usize) -> usize {
        self.levels[l].simplices.len()
    }

    fn face(&self, l: usize, i: usize, x: usize) -> usize {
        self.levels[l].faces[i][x]
    }

    fn degeneracy(&self, l: usize, i: usize, x: usize) -> usize {
        self.levels[l].degens[i][x]
    }
}

/// `Δ^n / ∂Δ^n`: the basepoint and one `n`-simplex whose faces are all the
/// basepoint. Level `ℓ` has `C(ℓ, n) + 1` elements.
pub fn sphere(n: usize, cap: usize) -> FinSimplicialSet {
    let mut generators = vec![Generator { name: "*".into(), dim: 0, faces: Vec::new() }];
    let faces = if n == 0 { Vec::new() } else { vec![Simplex::base(n - 1); n + 1] };
    generators.push(Generator { name: format!("ι{n}"), dim: n, faces });
    FinSimplicialSet::new(cap, generators).expect("sphere presentation")
}

pub fn point(cap: usize) -> FinSimplicialSet {
    FinSimplicialSet::new(cap, vec![Generator { name: "*".into(), dim: 0, faces: Vec::new() }]).expect("point")
}

/// A simplicial set given by explicit tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tabulated {
    cap: usize,
    sizes: Vec<usize>,
    faces: Vec<Vec<Vec<usize>>>,
    degens: Vec<Vec<Vec<usize>>>,
}

impl Tabulated {
    pub fn new(
        cap: usize,
        sizes: Vec<usize>,
        face: impl Fn(usize, usize, usize) -> usize,
        degeneracy: impl Fn(usize, usize, usize) -> usize,
    ) -> Result<Self> {
        if sizes.len() != cap + 1 || sizes.contains(&0) {
            return Err(Error::ShapeMismatch(format!("{} level sizes for cap {cap}", sizes.len())));
        }
        let mut faces = Vec::with_capacity(cap + 1);
        let mut degens = Vec::with_capacity(cap + 1);
        for l in 0..=cap {
            let f: Vec<Vec<usize>> = if l == 0 {
                Vec::new()
            } else {
                (0..=l).map(|i| (0..sizes[l]).map(|x| face(l, i, x)).collect()).collect()
            };
            let d: Vec<Vec<usize>> = if l == cap {
                Vec::new()
            } else {
                (0..=l).map(|i| (0..sizes[l]).map(|x| degeneracy(l, i, x)).collect()).collect()
            };
            if f.iter().any(|t: &Vec<usize>| t[0] != 0 || t.iter().any(|&y| y >= sizes[l - 1]))
                || d.iter().any(|t: &Vec<usize>| t[0] != 0 || t.iter().any(|&y| y >= sizes[l + 1]))
            {
                return Err(Error::BasepointNotPreserved);
            }
            faces.push(f);
            degens.push(d);
        }
        Ok(Tabulated { cap, sizes, faces, degens })
    }

    pub fn from_set(set: &dyn SimplicialSet) -> Self {
        let cap = set.dim_cap();
        let sizes = (0..=cap).map(|l| set.level_size(l)).collect();
        Tabulated::new(cap, sizes, |l, i, x| set.face(l, i, x), |l, i, x| set.degeneracy(l, i, x))
            .expect("tables of a simplicial set")
    }

    /// A pointed set viewed as a constant simplicial set.
    pub fn constant(a: PtSet, cap: usize) -> Self {
        Tabulated::new(cap, vec![a.size(); cap + 1], |_, _, x| x, |_, _, x| x).expect("constant")
    }
}

impl SimplicialSet for Tabulated {
    fn dim_cap(&self) -> usize {
        self.cap
    }

    fn level_size(&self, l: usize) -> usize {
        self.sizes[l]
    }

    fn face(&self, l: usize, i: usize, x: usize) -> usize {
        self.faces[l][i][x]
    }

    fn degeneracy(&self, l: usize, i: usize, x: usize) -> usize {
        self.degens[l][i][x]
    }
}

/// Level `ℓ` is the smash of the level-`ℓ` pointed sets, coded row-major;
/// operators act coordinatewise. The cap is the smallest factor cap.
pub fn levelwise_smash(factors: &[&dyn SimplicialSet]) -> Result<Tabulated> {
    let cap = factors.iter().map(|f| f.dim_cap()).min().unwrap_or(usize::MAX);
    if cap == usize::MAX {
        return Err(Error::ShapeMismatch("an empty smash has no cap".into()));
    }
    let codecs: Vec<Smash> = (0..=cap)
        .map(|l| Smash::new(factors.iter().map(|f| PtSet::new(f.level_size(l)).expect("nonempty")).collect()))
        .collect();
    let sizes = codecs.iter().map(|c| c.result().size()).collect();
    let op = |l: usize, target: usize, x: usize, f: &dyn Fn(&dyn SimplicialSet, usize) -> usize| match codecs[l].decode(x) {
        None => 0,
        Some(c) => {
            let img: Vec<usize> = c.iter().zip(factors).map(|(&ci, s)| f(*s, ci)).collect();
            codecs[target].encode(&img)
        }
    };
    Tabulated::new(
        cap,
        sizes,
        |l, i, x| op(l, l - 1, x, &|s, c| s.face(l, i, c)),
        |l, i, x| op(l, l + 1, x, &|s, c| s.degeneracy(l, i, c)),
    )
}

/// The smash model `(S¹)^∧n`: level `ℓ` is `ℓ_+^∧n`, coded row-major over
/// tuples `(j_1, .., j_n)` with `1 ≤ j_i ≤ ℓ`.
pub fn sphere_model(n: usize, cap: usize) -> Tabulated {
    let circle = sphere(1, cap);
    let factors: Vec<&dyn SimplicialSet> = vec![&circle; n];
    if n == 0 {
        return Tabulated::constant(PtSet::s0(), cap);
    }
    levelwise_smash(&factors).expect("nonempty")
}

/// Face `d_i` on a non-basepoint `j ∈ S¹_ℓ = {0, .., ℓ}`.
pub fn circle_face(l: usize, i: usize, j: usize) -> usize {
    if j == 0 {
        return 0;
    }
    let k = if i < j { j - 1 } else { j };
    if k == 0 || k == l {
        0
    } else {
        k
    }
}

/// Degeneracy `s_i` on `j ∈ S¹_ℓ`.
pub fn circle_degeneracy(i: usize, j: usize) -> usize {
    if j == 0 {
        0
    } else if i < j {
        j + 1
    } else {
        j
    }
}

/// The collapse `(S¹)^∧n -> Δ^n/∂Δ^n`: a strictly increasing tuple `j` goes
/// to the surjection `v ↦ #{i : v ≥ j_i}`, everything else to the basepoint.
pub fn sphere_comparison(n: usize, cap: usize) -> (Tabulated, FinSimplicialSet, Vec<PtMap>) {
    let model = sphere_model(n, cap);
    let delta = sphere(n, cap);
    let maps = (0..=cap)
        .map(|l| {
            let codec = Smash::power(PtSet::new(l + 1).expect("nonempty"), n);
            let src = PtSet::new(model.level_size(l)).expect("nonempty");
            let tgt = PtSet::new(delta.level_size(l)).expect("nonempty");
            if n == 0 {
                return PtMap::identity(src);
            }
            PtMap::from_fn(src, tgt, |x| match codec.decode(x) {
                Some(j) if j.windows(2).all(|w| w[0] < w[1]) => {
                    let eta: Vec<usize> = (0..=l).map(|v| j.iter().filter(|&&ji| v >= ji).count()).collect();
                    delta.index[l][&(1, eta)]
                }
                _ => 0,
            })
            .expect("in range")
        })
        .collect();
    (model, delta, maps)
}

/// Every simplicial identity, on every simplex within the cap.
pub fn check_simplicial_identities(id: &str, x: &dyn SimplicialSet) -> Report {
    let started = Instant::now();
    let cap = x.dim_cap();
    let mut outcomes: Vec<DiagramOutcome> = Vec::new();
    for l in 0..=cap {
        let size = x.level_size(l);
        for j in 0..=l {
            for i in 0..j {
                if l >= 2 {
                    outcomes.push(check_pointwise(
                        format!("{id}/d{i}d{j}({l})"),
                        size,
                        |s| x.face(l - 1, i, x.face(l, j, s)),
                        |s| x.face(l - 1, j - 1, x.face(l, i, s)),
                    ));
                }
            }
            if l >= cap {
                continue;
            }
            // d_i s_j on level l + 1
            for i in 0..=l + 1 {
                let name = format!("{id}/d{i}s{j}({l})");
                let lhs = |s: usize| x.face(l + 1, i, x.degeneracy(l, j, s));
                let o = if i < j {
                    check_pointwise(name, size, lhs, |s| x.degeneracy(l - 1, j - 1, x.face(l, i, s)))
                } else if i == j || i == j + 1 {
                    check_pointwise(name, size, lhs, |s| s)
                } else {
                    check_pointwise(name, size, lhs, |s| x.degeneracy(l - 1, j, x.face(l, i - 1, s)))
                };
                outcomes.push(o);
            }
            if l + 1 < cap {
                for i in 0..=j {
                    outcomes.push(check_pointwise(
                        format!("{id}/s{i}s{j}({l})"),
                        size,
                        |s| x.degeneracy(l + 1, i, x.degeneracy(l, j, s)),
                        |s| x.degeneracy(l + 1, j + 1, x.degeneracy(l, i, s)),
                    ));
                }
            }
        }
    }
    Report::from_outcomes(id, outcomes, started)
}

/// Checks that levelwise maps `f_ℓ : X_ℓ -> Y_ℓ` commute with every operator.
pub fn check_simplicial_map(id: &str, f: &[PtMap], x: &dyn SimplicialSet, y: &dyn SimplicialSet) -> Result<Report> {
    let started = Instant::now();
    let cap = x.dim_cap().min(y.dim_cap());
    if f.len() <= cap {
        return Err(Error::ShapeMismatch(format!("{id}: {} levels for cap {cap}", f.len())));
    }
    for (l, g) in f.iter().enumerate().take(cap + 1) {
        if g.source().size() != x.level_size(l) || g.target().size() != y.level_size(l) {
            return Err(Error::ShapeMismatch(format!("{id}: level {l} has the wrong shape")));
        }
    }
    let mut outcomes = Vec::new();
    for l in 0..=cap {
        let size = x.level_size(l);
        for i in 0..=l {
            if l > 0 {
                outcomes.push(check_pointwise(
                    format!("{id}/d{i}({l})"),
                    size,
                    |s| f[l - 1].apply(x.face(l, i, s)),
                    |s| y.face(l, i, f[l].apply(s)),
                ));
            }
            if l < cap {
                outcomes.push(check_pointwise(
                    format!("{id}/s{i}({l})"),
                    size,
                    |s| f[l + 1].apply(x.degeneracy(l, i, s)),
                    |s| y.degeneracy(l, i, f[l].apply(s)),
                ));
            }
        }
    }
    Ok(Report::from_outcomes(id, outcomes, started))
}

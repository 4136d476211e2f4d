//! Ring objects in symmetric sequences, right modules, `Sym(T)`, symmetric
//! `T`-spectra and ring `T`-spectra.
//!
//! Multiplications `μ_{n,m}` are stored only for `n + m ≤ D` and every
//! diagram is quantified over the indices whose outputs stay in range.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::permgroup::{all_permutations, shuffle, GAction, Permutation};
use crate::ptset::{PtMap, PtSet, Smash};
use crate::symseq::{power_action, SymSeq, SymSeqMap};
use crate::verify::{check_equivariance, check_equivariance_map, check_pointwise, failure_outcome, DiagramOutcome, Report};

fn index_pairs(bound: usize) -> Vec<(usize, usize)> {
    (0..=bound).flat_map(|n| (0..=bound - n).map(move |m| (n, m))).collect()
}

fn index_triples(bound: usize) -> Vec<(usize, usize, usize)> {
    index_pairs(bound)
        .into_iter()
        .flat_map(|(n, m)| (0..=bound - n - m).map(move |p| (n, m, p)))
        .collect()
}

fn flatten(parts: Vec<Result<Vec<DiagramOutcome>>>) -> Vec<DiagramOutcome> {
    parts
        .into_iter()
        .flat_map(|r| r.unwrap_or_else(|e| vec![shape_failure(e)]))
        .collect()
}

fn shape_failure(e: Error) -> DiagramOutcome {
    failure_outcome(&e)
}

/// A monoid in symmetric sequences, truncated at `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingObject {
    seq: SymSeq,
    mu: BTreeMap<(usize, usize), PtMap>,
    unit: PtMap,
}

impl RingObject {
    /// Tabulates `μ_{n,m}` for `n + m ≤ D` from `mu(n, m, a, b)`.
    pub fn new(seq: SymSeq, mu: impl Fn(usize, usize, usize, usize) -> usize, unit: PtMap) -> Result<Self> {
        let mut maps = BTreeMap::new();
        for (n, m) in index_pairs(seq.bound()) {
            let codec = Smash::pair(seq.carrier(n), seq.carrier(m));
            let f = PtMap::from_fn(codec.result(), seq.carrier(n + m), |x| match codec.decode(x) {
                None => 0,
                Some(c) => mu(n, m, c[0], c[1]),
            })?;
            maps.insert((n, m), f);
        }
        RingObject::from_maps(seq, maps, unit)
    }

    pub fn from_maps(seq: SymSeq, mu: BTreeMap<(usize, usize), PtMap>, unit: PtMap) -> Result<Self> {
        if unit.source() != PtSet::s0() || unit.target() != seq.carrier(0) {
            return Err(Error::ShapeMismatch("unit must be S -> E_0".into()));
        }
        for (n, m) in index_pairs(seq.bound()) {
            let f = mu.get(&(n, m)).ok_or_else(|| Error::ShapeMismatch(format!("missing μ_({n},{m})")))?;
            if f.source() != seq.carrier(n).smash(&seq.carrier(m)) || f.target() != seq.carrier(n + m) {
                return Err(Error::ShapeMismatch(format!("μ_({n},{m}) has the wrong shape")));
            }
        }
        Ok(RingObject { seq, mu, unit })
    }

    pub fn seq(&self) -> &SymSeq {
        &self.seq
    }

    pub fn bound(&self) -> usize {
        self.seq.bound()
    }

    pub fn mu(&self, n: usize, m: usize) -> &PtMap {
        &self.mu[&(n, m)]
    }

    pub fn unit(&self) -> &PtMap {
        &self.unit
    }

    /// `μ_{n,m}(a, b)`.
    pub fn mul(&self, n: usize, m: usize, a: usize, b: usize) -> usize {
        let codec = Smash::pair(self.seq.carrier(n), self.seq.carrier(m));
        self.mu[&(n, m)].apply(codec.encode(&[a, b]))
    }

    /// The unit element `ι₀(1) ∈ E_0`.
    pub fn one(&self) -> usize {
        self.unit.apply(1)
    }

    /// Replaces `μ_{n,m}` by `f`; used to build mutated structures.
    pub fn with_mu(mut self, n: usize, m: usize, f: PtMap) -> Result<Self> {
        let old = self.mu.get(&(n, m)).ok_or(Error::BoundExceeded { degree: n + m, bound: self.bound() })?;
        if old.source() != f.source() || old.target() != f.target() {
            return Err(Error::ShapeMismatch(format!("replacement for μ_({n},{m}) has the wrong shape")));
        }
        self.mu.insert((n, m), f);
        Ok(self)
    }

    /// The zero ring `(S, *, *, ..)`.
    pub fn zero_ring(bound: usize) -> Self {
        let seq = SymSeq::unit(bound);
        RingObject::new(seq, |n, m, a, b| if n + m == 0 { a.min(b) } else { 0 }, PtMap::identity(PtSet::s0()))
            .expect("zero ring")
    }
}

/// Equivariance, associativity and unit diagrams of a ring object.
pub fn check_ring(e: &RingObject) -> Report {
    let started = Instant::now();
    let d = e.bound();
    let seq = &e.seq;
    let mut parts: Vec<Result<Vec<DiagramOutcome>>> = index_pairs(d)
        .into_par_iter()
        .map(|(n, m)| {
            let src = GAction::smash(seq.level(n), seq.level(m));
            check_equivariance_map(&format!("ring/mu({n},{m})"), e.mu(n, m), &src, seq.level(n + m))
        })
        .collect();
    parts.extend(
        index_triples(d)
            .into_par_iter()
            .map(|(n, m, p)| {
                let codec = Smash::new(vec![seq.carrier(n), seq.carrier(m), seq.carrier(p)]);
                Ok(vec![check_pointwise(
                    format!("ring/assoc({n},{m},{p})"),
                    codec.result().size(),
                    |x| match codec.decode(x) {
                        None => 0,
                        Some(c) => e.mul(n + m, p, e.mul(n, m, c[0], c[1]), c[2]),
                    },
                    |x| match codec.decode(x) {
                        None => 0,
                        Some(c) => e.mul(n, m + p, c[0], e.mul(m, p, c[1], c[2])),
                    },
                )])
            })
            .collect::<Vec<_>>(),
    );
    let one = e.one();
    for n in 0..=d {
        let size = seq.carrier(n).size();
        parts.push(Ok(vec![
            check_pointwise(format!("ring/unit-left({n})"), size, |x| e.mul(0, n, one, x), |x| x),
            check_pointwise(format!("ring/unit-right({n})"), size, |x| e.mul(n, 0, x, one), |x| x),
        ]));
    }
    Report::from_outcomes("ring-axioms", flatten(parts), started)
}

/// `μ_{m,n} ∘ twist = χ_{n,m} ∘ μ_{n,m}` for `n + m ≤ D`.
pub fn check_commutative(e: &RingObject) -> Report {
    let started = Instant::now();
    let seq = &e.seq;
    let outcomes = index_pairs(e.bound())
        .into_par_iter()
        .map(|(n, m)| {
            let codec = Smash::pair(seq.carrier(n), seq.carrier(m));
            let chi = shuffle(n, m);
            let target = seq.level(n + m).table(&chi).expect("full group");
            check_pointwise(
                format!("ring/commutative({n},{m})"),
                codec.result().size(),
                |x| codec.decode(x).map_or(0, |c| e.mul(m, n, c[1], c[0])),
                |x| target[e.mu(n, m).apply(x)],
            )
        })
        .collect();
    Report::from_outcomes("commutativity", outcomes, started)
}

/// A right module over a ring object: `α_{n,m} : M_n ∧ E_m -> M_{n+m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightModule {
    seq: SymSeq,
    alpha: BTreeMap<(usize, usize), PtMap>,
}

impl RightModule {
    pub fn new(seq: SymSeq, ring: &RingObject, alpha: impl Fn(usize, usize, usize, usize) -> usize) -> Result<Self> {
        if seq.bound() != ring.bound() {
            return Err(Error::BoundExceeded { degree: seq.bound(), bound: ring.bound() });
        }
        let mut maps = BTreeMap::new();
        for (n, m) in index_pairs(seq.bound()) {
            let codec = Smash::pair(seq.carrier(n), ring.seq.carrier(m));
            let f = PtMap::from_fn(codec.result(), seq.carrier(n + m), |x| match codec.decode(x) {
                None => 0,
                Some(c) => alpha(n, m, c[0], c[1]),
            })?;
            maps.insert((n, m), f);
        }
        Ok(RightModule { seq, alpha: maps })
    }

    /// `E` over itself through `μ`.
    pub fn regular(ring: &RingObject) -> Self {
        RightModule { seq: ring.seq.clone(), alpha: ring.mu.clone() }
    }

    pub fn zero(ring: &RingObject) -> Self {
        RightModule::new(SymSeq::zero(ring.bound()), ring, |_, _, _, _| 0).expect("zero module")
    }

    pub fn seq(&self) -> &SymSeq {
        &self.seq
    }

    pub fn alpha(&self, n: usize, m: usize) -> &PtMap {
        &self.alpha[&(n, m)]
    }

    pub fn act(&self, ring: &RingObject, n: usize, m: usize, x: usize, a: usize) -> usize {
        let codec = Smash::pair(self.seq.carrier(n), ring.seq.carrier(m));
        self.alpha[&(n, m)].apply(codec.encode(&[x, a]))
    }

    pub fn with_alpha(mut self, n: usize, m: usize, f: PtMap) -> Result<Self> {
        let old = self.alpha.get(&(n, m)).ok_or(Error::BoundExceeded { degree: n + m, bound: self.seq.bound() })?;
        if old.source() != f.source() || old.target() != f.target() {
            return Err(Error::ShapeMismatch(format!("replacement for α_({n},{m}) has the wrong shape")));
        }
        self.alpha.insert((n, m), f);
        Ok(self)
    }
}

/// Equivariance of every `α_{n,m}` and the associativity and unit diagrams.
pub fn check_module(module: &RightModule, ring: &RingObject) -> Report {
    let started = Instant::now();
    let (m_seq, e_seq) = (&module.seq, &ring.seq);
    if m_seq.bound() != e_seq.bound() {
        return Report::from_outcomes(
            "module",
            vec![shape_failure(Error::BoundExceeded { degree: m_seq.bound(), bound: e_seq.bound() })],
            started,
        );
    }
    let d = m_seq.bound();
    let mut parts: Vec<Result<Vec<DiagramOutcome>>> = index_pairs(d)
        .into_par_iter()
        .map(|(n, m)| {
            let src = GAction::smash(m_seq.level(n), e_seq.level(m));
            check_equivariance_map(&format!("module/alpha({n},{m})"), module.alpha(n, m), &src, m_seq.level(n + m))
        })
        .collect();
    parts.extend(
        index_triples(d)
            .into_par_iter()
            .map(|(n, m, p)| {
                let codec = Smash::new(vec![m_seq.carrier(n), e_seq.carrier(m), e_seq.carrier(p)]);
                Ok(vec![check_pointwise(
                    format!("module/assoc({n},{m},{p})"),
                    codec.result().size(),
                    |x| match codec.decode(x) {
                        None => 0,
                        Some(c) => module.act(ring, n + m, p, module.act(ring, n, m, c[0], c[1]), c[2]),
                    },
                    |x| match codec.decode(x) {
                        None => 0,
                        Some(c) => module.act(ring, n, m + p, c[0], ring.mul(m, p, c[1], c[2])),
                    },
                )])
            })
            .collect::<Vec<_>>(),
    );
    let one = ring.one();
    for n in 0..=d {
        parts.push(Ok(vec![check_pointwise(
            format!("module/unit({n})"),
            m_seq.carrier(n).size(),
            |x| module.act(ring, n, 0, x, one),
            |x| x,
        )]));
    }
    Report::from_outcomes("module", flatten(parts), started)
}

/// A commutative ring object with a degree-one unit `ι₁ : T -> E_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingTSpectrum {
    ring: RingObject,
    t: PtSet,
    iota1: PtMap,
}

impl RingTSpectrum {
    pub fn new(ring: RingObject, t: PtSet, iota1: PtMap) -> Result<Self> {
        if ring.bound() == 0 {
            return Err(Error::BoundExceeded { degree: 1, bound: 0 });
        }
        if iota1.source() != t || iota1.target() != ring.seq.carrier(1) {
            return Err(Error::ShapeMismatch("ι₁ must be T -> E_1".into()));
        }
        Ok(RingTSpectrum { ring, t, iota1 })
    }

    pub fn ring(&self) -> &RingObject {
        &self.ring
    }

    pub fn t(&self) -> PtSet {
        self.t
    }

    pub fn iota1(&self) -> &PtMap {
        &self.iota1
    }

    pub fn bound(&self) -> usize {
        self.ring.bound()
    }

    pub fn with_iota1(mut self, iota1: PtMap) -> Result<Self> {
        if iota1.source() != self.iota1.source() || iota1.target() != self.iota1.target() {
            return Err(Error::ShapeMismatch("replacement ι₁ has the wrong shape".into()));
        }
        self.iota1 = iota1;
        Ok(self)
    }

    pub fn with_ring(mut self, ring: RingObject) -> Result<Self> {
        if ring.seq != self.ring.seq {
            return Err(Error::ShapeMismatch("replacement ring has a different underlying sequence".into()));
        }
        self.ring = ring;
        Ok(self)
    }

    /// The underlying symmetric `T`-spectrum: `s_n = μ_{n,1} ∘ (E_n ∧ ι₁)`.
    pub fn spectrum(&self) -> SymSpectrum {
        let seq = self.ring.seq.clone();
        let structure = (0..seq.bound())
            .map(|n| {
                let codec = Smash::pair(seq.carrier(n), self.t);
                PtMap::from_fn(codec.result(), seq.carrier(n + 1), |x| {
                    codec.decode(x).map_or(0, |c| self.ring.mul(n, 1, c[0], self.iota1.apply(c[1])))
                })
                .expect("in range")
            })
            .collect();
        SymSpectrum { seq, t: self.t, structure }
    }
}

/// `μ_{n,1} ∘ (E_n ∧ ι₁) = χ_{n,1}⁻¹ ∘ μ_{1,n} ∘ (ι₁ ∧ E_n) ∘ twist` for `n < D`.
pub fn check_centrality(e: &RingTSpectrum) -> Report {
    let started = Instant::now();
    let seq = &e.ring.seq;
    let outcomes = (0..e.bound())
        .into_par_iter()
        .map(|n| {
            let codec = Smash::pair(seq.carrier(n), e.t);
            let chi_inv = seq.level(n + 1).table(&shuffle(n, 1).inverse()).expect("full group");
            check_pointwise(
                format!("ring/centrality({n})"),
                codec.result().size(),
                |x| codec.decode(x).map_or(0, |c| e.ring.mul(n, 1, c[0], e.iota1.apply(c[1]))),
                |x| codec.decode(x).map_or(0, |c| chi_inv[e.ring.mul(1, n, e.iota1.apply(c[1]), c[0])]),
            )
        })
        .collect();
    Report::from_outcomes("centrality", outcomes, started)
}

/// Equivariance, multiplicativity and the unit condition for `f : E -> E'`.
pub fn check_ring_morphism(f: &SymSeqMap, e: &RingObject, e2: &RingObject) -> Report {
    let started = Instant::now();
    match ring_morphism_outcomes(f, e, e2) {
        Ok(outcomes) => Report::from_outcomes("ring-morphism", outcomes, started),
        Err(err) => Report::from_outcomes("ring-morphism", vec![shape_failure(err)], started),
    }
}

/// [`check_ring_morphism`] plus `f_1 ∘ ι₁ = ι₁'`.
pub fn check_t_ring_morphism(f: &SymSeqMap, e: &RingTSpectrum, e2: &RingTSpectrum) -> Report {
    let started = Instant::now();
    let result = ring_morphism_outcomes(f, &e.ring, &e2.ring).and_then(|mut outcomes| {
        if e.t != e2.t {
            return Err(Error::ShapeMismatch("different T".into()));
        }
        outcomes.push(check_pointwise(
            "morphism/iota1",
            e.t.size(),
            |t| f.level(1).apply(e.iota1.apply(t)),
            |t| e2.iota1.apply(t),
        ));
        Ok(outcomes)
    });
    match result {
        Ok(outcomes) => Report::from_outcomes("ring-morphism", outcomes, started),
        Err(err) => Report::from_outcomes("ring-morphism", vec![shape_failure(err)], started),
    }
}

fn ring_morphism_outcomes(f: &SymSeqMap, e: &RingObject, e2: &RingObject) -> Result<Vec<DiagramOutcome>> {
    let d = e.bound();
    if f.bound() != d || e2.bound() != d {
        return Err(Error::BoundExceeded { degree: f.bound(), bound: d });
    }
    let mut outcomes = Vec::new();
    for n in 0..=d {
        outcomes.extend(check_equivariance_map(&format!("morphism/level {n}"), f.level(n), e.seq.level(n), e2.seq.level(n))?);
    }
    for (n, m) in index_pairs(d) {
        let codec = Smash::pair(e.seq.carrier(n), e.seq.carrier(m));
        outcomes.push(check_pointwise(
            format!("morphism/mu({n},{m})"),
            codec.result().size(),
            |x| f.level(n + m).apply(e.mu(n, m).apply(x)),
            |x| codec.decode(x).map_or(0, |c| e2.mul(n, m, f.level(n).apply(c[0]), f.level(m).apply(c[1]))),
        ));
    }
    outcomes.push(check_pointwise("morphism/unit", 2, |x| f.level(0).apply(e.unit.apply(x)), |x| e2.unit.apply(x)));
    Ok(outcomes)
}

/// `Sym(T) = (S, T, T^∧2, ..)` with concatenation as multiplication.
///
/// Panics if `bound` is 0: `ι₁` needs level 1.
pub fn sym_t(t: PtSet, bound: usize) -> RingTSpectrum {
    let seq = SymSeq::smash_powers(t, bound);
    // With the row-major codec, concatenation of coordinates is an index formula.
    let nb = t.non_base();
    let ring = RingObject::new(
        seq,
        |_, m, a, b| if a == 0 || b == 0 { 0 } else { (a - 1) * nb.pow(m as u32) + b },
        PtMap::identity(PtSet::s0()),
    )
    .expect("Sym(T)");
    let iota1 = PtMap::identity(t);
    RingTSpectrum::new(ring, t, iota1).expect("Sym(T) has level 1")
}

/// `Sym(f) : Sym(T) -> Sym(T')` for a pointed map `f : T -> T'`.
pub fn sym_map(f: &PtMap, bound: usize) -> SymSeqMap {
    let maps = (0..=bound)
        .map(|n| {
            let (src, tgt) = (Smash::power(f.source(), n), Smash::power(f.target(), n));
            PtMap::from_fn(src.result(), tgt.result(), |x| match src.decode(x) {
                None => 0,
                Some(coords) => tgt.encode(&coords.iter().map(|&c| f.apply(c)).collect::<Vec<_>>()),
            })
            .expect("in range")
        })
        .collect();
    SymSeqMap::new(maps).expect("level 0 exists")
}

/// The free associative monoid on `T` in degree one: level `n` is
/// `Σ_n+ ∧ T^∧n` with `Σ_n` acting on the label, `μ((α, x), (β, y)) =
/// (α ⊕ β, x y)`. Associative and unital but not commutative.
pub fn tensor_algebra(t: PtSet, bound: usize) -> RingTSpectrum {
    struct Level {
        perms: Vec<Permutation>,
        index: HashMap<Permutation, usize>,
        codec: Smash,
    }
    let levels: Vec<Level> = (0..=bound)
        .map(|n| {
            let perms = all_permutations(n);
            let index = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
            let labels = PtSet::new(perms.len() + 1).expect("nonempty");
            let codec = Smash::new(vec![labels, PtSet::smash_power(&t, n)]);
            Level { perms, index, codec }
        })
        .collect();
    let actions = levels
        .iter()
        .enumerate()
        .map(|(n, l)| {
            GAction::symmetric(l.codec.result(), n, |i, x| match l.codec.decode(x) {
                None => 0,
                Some(c) => {
                    let moved = Permutation::adjacent(n, i).compose(&l.perms[c[0] - 1]).expect("same degree");
                    l.codec.encode(&[l.index[&moved] + 1, c[1]])
                }
            })
        })
        .collect::<Result<Vec<_>>>()
        .expect("left multiplication is an action");
    let seq = SymSeq::new(actions).expect("levels");
    let nb = t.non_base();
    let ring = RingObject::new(
        seq,
        |n, m, a, b| {
            let (ca, cb) = match (levels[n].codec.decode(a), levels[m].codec.decode(b)) {
                (Some(ca), Some(cb)) => (ca, cb),
                _ => return 0,
            };
            let label = Permutation::block_sum(&levels[n].perms[ca[0] - 1], &levels[m].perms[cb[0] - 1]);
            let word = (ca[1] - 1) * nb.pow(m as u32) + cb[1];
            let l = &levels[n + m];
            l.codec.encode(&[l.index[&label] + 1, word])
        },
        PtMap::identity(PtSet::s0()),
    )
    .expect("tensor algebra");
    let l1 = &levels[1];
    let iota1 = PtMap::from_fn(t, l1.codec.result(), |x| l1.codec.encode(&[1, x])).expect("in range");
    RingTSpectrum::new(ring, t, iota1).expect("level 1 exists")
}

/// A symmetric `T`-spectrum: levels `X_n` with structure maps `X_n ∧ T -> X_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymSpectrum {
    seq: SymSeq,
    t: PtSet,
    structure: Vec<PtMap>,
}

impl SymSpectrum {
    pub fn new(seq: SymSeq, t: PtSet, structure: Vec<PtMap>) -> Result<Self> {
        if structure.len() != seq.bound() {
            return Err(Error::ShapeMismatch(format!(
                "{} structure maps for bound {}",
                structure.len(),
                seq.bound()
            )));
        }
        for (n, s) in structure.iter().enumerate() {
            if s.source() != seq.carrier(n).smash(&t) || s.target() != seq.carrier(n + 1) {
                return Err(Error::ShapeMismatch(format!("structure map {n} has the wrong shape")));
            }
        }
        Ok(SymSpectrum { seq, t, structure })
    }

    pub fn seq(&self) -> &SymSeq {
        &self.seq
    }

    pub fn t(&self) -> PtSet {
        self.t
    }

    pub fn bound(&self) -> usize {
        self.seq.bound()
    }

    pub fn structure(&self, n: usize) -> &PtMap {
        &self.structure[n]
    }

    /// The iterated structure map `X_n ∧ T^∧p -> X_{n+p}` on coordinates.
    pub fn iterate(&self, n: usize, x: usize, ts: &[usize]) -> usize {
        let mut cur = x;
        for (k, &t) in ts.iter().enumerate() {
            let codec = Smash::pair(self.seq.carrier(n + k), self.t);
            cur = self.structure[n + k].apply(codec.encode(&[cur, t]));
        }
        cur
    }

    /// The right `Sym(T)`-module with `α_{n,p}` the iterated structure maps.
    pub fn as_module(&self, sym: &RingTSpectrum) -> Result<RightModule> {
        if sym.t != self.t || sym.bound() != self.bound() {
            return Err(Error::ShapeMismatch("module over a different Sym(T)".into()));
        }
        let codecs: Vec<Smash> = (0..=self.bound()).map(|p| Smash::power(self.t, p)).collect();
        RightModule::new(self.seq.clone(), &sym.ring, |n, p, x, w| match codecs[p].decode(w) {
            None => 0,
            Some(ts) => self.iterate(n, x, &ts),
        })
    }
}

/// `Σ_n × Σ_p`-equivariance of every iterated structure map `X_n ∧ T^∧p -> X_{n+p}`.
pub fn check_symmetric_spectrum(x: &SymSpectrum) -> Report {
    let started = Instant::now();
    let parts = index_pairs(x.bound())
        .into_par_iter()
        .map(|(n, p)| {
            let src = GAction::smash(x.seq.level(n), &power_action(x.t, p));
            let codec = Smash::new(vec![x.seq.carrier(n), PtSet::smash_power(&x.t, p)]);
            let powers = Smash::power(x.t, p);
            check_equivariance(
                &format!("spectrum/iterate({n},{p})"),
                |e| match codec.decode(e) {
                    None => 0,
                    Some(c) => powers.decode(c[1]).map_or(0, |ts| x.iterate(n, c[0], &ts)),
                },
                &src,
                x.seq.level(n + p),
            )
        })
        .collect();
    Report::from_outcomes("symmetric-spectrum", flatten(parts), started)
}

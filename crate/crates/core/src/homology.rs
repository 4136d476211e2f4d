//! Reduced integral homology from normalized chains and Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ptset::PtMap;
use crate::sset::SimplicialSet;

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shapes");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Determinant by fraction-free elimination; square matrices only.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    // row[t] += f * row[s]
    fn add_row(&mut self, t: usize, s: usize, f: &BigInt) {
        for j in 0..self.cols {
            let v = f * self.get(s, j);
            self.data[t * self.cols + j] += v;
        }
    }

    // col[t] += f * col[s]
    fn add_col(&mut self, t: usize, s: usize, f: &BigInt) {
        for i in 0..self.rows {
            let v = f * self.get(i, s);
            self.data[i * self.cols + t] += v;
        }
    }

    fn negate_row(&mut self, t: usize) {
        for j in 0..self.cols {
            let v = -self.get(t, j);
            self.set(t, j, v);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotStrategy {
    /// Smallest nonzero absolute value in the remaining block.
    MinAbs,
    /// First nonzero entry in column-major order.
    FirstNonzero,
}

/// `u · m · v = diagonal`, with `u`, `v` unimodular.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub diagonal: Matrix,
    pub u: Matrix,
    pub v: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snf {
    /// Nonzero invariant factors, positive, each dividing the next.
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

struct Reducer<'a> {
    a: Matrix,
    u: Option<&'a mut Matrix>,
    v: Option<&'a mut Matrix>,
}

impl Reducer<'_> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = self.u.as_deref_mut() {
            u.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = self.v.as_deref_mut() {
            v.swap_cols(i, j);
        }
    }

    fn add_row(&mut self, t: usize, s: usize, f: &BigInt) {
        self.a.add_row(t, s, f);
        if let Some(u) = self.u.as_deref_mut() {
            u.add_row(t, s, f);
        }
    }

    fn add_col(&mut self, t: usize, s: usize, f: &BigInt) {
        self.a.add_col(t, s, f);
        if let Some(v) = self.v.as_deref_mut() {
            v.add_col(t, s, f);
        }
    }

    fn negate_row(&mut self, t: usize) {
        self.a.negate_row(t);
        if let Some(u) = self.u.as_deref_mut() {
            u.negate_row(t);
        }
    }

    fn pivot(&self, t: usize, strategy: PivotStrategy) -> Option<(usize, usize)> {
        let (r, c) = (self.a.rows, self.a.cols);
        match strategy {
            PivotStrategy::FirstNonzero => {
                (t..c).flat_map(|j| (t..r).map(move |i| (i, j))).find(|&(i, j)| !self.a.get(i, j).is_zero())
            }
            PivotStrategy::MinAbs => (t..r)
                .flat_map(|i| (t..c).map(move |j| (i, j)))
                .filter(|&(i, j)| !self.a.get(i, j).is_zero())
                .min_by(|&(i, j), &(k, l)| self.a.get(i, j).abs().cmp(&self.a.get(k, l).abs())),
        }
    }

    fn run(&mut self, strategy: PivotStrategy) {
        let (r, c) = (self.a.rows, self.a.cols);
        for t in 0..r.min(c) {
            let Some((pi, pj)) = self.pivot(t, strategy) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..r {
                    if self.a.get(i, t).is_zero() {
                        continue;
                    }
                    let q = self.a.get(i, t).div_floor(self.a.get(t, t));
                    self.add_row(i, t, &-q);
                    if !self.a.get(i, t).is_zero() {
                        self.swap_rows(i, t);
                        clean = false;
                    }
                }
                for j in t + 1..c {
                    if self.a.get(t, j).is_zero() {
                        continue;
                    }
                    let q = self.a.get(t, j).div_floor(self.a.get(t, t));
                    self.add_col(j, t, &-q);
                    if !self.a.get(t, j).is_zero() {
                        self.swap_cols(j, t);
                        clean = false;
                    }
                }
                if !clean {
                    continue;
                }
                let p = self.a.get(t, t).clone();
                let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !self.a.get(i, j).is_multiple_of(&p)));
                match bad {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a.get(t, t).is_negative() {
                self.negate_row(t);
            }
        }
    }
}

pub fn smith_normal_form(m: &Matrix, strategy: PivotStrategy) -> Snf {
    let mut r = Reducer { a: m.clone(), u: None, v: None };
    r.run(strategy);
    diagonal_factors(&r.a)
}

pub fn smith_decomposition(m: &Matrix, strategy: PivotStrategy) -> SmithDecomposition {
    let mut u = Matrix::identity(m.rows);
    let mut v = Matrix::identity(m.cols);
    let mut r = Reducer { a: m.clone(), u: Some(&mut u), v: Some(&mut v) };
    r.run(strategy);
    let diagonal = r.a;
    SmithDecomposition { diagonal, u, v }
}

fn diagonal_factors(d: &Matrix) -> Snf {
    let factors: Vec<BigInt> =
        (0..d.rows.min(d.cols)).map(|i| d.get(i, i).clone()).filter(|x| !x.is_zero()).collect();
    Snf { rank: factors.len(), factors }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub rank: usize,
    /// Invariant factors `≥ 2`, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn zero() -> Self {
        HomologyGroup { rank: 0, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Normalized reduced chains truncated at degree `top`: the basis in degree
/// `k` is the nondegenerate non-basepoint simplices of level `k`.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    basis: Vec<Vec<usize>>,
    boundaries: Vec<Matrix>,
}

impl ChainComplex {
    pub fn top(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn basis(&self, k: usize) -> &[usize] {
        &self.basis[k]
    }

    /// `∂_k : C_k -> C_{k-1}`; `∂_0` is the zero map to the zero group.
    pub fn boundary(&self, k: usize) -> &Matrix {
        &self.boundaries[k]
    }

    pub fn boundary_squares_vanish(&self) -> bool {
        (2..=self.top()).all(|k| self.boundaries[k - 1].mul(&self.boundaries[k]).is_zero())
    }

    /// Homology of the truncated complex, with `H_top = ker ∂_top`.
    pub fn homology(&self, strategy: PivotStrategy) -> Vec<HomologyGroup> {
        let snfs: Vec<Snf> = self.boundaries.par_iter().map(|b| smith_normal_form(b, strategy)).collect();
        (0..=self.top())
            .map(|k| {
                let rank_out = snfs[k].rank;
                let incoming = snfs.get(k + 1);
                let rank_in = incoming.map_or(0, |s| s.rank);
                let torsion = incoming
                    .map(|s| s.factors.iter().filter(|f| !f.is_one()).cloned().collect())
                    .unwrap_or_default();
                HomologyGroup { rank: self.basis[k].len() - rank_out - rank_in, torsion }
            })
            .collect()
    }

    /// `(Σ (-1)^k #basis_k, Σ (-1)^k rank H_k)`.
    pub fn euler_characteristics(&self, strategy: PivotStrategy) -> (i64, i64) {
        let sign = |k: usize| if k.is_multiple_of(2) { 1 } else { -1 };
        let chains = (0..=self.top()).map(|k| sign(k) * self.basis[k].len() as i64).sum();
        let homology = self.homology(strategy).iter().enumerate().map(|(k, h)| sign(k) * h.rank as i64).sum();
        (chains, homology)
    }
}

pub fn normalized_chains(x: &dyn SimplicialSet, top: usize) -> Result<ChainComplex> {
    if top > x.dim_cap() {
        return Err(Error::CapExceeded { degree: top, cap: x.dim_cap() });
    }
    let basis: Vec<Vec<usize>> = (0..=top)
        .into_par_iter()
        .map(|k| (1..x.level_size(k)).filter(|&s| !x.is_degenerate(k, s)).collect())
        .collect();
    let boundaries = (0..=top)
        .map(|k| {
            if k == 0 {
                return Matrix::zeros(0, basis[0].len());
            }
            let row_of = position_map(x.level_size(k - 1), &basis[k - 1]);
            let mut m = Matrix::zeros(basis[k - 1].len(), basis[k].len());
            for (col, &s) in basis[k].iter().enumerate() {
                for i in 0..=k {
                    if let Some(row) = row_of[x.face(k, i, s)] {
                        let v = m.get(row, col) + if i % 2 == 0 { 1 } else { -1 };
                        m.set(row, col, v);
                    }
                }
            }
            m
        })
        .collect();
    Ok(ChainComplex { basis, boundaries })
}

fn position_map(size: usize, basis: &[usize]) -> Vec<Option<usize>> {
    let mut pos = vec![None; size];
    for (i, &s) in basis.iter().enumerate() {
        pos[s] = Some(i);
    }
    pos
}

/// `H̃_k(X)`; needs level `k + 1`.
pub fn reduced_homology(x: &dyn SimplicialSet, k: usize) -> Result<HomologyGroup> {
    if k + 1 > x.dim_cap() {
        return Err(Error::CapExceeded { degree: k + 1, cap: x.dim_cap() });
    }
    let c = normalized_chains(x, k + 1)?;
    Ok(c.homology(PivotStrategy::MinAbs).swap_remove(k))
}

/// The chain map induced by levelwise maps `f_ℓ`, as matrices `C_k(X) -> C_k(Y)`.
pub fn induced_chain_map(f: &[PtMap], x: &ChainComplex, y: &ChainComplex, ys: &dyn SimplicialSet) -> Result<Vec<Matrix>> {
    if f.len() <= x.top() || x.top() != y.top() {
        return Err(Error::ShapeMismatch("chain map needs every degree of both complexes".into()));
    }
    Ok((0..=x.top())
        .map(|k| {
            let row_of = position_map(ys.level_size(k), &y.basis[k]);
            let mut m = Matrix::zeros(y.basis[k].len(), x.basis[k].len());
            for (col, &s) in x.basis[k].iter().enumerate() {
                if let Some(row) = row_of[f[k].apply(s)] {
                    m.set(row, col, BigInt::one());
                }
            }
            m
        })
        .collect())
}

/// Homology of the mapping cone of `f : C -> D`, degrees `0..=top` where
/// both complexes reach `top`. The cone is acyclic through degree `t + 1`
/// exactly when `f` is a homology isomorphism through degree `t`.
pub fn cone_homology(f: &[Matrix], c: &ChainComplex, d: &ChainComplex) -> Vec<HomologyGroup> {
    let top = c.top();
    let size = |k: usize| if k == 0 { d.basis[0].len() } else { c.basis[k - 1].len() + d.basis[k].len() };
    let mut boundaries = vec![Matrix::zeros(0, size(0))];
    for k in 1..=top {
        let (cx_prev, cx) = (if k >= 2 { c.basis[k - 2].len() } else { 0 }, c.basis[k - 1].len());
        let (dy_prev, dy) = (d.basis[k - 1].len(), d.basis[k].len());
        let mut m = Matrix::zeros(cx_prev + dy_prev, cx + dy);
        if k >= 2 {
            let dc = &c.boundaries[k - 1];
            for i in 0..cx_prev {
                for j in 0..cx {
                    m.set(i, j, -dc.get(i, j));
                }
            }
        }
        for i in 0..dy_prev {
            for j in 0..cx {
                m.set(cx_prev + i, j, f[k - 1].get(i, j).clone());
            }
            for j in 0..dy {
                m.set(cx_prev + i, cx + j, d.boundaries[k].get(i, j).clone());
            }
        }
        boundaries.push(m);
    }
    let basis = (0..=top).map(|k| (0..size(k)).collect()).collect();
    ChainComplex { basis, boundaries }.homology(PivotStrategy::MinAbs)
}

/// Is `f : X -> Y` a homology isomorphism in degrees `0..=up_to`? Needs level `up_to + 2`.
pub fn is_homology_isomorphism(f: &[PtMap], x: &dyn SimplicialSet, y: &dyn SimplicialSet, up_to: usize) -> Result<bool> {
    let top = up_to + 2;
    let (cx, cy) = (normalized_chains(x, top)?, normalized_chains(y, top)?);
    let maps = induced_chain_map(f, &cx, &cy, y)?;
    let cone = cone_homology(&maps, &cx, &cy);
    Ok(cone[..=up_to + 1].iter().all(HomologyGroup::is_zero))
}

/// `H̃_{k+n}(X_n)` for `n` in the window, and whether the values agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableHomology {
    pub degree: i64,
    pub values: Vec<(usize, HomologyGroup)>,
    pub stabilizes: bool,
    pub stable: Option<HomologyGroup>,
}

pub fn spectrum_homology(levels: &[&dyn SimplicialSet], k: i64, window: &[usize]) -> Result<StableHomology> {
    let values = window
        .par_iter()
        .map(|&n| {
            let x = levels.get(n).ok_or(Error::BoundExceeded { degree: n, bound: levels.len().saturating_sub(1) })?;
            let degree = k + n as i64;
            let h = if degree < 0 { HomologyGroup::zero() } else { reduced_homology(*x, degree as usize)? };
            Ok((n, h))
        })
        .collect::<Result<Vec<_>>>()?;
    let stabilizes = values.windows(2).all(|w| w[0].1 == w[1].1);
    let stable = if stabilizes { values.last().map(|(_, h)| h.clone()) } else { None };
    Ok(StableHomology { degree: k, values, stabilizes, stable })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{point, sphere, sphere_comparison, sphere_model};
    use itertools::Itertools;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    // gcd of all k×k minors, for k = 1..
    fn determinantal_divisors(m: &Matrix) -> Vec<BigInt> {
        let mut out = Vec::new();
        for k in 1..=m.rows().min(m.cols()) {
            let mut g = BigInt::zero();
            for rows in (0..m.rows()).combinations(k) {
                for cols in (0..m.cols()).combinations(k) {
                    let sub: Vec<Vec<i64>> = rows
                        .iter()
                        .map(|&i| cols.iter().map(|&j| i64::try_from(m.get(i, j)).unwrap()).collect())
                        .collect();
                    g = g.gcd(&Matrix::from_rows(&sub).determinant());
                }
            }
            if g.is_zero() {
                break;
            }
            out.push(g);
        }
        out
    }

    fn oracle_factors(m: &Matrix) -> Vec<BigInt> {
        let d = determinantal_divisors(m);
        (0..d.len()).map(|i| if i == 0 { d[0].clone() } else { &d[i] / &d[i - 1] }).collect()
    }

    #[test]
    fn smith_examples() {
        let m = Matrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(smith_normal_form(&m, PivotStrategy::MinAbs).factors, ints(&[1, 6]));
        assert_eq!(smith_normal_form(&Matrix::zeros(3, 2), PivotStrategy::MinAbs).rank, 0);
        assert_eq!(smith_normal_form(&Matrix::identity(3), PivotStrategy::FirstNonzero).factors, ints(&[1, 1, 1]));
    }

    proptest! {
        #[test]
        fn smith_matches_determinantal_divisors(
            rows in 1usize..4, cols in 1usize..4, seed in proptest::collection::vec(-6i64..7, 16)
        ) {
            let m = Matrix::from_rows(&(0..rows).map(|i| seed[i * 4..i * 4 + cols].to_vec()).collect::<Vec<_>>());
            let a = smith_normal_form(&m, PivotStrategy::MinAbs);
            let b = smith_normal_form(&m, PivotStrategy::FirstNonzero);
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(a.factors.clone(), oracle_factors(&m));
            let dec = smith_decomposition(&m, PivotStrategy::FirstNonzero);
            prop_assert_eq!(dec.u.mul(&m).mul(&dec.v), dec.diagonal.clone());
            prop_assert!(dec.u.determinant().abs().is_one());
            prop_assert!(dec.v.determinant().abs().is_one());
        }
    }

    #[test]
    fn circle_chains() {
        let c = normalized_chains(&sphere(1, 3), 2).unwrap();
        assert!(c.basis(0).is_empty());
        assert_eq!(c.basis(1).len(), 1);
        assert!(c.boundary(1).is_zero());
        let p = normalized_chains(&point(3), 3).unwrap();
        assert!((0..=3).all(|k| p.basis(k).is_empty()));
    }

    #[test]
    fn spheres_have_one_class() {
        for n in 0..=3 {
            let s = sphere(n, n + 2);
            let m = sphere_model(n, n + 2);
            for k in 0..=n + 1 {
                let want = if k == n { 1 } else { 0 };
                for h in [reduced_homology(&s, k).unwrap(), reduced_homology(&m, k).unwrap()] {
                    assert_eq!(h.rank, want, "H_{k} of S^{n}");
                    assert!(h.torsion.is_empty());
                }
            }
        }
        assert!(reduced_homology(&point(3), 1).unwrap().is_zero());
    }

    #[test]
    fn cap_too_small_is_an_error() {
        assert!(matches!(reduced_homology(&sphere(2, 2), 2), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn boundaries_square_to_zero_and_euler_agrees() {
        for n in 0..=3 {
            for c in [normalized_chains(&sphere_model(n, 4), 4).unwrap(), normalized_chains(&sphere(n, 4), 4).unwrap()] {
                assert!(c.boundary_squares_vanish());
                let (a, b) = c.euler_characteristics(PivotStrategy::FirstNonzero);
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn comparison_is_a_homology_isomorphism() {
        for n in 0..=3 {
            let (model, delta, maps) = sphere_comparison(n, n + 2);
            assert!(is_homology_isomorphism(&maps, &model, &delta, n).unwrap());
        }
        // the zero map is not
        let (model, delta, maps) = sphere_comparison(2, 4);
        let zero: Vec<PtMap> = maps.iter().map(|m| PtMap::zero(m.source(), m.target())).collect();
        assert!(!is_homology_isomorphism(&zero, &model, &delta, 2).unwrap());
    }

    #[test]
    fn sphere_spectrum_stabilizes_in_degree_zero() {
        let levels: Vec<_> = (0..=3).map(|n| sphere_model(n, 4)).collect();
        let refs: Vec<&dyn SimplicialSet> = levels.iter().map(|l| l as &dyn SimplicialSet).collect();
        let h = spectrum_homology(&refs, 0, &[1, 2, 3]).unwrap();
        assert!(h.stabilizes);
        assert_eq!(h.stable.unwrap().rank, 1);
        let zero: Vec<_> = (0..=3).map(|_| point(4)).collect();
        let refs: Vec<&dyn SimplicialSet> = zero.iter().map(|l| l as &dyn SimplicialSet).collect();
        let h = spectrum_homology(&refs, 0, &[1, 2, 3]).unwrap();
        assert!(h.values.iter().all(|(_, g)| g.is_zero()));
    }

    #[test]
    fn torsion_is_detected() {
        // Z/2 from a 1x1 boundary with entry 2: a complex with ∂_1 = [2]
        let m = Matrix::from_rows(&[vec![2]]);
        let c = ChainComplex { basis: vec![vec![1], vec![1]], boundaries: vec![Matrix::zeros(0, 1), m] };
        let h = c.homology(PivotStrategy::MinAbs);
        assert_eq!(h[0], HomologyGroup { rank: 0, torsion: ints(&[2]) });
        assert!(h[1].is_zero());
        assert_eq!(h[0].to_string(), "Z/2");
    }
}

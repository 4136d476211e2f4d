//! Exhaustive commuting-diagram and equivariance checking.
//!
//! Every check evaluates two composites on every element of a finite source
//! and records the elements where they disagree. Failures are data: a
//! [`Report`] lists them as [`Violation`]s with the witness and both values.

pub mod mutation;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permgroup::GAction;
use crate::ptset::{PtMap, PtSet};

/// Recorded violations per diagram; the total count stays exact.
pub const VIOLATION_CAP: usize = 10;

const PAR_THRESHOLD: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub diagram: String,
    pub witness: usize,
    pub lhs: usize,
    pub rhs: usize,
}

/// Result of comparing two composites on one source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramOutcome {
    pub id: String,
    pub elements: u64,
    pub violations: Vec<Violation>,
    pub total: u64,
}

impl DiagramOutcome {
    pub fn passed(&self) -> bool {
        self.total == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub diagrams: u64,
    pub elements: u64,
    pub violations: Vec<Violation>,
    pub total_violations: u64,
    pub millis: u64,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            diagrams: 0,
            elements: 0,
            violations: Vec::new(),
            total_violations: 0,
            millis: 0,
        }
    }

    /// Collects outcomes into a report with deterministic violation order.
    pub fn from_outcomes(suite: impl Into<String>, outcomes: Vec<DiagramOutcome>, started: Instant) -> Self {
        let mut report = Report::new(suite);
        for o in outcomes {
            report.absorb(o);
        }
        report.finish(started)
    }

    pub fn passed(&self) -> bool {
        self.total_violations == 0
    }

    pub fn absorb(&mut self, outcome: DiagramOutcome) {
        self.diagrams += 1;
        self.elements += outcome.elements;
        self.total_violations += outcome.total;
        self.violations.extend(outcome.violations);
    }

    pub fn merge(&mut self, other: Report) {
        self.diagrams += other.diagrams;
        self.elements += other.elements;
        self.total_violations += other.total_violations;
        self.violations.extend(other.violations);
        self.millis += other.millis;
        self.sort();
    }

    pub fn finish(mut self, started: Instant) -> Self {
        self.sort();
        self.millis = started.elapsed().as_millis() as u64;
        self
    }

    fn sort(&mut self) {
        self.violations
            .sort_by(|a, b| a.diagram.cmp(&b.diagram).then(a.witness.cmp(&b.witness)));
    }

    /// Violations of the diagrams whose id starts with `prefix`.
    pub fn violations_of<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a Violation> + 'a {
        self.violations.iter().filter(move |v| v.diagram.starts_with(prefix))
    }
}

/// Compares `lhs` and `rhs` on every element of `0..size`.
pub fn check_pointwise<L, R>(id: impl Into<String>, size: usize, lhs: L, rhs: R) -> DiagramOutcome
where
    L: Fn(usize) -> usize + Sync,
    R: Fn(usize) -> usize + Sync,
{
    let id = id.into();
    let mismatch = |x: usize| {
        let (l, r) = (lhs(x), rhs(x));
        (l != r).then_some((x, l, r))
    };
    let mut bad: Vec<(usize, usize, usize)> = if size > PAR_THRESHOLD {
        (0..size).into_par_iter().filter_map(mismatch).collect()
    } else {
        (0..size).filter_map(mismatch).collect()
    };
    bad.sort_unstable();
    let total = bad.len() as u64;
    let violations = bad
        .into_iter()
        .take(VIOLATION_CAP)
        .map(|(witness, lhs, rhs)| Violation { diagram: id.clone(), witness, lhs, rhs })
        .collect();
    DiagramOutcome { id, elements: size as u64, violations, total }
}

/// A structural error met while checking, recorded as one failing diagram
/// with no elements so that it cannot be mistaken for a pass.
pub fn failure_outcome(e: &Error) -> DiagramOutcome {
    let mut o = check_pointwise(format!("shape: {e}"), 1, |_| 0, |_| 1);
    o.elements = 0;
    o
}

/// Records a single yes/no obligation as a diagram on a one-element source.
pub fn check_value(id: impl Into<String>, lhs: usize, rhs: usize) -> DiagramOutcome {
    check_pointwise(id, 1, |_| lhs, |_| rhs)
}

/// Two parallel paths of pointed maps, applied first-to-last.
#[derive(Debug, Clone)]
pub struct DiagramSpec {
    pub id: String,
    pub source: PtSet,
    pub target: PtSet,
    pub left: Vec<PtMap>,
    pub right: Vec<PtMap>,
}

impl DiagramSpec {
    fn validate_path(&self, path: &[PtMap], side: &str) -> Result<()> {
        let mut at = self.source;
        for (k, f) in path.iter().enumerate() {
            if f.source() != at {
                return Err(Error::ShapeMismatch(format!(
                    "{}: {side} edge {k} starts at {} but the path is at {at}",
                    self.id,
                    f.source()
                )));
            }
            at = f.target();
        }
        if at != self.target {
            return Err(Error::ShapeMismatch(format!(
                "{}: {side} path ends at {at}, expected {}",
                self.id, self.target
            )));
        }
        Ok(())
    }

    pub fn evaluate(path: &[PtMap], x: usize) -> usize {
        path.iter().fold(x, |y, f| f.apply(y))
    }
}

/// Evaluates both composites of `spec` on every source element.
pub fn check_diagram(spec: &DiagramSpec) -> Result<Report> {
    let started = Instant::now();
    spec.validate_path(&spec.left, "left")?;
    spec.validate_path(&spec.right, "right")?;
    let outcome = check_pointwise(
        spec.id.clone(),
        spec.source.size(),
        |x| DiagramSpec::evaluate(&spec.left, x),
        |x| DiagramSpec::evaluate(&spec.right, x),
    );
    Ok(Report::from_outcomes(spec.id.clone(), vec![outcome], started))
}

/// Checks `f(g·x) = g·f(x)` for every generator `g` of the source group and
/// every element `x`. The target action is restricted to the source group.
pub fn check_equivariance<F>(id: &str, f: F, source: &GAction, target: &GAction) -> Result<Vec<DiagramOutcome>>
where
    F: Fn(usize) -> usize + Sync,
{
    if source.degree() != target.degree() {
        return Err(Error::DegreeMismatch { expected: target.degree(), found: source.degree() });
    }
    let mut out = Vec::new();
    for i in source.generator_indices() {
        let (gs, gt) = match (source.generator(i), target.generator(i)) {
            (Some(gs), Some(gt)) => (gs, gt),
            _ => {
                return Err(Error::MalformedAction(format!(
                    "{id}: s{} acts on the source but not on the target",
                    i + 1
                )))
            }
        };
        out.push(check_pointwise(
            format!("{id}/equivariance s{}", i + 1),
            source.carrier().size(),
            |x| f(gs[x]),
            |x| gt[f(x)],
        ));
    }
    Ok(out)
}

/// [`check_equivariance`] for a tabulated map.
pub fn check_equivariance_map(id: &str, f: &PtMap, source: &GAction, target: &GAction) -> Result<Vec<DiagramOutcome>> {
    if f.source() != source.carrier() || f.target() != target.carrier() {
        return Err(Error::ShapeMismatch(format!("{id}: map does not match the acting sets")));
    }
    check_equivariance(id, |x| f.apply(x), source, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::GAction;

    fn p(n: usize) -> PtSet {
        PtSet::new(n).unwrap()
    }

    #[test]
    fn identity_against_identity_passes() {
        let a = p(5);
        let spec = DiagramSpec {
            id: "id".into(),
            source: a,
            target: a,
            left: vec![PtMap::identity(a)],
            right: vec![],
        };
        let r = check_diagram(&spec).unwrap();
        assert!(r.passed());
        assert_eq!(r.elements, 5);
    }

    #[test]
    fn zero_edge_is_caught_with_witness() {
        let a = p(4);
        let spec = DiagramSpec {
            id: "square".into(),
            source: a,
            target: a,
            left: vec![PtMap::identity(a), PtMap::identity(a)],
            right: vec![PtMap::zero(a, a), PtMap::identity(a)],
        };
        let r = check_diagram(&spec).unwrap();
        assert!(!r.passed());
        assert_eq!(r.total_violations, 3);
        for v in &r.violations {
            assert_eq!(DiagramSpec::evaluate(&spec.left, v.witness), v.lhs);
            assert_eq!(DiagramSpec::evaluate(&spec.right, v.witness), v.rhs);
            assert_ne!(v.lhs, v.rhs);
        }
    }

    #[test]
    fn non_composable_paths_are_errors() {
        let spec = DiagramSpec {
            id: "bad".into(),
            source: p(3),
            target: p(3),
            left: vec![PtMap::identity(p(2))],
            right: vec![],
        };
        assert!(check_diagram(&spec).is_err());
    }

    #[test]
    fn violations_are_capped_but_counted() {
        let o = check_pointwise("many", 100, |x| x, |_| 0);
        assert_eq!(o.total, 99);
        assert_eq!(o.violations.len(), VIOLATION_CAP);
    }

    #[test]
    fn constant_map_is_equivariant() {
        let a = GAction::symmetric(p(4), 2, |_, x| [0, 2, 1, 3][x]).unwrap();
        let b = GAction::symmetric(p(3), 2, |_, x| [0, 2, 1][x]).unwrap();
        let out = check_equivariance_map("zero", &PtMap::zero(p(4), p(3)), &a, &b).unwrap();
        assert!(out.iter().all(DiagramOutcome::passed));
        // a map that ignores the swap on the source is not
        let f = PtMap::new(p(4), p(3), vec![0, 1, 1, 0]).unwrap();
        let out = check_equivariance_map("f", &f, &a, &b).unwrap();
        assert!(out.iter().any(|o| !o.passed()));
    }

    #[test]
    fn parallel_and_sequential_paths_agree() {
        let big = check_pointwise("big", 10_000, |x| x % 7, |x| x % 5);
        let mut seq: Vec<usize> = (0..10_000).filter(|x| x % 7 != x % 5).collect();
        seq.truncate(VIOLATION_CAP);
        assert_eq!(big.violations.iter().map(|v| v.witness).collect::<Vec<_>>(), seq);
    }
}

//! Scenario files: the base category, the ring `E`, bounds and the suites to run.

use std::path::Path;

use serde::{Deserialize, Serialize};
use symspec_core::ptset::{PtMap, PtSet};
use symspec_core::ringmod::{sym_t, tensor_algebra, RingTSpectrum};

use crate::suites;

/// Anything wrong with a scenario before a suite runs. Exit code 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct ConfigError(pub String);

fn bad<T>(msg: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError(msg.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum RingBase {
    #[default]
    SymT,
    TensorAlgebra,
}

/// Replaces the table of `μ_{n,m}` (images of `E_n ∧ E_m`, basepoint first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MuOverride {
    pub n: usize,
    pub m: usize,
    pub images: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    #[serde(default)]
    pub base: RingBase,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub mu_overrides: Vec<MuOverride>,
    /// Images of `ι₁ : T -> E_1`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iota1: Option<Vec<usize>>,
}

/// Sizes count the basepoint: `S⁰` has size 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    pub t: usize,
    #[serde(default)]
    pub p: Option<usize>,
    /// Images of `σ : P -> T`; the identity when omitted and `P = T`.
    #[serde(default)]
    pub sigma: Option<Vec<usize>>,
    #[serde(default)]
    pub ring: RingSpec,
    #[serde(default = "default_objects")]
    pub objects: Vec<usize>,
    pub bound: usize,
    #[serde(default)]
    pub dim_cap: usize,
    pub suites: Vec<String>,
    /// Suites that must fail; they count as caught when they do.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expected_failures: Vec<String>,
}

fn default_objects() -> Vec<usize> {
    vec![2]
}

/// A validated scenario with its structures built.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub scenario: Scenario,
    pub t: PtSet,
    pub p: PtSet,
    pub sigma: PtMap,
    pub e: RingTSpectrum,
    pub objects: Vec<PtSet>,
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Scenario, ConfigError> {
        serde_json::from_str(text).map_err(|e| ConfigError(format!("scenario does not parse: {e}")))
    }

    pub fn load(path: &Path) -> Result<Scenario, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError(format!("{}: {e}", path.display())))?;
        Scenario::parse(&text)
    }

    /// Fills in defaults and builds `E`, `P`, `σ` and the objects.
    pub fn resolve(mut self) -> Result<Resolved, ConfigError> {
        let pt = |n: usize, what: &str| PtSet::new(n).or_else(|_| bad(format!("{what} must have at least the basepoint")));
        let t = pt(self.t, "T")?;
        let p = pt(*self.p.get_or_insert(self.t), "P")?;
        if self.bound == 0 {
            return bad("bound must be at least 1");
        }
        let sigma_images = match self.sigma.take() {
            Some(s) => s,
            None if p == t => (0..t.size()).collect(),
            None => return bad("σ is required when P differs from T"),
        };
        if sigma_images.len() != p.size() {
            return bad(format!("σ has {} images but |P| = {}", sigma_images.len(), p.size()));
        }
        let sigma = PtMap::new(p, t, sigma_images.clone()).or_else(|e| bad(format!("σ: {e}")))?;
        self.sigma = Some(sigma_images);
        let mut e = match self.ring.base {
            RingBase::SymT => sym_t(t, self.bound),
            RingBase::TensorAlgebra => tensor_algebra(t, self.bound),
        };
        for o in &self.ring.mu_overrides {
            let ring = e.ring();
            if o.n + o.m > self.bound {
                return bad(format!("μ_({},{}) is beyond the bound {}", o.n, o.m, self.bound));
            }
            let (src, tgt) = (ring.mu(o.n, o.m).source(), ring.mu(o.n, o.m).target());
            let f = PtMap::new(src, tgt, o.images.clone()).or_else(|e| bad(format!("μ_({},{}): {e}", o.n, o.m)))?;
            let ring = ring.clone().with_mu(o.n, o.m, f).or_else(|e| bad(format!("μ_({},{}): {e}", o.n, o.m)))?;
            e = e.with_ring(ring).or_else(|e| bad(e.to_string()))?;
        }
        if let Some(images) = &self.ring.iota1 {
            let f = PtMap::new(t, e.ring().seq().carrier(1), images.clone()).or_else(|e| bad(format!("ι₁: {e}")))?;
            e = e.with_iota1(f).or_else(|e| bad(e.to_string()))?;
        }
        if self.objects.is_empty() {
            return bad("at least one object is needed");
        }
        let objects = self.objects.iter().map(|&n| pt(n, "objects")).collect::<Result<Vec<_>, _>>()?;
        for s in self.suites.iter().chain(&self.expected_failures) {
            if !suites::is_known(s) {
                return bad(format!("unknown suite {s:?}"));
            }
        }
        if self.suites.is_empty() {
            return bad("no suites requested");
        }
        Ok(Resolved { scenario: self, t, p, sigma, e, objects })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> Scenario {
        Scenario::parse(r#"{"name": "x", "t": 3, "bound": 2, "suites": ["ring"]}"#).unwrap()
    }

    #[test]
    fn defaults_are_filled_in() {
        let r = base().resolve().unwrap();
        assert_eq!(r.p, r.t);
        assert_eq!(r.scenario.sigma, Some(vec![0, 1, 2]));
        assert_eq!(r.objects, vec![PtSet::s0()]);
    }

    #[test]
    fn sigma_must_match_p() {
        let mut s = base();
        s.p = Some(2);
        assert!(s.clone().resolve().is_err());
        s.sigma = Some(vec![0, 1, 2]);
        assert!(s.clone().resolve().is_err());
        s.sigma = Some(vec![0, 2]);
        assert!(s.resolve().is_ok());
    }

    #[test]
    fn unknown_fields_and_suites_are_rejected() {
        assert!(Scenario::parse(r#"{"name": "x", "t": 3, "bound": 2, "suites": [], "colour": 1}"#).is_err());
        let mut s = base();
        s.suites.push("nope".into());
        assert!(s.resolve().is_err());
    }

    #[test]
    fn mu_overrides_are_applied() {
        let mut s = base();
        s.ring.mu_overrides.push(MuOverride { n: 1, m: 1, images: vec![0, 1, 3, 2, 4] });
        let r = s.clone().resolve().unwrap();
        assert_eq!(r.e.ring().mu(1, 1).apply(2), 3);
        s.ring.mu_overrides[0].images.pop();
        assert!(s.resolve().is_err());
    }
}

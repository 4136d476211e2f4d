//! Scenario runner for the symspec verification suites.
//!
//! A scenario names a base category, a ring `E` and the suites to run; the
//! runner resolves it, runs the suites on a local worker pool and collects a
//! [`RunReport`]. Reports carry no timing outside `millis` and `generated_at`,
//! so two runs of one scenario agree on everything else.

pub mod scenario;
pub mod suites;

use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use symspec_core::verify::{Report, Violation};

use scenario::{ConfigError, Resolved, Scenario};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

pub static BUNDLED: &[(&str, &str)] = &[
    ("ring-axioms-t2", include_str!("../scenarios/ring-axioms-t2.json")),
    ("ring-axioms-t3", include_str!("../scenarios/ring-axioms-t3.json")),
    ("smash-cardinality", include_str!("../scenarios/smash-cardinality.json")),
    ("twist-no-shuffle", include_str!("../scenarios/twist-no-shuffle.json")),
    ("mutations", include_str!("../scenarios/mutations.json")),
    ("correspondences", include_str!("../scenarios/correspondences.json")),
    ("spectral-category", include_str!("../scenarios/spectral-category.json")),
    ("sphere-reconstruction", include_str!("../scenarios/sphere-reconstruction.json")),
    ("homology", include_str!("../scenarios/homology.json")),
    ("custom-mu", include_str!("../scenarios/custom-mu.json")),
];

pub fn bundled(name: &str) -> Option<Scenario> {
    BUNDLED.iter().find(|(n, _)| *n == name).map(|(_, text)| Scenario::parse(text).expect("bundled scenarios parse"))
}

/// A path if one exists, otherwise a bundled scenario name.
pub fn load_scenario(arg: &str) -> Result<Scenario, ConfigError> {
    let path = std::path::Path::new(arg);
    if path.exists() {
        return Scenario::load(path);
    }
    bundled(arg).ok_or_else(|| ConfigError(format!("{arg:?} is neither a file nor a bundled scenario")))
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    pub bound: Option<usize>,
    pub dim_cap: Option<usize>,
    pub fail_fast: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// An expected failure that did fail.
    Caught,
    /// An expected failure that passed.
    Missed,
    Skipped,
}

impl Status {
    pub fn ok(self) -> bool {
        matches!(self, Status::Pass | Status::Caught)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub id: String,
    pub status: Status,
    pub diagrams: u64,
    pub elements: u64,
    pub total_violations: u64,
    pub violations: Vec<Violation>,
    pub millis: u64,
}

impl SuiteResult {
    fn new(report: Report, expect_failure: bool) -> Self {
        let mutation = report.suite.starts_with(suites::MUTATION_PREFIX);
        let status = match (report.passed(), expect_failure, mutation) {
            (true, false, false) => Status::Pass,
            (false, false, false) => Status::Fail,
            (true, false, true) | (false, true, _) => Status::Caught,
            (false, false, true) | (true, true, _) => Status::Missed,
        };
        SuiteResult {
            id: report.suite,
            status,
            diagrams: report.diagrams,
            elements: report.elements,
            total_violations: report.total_violations,
            violations: report.violations,
            millis: report.millis,
        }
    }

    fn skipped(id: &str) -> Self {
        SuiteResult {
            id: id.to_string(),
            status: Status::Skipped,
            diagrams: 0,
            elements: 0,
            total_violations: 0,
            violations: vec![],
            millis: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub tool: String,
    pub version: String,
    pub scenario: String,
    pub config: Scenario,
    pub generated_at: u64,
    pub status: Status,
    pub suites: Vec<SuiteResult>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            EXIT_PASS
        } else {
            EXIT_VERIFICATION
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    /// The report with `generated_at` and every `millis` zeroed.
    pub fn without_timing(&self) -> RunReport {
        let mut r = self.clone();
        r.generated_at = 0;
        for s in &mut r.suites {
            s.millis = 0;
        }
        r
    }
}

/// Applies the overrides and resolves.
pub fn prepare(mut scenario: Scenario, opts: &RunOptions) -> Result<Resolved, ConfigError> {
    if let Some(d) = opts.bound {
        scenario.bound = d;
    }
    if let Some(c) = opts.dim_cap {
        scenario.dim_cap = c;
    }
    scenario.resolve()
}

/// Requested suites first, then the expected failures not already listed.
fn schedule(s: &Scenario) -> Vec<(String, bool)> {
    let mut ids: Vec<(String, bool)> =
        s.suites.iter().map(|id| (id.clone(), s.expected_failures.contains(id))).collect();
    for id in &s.expected_failures {
        if !s.suites.contains(id) {
            ids.push((id.clone(), true));
        }
    }
    ids
}

pub fn run_resolved(r: &Resolved, opts: &RunOptions) -> Result<RunReport, ConfigError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| ConfigError(format!("worker pool: {e}")))?;
    let mut results = Vec::new();
    let mut stop = false;
    for (id, expect_failure) in schedule(&r.scenario) {
        if stop {
            results.push(SuiteResult::skipped(&id));
            continue;
        }
        log::info!("running {id}");
        let result = SuiteResult::new(pool.install(|| suites::run(&id, r)), expect_failure);
        log::info!("{id}: {:?} ({} diagrams, {} elements)", result.status, result.diagrams, result.elements);
        stop = opts.fail_fast && !result.status.ok();
        results.push(result);
    }
    let status = if results.iter().all(|s| s.status.ok()) { Status::Pass } else { Status::Fail };
    Ok(RunReport {
        tool: env!("CARGO_PKG_NAME").to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        scenario: r.scenario.name.clone(),
        config: r.scenario.clone(),
        generated_at: SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0),
        status,
        suites: results,
    })
}

pub fn run_scenario(scenario: Scenario, opts: &RunOptions) -> Result<RunReport, ConfigError> {
    run_resolved(&prepare(scenario, opts)?, opts)
}

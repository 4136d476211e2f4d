//! Acceptance run: one line per criterion.
//!
//! Built with `harness = false` so the lines print without `--nocapture`.
//! Exits nonzero when a criterion differs from its recorded outcome.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use symspec_cli::{bundled, run_scenario, RunOptions, RunReport, BUNDLED};
use symspec_core::homology::{reduced_homology, spectrum_homology, HomologyGroup};
use symspec_core::ptset::{PtMap, PtSet};
use symspec_core::ringmod::sym_t;
use symspec_core::spectral::build_one_e;
use symspec_core::sset::{sphere, SimplicialSet};
use symspec_core::symseq::{brute_force_level_size, check_seq_map, naive_twist_seq, smash_seq, twist_seq};
use symspec_core::verify::check_equivariance_map;
use symspec_core::verify::mutation::{registry, run_mutation_suite};

struct Criterion {
    number: usize,
    title: &'static str,
    passed: bool,
    /// Criteria that cannot hold as stated; the analysis is asserted instead.
    expected_to_fail: bool,
    details: Vec<String>,
}

fn run(name: &str, jobs: usize) -> RunReport {
    let opts = RunOptions { jobs, ..Default::default() };
    run_scenario(bundled(name).unwrap(), &opts).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn summary(r: &RunReport) -> String {
    let elements: u64 = r.suites.iter().map(|s| s.elements).sum();
    let diagrams: u64 = r.suites.iter().map(|s| s.diagrams).sum();
    let violations: u64 = r.suites.iter().map(|s| s.total_violations).sum();
    format!("{}: {:?}, {diagrams} diagrams, {elements} elements, {violations} violations", r.scenario, r.status)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let started = Instant::now();
    let out = f();
    (out, started.elapsed())
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn ring_axioms() -> Criterion {
    let mut details = Vec::new();
    let mut passed = true;
    for name in ["ring-axioms-t2", "ring-axioms-t3"] {
        let (r, took) = timed(|| run(name, 0));
        let elements: u64 = r.suites.iter().map(|s| s.elements).sum();
        passed &= r.passed() && elements > 0 && took < Duration::from_secs(300);
        details.push(format!("{} in {:.2?}", summary(&r), took));
    }
    Criterion { number: 1, title: "ring axioms of Sym(T), |T| in {2,3}, D = 3", passed, expected_to_fail: false, details }
}

/// The naive twist swaps the factors without the block shuffle. At level 2
/// it is equivariant: for `p = q = 1` the shuffle is the transposition and
/// both blocks are trivial, and for `q = 0` it agrees with the real twist.
/// The first level where it fails is 3.
fn shuffle_non_vacuity() -> Criterion {
    let mut details = Vec::new();
    let mut rejected_at_two = true;
    let mut first_failure_is_three = true;
    let mut correct_passes = true;
    for t in [2, 3] {
        let e = sym_t(PtSet::new(t).unwrap(), 3);
        let x = e.ring().seq();
        let xx = smash_seq(x, x).unwrap();
        let naive = naive_twist_seq(&xx, &xx).unwrap();
        let failing: Vec<usize> = (0..=3)
            .filter(|&n| {
                let a = xx.seq().level(n);
                !check_equivariance_map("naive", naive.level(n), a, a).unwrap().iter().all(|o| o.passed())
            })
            .collect();
        rejected_at_two &= failing.contains(&2);
        first_failure_is_three &= failing.first() == Some(&3);
        let twist = twist_seq(&xx, &xx).unwrap();
        correct_passes &= check_seq_map("twist", &twist, xx.seq(), xx.seq()).unwrap().passed();
        details.push(format!("|T| = {t}: naive twist rejected at levels {failing:?}"));
    }
    let mutations = run_mutation_suite("all").unwrap();
    let registered = registry().iter().filter(|m| m.expect_caught).count();
    details.push(format!(
        "correct twist passes: {correct_passes}; {registered} registered mutations caught and the control not: {}",
        mutations.passed()
    ));
    details.push("rejection at level 2 is not attainable: the naive twist is equivariant there".into());
    let analysis_holds = !rejected_at_two && first_failure_is_three && correct_passes && mutations.passed();
    Criterion {
        number: 2,
        title: "shuffle non-vacuity (naive twist rejected at level 2)",
        passed: rejected_at_two && correct_passes && mutations.passed(),
        expected_to_fail: analysis_holds,
        details,
    }
}

fn smash_cardinality() -> Criterion {
    let e = sym_t(PtSet::s0(), 4);
    let x = e.ring().seq();
    let xx = smash_seq(x, x).unwrap();
    let mut passed = true;
    let mut sizes = Vec::new();
    for n in 0..=4 {
        let formula = xx.carrier(n).size();
        let orbits = brute_force_level_size(x, x, n);
        passed &= formula == orbits && orbits == (1 << n) + 1;
        sizes.push(format!("{formula}/{orbits}"));
    }
    let r = run("smash-cardinality", 0);
    passed &= r.passed();
    let details = vec![format!("formula/orbits for n = 0..4: {}", sizes.join(" ")), summary(&r)];
    Criterion { number: 3, title: "|(Sym(S0) ∧ Sym(S0))_n| = 2^n + 1, n ≤ 4", passed, expected_to_fail: false, details }
}

fn correspondences() -> Criterion {
    let (r, took) = timed(|| run("correspondences", 0));
    Criterion {
        number: 4,
        title: "enriched correspondence category, B sizes {1,2}, levels ≤ 2",
        passed: r.passed() && took < Duration::from_secs(600),
        expected_to_fail: false,
        details: vec![format!("{} in {:.2?}", summary(&r), took)],
    }
}

fn sphere_reconstruction() -> Criterion {
    let r = run("sphere-reconstruction", 0);
    let (d, cap) = (3, 4);
    let one = build_one_e(&sym_t(PtSet::s0(), d), PtSet::s0(), &PtMap::identity(PtSet::s0()), d, cap).unwrap();
    let mut counts = true;
    for n in 0..=d {
        let s = sphere(n, cap);
        for l in 0..=cap {
            counts &= one.spectrum().level(n).level_size(l) == l.pow(n as u32) + 1;
            counts &= s.level_size(l) == binomial(l, n) + 1;
        }
    }
    Criterion {
        number: 5,
        title: "1^E recovers the sphere spectrum",
        passed: r.passed() && counts,
        expected_to_fail: false,
        details: vec![summary(&r), format!("level counts ℓ^n + 1 and C(ℓ,n) + 1 for n ≤ {d}, ℓ ≤ {cap}: {counts}")],
    }
}

fn spectral_category() -> Criterion {
    let r = run("spectral-category", 0);
    Criterion {
        number: 6,
        title: "spectral category and the 1^E-action θ",
        passed: r.passed(),
        expected_to_fail: false,
        details: vec![summary(&r)],
    }
}

fn homology() -> Criterion {
    let r = run("homology", 0);
    let mut spheres = true;
    for n in 0..=3 {
        let s = sphere(n, n + 2);
        for k in 0..=n + 1 {
            let h = reduced_homology(&s, k).unwrap();
            spheres &= if k == n { h == HomologyGroup { rank: 1, torsion: vec![] } } else { h.is_zero() };
        }
    }
    let one = build_one_e(&sym_t(PtSet::s0(), 3), PtSet::s0(), &PtMap::identity(PtSet::s0()), 3, 4).unwrap();
    let levels: Vec<&dyn SimplicialSet> = (0..=3).map(|n| one.spectrum().level(n) as &dyn SimplicialSet).collect();
    let stable = spectrum_homology(&levels, 0, &[1, 2, 3]).unwrap();
    let stable_ok = stable.stabilizes && stable.stable.as_ref().is_some_and(|h| h.rank == 1 && h.torsion.is_empty());
    let stable_text = stable.stable.map_or("none".to_string(), |h| h.to_string());
    Criterion {
        number: 7,
        title: "homology of spheres and of 1^{Sym(S0)}",
        passed: r.passed() && spheres && stable_ok,
        expected_to_fail: false,
        details: vec![
            summary(&r),
            format!("H̃_k(S^n) = ℤ iff k = n for n ≤ 3: {spheres}; stable degree 0 over levels 1..3: {stable_text}"),
        ],
    }
}

fn determinism() -> Criterion {
    let mut passed = true;
    let mut details = Vec::new();
    for (name, _) in BUNDLED {
        let reports: Vec<String> = [1, 2, 4].iter().map(|&j| run(name, j).without_timing().to_json()).collect();
        let same = reports.windows(2).all(|w| w[0] == w[1]);
        passed &= same;
        if !same {
            details.push(format!("{name}: reports differ across --jobs"));
        }
    }
    details.push(format!("{} scenarios compared at --jobs 1, 2, 4", BUNDLED.len()));
    Criterion { number: 8, title: "reports independent of --jobs", passed, expected_to_fail: false, details }
}

fn main() -> ExitCode {
    let criteria = [
        ring_axioms(),
        shuffle_non_vacuity(),
        smash_cardinality(),
        correspondences(),
        sphere_reconstruction(),
        spectral_category(),
        homology(),
        determinism(),
    ];
    let mut unexpected = 0;
    for c in &criteria {
        let verdict = match (c.passed, c.expected_to_fail) {
            (true, _) => "PASS",
            (false, true) => "FAIL (expected, see analysis)",
            (false, false) => "FAIL",
        };
        println!("criterion {}: {verdict}: {}", c.number, c.title);
        for d in &c.details {
            println!("    {d}");
        }
        if !c.passed && !c.expected_to_fail {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria failed");
        ExitCode::FAILURE
    }
}

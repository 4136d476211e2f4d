use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use symspec_core::corrcat::CorrCategory;
use symspec_core::homology::spectrum_homology;
use symspec_core::ptset::PtSet;
use symspec_core::ringmod::sym_t;
use symspec_core::spectral::build_one_e;
use symspec_core::sset::{sphere, sphere_model, SimplicialSet};
use symspec_core::symseq::smash_seq;
use symspec_core::verify::mutation::registry;
use symspec_cli::scenario::ConfigError;
use symspec_cli::suites::{s0_identity, CATALOG, MUTATION_PREFIX};
use symspec_cli::{load_scenario, run_scenario, RunOptions, BUNDLED, EXIT_CONFIG};

#[derive(Parser)]
#[command(name = "symspec", version, about = "Exhaustive checks of symmetric ring spectra built from finite pointed sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file or a bundled scenario by name.
    Run {
        scenario: String,
        /// Worker threads (0: one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Override the level bound D.
        #[arg(long = "bound-D")]
        bound: Option<usize>,
        /// Override the simplicial dimension cap.
        #[arg(long)]
        dim_cap: Option<usize>,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Skip the remaining suites after the first failure.
        #[arg(long)]
        fail_fast: bool,
    },
    /// List suites, mutations and bundled scenarios.
    ListSuites,
    /// Stable homology of a spectrum over a window of levels.
    Homology {
        spectrum: SpectrumId,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        degree: i64,
        /// Levels, as `1,2,3` or `1..3`.
        #[arg(long, default_value = "1..3")]
        window: String,
        #[arg(long)]
        dim_cap: Option<usize>,
    },
    /// Print level sizes of a construction.
    Describe {
        construction: Construction,
        /// |T| including the basepoint.
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[arg(long = "bound-D", default_value_t = 3)]
        bound: usize,
        #[arg(long, default_value_t = 3)]
        dim_cap: usize,
        /// Object sizes for `corr`.
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        objects: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SpectrumId {
    Sphere,
    SphereModel,
    OneE,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    SymT,
    Smash,
    Corr,
    OneE,
    Sphere,
}

fn parse_window(w: &str) -> Result<Vec<usize>, ConfigError> {
    let bad = || ConfigError(format!("window {w:?} is not `a..b` or a comma list"));
    if let Some((a, b)) = w.split_once("..") {
        let (a, b) = (a.trim().parse::<usize>().map_err(|_| bad())?, b.trim().parse::<usize>().map_err(|_| bad())?);
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    let v = w.split(',').map(|s| s.trim().parse::<usize>()).collect::<Result<Vec<_>, _>>().map_err(|_| bad())?;
    if v.is_empty() {
        return Err(bad());
    }
    Ok(v)
}

fn pt(n: usize) -> Result<PtSet, ConfigError> {
    PtSet::new(n).map_err(|e| ConfigError(e.to_string()))
}

fn core(e: symspec_core::Error) -> ConfigError {
    ConfigError(e.to_string())
}

fn run(
    scenario: &str,
    opts: RunOptions,
    report: Option<PathBuf>,
) -> Result<i32, ConfigError> {
    let report_out = run_scenario(load_scenario(scenario)?, &opts)?;
    for s in &report_out.suites {
        eprintln!(
            "{:<8} {:<32} {:>6} diagrams {:>12} elements {:>6} violations",
            format!("{:?}", s.status).to_lowercase(),
            s.id,
            s.diagrams,
            s.elements,
            s.total_violations
        );
    }
    let json = report_out.to_json();
    match report {
        Some(path) => std::fs::write(&path, json).map_err(|e| ConfigError(format!("{}: {e}", path.display())))?,
        None => print!("{json}"),
    }
    Ok(report_out.exit_code())
}

fn list_suites() {
    println!("suites:");
    for s in CATALOG {
        println!("  {:<24} {}", s.id, s.description);
    }
    println!("mutations (request as {MUTATION_PREFIX}<id>, {MUTATION_PREFIX}<suite> or {MUTATION_PREFIX}all):");
    for m in registry() {
        let tag = if m.expect_caught { "" } else { " [control]" };
        println!("  {:<32} {}{tag}", m.id, m.description);
    }
    println!("bundled scenarios:");
    for (name, _) in BUNDLED {
        println!("  {name}");
    }
}

fn homology(spectrum: SpectrumId, degree: i64, window: &str, dim_cap: Option<usize>) -> Result<i32, ConfigError> {
    let window = parse_window(window)?;
    let top = *window.iter().max().unwrap_or(&0);
    // H̃_{k+n} of level n needs simplices of dimension k + n + 1
    let cap = dim_cap.unwrap_or((degree + top as i64 + 1).max(1) as usize);
    let levels: Vec<Box<dyn SimplicialSet>> = match spectrum {
        SpectrumId::Sphere => (0..=top).map(|n| Box::new(sphere(n, cap)) as Box<dyn SimplicialSet>).collect(),
        SpectrumId::SphereModel => (0..=top).map(|n| Box::new(sphere_model(n, cap)) as Box<dyn SimplicialSet>).collect(),
        SpectrumId::OneE => {
            let one = build_one_e(&sym_t(PtSet::s0(), top.max(1)), PtSet::s0(), &s0_identity(), top.max(1), cap)
                .map_err(core)?;
            (0..=top).map(|n| Box::new(one.spectrum().level(n).clone()) as Box<dyn SimplicialSet>).collect()
        }
    };
    let refs: Vec<&dyn SimplicialSet> = levels.iter().map(|b| b.as_ref()).collect();
    let h = spectrum_homology(&refs, degree, &window).map_err(core)?;
    for (n, g) in &h.values {
        println!("level {n}: H̃_{} = {g}", degree + *n as i64);
    }
    match &h.stable {
        Some(g) => println!("stable degree {degree}: {g}"),
        None => println!("stable degree {degree}: does not stabilize on this window"),
    }
    Ok(0)
}

fn describe(c: Construction, t: usize, bound: usize, dim_cap: usize, objects: &[usize]) -> Result<i32, ConfigError> {
    let tt = pt(t)?;
    match c {
        Construction::SymT => {
            let e = sym_t(tt, bound.max(1));
            for n in 0..=bound {
                println!("E_{n}: {}", e.ring().seq().carrier(n).size());
            }
        }
        Construction::Smash => {
            let x = sym_t(tt, bound.max(1));
            let xx = smash_seq(x.ring().seq(), x.ring().seq()).map_err(core)?;
            for n in 0..=bound {
                println!("(E ∧ E)_{n}: {}", xx.carrier(n).size());
            }
        }
        Construction::Corr => {
            let objs = objects.iter().map(|&n| pt(n)).collect::<Result<Vec<_>, _>>()?;
            let cat = CorrCategory::new(&objs, tt, sym_t(tt, bound.max(1)).ring().clone()).map_err(core)?;
            for &x in &objs {
                for &y in &objs {
                    let sizes = (0..=bound)
                        .map(|n| cat.hom(x, y, n).map(|c| c.len().to_string()))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(core)?;
                    println!("corr({}, {}): {}", x.size(), y.size(), sizes.join(" "));
                }
            }
        }
        Construction::OneE => {
            let id = symspec_core::ptset::PtMap::identity(tt);
            let one = build_one_e(&sym_t(tt, bound.max(1)), tt, &id, bound.max(1), dim_cap).map_err(core)?;
            for n in 0..=bound {
                let y = one.spectrum().level(n);
                let sizes: Vec<String> = (0..=dim_cap).map(|l| y.level_size(l).to_string()).collect();
                println!("1^E_{n}: {}", sizes.join(" "));
            }
        }
        Construction::Sphere => {
            for n in 0..=bound {
                let s = sphere(n, dim_cap);
                let sizes: Vec<String> = (0..=dim_cap).map(|l| s.level_size(l).to_string()).collect();
                println!("S^{n}: {}", sizes.join(" "));
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SYMSPEC_LOG", "warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run { scenario, jobs, bound, dim_cap, report, fail_fast } => {
            run(&scenario, RunOptions { jobs, bound, dim_cap, fail_fast }, report)
        }
        Command::ListSuites => {
            list_suites();
            Ok(0)
        }
        Command::Homology { spectrum, degree, window, dim_cap } => homology(spectrum, degree, &window, dim_cap),
        Command::Describe { construction, t, bound, dim_cap, objects } => {
            describe(construction, t, bound, dim_cap, &objects)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_CONFIG as u8)
        }
    }
}

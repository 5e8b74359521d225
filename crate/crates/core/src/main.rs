//! Command-line interface for the lattice-free maximizer toolkit.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 internal
//! contradiction (a result that falsifies an invariant the pipeline
//! guarantees).

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use latmax::classify::{slice_structure_check, m_catalog, verify_catalogs};
use latmax::formats::PolytopeFile;
use latmax::maximality::assess;
use latmax::oracle2d::brute_force_2d_oracle;
use latmax::rat::{rat, rat_to_string};
use latmax::report::{
    Classify2dArtifact, ClassSummary2D, InputAssessment, SearchArtifact, Timings,
    VerifyArtifact, ARTIFACT_VERSION,
};
use latmax::search::{run_search, SearchConfig, SearchError};

#[derive(Parser)]
#[command(
    name = "latmax",
    about = "Enumerate and certify maximal lattice-free integral polytopes in dimension 3",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full enumeration and classification pipeline.
    Search(SearchArgs),
    /// Verify the built-in catalogs, or assess a polytope file.
    Verify(VerifyArgs),
    /// Independently enumerate the maximal lattice-free half-integral
    /// polygons by brute force.
    Classify2d(Classify2dArgs),
}

#[derive(Args)]
struct SearchArgs {
    /// Lattice diameter to search: 1, 2, 3, or "all".
    #[arg(long, default_value = "all")]
    ld: String,
    /// Bounding-box inflation for non-maximality certificate search.
    #[arg(long, default_value_t = 2)]
    margin: i64,
    /// Worker threads (0 = all cores). Falls back to LATMAX_JOBS.
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Polytope file to assess; omit to verify the built-in catalogs.
    #[arg(long)]
    input: Option<std::path::PathBuf>,
    /// Bounding-box inflation for non-maximality certificate search.
    #[arg(long, default_value_t = 2)]
    margin: i64,
}

#[derive(Args)]
struct Classify2dArgs {
    /// Inclusive half-integral coordinate window, "lo,hi".
    #[arg(long, default_value = "-2,4", allow_hyphen_values = true)]
    window: String,
    /// Bounding-box inflation for the integer-extension filter.
    #[arg(long, default_value_t = 3)]
    margin: i64,
}

fn jobs_from_env() -> usize {
    std::env::var("LATMAX_JOBS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

fn emit(out: &Option<std::path::PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_search(args: &SearchArgs) -> Result<(), (u8, String)> {
    let ld_values: Vec<u8> = match args.ld.as_str() {
        "all" => vec![1, 2, 3],
        s => vec![s
            .parse()
            .ok()
            .filter(|v| (1..=3).contains(v))
            .ok_or((1u8, format!("--ld must be 1, 2, 3, or \"all\" (got {s:?})")))?],
    };
    if args.margin < 1 {
        return Err((1, format!("--margin must be >= 1 (got {})", args.margin)));
    }
    let cfg = SearchConfig {
        ld_values,
        certificate_margin: args.margin,
        jobs: args.jobs.unwrap_or_else(jobs_from_env),
    };
    let start = Instant::now();
    let report = run_search(&cfg).map_err(|e| match e {
        SearchError::MaximalityContradiction(_) => (2u8, e.to_string()),
        other => (1u8, other.to_string()),
    })?;
    let mut timings: Timings = BTreeMap::new();
    timings.insert("total_ms".into(), start.elapsed().as_millis());
    let artifact = SearchArtifact::new(report, timings);
    emit(&args.out, &artifact.to_json()).map_err(|m| (1, m))?;
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), (u8, String)> {
    if args.margin < 1 {
        return Err((1, format!("--margin must be >= 1 (got {})", args.margin)));
    }
    let start = Instant::now();
    let catalog_checks = verify_catalogs();
    let mut slice_checks = Vec::new();
    for entry in m_catalog() {
        slice_checks.extend(slice_structure_check(&entry));
    }
    let input = match &args.input {
        None => None,
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| (1u8, format!("cannot read {}: {e}", path.display())))?;
            let file = PolytopeFile::parse(&text).map_err(|e| (1u8, e.to_string()))?;
            let poly = file.to_polytope().map_err(|e| (1u8, e.to_string()))?;
            let lattice_free = poly.dim() == 3 && poly.is_lattice_free();
            let (verdict, volume6, size_bounds_ok) = if lattice_free {
                let verdict = assess(&poly, args.margin).map_err(|e| (1u8, e.to_string()))?;
                let v6 = poly.volume() * rat(6);
                let d6 = poly.difference_body().volume() * rat(6);
                let ok = v6 <= rat(162) && d6 <= rat(1296);
                (Some(verdict), Some(rat_to_string(&v6)), Some(ok))
            } else {
                (None, None, None)
            };
            Some(InputAssessment {
                name: file.name.clone(),
                vertices: file.vertices.clone(),
                lattice_free,
                verdict,
                volume6,
                size_bounds_ok,
            })
        }
    };
    let all_passed = catalog_checks.iter().chain(&slice_checks).all(|c| c.pass);
    let mut timings: Timings = BTreeMap::new();
    timings.insert("total_ms".into(), start.elapsed().as_millis());
    let artifact = VerifyArtifact {
        artifact_version: ARTIFACT_VERSION,
        catalog_checks,
        slice_checks,
        input,
        all_passed,
        timings,
    };
    print!("{}", artifact.to_json());
    if all_passed {
        Ok(())
    } else {
        Err((2, "catalog verification failed".into()))
    }
}

fn cmd_classify2d(args: &Classify2dArgs) -> Result<(), (u8, String)> {
    let window: Vec<i64> = args
        .window
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| (1u8, format!("--window must be \"lo,hi\" (got {:?})", args.window)))?;
    let (lo, hi) = match window.as_slice() {
        [lo, hi] if lo < hi => (*lo, *hi),
        _ => return Err((1, format!("--window must be \"lo,hi\" with lo < hi (got {:?})", args.window))),
    };
    if args.margin < 1 {
        return Err((1, format!("--margin must be >= 1 (got {})", args.margin)));
    }
    let start = Instant::now();
    let result = brute_force_2d_oracle((lo, hi), args.margin);
    let classes = result
        .classes
        .iter()
        .map(|(poly, label)| ClassSummary2D {
            label: label.map(str::to_string),
            vertices: poly
                .canonical_vertices()
                .iter()
                .map(|v| [rat_to_string(&v[0]), rat_to_string(&v[1])])
                .collect(),
        })
        .collect();
    let mut timings: Timings = BTreeMap::new();
    timings.insert("total_ms".into(), start.elapsed().as_millis());
    let artifact = Classify2dArtifact {
        artifact_version: ARTIFACT_VERSION,
        window: [lo, hi],
        margin: args.margin,
        states_visited: result.states_visited,
        maximal_count: result.maximal.len(),
        classes,
        anomaly_count: result.anomalies.len(),
        timings,
    };
    print!("{}", artifact.to_json());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Search(args) => cmd_search(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Classify2d(args) => cmd_classify2d(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

//! Command-line interface for the uncurling-metric engine.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification
//! failure (a check that must hold by theory did not).

use antirotor::Error;
use antirotor_cli::*;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::hash::Hasher;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "antirotor",
    version,
    about = "Exact uncurling metrics, algebra invariants, and dual unital norms",
    long_about = "Computes the space of symmetric metrics whose pairing with an algebra's \
                  inversion (or power) field is curl-free, derives isomorphism invariants from \
                  it, and evaluates the dual norm line integrals numerically.\n\nAlgebras are \
                  given as registry:<name>[:<n>] or as a JSON structure-constants file."
)]
struct Cli {
    /// Emit a machine-readable JSON report on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Quadrature tolerance (default 1e-10; env ANTIROTOR_TOL overrides).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Include wall-clock timing in the JSON report (off by default so
    /// identical inputs give byte-identical output).
    #[arg(long, global = true)]
    timing: bool,
    /// Seed for every randomized harness.
    #[arg(long, global = true, default_value_t = 0xa11ce)]
    seed: u64,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Validate structure constants: associativity, unit, ‖1‖².
    Validate { algebra: String },
    /// Compute the metric family annihilating the curl of L·f(s).
    Antirotor {
        algebra: String,
        /// Use f(s) = s^j instead of the inverse.
        #[arg(long, allow_hyphen_values = true)]
        power: Option<i64>,
    },
    /// The affine subfamily of normalized metrics (sᵀL s⁻¹ = ‖1‖²).
    Normalized { algebra: String },
    /// Rank, determinant, variety, and τ invariants.
    Invariants {
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        power: Option<i64>,
    },
    /// Evaluate the dual norm at a point by adaptive quadrature.
    NormEval {
        algebra: String,
        /// `designated`, inline JSON rows, or @file.
        #[arg(long)]
        metric: String,
        /// Comma-separated coordinates.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Skip the uncurling verification (diagnostics only).
        #[arg(long)]
        unchecked: bool,
    },
    /// Run one verification: path-independence, homogeneity, reciprocity,
    /// special-norm, curl-fd, iso-trials, or type-survey.
    Check {
        kind: String,
        algebra: String,
        #[arg(long)]
        metric: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        /// Trial count for iso-trials.
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// Comma-separated exponents for type-survey.
        #[arg(long, default_value = "-2,2,3", allow_hyphen_values = true)]
        powers: String,
    },
    /// Invariant comparison of two algebras with a verdict.
    Compare { a: String, b: String },
    /// Structure constants of the isomorphic image under K (s ↦ K·s).
    Transform {
        algebra: String,
        /// Invertible matrix as JSON rows.
        #[arg(long)]
        matrix: String,
        /// Write the algebra file here instead of stdout only.
        #[arg(long)]
        output: Option<String>,
    },
    /// List built-in algebras, or print one as an algebra file.
    Registry { name: Option<String> },
    /// Replay the full verification suite.
    Selftest {
        /// Only run cases whose name or group contains this substring.
        #[arg(long)]
        only: Option<String>,
    },
}

fn digest(parts: &[&str]) -> String {
    let mut h = rustc_hash::FxHasher::default();
    for p in parts {
        h.write(p.as_bytes());
        h.write_u8(0);
    }
    format!("{:016x}", h.finish())
}

fn run(cli: &Cli) -> antirotor::Result<(CmdOutput, String, Vec<String>)> {
    let tol = cli.tol.unwrap_or_else(default_tol);
    let (verb_name, inputs, out): (&str, Vec<String>, CmdOutput) = match &cli.verb {
        Verb::Validate { algebra } => {
            ("validate", vec![algebra.clone()], cmd_validate(algebra)?)
        }
        Verb::Antirotor { algebra, power } => (
            "antirotor",
            vec![algebra.clone(), format!("{power:?}")],
            cmd_antirotor(algebra, *power)?,
        ),
        Verb::Normalized { algebra } => {
            ("normalized", vec![algebra.clone()], cmd_normalized(algebra)?)
        }
        Verb::Invariants { algebra, power } => (
            "invariants",
            vec![algebra.clone(), format!("{power:?}")],
            cmd_invariants(algebra, *power)?,
        ),
        Verb::NormEval { algebra, metric, point, unchecked } => (
            "norm-eval",
            vec![algebra.clone(), metric.clone(), point.clone()],
            cmd_norm_eval(algebra, metric, point, tol, *unchecked)?,
        ),
        Verb::Check { kind, algebra, metric, point, count, powers } => (
            "check",
            vec![kind.clone(), algebra.clone()],
            cmd_check(
                kind,
                algebra,
                metric.as_deref(),
                point.as_deref(),
                tol,
                *count,
                cli.seed,
                powers,
            )?,
        ),
        Verb::Compare { a, b } => {
            ("compare", vec![a.clone(), b.clone()], cmd_compare(a, b)?)
        }
        Verb::Transform { algebra, matrix, output } => (
            "transform",
            vec![algebra.clone(), matrix.clone()],
            cmd_transform(algebra, matrix, output.as_deref())?,
        ),
        Verb::Registry { name } => (
            "registry",
            vec![name.clone().unwrap_or_default()],
            cmd_registry(name.as_deref())?,
        ),
        Verb::Selftest { only } => (
            "selftest",
            vec![only.clone().unwrap_or_default()],
            cmd_selftest(only.as_deref(), cli.seed)?,
        ),
    };
    let mut digest_parts: Vec<&str> = vec![verb_name];
    let seed_s = cli.seed.to_string();
    digest_parts.extend(inputs.iter().map(|s| s.as_str()));
    digest_parts.push(&seed_s);
    Ok((out, verb_name.to_string(), vec![digest(&digest_parts)]))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = std::time::Instant::now();
    match run(&cli) {
        Ok((out, verb, digests)) => {
            if cli.json {
                let algebra = out
                    .json
                    .get("algebra")
                    .or_else(|| out.json.get("name"))
                    .cloned()
                    .unwrap_or(Value::Null);
                let mut report = json!({
                    "tool": "antirotor",
                    "version": env!("CARGO_PKG_VERSION"),
                    "verb": verb,
                    "algebra": algebra,
                    "inputs_digest": digests[0],
                    "warnings": out.warnings,
                    "result": out.json,
                });
                if cli.timing {
                    report["timing_ms"] = json!(start.elapsed().as_millis() as u64);
                }
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                print!("{}", out.human);
                if cli.timing {
                    eprintln!("elapsed: {} ms", start.elapsed().as_millis());
                }
            }
            if out.verification_failed {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("{e}");
            match e {
                Error::Usage(_) => ExitCode::from(2),
                Error::Domain(_) => ExitCode::from(1),
                Error::Verification(_) => ExitCode::from(3),
            }
        }
    }
}

//! Command layer: argument plumbing, exact I/O, report shaping, and the
//! self-test suite. The mathematical work all lives in the `antirotor`
//! crate.

pub mod io;
pub mod selftest;

use antirotor::algebra::FieldKind;
use antirotor::invariants::{compare, epimorphism_dim_check, invariant_report, EpiVerdict};
use antirotor::norms::{
    check_homogeneity, check_path_independence, check_reciprocity, check_special_vs_det,
    eval_norm, max_curl_fd_residual, points_near_unit, MetricCheck,
};
use antirotor::registry::{registry_entry, registry_names, RegistryMeta};
use antirotor::skewer::{anti_rotor, normalized_subspace, subspace_equal};
use antirotor::{Error, QMat, Result};
use serde_json::{json, Value};

/// Result of one command: machine and human renderings plus the exit
/// disposition.
pub struct CmdOutput {
    pub human: String,
    pub json: Value,
    pub warnings: Vec<String>,
    /// An internal verification (not user error) failed: exit 3.
    pub verification_failed: bool,
}

impl CmdOutput {
    fn new(human: String, json: Value) -> Self {
        CmdOutput { human, json, warnings: Vec::new(), verification_failed: false }
    }
}

pub fn default_tol() -> f64 {
    std::env::var("ANTIROTOR_TOL")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1e-10)
}

fn field_kind(power: Option<i64>) -> FieldKind {
    match power {
        None => FieldKind::Inverse,
        Some(j) => FieldKind::Power(j),
    }
}

/// `--metric` accepts `designated`, inline JSON, or `@file`.
fn parse_metric(spec: &str, meta: Option<&RegistryMeta>) -> Result<QMat> {
    if spec == "designated" {
        return meta
            .and_then(|m| m.designated_metric.clone())
            .ok_or_else(|| Error::usage("no designated metric for this algebra"));
    }
    let text = match spec.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::usage(format!("cannot read metric file `{path}`: {e}")))?,
        None => spec.to_string(),
    };
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| Error::usage(format!("bad metric JSON: {e}")))?;
    io::matrix_from_json(&v)
}

pub fn cmd_validate(spec: &str) -> Result<CmdOutput> {
    let (alg, _) = io::load_algebra(spec)?;
    let rep = alg.validate();
    let mut human = format!(
        "algebra {} (dim {})\n  associative: {}\n  unital: {}\n",
        alg.name, alg.dim, rep.associative, rep.unital
    );
    if let Some(u) = &rep.unit {
        human.push_str(&format!(
            "  unit: ({})\n  ‖1‖² = {}\n",
            u.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "),
            rep.unit_norm_sq.clone().unwrap()
        ));
    }
    for w in &rep.warnings {
        human.push_str(&format!("  warning: {w}\n"));
    }
    let json = json!({
        "name": alg.name,
        "dim": alg.dim,
        "associative": rep.associative,
        "unital": rep.unital,
        "unit": rep.unit.as_ref().map(|u| io::vector_to_json_q(u)),
        "unit_norm_sq": rep.unit_norm_sq.as_ref().map(io::rational_to_json),
        "warnings": rep.warnings,
    });
    let mut out = CmdOutput::new(human, json);
    out.warnings = rep.warnings;
    Ok(out)
}

pub fn cmd_antirotor(spec: &str, power: Option<i64>) -> Result<CmdOutput> {
    let (alg, _) = io::load_algebra(spec)?;
    let u = anti_rotor(&alg, field_kind(power))?;
    let human = format!(
        "anti-rotor of {} ({} mode): dimension m = {}\nM_u =\n{}",
        alg.name,
        match power {
            None => "inverse".to_string(),
            Some(j) => format!("power {j}"),
        },
        u.param_count,
        u
    );
    let json = json!({
        "algebra": alg.name,
        "mode": power.map_or("inverse".to_string(), |j| format!("power:{j}")),
        "m": u.param_count,
        "generators": u.generators().iter().map(io::matrix_to_json).collect::<Vec<_>>(),
        "display": u.to_string(),
    });
    Ok(CmdOutput::new(human, json))
}

pub fn cmd_normalized(spec: &str) -> Result<CmdOutput> {
    let (alg, _) = io::load_algebra(spec)?;
    let u = anti_rotor(&alg, FieldKind::Inverse)?;
    let nf = normalized_subspace(&alg, &u)?;
    let human = format!(
        "normalized metrics of {}: affine family of dimension {}\nL =\n{}",
        alg.name, nf.directions.param_count, nf.family
    );
    let json = json!({
        "algebra": alg.name,
        "affine_dim": nf.directions.param_count,
        "base": io::matrix_to_json(&nf.base),
        "directions": nf.directions.generators().iter().map(io::matrix_to_json).collect::<Vec<_>>(),
        "display": nf.family.to_string(),
    });
    Ok(CmdOutput::new(human, json))
}

pub fn cmd_invariants(spec: &str, power: Option<i64>) -> Result<CmdOutput> {
    let (alg, _) = io::load_algebra(spec)?;
    let u = anti_rotor(&alg, field_kind(power))?;
    let rep = if power.is_none() {
        invariant_report(&alg, &u)?
    } else {
        antirotor::invariants::sextuple(&alg.name, alg.dim, &u)
    };
    let mut human = format!(
        "invariants of {}\n  m = {}\n  max rank = {} ({:?})\n  min nonzero rank = {} ({:?})\n  det(M_u) = {}\n  sensitive parameters = {}\n  variety = {:?} [{}]\n",
        rep.algebra,
        rep.anti_rotor_dim,
        rep.max_rank,
        rep.max_rank_method,
        rep.min_nonzero_rank,
        rep.min_nonzero_rank_certainty,
        rep.det_poly,
        rep.sensitive_param_count,
        rep.variety,
        rep.variety_convention,
    );
    if let Some(t) = rep.tau_raw {
        human.push_str(&format!(
            "  τ (rational, log, arctan) = {:?}, reduced = {:?}{}\n",
            t,
            rep.tau_reduced.unwrap(),
            if rep.tau_certified { "" } else { "  [warning: uncertified]" }
        ));
    }
    if let Some(s) = rep.sextuple() {
        human.push_str(&format!("  sextuple = {s:?}\n"));
    }
    if rep.simple == Some(true) {
        human.push_str("  algebra is simple (one-dimensional family with nonsingular member)\n");
    }
    let json = serde_json::to_value(&rep).expect("report serializes");
    Ok(CmdOutput::new(human, json))
}

pub fn cmd_norm_eval(
    spec: &str,
    metric: &str,
    point: &str,
    tol: f64,
    unchecked: bool,
) -> Result<CmdOutput> {
    let (alg, meta) = io::load_algebra(spec)?;
    let l = parse_metric(metric, meta.as_ref())?;
    let s = io::parse_point(point, alg.dim)?;
    let u;
    let check = if unchecked {
        MetricCheck::Unchecked
    } else if alg.dim <= 6 {
        u = anti_rotor(&alg, FieldKind::Inverse)?;
        MetricCheck::InFamily(&u)
    } else {
        MetricCheck::DirectCurl
    };
    let res = eval_norm(&alg, &l, &s, tol, check)?;
    let human = format!(
        "ℓ(s) = {:.15}\nlog ℓ(s) = {:.15}\nquadrature error estimate: {:.3e}\npath: {}\n",
        res.value,
        res.log_value,
        res.error_estimate,
        res.path
            .iter()
            .map(|p| format!("({})", p.iter().map(|x| format!("{x:.4}")).collect::<Vec<_>>().join(", ")))
            .collect::<Vec<_>>()
            .join(" → ")
    );
    let json = json!({
        "algebra": alg.name,
        "value": res.value,
        "log_value": res.log_value,
        "error_estimate": res.error_estimate,
        "path": res.path,
        "metric_coordinates": res
            .metric_coordinates
            .as_ref()
            .map(|c| io::vector_to_json_q(c)),
    });
    Ok(CmdOutput::new(human, json))
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_check(
    kind: &str,
    spec: &str,
    metric: Option<&str>,
    point: Option<&str>,
    tol: f64,
    count: usize,
    seed: u64,
    powers: &str,
) -> Result<CmdOutput> {
    let (alg, meta) = io::load_algebra(spec)?;
    let need_metric = || -> Result<QMat> {
        parse_metric(metric.unwrap_or("designated"), meta.as_ref())
    };
    let need_point = |l: &QMat| -> Result<Vec<f64>> {
        let _ = l;
        match point {
            Some(p) => io::parse_point(p, alg.dim),
            None => Ok(points_near_unit(&alg, 0.1, 1, seed).remove(0)),
        }
    };
    let report = match kind {
        "path-independence" => {
            let l = need_metric()?;
            let s = need_point(&l)?;
            check_path_independence(&alg, &l, &s, tol)?
        }
        "homogeneity" => {
            let l = need_metric()?;
            let s = need_point(&l)?;
            check_homogeneity(&alg, &l, &s, tol)?
        }
        "reciprocity" => {
            let l = need_metric()?;
            let s = need_point(&l)?;
            check_reciprocity(&alg, &l, &s, tol)?
        }
        "special-norm" => {
            let entry = registry_entry(
                spec.strip_prefix("registry:")
                    .ok_or_else(|| Error::usage("special-norm check needs a registry algebra"))?,
            )?;
            check_special_vs_det(&entry, tol, 20, seed)?
        }
        "curl-fd" => {
            let l = need_metric()?;
            let field = alg.symbolic_inverse()?;
            let pts = points_near_unit(&alg, 0.1, 10, seed);
            let worst = max_curl_fd_residual(&field, &l, &pts);
            antirotor::norms::CheckReport {
                name: "curl-fd".into(),
                pass: worst < 1e-6,
                worst,
                detail: format!("worst relative finite-difference curl residual {worst:.3e}"),
            }
        }
        "iso-trials" => {
            let n = selftest::run_isomorphism_trials(&alg, count, seed)?;
            antirotor::norms::CheckReport {
                name: "iso-trials".into(),
                pass: true,
                worst: 0.0,
                detail: format!("{n} seeded random transforms preserved every certified invariant"),
            }
        }
        "type-survey" => {
            let powers: Vec<i64> = powers
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::usage(format!("bad power `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            let rows = selftest::type_survey_for(&alg, &powers)?;
            let all_equal = rows.iter().all(|(_, _, eq)| *eq);
            let detail = rows
                .iter()
                .map(|(name, m, eq)| format!("{name}: m = {m}, {}", if *eq { "=" } else { "≠" }))
                .collect::<Vec<_>>()
                .join("; ");
            antirotor::norms::CheckReport {
                name: "type-survey".into(),
                pass: true,
                worst: if all_equal { 0.0 } else { 1.0 },
                detail,
            }
        }
        other => {
            return Err(Error::usage(format!(
                "unknown check `{other}`; expected path-independence, homogeneity, reciprocity, \
                 special-norm, curl-fd, iso-trials, or type-survey"
            )))
        }
    };
    let human = format!(
        "{}: {}\n  {}\n",
        report.name,
        if report.pass { "PASS" } else { "FAIL" },
        report.detail
    );
    let json = json!({
        "check": report.name,
        "pass": report.pass,
        "worst": report.worst,
        "detail": report.detail,
    });
    let mut out = CmdOutput::new(human, json);
    out.verification_failed = !report.pass;
    Ok(out)
}

pub fn cmd_compare(spec_a: &str, spec_b: &str) -> Result<CmdOutput> {
    let (alg_a, _) = io::load_algebra(spec_a)?;
    let (alg_b, _) = io::load_algebra(spec_b)?;
    let ua = anti_rotor(&alg_a, FieldKind::Inverse)?;
    let ub = anti_rotor(&alg_b, FieldKind::Inverse)?;
    let ra = invariant_report(&alg_a, &ua)?;
    let rb = invariant_report(&alg_b, &ub)?;
    let verdict = compare(&ra, &rb);
    let epi_ab = epimorphism_dim_check(&ra, &rb);
    let epi_ba = epimorphism_dim_check(&rb, &ra);
    let same_dim_equal = alg_a.dim == alg_b.dim && subspace_equal(&ua, &ub)?;
    let mut human = match &verdict {
        antirotor::invariants::Verdict::NotIsomorphic { witnesses } => format!(
            "verdict: not isomorphic\n  witnesses:\n{}",
            witnesses.iter().map(|w| format!("    - {w}")).collect::<Vec<_>>().join("\n")
        ),
        antirotor::invariants::Verdict::Indistinguishable => {
            "verdict: indistinguishable by these invariants".to_string()
        }
    };
    if same_dim_equal {
        human.push_str("\n  (the two metric families are literally the same subspace)");
    }
    for epi in [&epi_ab, &epi_ba] {
        if let EpiVerdict::Excluded { reason } = epi {
            human.push_str(&format!("\n  {reason}"));
        }
    }
    human.push('\n');
    let json = json!({
        "a": serde_json::to_value(&ra).unwrap(),
        "b": serde_json::to_value(&rb).unwrap(),
        "verdict": serde_json::to_value(&verdict).unwrap(),
        "epimorphism_a_to_b": serde_json::to_value(&epi_ab).unwrap(),
        "epimorphism_b_to_a": serde_json::to_value(&epi_ba).unwrap(),
        "same_subspace": same_dim_equal,
    });
    Ok(CmdOutput::new(human, json))
}

pub fn cmd_transform(spec: &str, matrix: &str, output: Option<&str>) -> Result<CmdOutput> {
    let (alg, _) = io::load_algebra(spec)?;
    let v: Value = serde_json::from_str(matrix)
        .map_err(|e| Error::usage(format!("bad transform matrix JSON: {e}")))?;
    let k = io::matrix_from_json(&v)?;
    let talg = alg.transform(&k)?;
    let jalg = io::algebra_to_json(&talg);
    if let Some(path) = output {
        std::fs::write(path, serde_json::to_string_pretty(&jalg).unwrap())
            .map_err(|e| Error::usage(format!("cannot write `{path}`: {e}")))?;
    }
    let human = format!(
        "transformed {} by K; result is {} (associative: {}, unital: {})\n",
        alg.name, talg.name, talg.associative, talg.unital
    );
    Ok(CmdOutput::new(human, jalg))
}

pub fn cmd_registry(name: Option<&str>) -> Result<CmdOutput> {
    match name {
        None => {
            let mut human = String::from("built-in algebras:\n");
            let names = registry_names();
            for (n, d) in &names {
                human.push_str(&format!("  {n:<22} {d}\n"));
            }
            let json = json!(names
                .iter()
                .map(|(n, d)| json!({"name": n, "description": d}))
                .collect::<Vec<_>>());
            Ok(CmdOutput::new(human, json))
        }
        Some(n) => {
            let e = registry_entry(n)?;
            let jalg = io::algebra_to_json(&e.algebra);
            let human = serde_json::to_string_pretty(&jalg).unwrap() + "\n";
            Ok(CmdOutput::new(human, jalg))
        }
    }
}

pub fn cmd_selftest(only: Option<&str>, seed: u64) -> Result<CmdOutput> {
    let results = selftest::run_selftest(only, seed);
    if results.is_empty() {
        return Err(Error::usage(format!(
            "no self-test case matches `{}`",
            only.unwrap_or("")
        )));
    }
    let mut human = String::new();
    let mut all = true;
    for r in &results {
        all &= r.pass;
        human.push_str(&format!(
            "{} [{}] {} ({} ms): {}\n",
            if r.pass { "PASS" } else { "FAIL" },
            r.group,
            r.name,
            r.millis,
            r.detail
        ));
    }
    let passed = results.iter().filter(|r| r.pass).count();
    human.push_str(&format!("{passed}/{} cases passed\n", results.len()));
    let json = json!({
        "cases": results
            .iter()
            .map(|r| json!({
                "name": r.name,
                "group": r.group,
                "pass": r.pass,
                "detail": r.detail,
                "millis": r.millis,
            }))
            .collect::<Vec<_>>(),
        "passed": passed,
        "total": results.len(),
    });
    let mut out = CmdOutput::new(human, json);
    out.verification_failed = !all;
    Ok(out)
}

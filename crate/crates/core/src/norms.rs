//! Numeric evaluation of the dual norms: adaptive Gauss–Legendre line
//! integrals of `[L·t⁻¹]` along coordinate staircase paths from the unit,
//! and the floating-point verification battery (path independence,
//! homogeneity, reciprocity, special-norm/determinant agreement).
//!
//! The inverse at each quadrature node is solved numerically from the left
//! regular representation; `det(L_t)` is sign-tracked along every segment
//! and the evaluator refuses to integrate across a non-unit.

use crate::algebra::Algebra;
use crate::error::Error;
use crate::invariants::SplitMix;
use crate::matrix::Mat;
use crate::registry::{RegistryEntry, SpecialNormOracle};
use crate::scalar::rational_to_f64;
use crate::skewer::{is_uncurling, membership_check, ParamSymMatrix};
use crate::{QMat, Result, Q};
use std::sync::OnceLock;

/// How the evaluator convinces itself the metric really uncurls the field
/// (otherwise the integral would be path-dependent).
pub enum MetricCheck<'a> {
    /// Membership in a precomputed family; stores the coordinates on success.
    InFamily(&'a ParamSymMatrix),
    /// Verify the fixed metric directly against the curl identity.
    DirectCurl,
    /// No verification (negative controls and diagnostics only).
    Unchecked,
}

#[derive(Debug, Clone)]
pub struct NormEvaluation {
    pub value: f64,
    pub log_value: f64,
    /// Staircase vertices actually used.
    pub path: Vec<Vec<f64>>,
    pub error_estimate: f64,
    /// Coordinates of the metric in the family, when membership was checked.
    pub metric_coordinates: Option<Vec<Q>>,
}

/// Reusable evaluator for one (algebra, metric) pair.
pub struct NormEvaluator {
    alg: Algebra,
    l: Mat<f64>,
    unit: Vec<f64>,
    norm_sq: f64,
    coordinates: Option<Vec<Q>>,
}

const MAX_DEPTH: u32 = 42;

impl NormEvaluator {
    pub fn new(alg: &Algebra, l: &QMat, check: MetricCheck) -> Result<Self> {
        if !l.is_symmetric() || l.rows != alg.dim {
            return Err(Error::usage("metric must be symmetric of the algebra dimension"));
        }
        let unit = alg
            .unit_f64()
            .ok_or_else(|| Error::domain("norm evaluation requires a unital algebra"))?;
        let coordinates = match check {
            MetricCheck::InFamily(u) => {
                let coords = membership_check(u, l)?.ok_or_else(|| {
                    Error::domain(
                        "metric is not in the uncurling family: the norm integral would \
                         be path-dependent",
                    )
                })?;
                Some(coords)
            }
            MetricCheck::DirectCurl => {
                let field = alg.symbolic_inverse()?;
                if !is_uncurling(alg, &field, l)? {
                    return Err(Error::domain(
                        "metric does not uncurl the inverse field: the norm integral \
                         would be path-dependent",
                    ));
                }
                None
            }
            MetricCheck::Unchecked => None,
        };
        Ok(NormEvaluator {
            alg: alg.clone(),
            l: l.map(rational_to_f64),
            unit,
            norm_sq: alg.unit_norm_sq.as_ref().map(rational_to_f64).unwrap_or(1.0),
            coordinates,
        })
    }

    pub fn unit(&self) -> &[f64] {
        &self.unit
    }

    pub fn norm_sq(&self) -> f64 {
        self.norm_sq
    }

    /// `∫ [L·t⁻¹]·dt` along the staircase visiting coordinates in `order`.
    pub fn log_integral_with_order(
        &self,
        s: &[f64],
        tol: f64,
        order: &[usize],
    ) -> Result<(f64, f64, Vec<Vec<f64>>)> {
        let n = self.alg.dim;
        assert_eq!(s.len(), n);
        let mut current = self.unit.clone();
        let mut path = vec![current.clone()];
        let mut total = 0.0;
        let mut err_total = 0.0;
        for &k in order {
            let a = current[k];
            let b = s[k];
            if a == b {
                continue;
            }
            let mut point = current.clone();
            // Pole scan: the determinant of L_t must keep its sign on the
            // closed segment.
            let det_at = |t: f64, point: &mut Vec<f64>| -> f64 {
                point[k] = t;
                self.alg.left_mul_matrix_f64(point).det_f64()
            };
            let d0 = det_at(a, &mut point);
            if d0 == 0.0 {
                return Err(pole_error(k, a));
            }
            // Sign tracking plus a magnitude-dip guard: an even-order zero
            // of det never flips the sign but still pinches the scan.
            const SCAN: usize = 64;
            let d_end = det_at(b, &mut point);
            let floor = 1e-3 * d0.abs().min(d_end.abs().max(f64::MIN_POSITIVE));
            for i in 1..=SCAN {
                let t = a + (b - a) * (i as f64) / (SCAN as f64);
                let d = det_at(t, &mut point);
                if d == 0.0 || (d > 0.0) != (d0 > 0.0) || d.abs() < floor {
                    return Err(pole_error(k, t));
                }
            }
            let mut f = |t: f64| -> Result<f64> {
                point[k] = t;
                let lt = self.alg.left_mul_matrix_f64(&point);
                let (inv, det) = lt
                    .lu_solve(&self.unit)
                    .ok_or_else(|| pole_error(k, t))?;
                if (det > 0.0) != (d0 > 0.0) {
                    return Err(pole_error(k, t));
                }
                let mut acc = 0.0;
                for j in 0..n {
                    acc += self.l[(k, j)] * inv[j];
                }
                Ok(acc)
            };
            let (val, err) = adaptive_gl(&mut f, a, b, tol, 0)?;
            total += val;
            err_total += err;
            current[k] = b;
            path.push(current.clone());
        }
        Ok((total, err_total, path))
    }

    /// Evaluate the norm at `s` along the default staircase.
    pub fn eval(&self, s: &[f64], tol: f64) -> Result<NormEvaluation> {
        let order: Vec<usize> = (0..self.alg.dim).collect();
        self.eval_with_order(s, tol, &order)
    }

    pub fn eval_with_order(&self, s: &[f64], tol: f64, order: &[usize]) -> Result<NormEvaluation> {
        let (integral, err, path) = self.log_integral_with_order(s, tol, order)?;
        let log_value = integral / self.norm_sq;
        Ok(NormEvaluation {
            value: log_value.exp(),
            log_value,
            path,
            error_estimate: err / self.norm_sq,
            metric_coordinates: self.coordinates.clone(),
        })
    }
}

fn pole_error(coord: usize, t: f64) -> Error {
    Error::domain(format!(
        "pole on path: det(L_t) vanishes or changes sign near coordinate {coord} at t = {t:.6}; \
         supply a custom path through units"
    ))
}

/// One-call convenience wrapper.
pub fn eval_norm(
    alg: &Algebra,
    l: &QMat,
    s: &[f64],
    tol: f64,
    check: MetricCheck,
) -> Result<NormEvaluation> {
    NormEvaluator::new(alg, l, check)?.eval(s, tol)
}

/// A metric together with its dual norm. Pairs form an abelian group under
/// `(L₁, ℓ₁)·(L₂, ℓ₂) = (L₁+L₂, ℓ₁·ℓ₂)`, which the product constructor
/// realizes by adding the metrics.
pub struct NormPair {
    alg: Algebra,
    pub metric: QMat,
    evaluator: NormEvaluator,
}

impl NormPair {
    pub fn new(alg: &Algebra, metric: &QMat, check: MetricCheck) -> Result<Self> {
        Ok(NormPair {
            alg: alg.clone(),
            metric: metric.clone(),
            evaluator: NormEvaluator::new(alg, metric, check)?,
        })
    }

    pub fn eval(&self, s: &[f64], tol: f64) -> Result<NormEvaluation> {
        self.evaluator.eval(s, tol)
    }

    /// Group product: metrics add, norms multiply.
    pub fn product(&self, other: &NormPair) -> Result<NormPair> {
        if self.alg.name != other.alg.name || self.alg.structure() != other.alg.structure() {
            return Err(Error::usage("norm pairs belong to different algebras"));
        }
        let sum = &self.metric + &other.metric;
        NormPair::new(&self.alg, &sum, MetricCheck::Unchecked)
    }
}

// ---------------------------------------------------------------------------
// Adaptive Gauss–Legendre.
// ---------------------------------------------------------------------------

fn legendre_nodes_15() -> &'static Vec<(f64, f64)> {
    static NODES: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    NODES.get_or_init(|| compute_legendre_nodes(15))
}

/// Nodes and weights on [−1, 1] by Newton iteration on P_n.
fn compute_legendre_nodes(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_eval(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_eval(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((x, w));
    }
    out
}

/// (P_n(x), P_n'(x)) by the three-term recurrence.
fn legendre_eval(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for j in 2..=n {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn gl15(f: &mut impl FnMut(f64) -> Result<f64>, a: f64, b: f64) -> Result<f64> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut acc = 0.0;
    for &(x, w) in legendre_nodes_15() {
        acc += w * f(c + h * x)?;
    }
    Ok(acc * h)
}

/// Interval-halving adaptive integration; the error estimate is the
/// difference between the whole-interval rule and the two-half refinement.
pub fn adaptive_gl(
    f: &mut impl FnMut(f64) -> Result<f64>,
    a: f64,
    b: f64,
    tol: f64,
    depth: u32,
) -> Result<(f64, f64)> {
    let whole = gl15(f, a, b)?;
    let m = 0.5 * (a + b);
    let refined = gl15(f, a, m)? + gl15(f, m, b)?;
    let err = (whole - refined).abs();
    if err <= tol || depth >= MAX_DEPTH {
        return Ok((refined, err));
    }
    let (lv, le) = adaptive_gl(f, a, m, 0.5 * tol, depth + 1)?;
    let (rv, re) = adaptive_gl(f, m, b, 0.5 * tol, depth + 1)?;
    Ok((lv + rv, le + re))
}

// ---------------------------------------------------------------------------
// Verification battery.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub pass: bool,
    pub worst: f64,
    pub detail: String,
}

/// Integrate along the staircase and its coordinate-reversed twin; the two
/// must agree for an uncurling metric.
pub fn check_path_independence(
    alg: &Algebra,
    l: &QMat,
    s: &[f64],
    tol: f64,
) -> Result<CheckReport> {
    let ev = NormEvaluator::new(alg, l, MetricCheck::Unchecked)?;
    let forward: Vec<usize> = (0..alg.dim).collect();
    let reverse: Vec<usize> = (0..alg.dim).rev().collect();
    let (a, _, _) = ev.log_integral_with_order(s, tol, &forward)?;
    let (b, _, _) = ev.log_integral_with_order(s, tol, &reverse)?;
    let diff = (a - b).abs();
    let pass = diff <= 10.0 * tol.max(1e-14);
    Ok(CheckReport {
        name: "path-independence".into(),
        pass,
        worst: diff,
        detail: format!("forward {a:.12e} vs reversed {b:.12e}, |Δ| = {diff:.3e}"),
    })
}

/// ℓ(a·s) = a^{(1ᵀL1)/‖1‖²}·ℓ(s) for scaling factors a near 1.
pub fn check_homogeneity(alg: &Algebra, l: &QMat, s: &[f64], tol: f64) -> Result<CheckReport> {
    let ev = NormEvaluator::new(alg, l, MetricCheck::Unchecked)?;
    let unit = alg.unit.clone().unwrap();
    let mut u_l_u = Q::from_integer(0.into());
    for i in 0..alg.dim {
        for j in 0..alg.dim {
            u_l_u = u_l_u + unit[i].clone() * l[(i, j)].clone() * unit[j].clone();
        }
    }
    let exponent = rational_to_f64(&u_l_u) / ev.norm_sq();
    let base = ev.eval(s, tol)?.value;
    let mut worst: f64 = 0.0;
    for a in [0.9, 1.1] {
        let scaled: Vec<f64> = s.iter().map(|x| a * x).collect();
        let val = ev.eval(&scaled, tol)?.value;
        let expected = a.powf(exponent) * base;
        worst = worst.max((val - expected).abs() / expected.abs().max(1e-300));
    }
    let pass = worst <= 1e4 * tol.max(1e-12);
    Ok(CheckReport {
        name: "homogeneity".into(),
        pass,
        worst,
        detail: format!("degree {exponent:.6}, worst relative deviation {worst:.3e}"),
    })
}

/// ℓ(s⁻¹)·ℓ(s) = 1 for normalized metrics, plus the unit-direction identity
/// ℓ(‖1‖²·L⁻¹·∇ℓ(s⁻¹)) = 1 when L is nonsingular (gradient by central
/// differences).
pub fn check_reciprocity(alg: &Algebra, l: &QMat, s: &[f64], tol: f64) -> Result<CheckReport> {
    let ev = NormEvaluator::new(alg, l, MetricCheck::Unchecked)?;
    let sinv = alg
        .inverse_at_f64(s)
        .ok_or_else(|| Error::domain("point is numerically non-invertible"))?;
    let ls = ev.eval(s, tol)?.value;
    let lsinv = ev.eval(&sinv, tol)?.value;
    let recip = (ls * lsinv - 1.0).abs();
    let mut worst = recip;
    let mut detail = format!("ℓ(s)·ℓ(s⁻¹) − 1 = {recip:.3e}");
    if let Some(linv) = l.inverse() {
        let n = alg.dim;
        let h = 1e-5;
        let mut grad = vec![0.0; n];
        for i in 0..n {
            let mut plus = sinv.clone();
            plus[i] += h;
            let mut minus = sinv.clone();
            minus[i] -= h;
            let vp = ev.eval(&plus, tol)?.value;
            let vm = ev.eval(&minus, tol)?.value;
            grad[i] = (vp - vm) / (2.0 * h);
        }
        let linv_f = linv.map(rational_to_f64);
        let w: Vec<f64> = linv_f.mul_vec(&grad).iter().map(|x| x * ev.norm_sq()).collect();
        let lw = ev.eval(&w, tol)?.value;
        let unit_dir = (lw - 1.0).abs();
        worst = worst.max(unit_dir);
        detail.push_str(&format!(", ℓ(unit direction) − 1 = {unit_dir:.3e}"));
    }
    Ok(CheckReport { name: "reciprocity".into(), pass: worst <= 1e-8, worst, detail })
}

/// Compare the norm of the registry's designated metric against its closed
/// form at seeded random points near the unit.
pub fn check_special_vs_det(
    entry: &RegistryEntry,
    tol: f64,
    points: usize,
    seed: u64,
) -> Result<CheckReport> {
    let alg = &entry.algebra;
    let l = entry
        .meta
        .designated_metric
        .as_ref()
        .ok_or_else(|| Error::usage("registry entry has no designated metric"))?;
    let oracle = entry
        .meta
        .special_norm
        .as_ref()
        .ok_or_else(|| Error::usage("registry entry has no special-norm oracle"))?;
    let ev = NormEvaluator::new(alg, l, MetricCheck::Unchecked)?;
    let mut worst: f64 = 0.0;
    for s in points_near_unit(alg, 0.08, points, seed) {
        let got = ev.eval(&s, tol)?.value;
        let want = special_norm_oracle(oracle, &s)?;
        worst = worst.max((got - want).abs() / want.abs().max(1e-300));
    }
    Ok(CheckReport {
        name: format!("special-norm:{}", alg.name),
        pass: worst <= 1e-8,
        worst,
        detail: format!("worst relative deviation over {points} points: {worst:.3e}"),
    })
}

/// Closed form of a registry special-norm oracle at a point.
pub fn special_norm_oracle(oracle: &SpecialNormOracle, s: &[f64]) -> Result<f64> {
    match oracle {
        SpecialNormOracle::DetOfRep { omega, target } => {
            let of = omega.map(rational_to_f64);
            let t = of.mul_vec(s);
            let m = target.left_mul_matrix_f64(&t);
            let det = m.det_f64();
            if det <= 0.0 {
                return Err(Error::domain("representation determinant not positive here"));
            }
            Ok(det.powf(1.0 / target.dim as f64))
        }
        SpecialNormOracle::AlgebraicNormSqrt { signature } => {
            let mut acc = 0.0;
            for (d, x) in signature.iter().zip(s) {
                acc += (*d as f64) * x * x;
            }
            if acc <= 0.0 {
                return Err(Error::domain("algebraic norm not positive here"));
            }
            Ok(acc.sqrt())
        }
    }
}

/// Seeded random points within `radius` (sup-norm) of the unit.
pub fn points_near_unit(alg: &Algebra, radius: f64, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let unit = alg.unit_f64().unwrap_or_else(|| vec![0.0; alg.dim]);
    let mut rng = SplitMix(seed);
    (0..count)
        .map(|_| {
            unit.iter()
                .map(|u| {
                    let r = (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
                    u + radius * (2.0 * r - 1.0)
                })
                .collect()
        })
        .collect()
}

/// Relative residual of the duality identity
/// `∇[‖1‖²·log ℓ(s)] = L·s⁻¹`, gradient by central differences.
pub fn duality_residual(alg: &Algebra, l: &QMat, s: &[f64], tol: f64) -> Result<f64> {
    let ev = NormEvaluator::new(alg, l, MetricCheck::Unchecked)?;
    let n = alg.dim;
    let h = 1e-5;
    let sinv = alg
        .inverse_at_f64(s)
        .ok_or_else(|| Error::domain("point is numerically non-invertible"))?;
    let want = ev.l.mul_vec(&sinv);
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let mut plus = s.to_vec();
        plus[i] += h;
        let mut minus = s.to_vec();
        minus[i] -= h;
        let fp = ev.eval(&plus, tol)?.log_value * ev.norm_sq();
        let fm = ev.eval(&minus, tol)?.log_value * ev.norm_sq();
        let grad = (fp - fm) / (2.0 * h);
        let denom = want[i].abs().max(1.0);
        worst = worst.max((grad - want[i]).abs() / denom);
    }
    Ok(worst)
}

/// Worst relative curl residual of the field `s ↦ L·f(s)` by central
/// differences at the given points.
pub fn max_curl_fd_residual(
    field: &crate::algebra::RationalVectorField,
    l: &QMat,
    points: &[Vec<f64>],
) -> f64 {
    let n = l.rows;
    let lf = l.map(rational_to_f64);
    let h = 1e-5;
    let mut worst: f64 = 0.0;
    let v_at = |p: &[f64]| -> Option<Vec<f64>> { field.eval_f64(p).map(|f| lf.mul_vec(&f)) };
    for p in points {
        for i in 0..n {
            for j in (i + 1)..n {
                let mut pp = p.clone();
                pp[i] += h;
                let mut pm = p.clone();
                pm[i] -= h;
                let (vp, vm) = match (v_at(&pp), v_at(&pm)) {
                    (Some(a), Some(b)) => (a, b),
                    _ => continue,
                };
                let dvj_di = (vp[j] - vm[j]) / (2.0 * h);
                let mut qp = p.clone();
                qp[j] += h;
                let mut qm = p.clone();
                qm[j] -= h;
                let (wp, wm) = match (v_at(&qp), v_at(&qm)) {
                    (Some(a), Some(b)) => (a, b),
                    _ => continue,
                };
                let dvi_dj = (wp[i] - wm[i]) / (2.0 * h);
                let scale = dvj_di.abs().max(dvi_dj.abs()).max(1.0);
                worst = worst.max((dvj_di - dvi_dj).abs() / scale);
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldKind;
    use crate::registry::{registry, registry_entry};
    use crate::skewer::anti_rotor;
    use crate::{q, QMat};

    fn qmat(rows: Vec<Vec<i64>>) -> QMat {
        Mat::from_rows(rows.into_iter().map(|r| r.into_iter().map(q).collect()).collect())
    }

    #[test]
    fn quadrature_log() {
        // ∫₁³ dt/t = ln 3
        let mut f = |t: f64| Ok(1.0 / t);
        let (v, _) = adaptive_gl(&mut f, 1.0, 3.0, 1e-12, 0).unwrap();
        assert!((v - 3f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn complex_norm_has_closed_form() {
        // L = diag(1, −1): ℓ(x, y) = sqrt(x² + y²); at (3, 4) this is 5.
        let alg = registry("complex").unwrap();
        let u = anti_rotor(&alg, FieldKind::Inverse).unwrap();
        let l = qmat(vec![vec![1, 0], vec![0, -1]]);
        let ev = NormEvaluator::new(&alg, &l, MetricCheck::InFamily(&u)).unwrap();
        let res = ev.eval(&[3.0, 4.0], 1e-12).unwrap();
        assert!((res.value - 5.0).abs() < 1e-9, "got {}", res.value);
        assert!(res.metric_coordinates.is_some());
    }

    #[test]
    fn norm_at_unit_is_one() {
        let alg = registry("toeplitz:3").unwrap();
        let e = registry_entry("toeplitz:3").unwrap();
        let l = e.meta.designated_metric.unwrap();
        let ev = NormEvaluator::new(&alg, &l, MetricCheck::DirectCurl).unwrap();
        let res = ev.eval(&alg.unit_f64().unwrap(), 1e-10).unwrap();
        assert_eq!(res.value, 1.0);
    }

    #[test]
    fn dual_norm_closed_form() {
        // L = diag(1, 0) on the dual numbers: ℓ(x, y) = x; at (2, 7) → 2.
        let alg = registry("dual").unwrap();
        let l = qmat(vec![vec![1, 0], vec![0, 0]]);
        let res = eval_norm(&alg, &l, &[2.0, 7.0], 1e-12, MetricCheck::DirectCurl).unwrap();
        assert!((res.value - 2.0).abs() < 1e-9);
    }

    #[test]
    fn non_metric_is_rejected() {
        let alg = registry("dual").unwrap();
        let u = anti_rotor(&alg, FieldKind::Inverse).unwrap();
        let l: QMat = Mat::identity(2);
        assert!(NormEvaluator::new(&alg, &l, MetricCheck::InFamily(&u)).is_err());
        assert!(NormEvaluator::new(&alg, &l, MetricCheck::DirectCurl).is_err());
    }

    #[test]
    fn pole_on_path_detected() {
        // Path to a point with negative first coordinate crosses det = 0.
        let alg = registry("dual").unwrap();
        let l = qmat(vec![vec![1, 0], vec![0, 0]]);
        let res = eval_norm(&alg, &l, &[-2.0, 0.5], 1e-10, MetricCheck::Unchecked);
        assert!(res.is_err());
    }

    #[test]
    fn euclidean_metric_on_dual_fails_path_independence() {
        let alg = registry("dual").unwrap();
        let l: QMat = Mat::identity(2);
        let rep = check_path_independence(&alg, &l, &[1.3, 0.4], 1e-10).unwrap();
        assert!(!rep.pass, "negative control must fail: {}", rep.detail);
        // and a genuine metric passes
        let good = qmat(vec![vec![1, 2], vec![2, 0]]);
        let rep2 = check_path_independence(&alg, &good, &[1.3, 0.4], 1e-10).unwrap();
        assert!(rep2.pass, "{}", rep2.detail);
    }

    #[test]
    fn homogeneity_on_complex() {
        // [[2, 0], [0, −2]]: degree (1ᵀL1)/‖1‖² = 2.
        let alg = registry("complex").unwrap();
        let l = qmat(vec![vec![2, 0], vec![0, -2]]);
        let rep = check_homogeneity(&alg, &l, &[1.1, 0.2], 1e-11).unwrap();
        assert!(rep.pass, "{}", rep.detail);
        assert!(rep.detail.contains("degree 2.0"));
    }

    #[test]
    fn normalized_metrics_are_degree_one_homogeneous() {
        // Hankel slice with pinned corner on the Toeplitz algebra.
        let alg = registry("toeplitz:3").unwrap();
        let l = qmat(vec![vec![1, 2, -1], vec![2, -1, 0], vec![-1, 0, 0]]);
        let rep = check_homogeneity(&alg, &l, &[1.05, 0.1, -0.04], 1e-11).unwrap();
        assert!(rep.pass, "{}", rep.detail);
        assert!(rep.detail.contains("degree 1.0"), "{}", rep.detail);
    }

    #[test]
    fn reciprocity_on_matrix2() {
        let e = registry_entry("matrix:2").unwrap();
        let l = e.meta.designated_metric.clone().unwrap();
        let s = vec![1.1, 0.12, -0.08, 0.95];
        let rep = check_reciprocity(&e.algebra, &l, &s, 1e-12).unwrap();
        assert!(rep.pass, "{}", rep.detail);
    }

    #[test]
    fn special_norm_checks() {
        for name in ["matrix:2", "ut2", "ut5", "toeplitz:3", "complex", "rxc"] {
            let e = registry_entry(name).unwrap();
            let rep = check_special_vs_det(&e, 1e-12, 5, 42).unwrap();
            assert!(rep.pass, "{name}: {}", rep.detail);
        }
    }

    #[test]
    fn star_norms_minkowski_euclidean() {
        for name in ["spin:2", "spin:3", "quaternion", "octonion"] {
            let e = registry_entry(name).unwrap();
            let rep = check_special_vs_det(&e, 1e-12, 5, 7).unwrap();
            assert!(rep.pass, "{name}: {}", rep.detail);
        }
    }

    #[test]
    fn group_law_additivity() {
        // (L₁, ℓ₁)·(L₂, ℓ₂) = (L₁+L₂, ℓ₁·ℓ₂)
        let alg = registry("complex").unwrap();
        let p1 = NormPair::new(&alg, &qmat(vec![vec![1, 0], vec![0, -1]]), MetricCheck::DirectCurl)
            .unwrap();
        let p2 = NormPair::new(&alg, &qmat(vec![vec![0, 1], vec![1, 0]]), MetricCheck::DirectCurl)
            .unwrap();
        let prod = p1.product(&p2).unwrap();
        let s = [1.2, 0.3];
        let a = p1.eval(&s, 1e-12).unwrap().value;
        let b = p2.eval(&s, 1e-12).unwrap().value;
        let c = prod.eval(&s, 1e-12).unwrap().value;
        assert!((a * b - c).abs() < 2e-11, "group law violated: {a}·{b} vs {c}");
        // mismatched algebras are rejected
        let other = registry("dual").unwrap();
        let pd =
            NormPair::new(&other, &qmat(vec![vec![1, 0], vec![0, 0]]), MetricCheck::DirectCurl)
                .unwrap();
        assert!(p1.product(&pd).is_err());
    }

    #[test]
    fn curl_fd_residual_discriminates() {
        let alg = registry("dual").unwrap();
        let field = alg.symbolic_inverse().unwrap();
        let pts = points_near_unit(&alg, 0.1, 10, 99);
        let good = qmat(vec![vec![1, 2], vec![2, 0]]);
        assert!(max_curl_fd_residual(&field, &good, &pts) < 1e-6);
        let bad: QMat = Mat::identity(2);
        assert!(max_curl_fd_residual(&field, &bad, &pts) > 1e-3);
    }
}

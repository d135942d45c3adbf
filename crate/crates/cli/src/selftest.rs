//! The built-in verification suite: replays the known anti-rotor families,
//! invariant tuples, dual-norm closed forms, the randomized isomorphism
//! harness, and the negative controls. Each case returns a one-line detail
//! string on success.

use antirotor::algebra::{Algebra, FieldKind};
use antirotor::invariants::{compare, invariant_report, sextuple, tau_triple, SplitMix, Verdict};
use antirotor::matrix::Mat;
use antirotor::norms::{
    check_path_independence, check_reciprocity, check_special_vs_det, duality_residual,
    max_curl_fd_residual, points_near_unit, MetricCheck, NormEvaluator,
};
use antirotor::registry::{registry, registry_entry, transpose_permutation};
use antirotor::skewer::{
    anti_rotor, membership_check, normalized_subspace, subspace_equal, verify_generators_uncurl,
    ParamSymMatrix,
};
use antirotor::{q, qr, Error, QMat, Result, Q};
use num_traits::{One, Zero};

pub struct Case {
    pub name: &'static str,
    pub group: &'static str,
    pub run: fn(u64) -> Result<String>,
}

pub struct CaseResult {
    pub name: String,
    pub group: String,
    pub pass: bool,
    pub detail: String,
    pub millis: u128,
}

pub fn all_cases() -> Vec<Case> {
    vec![
        Case { name: "two-dim-anti-rotors", group: "tables", run: two_dim_anti_rotors },
        Case { name: "three-dim-anti-rotors", group: "tables", run: three_dim_anti_rotors },
        Case { name: "three-dim-sextuples", group: "tables", run: three_dim_sextuples },
        Case { name: "reduced-triples", group: "tables", run: reduced_triples },
        Case { name: "norm-closed-forms", group: "tables", run: norm_closed_forms },
        Case { name: "matrix2-transpose-line", group: "matrix", run: matrix2_transpose_line },
        Case { name: "matrix3-transpose-line", group: "matrix3", run: matrix3_transpose_line },
        Case { name: "matrix-norm-vs-det", group: "matrix", run: matrix_norm_vs_det },
        Case { name: "toeplitz-hankel-families", group: "toeplitz", run: toeplitz_hankel },
        Case { name: "toeplitz-normalized", group: "toeplitz", run: toeplitz_normalized },
        Case { name: "toeplitz-norm-closed-form", group: "toeplitz", run: toeplitz_norms },
        Case { name: "prodr4-diagonal", group: "table3", run: prodr4_diagonal },
        Case { name: "quaternion-family", group: "table3", run: quaternion_family },
        Case { name: "triangular-norms", group: "table3", run: triangular_norms },
        Case { name: "star-algebra-norms", group: "table3", run: star_norms },
        Case { name: "isomorphism-trials", group: "iso", run: isomorphism_trials },
        Case { name: "anti-rotor-type-survey", group: "survey", run: type_survey },
        Case { name: "nilpotent-power-dims", group: "survey", run: nilpotent_powers },
        Case { name: "duality-gradient", group: "duality", run: duality_gradient },
        Case { name: "reciprocity-identities", group: "duality", run: reciprocity },
        Case { name: "generator-soundness", group: "soundness", run: generator_soundness },
        Case { name: "negative-controls", group: "negative", run: negative_controls },
        Case { name: "verdicts", group: "negative", run: verdicts },
    ]
}

pub fn run_selftest(filter: Option<&str>, seed: u64) -> Vec<CaseResult> {
    let mut out = Vec::new();
    for case in all_cases() {
        if let Some(f) = filter {
            if !case.name.contains(f) && !case.group.contains(f) {
                continue;
            }
        }
        let start = std::time::Instant::now();
        let res = (case.run)(seed);
        let millis = start.elapsed().as_millis();
        match res {
            Ok(detail) => out.push(CaseResult {
                name: case.name.into(),
                group: case.group.into(),
                pass: true,
                detail,
                millis,
            }),
            Err(e) => out.push(CaseResult {
                name: case.name.into(),
                group: case.group.into(),
                pass: false,
                detail: e.to_string(),
                millis,
            }),
        }
    }
    out
}

fn fail(msg: impl Into<String>) -> Error {
    Error::verification(msg.into())
}

pub fn qmat(rows: Vec<Vec<i64>>) -> QMat {
    Mat::from_rows(rows.into_iter().map(|r| r.into_iter().map(q).collect()).collect())
}

fn family(n: usize, gens: Vec<Vec<Vec<i64>>>) -> ParamSymMatrix {
    let gens: Vec<QMat> = gens.into_iter().map(qmat).collect();
    ParamSymMatrix::from_generators(n, &gens)
}

/// The known two-dimensional anti-rotor families.
pub fn two_dim_expected(name: &str) -> ParamSymMatrix {
    match name {
        "complex" => family(2, vec![vec![vec![1, 0], vec![0, -1]], vec![vec![0, 1], vec![1, 0]]]),
        "split-complex" => {
            family(2, vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]])
        }
        "rxr" => family(2, vec![vec![vec![1, 0], vec![0, 0]], vec![vec![0, 0], vec![0, 1]]]),
        "dual" => family(2, vec![vec![vec![1, 0], vec![0, 0]], vec![vec![0, 1], vec![1, 0]]]),
        _ => unreachable!(),
    }
}

/// The known three-dimensional anti-rotor families.
pub fn three_dim_expected(name: &str) -> ParamSymMatrix {
    let e = |i: usize, j: usize| -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; 3]; 3];
        m[i][j] = 1;
        m[j][i] = 1;
        m
    };
    match name {
        "rrr" => family(3, vec![e(0, 0), e(1, 1), e(2, 2)]),
        "rxc" => {
            let mut skew = vec![vec![0i64; 3]; 3];
            skew[1][1] = 1;
            skew[2][2] = -1;
            family(3, vec![e(0, 0), skew, e(1, 2)])
        }
        "rxd" => family(3, vec![e(0, 0), e(1, 1), e(1, 2)]),
        "toeplitz:3" => {
            let mut g3 = vec![vec![0i64; 3]; 3];
            g3[0][1] = 1;
            g3[1][0] = 1;
            let mut g4 = vec![vec![0i64; 3]; 3];
            g4[0][2] = 1;
            g4[2][0] = 1;
            g4[1][1] = 1;
            family(3, vec![e(0, 0), g3, g4])
        }
        "nil2" => family(3, vec![e(0, 0), e(0, 1), e(0, 2)]),
        "splitnil" => {
            let mut diag2 = vec![vec![0i64; 3]; 3];
            diag2[0][0] = 1;
            diag2[1][1] = 1;
            family(3, vec![diag2, e(0, 1)])
        }
        _ => unreachable!(),
    }
}

fn two_dim_anti_rotors(_: u64) -> Result<String> {
    for name in ["complex", "split-complex", "rxr", "dual"] {
        let alg = registry(name)?;
        let u = anti_rotor(&alg, FieldKind::Inverse)?;
        if !subspace_equal(&u, &two_dim_expected(name))? {
            return Err(fail(format!("{name}: anti-rotor differs from the known family")));
        }
    }
    Ok("4 two-dimensional families match exactly".into())
}

fn three_dim_anti_rotors(_: u64) -> Result<String> {
    for name in ["rrr", "rxc", "rxd", "toeplitz:3", "nil2", "splitnil"] {
        let alg = registry(name)?;
        let u = anti_rotor(&alg, FieldKind::Inverse)?;
        if !subspace_equal(&u, &three_dim_expected(name))? {
            return Err(fail(format!("{name}: anti-rotor differs from the known family")));
        }
    }
    Ok("6 three-dimensional families match exactly".into())
}

pub const THREE_DIM_SEXTUPLES: [(&str, (usize, usize, usize, usize, usize, usize)); 6] = [
    ("rrr", (3, 3, 1, 3, 2, 3)),
    ("rxc", (3, 3, 1, 3, 2, 2)),
    ("rxd", (3, 3, 1, 2, 1, 2)),
    ("toeplitz:3", (3, 3, 1, 1, 0, 1)),
    ("nil2", (3, 2, 1, 0, 3, 0)),
    ("splitnil", (2, 2, 1, 0, 2, 0)),
];

fn three_dim_sextuples(_: u64) -> Result<String> {
    for (name, want) in THREE_DIM_SEXTUPLES {
        let alg = registry(name)?;
        let u = anti_rotor(&alg, FieldKind::Inverse)?;
        let rep = sextuple(&alg.name, alg.dim, &u);
        let got = rep.sextuple().ok_or_else(|| fail(format!("{name}: variety unsupported")))?;
        if got != want {
            return Err(fail(format!("{name}: sextuple {got:?}, expected {want:?}")));
        }
    }
    Ok("all six sextuples match".into())
}

pub const REDUCED_TRIPLES: [(&str, (usize, usize, usize)); 10] = [
    ("complex", (0, 0, 1)),
    ("split-complex", (0, 1, 0)),
    ("rxr", (0, 1, 0)),
    ("dual", (1, 0, 0)),
    ("rrr", (0, 2, 0)),
    ("rxc", (0, 1, 1)),
    ("rxd", (1, 1, 0)),
    ("toeplitz:3", (2, 0, 0)),
    ("nil2", (2, 0, 0)),
    ("splitnil", (0, 1, 0)),
];

fn reduced_triples(_: u64) -> Result<String> {
    for (name, want) in REDUCED_TRIPLES {
        let alg = registry(name)?;
        let u = anti_rotor(&alg, FieldKind::Inverse)?;
        let tau = tau_triple(&alg, &u)?;
        if !tau.certified {
            return Err(fail(format!("{name}: τ classification uncertified")));
        }
        let got = (tau.rational, tau.log.saturating_sub(1), tau.arctan);
        if got != want {
            return Err(fail(format!("{name}: reduced triple {got:?}, expected {want:?}")));
        }
    }
    Ok("10 reduced triples match".into())
}

// ---------------------------------------------------------------------------
// Closed-form dual norms (test oracles).
// ---------------------------------------------------------------------------

/// The metric realized from the classical textbook parametrization of each
/// family.
pub fn classic_metric(name: &str, p: &[Q]) -> QMat {
    let f = |x: &Q| x.clone();
    match name {
        "complex" => Mat::from_rows(vec![
            vec![f(&p[0]), f(&p[1])],
            vec![f(&p[1]), -f(&p[0])],
        ]),
        "split-complex" => Mat::from_rows(vec![
            vec![f(&p[0]), f(&p[1])],
            vec![f(&p[1]), f(&p[0])],
        ]),
        "rxr" => Mat::from_rows(vec![
            vec![f(&p[0]), Q::zero()],
            vec![Q::zero(), f(&p[1])],
        ]),
        "dual" => Mat::from_rows(vec![
            vec![f(&p[0]), f(&p[1])],
            vec![f(&p[1]), Q::zero()],
        ]),
        "rrr" => {
            let mut m = Mat::zero(3, 3);
            for i in 0..3 {
                m[(i, i)] = p[i].clone();
            }
            m
        }
        "rxc" => {
            let mut m = Mat::zero(3, 3);
            m[(0, 0)] = p[0].clone();
            m[(1, 1)] = p[1].clone();
            m[(2, 2)] = -p[1].clone();
            m[(1, 2)] = p[2].clone();
            m[(2, 1)] = p[2].clone();
            m
        }
        "rxd" => {
            let mut m = Mat::zero(3, 3);
            m[(0, 0)] = p[0].clone();
            m[(1, 1)] = p[1].clone();
            m[(1, 2)] = p[2].clone();
            m[(2, 1)] = p[2].clone();
            m
        }
        "toeplitz:3" => hankel(3, p),
        "toeplitz:4" => hankel(4, p),
        "nil2" => {
            let mut m = Mat::zero(3, 3);
            m[(0, 0)] = p[0].clone();
            m[(0, 1)] = p[1].clone();
            m[(1, 0)] = p[1].clone();
            m[(0, 2)] = p[2].clone();
            m[(2, 0)] = p[2].clone();
            m
        }
        "splitnil" => {
            let mut m = Mat::zero(3, 3);
            m[(0, 0)] = p[0].clone();
            m[(1, 1)] = p[0].clone();
            m[(0, 1)] = p[1].clone();
            m[(1, 0)] = p[1].clone();
            m
        }
        "ut2" => {
            let mut m = Mat::zero(3, 3);
            m[(0, 0)] = p[0].clone();
            m[(1, 1)] = p[1].clone();
            m
        }
        "ut4" => {
            let mut m = Mat::zero(4, 4);
            let half = qr(1, 2);
            m[(0, 0)] = p[0].clone();
            for (i, v) in [(1, &p[1]), (2, &p[2]), (3, &p[3])] {
                m[(0, i)] = (*v).clone();
                m[(i, 0)] = (*v).clone();
            }
            m[(1, 2)] = half.clone() * p[3].clone();
            m[(2, 1)] = half * p[3].clone();
            m
        }
        "ut5" => {
            let mut m = Mat::zero(5, 5);
            m[(0, 0)] = p[0].clone();
            m[(1, 1)] = p[1].clone();
            m[(0, 2)] = p[2].clone();
            m[(2, 0)] = p[2].clone();
            m
        }
        _ => unreachable!("no classic metric for {name}"),
    }
}

/// Hankel matrix with entries γ_{i+j} (zero past the antidiagonal).
pub fn hankel(n: usize, gamma: &[Q]) -> QMat {
    Mat::from_fn(n, n, |i, j| {
        if i + j < n {
            gamma[i + j].clone()
        } else {
            Q::zero()
        }
    })
}

fn pf(x: &Q) -> f64 {
    antirotor::scalar::rational_to_f64(x)
}

/// Closed form of the dual norm for the familiar parametrization; hard-coded
/// oracles for the test battery only.
pub fn norm_closed_form(name: &str, p: &[Q], s: &[f64]) -> f64 {
    let pv: Vec<f64> = p.iter().map(pf).collect();
    match name {
        "complex" => {
            let (x, y) = (s[0], s[1]);
            (x * x + y * y).powf(pv[0] / 2.0) * (pv[1] * (y / x).atan()).exp()
        }
        "split-complex" => {
            let (x, y) = (s[0], s[1]);
            ((x + y) * (x - y)).powf(pv[0] / 2.0) * ((x + y) / (x - y)).powf(pv[1] / 2.0)
        }
        "rxr" => s[0].powf(pv[0] / 2.0) * s[1].powf(pv[1] / 2.0),
        "dual" => s[0].powf(pv[0]) * (pv[1] * s[1] / s[0]).exp(),
        "rrr" => {
            s[0].powf(pv[0] / 3.0) * s[1].powf(pv[1] / 3.0) * s[2].powf(pv[2] / 3.0)
        }
        "rxc" => {
            let (x, y, z) = (s[0], s[1], s[2]);
            x.powf(pv[0] / 2.0)
                * (y * y + z * z).powf(pv[1] / 4.0)
                * ((pv[2] / 2.0) * (z / y).atan()).exp()
        }
        "rxd" => {
            let (x, y, z) = (s[0], s[1], s[2]);
            x.powf(pv[0] / 2.0) * y.powf(pv[1] / 2.0) * ((pv[2] / 2.0) * z / y).exp()
        }
        "toeplitz:3" => {
            let (x, y, z) = (s[0], s[1], s[2]);
            let (w1, w2) = (y / x, z / x);
            x.powf(pv[0]) * (pv[1] * w1 + pv[2] * (w2 - w1 * w1 / 2.0)).exp()
        }
        "toeplitz:4" => {
            let x = s[0];
            let (w1, w2, w3) = (s[1] / x, s[2] / x, s[3] / x);
            let c1 = w1;
            let c2 = w2 - w1 * w1 / 2.0;
            let c3 = w3 - w1 * w2 + w1 * w1 * w1 / 3.0;
            x.powf(pv[0]) * (pv[1] * c1 + pv[2] * c2 + pv[3] * c3).exp()
        }
        "nil2" => s[0].powf(pv[0]) * ((pv[1] * s[1] + pv[2] * s[2]) / s[0]).exp(),
        "splitnil" => {
            let (x, y) = (s[0], s[1]);
            (x + y).powf((pv[0] + pv[1]) / 2.0) * (x - y).powf((pv[0] - pv[1]) / 2.0)
        }
        "ut2" => s[0].powf(pv[0] / 2.0) * s[1].powf(pv[1] / 2.0),
        "ut4" => {
            let (x, y, z, w) = (s[0], s[1], s[2], s[3]);
            x.powf(pv[0])
                * (pv[1] * y / x + pv[2] * z / x + pv[3] * (w / x - y * z / (2.0 * x * x))).exp()
        }
        "ut5" => {
            let (x, y, z) = (s[0], s[1], s[2]);
            x.powf(pv[0] / 2.0) * y.powf(pv[1] / 2.0) * ((pv[2] / 2.0) * z / x).exp()
        }
        _ => unreachable!(),
    }
}

fn random_params(rng: &mut SplitMix, count: usize) -> Vec<Q> {
    (0..count)
        .map(|_| {
            let num = rng.next_in(3);
            let den = 1 + (rng.next_u64() % 2) as i64;
            qr(num, den)
        })
        .collect()
}

/// Evaluate the norm against its closed form at seeded points near the unit.
fn norm_vs_closed_form(name: &str, seed: u64, points: usize, radius: f64) -> Result<f64> {
    let alg = registry(name)?;
    let u = anti_rotor(&alg, FieldKind::Inverse)?;
    let m = u.param_count;
    let mut rng = SplitMix(seed ^ 0xabcdef);
    let params = random_params(&mut rng, m);
    let l = classic_metric(name, &params);
    let coords = membership_check(&u, &l)?
        .ok_or_else(|| fail(format!("{name}: familiar metric not in computed family")))?;
    let _ = coords;
    let ev = NormEvaluator::new(&alg, &l, MetricCheck::InFamily(&u))?;
    let mut worst: f64 = 0.0;
    for s in points_near_unit(&alg, radius, points, seed ^ 0x77) {
        let got = ev.eval(&s, 1e-12)?.value;
        let want = norm_closed_form(name, &params, &s);
        worst = worst.max((got - want).abs() / want.abs().max(1e-12));
    }
    Ok(worst)
}

fn norm_closed_forms(seed: u64) -> Result<String> {
    let names = [
        "complex",
        "split-complex",
        "rxr",
        "dual",
        "rrr",
        "rxc",
        "rxd",
        "toeplitz:3",
        "nil2",
        "splitnil",
    ];
    let mut worst: f64 = 0.0;
    for name in names {
        let w = norm_vs_closed_form(name, seed, 10, 0.12)?;
        if w > 1e-8 {
            return Err(fail(format!("{name}: worst closed-form deviation {w:.3e} > 1e-8")));
        }
        worst = worst.max(w);
    }
    Ok(format!("10 algebras × 10 points, worst relative deviation {worst:.2e}"))
}

// ---------------------------------------------------------------------------
// Matrix algebra.
// ---------------------------------------------------------------------------

fn matrix_line_check(n: usize) -> Result<String> {
    let alg = registry(&format!("matrix:{n}"))?;
    let u = anti_rotor(&alg, FieldKind::Inverse)?;
    if u.param_count != 1 {
        return Err(fail(format!("matrix:{n}: family dimension {} ≠ 1", u.param_count)));
    }
    let t = transpose_permutation(n);
    if membership_check(&u, &t)?.is_none() {
        return Err(fail(format!("matrix:{n}: transpose permutation not in family")));
    }
    let nf = normalized_subspace(&alg, &u)?;
    if nf.directions.param_count != 0 || nf.base != t {
        return Err(fail(format!("matrix:{n}: normalized member is not exactly the transpose")));
    }
    Ok(format!("matrix:{n}: one-dimensional, spanned by the transpose permutation"))
}

fn matrix2_transpose_line(_: u64) -> Result<String> {
    matrix_line_check(2)
}

fn matrix3_transpose_line(_: u64) -> Result<String> {
    matrix_line_check(3)
}

fn matrix_norm_vs_det(seed: u64) -> Result<String> {
    let mut detail = String::new();
    for n in [2usize, 3] {
        let e = registry_entry(&format!("matrix:{n}"))?;
        let rep = check_special_vs_det(&e, 1e-12, 20, seed ^ (n as u64))?;
        if !rep.pass {
            return Err(fail(format!("matrix:{n}: {}", rep.detail)));
        }
        detail.push_str(&format!("matrix:{n} worst {:.2e}; ", rep.worst));
    }
    Ok(detail)
}

// ---------------------------------------------------------------------------
// Toeplitz family.
// ---------------------------------------------------------------------------

fn toeplitz_hankel(_: u64) -> Result<String> {
    for n in 2..=5usize {
        let alg = registry(&format!("toeplitz:{n}"))?;
        let u = anti_rotor(&alg, FieldKind::Inverse)?;
        let gens: Vec<QMat> = (0..n)
            .map(|k| {
                let mut gamma = vec![Q::zero(); n];
                gamma[k] = Q::one();
                hankel(n, &gamma)
            })
            .collect();
        let want = ParamSymMatrix::from_generators(n, &gens);
        if !subspace_equal(&u, &want)? {
            return Err(fail(format!("toeplitz:{n}: family differs from the Hankel family")));
        }
    }
    Ok("Hankel families match exactly for n = 2..5".into())
}

fn toeplitz_normalized(_: u64) -> Result<String> {
    for n in 2..=5usize {
        let alg = registry(&format!("toeplitz:{n}"))?;
        let u = anti_rotor(&alg, FieldKind::Inverse)?;
        let nf = normalized_subspace(&alg, &u)?;
        if nf.directions.param_count != n - 1 {
            return Err(fail(format!(
                "toeplitz:{n}: normalized family has dimension {}, expected {}",
                nf.directions.param_count,
                n - 1
            )));
        }
        // Exactly the γ₁ = 1 slice: base has top-left 1 and every direction
        // kills the top-left entry.
        if nf.base[(0, 0)] != Q::one() {
            return Err(fail(format!("toeplitz:{n}: base metric top-left is not 1")));
        }
        for g in nf.directions.generators() {
            if !g[(0, 0)].is_zero() {
                return Err(fail(format!("toeplitz:{n}: a direction moves the top-left entry")));
            }
        }
    }
    Ok("normalized Toeplitz families are exactly the pinned-corner Hankel slices".into())
}

fn toeplitz_norms(seed: u64) -> Result<String> {
    let mut worst: f64 = 0.0;
    for name in ["toeplitz:3", "toeplitz:4"] {
        let w = norm_vs_closed_form(name, seed, 10, 0.1)?;
        if w > 1e-8 {
            return Err(fail(format!("{name}: worst deviation {w:.3e} > 1e-8")));
        }
        worst = worst.max(w);
    }
    Ok(format!("n = 3, 4 match the exponential closed form; worst {worst:.2e}"))
}

// ---------------------------------------------------------------------------
// Other families.
// ---------------------------------------------------------------------------

fn prodr4_diagonal(_: u64) -> Result<String> {
    let alg = registry("prodr:4")?;
    let u = anti_rotor(&alg, FieldKind::Inverse)?;
    let gens: Vec<QMat> = (0..4)
        .map(|i| {
            let mut m: QMat = Mat::zero(4, 4);
            m[(i, i)] = Q::one();
            m
        })
        .collect();
    let want = ParamSymMatrix::from_generators(4, &gens);
    if !subspace_equal(&u, &want)? {
        return Err(fail("prodr:4: family is not the diagonal space"));
    }
    let nf = normalized_subspace(&alg, &u)?;
    // trace = 4 slice: identity in, diag(4,0,0,0) in, diag(1,1,1,2) out
    let id: QMat = Mat::identity(4);
    if !nf.contains(&id)? {
        return Err(fail("prodr:4: identity not normalized"));
    }
    let mut d4: QMat = Mat::zero(4, 4);
    d4[(0, 0)] = q(4);
    if !nf.contains(&d4)? {
        return Err(fail("prodr:4: diag(4,0,0,0) not normalized"));
    }
    let mut bad: QMat = Mat::identity(4);
    bad[(3, 3)] = q(2);
    if nf.contains(&bad)? {
        return Err(fail("prodr:4: trace-5 member wrongly accepted"));
    }
    Ok("diagonal family with the trace-4 normalized slice".into())
}

fn quaternion_family(_: u64) -> Result<String> {
    let alg = registry("quaternion")?;
    let u = anti_rotor(&alg, FieldKind::Inverse)?;
    if u.param_count != 1 {
        return Err(fail(format!("quaternion family dimension {} ≠ 1", u.param_count)));
    }
    let want = qmat(vec![
        vec![1, 0, 0, 0],
        vec![0, -1, 0, 0],
        vec![0, 0, -1, 0],
        vec![0, 0, 0, -1],
    ]);
    if membership_check(&u, &want)?.is_none() {
        return Err(fail("diag(1,−1,−1,−1) not in the quaternion family"));
    }
    Ok("one-dimensional family spanned by diag(1,−1,−1,−1)".into())
}

fn triangular_norms(seed: u64) -> Result<String> {
    // ut2: normalized family diag(1+σ, 1−σ, 0); special norm √(xy)·(x/y)^{σ/2}
    let alg = registry("ut2")?;
    let u = anti_rotor(&alg, FieldKind::Inverse)?;
    let nf = normalized_subspace(&alg, &u)?;
    if nf.directions.param_count != 1 {
        return Err(fail("ut2: normalized family should be one-parameter"));
    }
    if !nf.contains(&qmat(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 0]]))? {
        return Err(fail("ut2: diag(1,1,0) not normalized"));
    }
    let mut worst = norm_vs_closed_form("ut2", seed, 8, 0.1)?;
    // ut5: normalized two-parameter family, norm √(xy)(x/y)^{σ/2} e^{βz/(2x)}
    let alg5 = registry("ut5")?;
    let u5 = anti_rotor(&alg5, FieldKind::Inverse)?;
    if u5.param_count != 3 {
        return Err(fail(format!("ut5: family dimension {} ≠ 3", u5.param_count)));
    }
    let nf5 = normalized_subspace(&alg5, &u5)?;
    if nf5.directions.param_count != 2 {
        return Err(fail("ut5: normalized family should be two-parameter"));
    }
    worst = worst.max(norm_vs_closed_form("ut5", seed, 8, 0.08)?);
    worst = worst.max(norm_vs_closed_form("ut4", seed, 8, 0.08)?);
    // quotient-det oracles at σ = 0
    for name in ["ut2", "ut5"] {
        let e = registry_entry(name)?;
        let rep = check_special_vs_det(&e, 1e-12, 10, seed)?;
        if !rep.pass {
            return Err(fail(format!("{name}: {}", rep.detail)));
        }
        worst = worst.max(rep.worst);
    }
    if worst > 1e-8 {
        return Err(fail(format!("triangular norms worst deviation {worst:.3e} > 1e-8")));
    }
    Ok(format!("ut2/ut4/ut5 norms and quotient dets agree; worst {worst:.2e}"))
}

fn star_norms(seed: u64) -> Result<String> {
    let mut worst: f64 = 0.0;
    for name in ["spin:2", "spin:3", "quaternion", "octonion"] {
        let e = registry_entry(name)?;
        // Verify the designated metric is genuinely uncurling, then compare
        // against the Minkowski/Euclidean closed form.
        let l = e.meta.designated_metric.clone().unwrap();
        let field = e.algebra.symbolic_inverse()?;
        if !antirotor::skewer::is_uncurling(&e.algebra, &field, &l)? {
            return Err(fail(format!("{name}: designated metric does not uncurl")));
        }
        let rep = check_special_vs_det(&e, 1e-12, 10, seed ^ 0x5a5a)?;
        if !rep.pass {
            return Err(fail(format!("{name}: {}", rep.detail)));
        }
        worst = worst.max(rep.worst);
    }
    Ok(format!("spin 2/3 Minkowski and doubling 4/8 Euclidean agree; worst {worst:.2e}"))
}

// ---------------------------------------------------------------------------
// Randomized harness.
// ---------------------------------------------------------------------------

pub const DIM3_REGISTRY: [&str; 12] = [
    "complex",
    "split-complex",
    "rxr",
    "dual",
    "rrr",
    "rxc",
    "rxd",
    "toeplitz:3",
    "nil2",
    "splitnil",
    "ut2",
    "spin:2",
];

/// Seeded invertible integer matrix with entries in {−3..3}.
pub fn random_invertible(rng: &mut SplitMix, n: usize) -> QMat {
    loop {
        let k: QMat = Mat::from_fn(n, n, |_, _| q(rng.next_in(3)));
        if !k.bareiss_det().is_zero() {
            return k;
        }
    }
}

/// One transform trial: the subspace law and certified-invariant equality.
pub fn isomorphism_trial(alg: &Algebra, k: &QMat) -> Result<()> {
    let u = anti_rotor(alg, FieldKind::Inverse)?;
    let talg = alg.transform(k)?;
    let tu = anti_rotor(&talg, FieldKind::Inverse)?;
    if !subspace_equal(&u, &tu.congruence(k))? {
        return Err(fail(format!("{}: Kᵀ·u'·K ≠ u for K = {:?}", alg.name, k)));
    }
    let ra = invariant_report(alg, &u)?;
    let rb = invariant_report(&talg, &tu)?;
    match compare(&ra, &rb) {
        Verdict::Indistinguishable => Ok(()),
        Verdict::NotIsomorphic { witnesses } => Err(fail(format!(
            "{}: certified invariants changed under transform: {}",
            alg.name,
            witnesses.join("; ")
        ))),
    }
}

pub fn run_isomorphism_trials(alg: &Algebra, count: usize, seed: u64) -> Result<usize> {
    let mut rng = SplitMix(seed);
    for _ in 0..count {
        let k = random_invertible(&mut rng, alg.dim);
        isomorphism_trial(alg, &k)?;
    }
    Ok(count)
}

fn isomorphism_trials(seed: u64) -> Result<String> {
    let trials = 50;
    for name in DIM3_REGISTRY {
        let alg = registry(name)?;
        run_isomorphism_trials(&alg, trials, seed ^ fxhash(name))?;
    }
    Ok(format!("{} algebras × {trials} seeded transforms, all invariant", DIM3_REGISTRY.len()))
}

fn fxhash(s: &str) -> u64 {
    s.bytes().fold(0xcbf29ce484222325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}

/// Pairwise equality matrix of anti-rotors across field choices.
pub fn type_survey_for(alg: &Algebra, powers: &[i64]) -> Result<Vec<(String, usize, bool)>> {
    let base = anti_rotor(alg, FieldKind::Inverse).ok();
    let mut families: Vec<(String, ParamSymMatrix)> = Vec::new();
    if let Some(u) = base {
        families.push(("inverse".into(), u));
    }
    for &j in powers {
        let u = anti_rotor(alg, FieldKind::Power(j))?;
        families.push((format!("power({j})"), u));
    }
    let first = &families[0].1;
    let mut out = Vec::new();
    for (name, u) in &families {
        out.push((name.clone(), u.param_count, subspace_equal(first, u)?));
    }
    Ok(out)
}

fn type_survey(_: u64) -> Result<String> {
    for name in DIM3_REGISTRY {
        let alg = registry(name)?;
        let rows = type_survey_for(&alg, &[-2, 2, 3])?;
        for (label, m, equal) in &rows {
            if !equal {
                return Err(fail(format!(
                    "{name}: anti-rotor for {label} (m = {m}) differs from inverse mode"
                )));
            }
        }
    }
    Ok(format!(
        "{} unital algebras: families for s⁻¹, s⁻², s², s³ all coincide",
        DIM3_REGISTRY.len()
    ))
}

fn nilpotent_powers(_: u64) -> Result<String> {
    let alg = registry("nilpotent")?;
    let dims: Vec<usize> = [2i64, 3, 4]
        .iter()
        .map(|&j| anti_rotor(&alg, FieldKind::Power(j)).map(|u| u.param_count))
        .collect::<Result<Vec<_>>>()?;
    if dims != vec![3, 4, 6] {
        return Err(fail(format!("nilpotent power dims {dims:?}, expected [3, 4, 6]")));
    }
    let u2 = anti_rotor(&alg, FieldKind::Power(2))?;
    let u3 = anti_rotor(&alg, FieldKind::Power(3))?;
    if subspace_equal(&u2, &u3)? {
        return Err(fail("nilpotent: power-2 and power-3 families should differ"));
    }
    Ok("power 2/3/4 families have dimensions 3, 4, 6 and differ pairwise".into())
}

// ---------------------------------------------------------------------------
// Duality and controls.
// ---------------------------------------------------------------------------

fn duality_gradient(seed: u64) -> Result<String> {
    let mut worst: f64 = 0.0;
    for name in DIM3_REGISTRY {
        let alg = registry(name)?;
        let u = anti_rotor(&alg, FieldKind::Inverse)?;
        let s = &points_near_unit(&alg, 0.08, 1, seed ^ fxhash(name))[0];
        for g in u.generators() {
            let r = duality_residual(&alg, &g, s, 1e-12)?;
            if r > 1e-5 {
                return Err(fail(format!("{name}: duality residual {r:.3e} > 1e-5")));
            }
            worst = worst.max(r);
        }
    }
    Ok(format!("∇[‖1‖² log ℓ] = L·s⁻¹ on every generator; worst relative {worst:.2e}"))
}

fn reciprocity(seed: u64) -> Result<String> {
    let mut worst: f64 = 0.0;
    // nonsingular normalized metrics: the transpose on matrix:2, a Hankel
    // slice on toeplitz:3, the identity on rrr
    let cases: Vec<(&str, QMat)> = vec![
        ("matrix:2", transpose_permutation(2)),
        ("toeplitz:3", hankel(3, &[q(1), qr(1, 2), qr(1, 3)])),
        ("rrr", Mat::identity(3)),
    ];
    for (name, l) in cases {
        let alg = registry(name)?;
        for s in points_near_unit(&alg, 0.06, 3, seed ^ fxhash(name)) {
            let rep = check_reciprocity(&alg, &l, &s, 1e-12)?;
            if !rep.pass {
                return Err(fail(format!("{name}: {}", rep.detail)));
            }
            worst = worst.max(rep.worst);
        }
    }
    Ok(format!("ℓ(s⁻¹)ℓ(s) = 1 and the unit-direction identity hold; worst {worst:.2e}"))
}

fn generator_soundness(seed: u64) -> Result<String> {
    for name in DIM3_REGISTRY {
        let alg = registry(name)?;
        let field = alg.symbolic_inverse()?;
        let u = anti_rotor(&alg, FieldKind::Inverse)?;
        if !verify_generators_uncurl(&alg, &field, &u)? {
            return Err(fail(format!("{name}: a generator fails the symbolic curl identity")));
        }
        let pts = points_near_unit(&alg, 0.1, 10, seed ^ fxhash(name));
        for g in u.generators() {
            let r = max_curl_fd_residual(&field, &g, &pts);
            if r > 1e-6 {
                return Err(fail(format!("{name}: finite-difference curl residual {r:.3e}")));
            }
        }
    }
    Ok("symbolic and finite-difference curl residuals vanish on all generators".into())
}

fn negative_controls(_: u64) -> Result<String> {
    // Euclidean metric on the dual numbers is not uncurling: detected both
    // symbolically and by the two-path disagreement.
    let alg = registry("dual")?;
    let field = alg.symbolic_inverse()?;
    let id: QMat = Mat::identity(2);
    if antirotor::skewer::is_uncurling(&alg, &field, &id)? {
        return Err(fail("identity wrongly accepted as uncurling for the dual numbers"));
    }
    let rep = check_path_independence(&alg, &id, &[1.3, 0.4], 1e-10)?;
    if rep.pass {
        return Err(fail("path independence must fail for the Euclidean metric on duals"));
    }
    Ok(format!("two-path disagreement detected ({})", rep.detail))
}

fn verdicts(_: u64) -> Result<String> {
    let report = |name: &str| -> Result<_> {
        let alg = registry(name)?;
        let u = anti_rotor(&alg, FieldKind::Inverse)?;
        invariant_report(&alg, &u)
    };
    let c = report("complex")?;
    let d = report("dual")?;
    let sc = report("split-complex")?;
    let rr = report("rxr")?;
    if !matches!(compare(&c, &d), Verdict::NotIsomorphic { .. }) {
        return Err(fail("complex vs dual must be distinguished"));
    }
    if !matches!(compare(&c, &sc), Verdict::NotIsomorphic { .. }) {
        return Err(fail("complex vs split-complex must be distinguished"));
    }
    if compare(&sc, &rr) != Verdict::Indistinguishable {
        return Err(fail("split-complex vs rxr must be indistinguishable"));
    }
    Ok("not-isomorphic and indistinguishable verdicts as expected".into())
}

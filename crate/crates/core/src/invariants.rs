//! Isomorphism invariants of a metric family: dimension, extreme ranks, the
//! determinant polynomial and its real zero set, and the counts of
//! parameters feeding rational / logarithmic / arctangent terms of the dual
//! norm integrals.
//!
//! Sensitivity and the τ counts are computed as ranks of exact linear
//! systems rather than by counting parameters that literally appear: the
//! canonical parametrization of a transformed algebra mixes basis
//! directions, and only the subspace codimensions are invariant.

use crate::algebra::Algebra;
use crate::matrix::{rank_exact, Mat};
use crate::partfrac::class_condition_rows;
use crate::poly::{render_poly, Monomial};
use crate::skewer::{param_name, ParamSymMatrix};
use crate::univar::rational_roots;
use crate::{QMat, QPoly, Result, Q};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Convention tag attached to every variety summary: the zero set is taken
/// inside the essential (sensitive) parameter subspace, except that an
/// identically zero determinant scores dimension m with zero components.
pub const VARIETY_CONVENTION: &str = "sensitive-subspace";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankMethod {
    Exact,
    Probabilistic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certainty {
    Certified,
    UpperBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum VarietySummary {
    /// det ≡ 0: the whole parameter space vanishes; scored dim = m,
    /// components = 0.
    ZeroPolynomial { dim: usize, components: usize },
    Classified { dim: usize, components: usize },
    Unsupported { polynomial: String },
}

impl VarietySummary {
    pub fn dim_components(&self) -> Option<(usize, usize)> {
        match self {
            VarietySummary::ZeroPolynomial { dim, components }
            | VarietySummary::Classified { dim, components } => Some((*dim, *components)),
            VarietySummary::Unsupported { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub algebra: String,
    pub dim: usize,
    /// Dimension m of the metric family.
    pub anti_rotor_dim: usize,
    pub max_rank: usize,
    pub max_rank_method: RankMethod,
    pub min_nonzero_rank: usize,
    pub min_nonzero_rank_certainty: Certainty,
    pub det_poly: String,
    pub sensitive_param_count: usize,
    pub variety: VarietySummary,
    pub variety_convention: &'static str,
    /// (rational, log, arctan) over the raw parameter set; `None` when the
    /// algebra has no inverse field.
    pub tau_raw: Option<(usize, usize, usize)>,
    pub tau_reduced: Option<(usize, usize, usize)>,
    pub tau_certified: bool,
    /// `Some(true)` when the one-dimensional-family simplicity criterion
    /// applies (m = 1 with a nonsingular member); `None` = inconclusive.
    pub simple: Option<bool>,
    #[serde(skip)]
    pub det_poly_exact: QPoly,
}

impl InvariantReport {
    /// The ordered sextuple (m, max rank, min nonzero rank, #sensitive,
    /// dim V, #components); `None` when the variety is unsupported.
    pub fn sextuple(&self) -> Option<(usize, usize, usize, usize, usize, usize)> {
        let (dv, cv) = self.variety.dim_components()?;
        Some((
            self.anti_rotor_dim,
            self.max_rank,
            self.min_nonzero_rank,
            self.sensitive_param_count,
            dv,
            cv,
        ))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SextupleOptions {
    /// Half-width of the integer grid searched for low-rank members.
    pub grid_bound: i64,
    /// Dimension cutoff above which max-rank falls back to random
    /// evaluations.
    pub exact_rank_dim_cap: usize,
}

impl Default for SextupleOptions {
    fn default() -> Self {
        SextupleOptions { grid_bound: 2, exact_rank_dim_cap: 6 }
    }
}

/// Deterministic splitmix64, for the seeded random evaluations.
pub struct SplitMix(pub u64);

impl SplitMix {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[-bound, bound]`.
    pub fn next_in(&mut self, bound: i64) -> i64 {
        let span = (2 * bound + 1) as u64;
        (self.next_u64() % span) as i64 - bound
    }
}

/// Rank/determinant/variety invariants of a homogeneous metric family.
pub fn sextuple(alg_name: &str, n: usize, u: &ParamSymMatrix) -> InvariantReport {
    sextuple_with(alg_name, n, u, SextupleOptions::default())
}

pub fn sextuple_with(
    alg_name: &str,
    n: usize,
    u: &ParamSymMatrix,
    opts: SextupleOptions,
) -> InvariantReport {
    let m = u.param_count;
    let pm = u.to_poly_matrix();
    let det = if n == 0 { QPoly::zero(m) } else { pm.bareiss_det() };

    // Largest rank of a member.
    let (max_rank, max_rank_method) = if n <= opts.exact_rank_dim_cap {
        (pm.bareiss_rank(), RankMethod::Exact)
    } else {
        let mut rng = SplitMix(0x5eed_0001);
        let mut best = 0;
        for _ in 0..5 {
            let at: Vec<Q> = (0..m).map(|_| crate::q(rng.next_in(1_000_000))).collect();
            best = best.max(rank_exact(&u.realize(&at)));
        }
        (best, RankMethod::Probabilistic)
    };

    // Smallest nonzero rank: exhaustive small grid plus certifications.
    let (min_nonzero_rank, min_rank_certainty) = min_nonzero_rank(u, &det, max_rank, opts);

    let sensitive = essential_param_count(&det);
    let variety = variety_summary(&det);
    let names: Vec<String> = (0..m).map(param_name).collect();
    let simple = if m == 1 && !det.is_zero() { Some(true) } else { None };
    InvariantReport {
        algebra: alg_name.to_string(),
        dim: n,
        anti_rotor_dim: m,
        max_rank,
        max_rank_method,
        min_nonzero_rank,
        min_nonzero_rank_certainty: min_rank_certainty,
        det_poly: render_poly(&det, &names),
        sensitive_param_count: sensitive,
        variety,
        variety_convention: VARIETY_CONVENTION,
        tau_raw: None,
        tau_reduced: None,
        tau_certified: true,
        simple,
        det_poly_exact: det,
    }
}

fn min_nonzero_rank(
    u: &ParamSymMatrix,
    det: &QPoly,
    max_rank: usize,
    opts: SextupleOptions,
) -> (usize, Certainty) {
    let m = u.param_count;
    let n = u.n;
    if m == 0 {
        return (0, Certainty::Certified);
    }
    if m == 1 {
        // Every nonzero member is a scalar multiple of the single generator.
        return (rank_exact(&u.generator(0)), Certainty::Certified);
    }
    let b = opts.grid_bound;
    let mut best = usize::MAX;
    let mut coords = vec![-b; m];
    'grid: loop {
        if coords.iter().any(|&c| c != 0) {
            let at: Vec<Q> = coords.iter().map(|&c| crate::q(c)).collect();
            let r = rank_exact(&u.realize(&at));
            if r > 0 {
                best = best.min(r);
                if best == 1 {
                    break;
                }
            }
        }
        for slot in coords.iter_mut() {
            if *slot < b {
                *slot += 1;
                continue 'grid;
            }
            *slot = -b;
        }
        break;
    }
    if best == usize::MAX {
        best = max_rank;
    }
    if best == 1 {
        return (1, Certainty::Certified);
    }
    // Definite determinant certificate: when ±det is a definite quadratic
    // form in ≤ 3 parameters, no nonzero member is singular.
    if best == n && m <= 3 && det.total_degree() == 2 && is_homogeneous(det) {
        if let Some(g) = quadratic_form_gram(det) {
            let (pos, neg, zero) = signature(&g);
            if zero == 0 && (pos == 0 || neg == 0) {
                return (n, Certainty::Certified);
            }
        }
    }
    (best, Certainty::UpperBound)
}

/// Number of essential parameters: the rank of the span of the first
/// partial derivatives (invariant under reparametrization, and equal to the
/// count of literally appearing parameters on a canonical basis).
pub fn essential_param_count(p: &QPoly) -> usize {
    dependence_data(p).map_or(0, |(rank, _, _)| rank)
}

/// Rank of the derivative span, the pivot columns of its coefficient
/// matrix (a canonical choice of essential coordinates), and the dependence
/// directions.
fn dependence_data(p: &QPoly) -> Option<(usize, Vec<usize>, Vec<Vec<Q>>)> {
    let m = p.nvars;
    if p.is_zero() || m == 0 {
        return None;
    }
    let partials: Vec<QPoly> = (0..m).map(|q| p.derivative(q)).collect();
    let mut monos: std::collections::BTreeSet<Monomial> = std::collections::BTreeSet::new();
    for d in &partials {
        monos.extend(d.terms.keys().cloned());
    }
    let monos: Vec<Monomial> = monos.into_iter().collect();
    // v is a dependence direction iff Σ_q v_q·∂_q p = 0.
    let rows: Vec<Vec<Q>> = monos
        .iter()
        .map(|mono| {
            partials
                .iter()
                .map(|d| d.terms.get(mono).cloned().unwrap_or_else(Q::zero))
                .collect()
        })
        .collect();
    let mat = Mat::from_rows(rows);
    let (pivots, ns) = mat.rref_nullspace();
    Some((m - ns.len(), pivots, ns))
}

fn is_homogeneous(p: &QPoly) -> bool {
    let mut degs = p.terms.keys().map(|m| m.total_degree());
    match degs.next() {
        None => true,
        Some(d0) => degs.all(|d| d == d0),
    }
}

/// Gram matrix of a homogeneous quadratic polynomial.
fn quadratic_form_gram(p: &QPoly) -> Option<QMat> {
    let m = p.nvars;
    let mut g: QMat = Mat::zero(m, m);
    let half = Q::one() / (Q::one() + Q::one());
    for (mono, c) in &p.terms {
        let vars: Vec<(usize, u16)> =
            mono.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i, e)).collect();
        match vars.as_slice() {
            [(i, 2)] => g[(*i, *i)] = c.clone(),
            [(i, 1), (j, 1)] => {
                g[(*i, *j)] = c.clone() * half.clone();
                g[(*j, *i)] = c.clone() * half.clone();
            }
            _ => return None,
        }
    }
    Some(g)
}

/// Signature (positive, negative, zero) of a symmetric rational matrix by
/// exact congruence diagonalization.
fn signature(g: &QMat) -> (usize, usize, usize) {
    let n = g.rows;
    let mut a = g.clone();
    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
    for i in 0..n {
        if a[(i, i)].is_zero() {
            // try to bring a nonzero onto the diagonal
            if let Some(j) = (i + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                for c in 0..n {
                    let t = a[(i, c)].clone();
                    a[(i, c)] = a[(j, c)].clone();
                    a[(j, c)] = t;
                }
                for r in 0..n {
                    let t = a[(r, i)].clone();
                    a[(r, i)] = a[(r, j)].clone();
                    a[(r, j)] = t;
                }
            } else if let Some(j) = (i + 1..n).find(|&j| !a[(i, j)].is_zero()) {
                // congruence: add row/col j into i, diagonal becomes 2a_ij
                for c in 0..n {
                    let t = a[(i, c)].clone() + a[(j, c)].clone();
                    a[(i, c)] = t;
                }
                for r in 0..n {
                    let t = a[(r, i)].clone() + a[(r, j)].clone();
                    a[(r, i)] = t;
                }
            }
        }
        let pivot = a[(i, i)].clone();
        if pivot.is_zero() {
            zero += 1;
            continue;
        }
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for j in i + 1..n {
            if a[(j, i)].is_zero() {
                continue;
            }
            let f = a[(j, i)].clone() / pivot.clone();
            for c in 0..n {
                let t = a[(j, c)].clone() - f.clone() * a[(i, c)].clone();
                a[(j, c)] = t;
            }
            for r in 0..n {
                let t = a[(r, j)].clone() - f.clone() * a[(r, i)].clone();
                a[(r, j)] = t;
            }
        }
    }
    (pos, neg, zero)
}

/// Pattern classifier for the real zero set of the determinant polynomial,
/// computed inside the essential parameter subspace.
pub fn variety_summary(det: &QPoly) -> VarietySummary {
    let m = det.nvars;
    if det.is_zero() {
        return VarietySummary::ZeroPolynomial { dim: m, components: 0 };
    }
    if det.is_constant() {
        // no zero set at all: empty variety
        return VarietySummary::Classified { dim: 0, components: 0 };
    }
    // Reduce to essential coordinates: the pivot columns of the derivative
    // span form a complement of every dependence direction, so restricting
    // the polynomial to them loses nothing.
    let (_, pivots, ns) = dependence_data(det).expect("nonzero polynomial");
    let reduced = if ns.is_empty() {
        det.clone()
    } else {
        let keep = pivots;
        let r = keep.len();
        let sub: Vec<Vec<Q>> = (0..m)
            .map(|i| {
                (0..r)
                    .map(|y| if keep[y] == i { Q::one() } else { Q::zero() })
                    .collect()
            })
            .collect();
        det.linear_substitute(&sub, r)
    };
    classify_reduced(&reduced)
}

fn classify_reduced(p: &QPoly) -> VarietySummary {
    let r = p.nvars;
    if !is_homogeneous(p) {
        return VarietySummary::Unsupported { polynomial: p.to_string() };
    }
    let (forms, remainder) = peel_linear_factors(p);
    let distinct_forms = forms.len();
    if remainder.is_constant() {
        if distinct_forms == 0 {
            return VarietySummary::Unsupported { polynomial: p.to_string() };
        }
        return VarietySummary::Classified { dim: r - 1, components: distinct_forms };
    }
    if remainder.total_degree() == 2 {
        if let Some(g) = quadratic_form_gram(&remainder) {
            let (pos, neg, _zero) = signature(&g);
            let rank = pos + neg;
            if pos == 0 || neg == 0 {
                // (semi)definite: zero set is the kernel subspace
                let kernel_dim = r - rank;
                let mut dim = kernel_dim;
                let mut components = 1;
                if distinct_forms > 0 {
                    dim = dim.max(r - 1);
                    components += distinct_forms;
                }
                if kernel_dim == 0 && distinct_forms == 0 {
                    // definite form in all variables: only the origin
                    return VarietySummary::Classified { dim: 0, components: 1 };
                }
                return VarietySummary::Classified { dim, components };
            }
            if pos == 1 && neg == 1 {
                // two real hyperplanes (possibly irrational)
                return VarietySummary::Classified {
                    dim: r - 1,
                    components: distinct_forms + 2,
                };
            }
        }
    }
    VarietySummary::Unsupported { polynomial: p.to_string() }
}

/// Peel exact rational linear factors (homogeneous) by randomized
/// evaluation, interpolation, and verified division. Returns the distinct
/// forms with multiplicities and the unfactored remainder.
fn peel_linear_factors(p: &QPoly) -> (Vec<(Vec<Q>, u32)>, QPoly) {
    let r = p.nvars;
    let mut rem = p.clone();
    let mut forms: Vec<(Vec<Q>, u32)> = Vec::new();
    if r == 1 {
        // c·y^d
        let d = rem.total_degree();
        if d > 0 {
            forms.push((vec![Q::one()], d));
            rem = QPoly::constant(1, rem.leading().unwrap().1.clone());
        }
        return (forms, rem);
    }
    'outer: loop {
        if rem.is_constant() {
            break;
        }
        for j in rem.support_vars() {
            if let Some(form) = find_linear_factor(&rem, j) {
                let lin = form_to_poly(&form, r);
                let mut mult = 0u32;
                while let Some(q) = rem.exact_div(&lin) {
                    rem = q;
                    mult += 1;
                }
                forms.push((form, mult));
                continue 'outer;
            }
        }
        break;
    }
    (forms, rem)
}

fn form_to_poly(form: &[Q], nvars: usize) -> QPoly {
    let mut p = QPoly::zero(nvars);
    for (i, c) in form.iter().enumerate() {
        if !c.is_zero() {
            p.add_term(Monomial::var(nvars, i), c.clone());
        }
    }
    p
}

fn find_linear_factor(p: &QPoly, j: usize) -> Option<Vec<Q>> {
    let r = p.nvars;
    let others: Vec<usize> = (0..r).filter(|&i| i != j).collect();
    let support = p.support_vars();
    for attempt in 0..6u64 {
        let mut rng = SplitMix(0xfac7_0000 + attempt * 977 + j as u64);
        let mut base: Vec<Q> = (0..r).map(|_| crate::q(1 + (rng.next_u64() % 9) as i64)).collect();
        base[j] = Q::zero();
        let u0 = p.restrict_to_line(j, &base);
        if u0.degree().unwrap_or(0) != p.degree_in(j) as usize {
            continue; // degenerate sample, leading coefficient vanished
        }
        let (roots0, _, _) = rational_roots(&u0);
        if roots0.is_empty() {
            return None;
        }
        // Root sets after perturbing each other variable by +1.
        let mut perturbed: Vec<Vec<Q>> = Vec::with_capacity(others.len());
        let mut ok = true;
        for &i in &others {
            if !support.contains(&i) {
                perturbed.push(vec![]);
                continue;
            }
            let mut b = base.clone();
            b[i] = b[i].clone() + Q::one();
            let ui = p.restrict_to_line(j, &b);
            if ui.degree().unwrap_or(0) != p.degree_in(j) as usize {
                ok = false;
                break;
            }
            let (roots, _, _) = rational_roots(&ui);
            perturbed.push(roots.into_iter().map(|(x, _)| x).collect());
        }
        if !ok {
            continue;
        }
        for (rho0, _) in &roots0 {
            // candidate coefficient sets aᵢ for λ = Σ aᵢ·xᵢ with
            // λ(base) = ρ₀ filtering the branch mismatches
            let mut combos: Vec<Vec<Q>> = vec![vec![]];
            for (idx, &i) in others.iter().enumerate() {
                let choices: Vec<Q> = if support.contains(&i) {
                    perturbed[idx].iter().map(|x| x.clone() - rho0.clone()).collect()
                } else {
                    vec![Q::zero()]
                };
                let mut next = Vec::new();
                for c in &combos {
                    for a in &choices {
                        if next.len() >= 512 {
                            break;
                        }
                        let mut cc = c.clone();
                        cc.push(a.clone());
                        next.push(cc);
                    }
                }
                combos = next;
            }
            for combo in combos {
                // consistency: Σ aᵢ·baseᵢ = ρ₀
                let mut acc = Q::zero();
                for (idx, &i) in others.iter().enumerate() {
                    acc = acc + combo[idx].clone() * base[i].clone();
                }
                if acc != *rho0 {
                    continue;
                }
                let mut form = vec![Q::zero(); r];
                form[j] = Q::one();
                for (idx, &i) in others.iter().enumerate() {
                    form[i] = -combo[idx].clone();
                }
                let lin = form_to_poly(&form, r);
                if p.exact_div(&lin).is_some() {
                    return Some(form);
                }
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// τ triples.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TauTriple {
    pub rational: usize,
    pub log: usize,
    pub arctan: usize,
    pub certified: bool,
}

/// Count, per antiderivative term class, the dimension of the metric-family
/// directions whose axis-path integrals touch that class. On a canonical
/// table basis this equals the number of parameters multiplying at least one
/// term of the class.
pub fn tau_triple(alg: &Algebra, u: &ParamSymMatrix) -> Result<TauTriple> {
    let unit = alg
        .unit
        .as_ref()
        .ok_or_else(|| crate::Error::domain("τ classification requires a unital algebra"))?
        .clone();
    let field = alg.symbolic_inverse()?;
    let n = alg.dim;
    let m = u.param_count;
    let gens = u.generators();
    let mut rat_rows: Vec<Vec<Q>> = Vec::new();
    let mut log_rows: Vec<Vec<Q>> = Vec::new();
    let mut arc_rows: Vec<Vec<Q>> = Vec::new();
    let mut certified = true;
    for axis in 0..n {
        let den = field.denominator.restrict_to_line(axis, &unit);
        debug_assert!(!den.is_zero(), "denominator vanishes identically on an axis");
        // numerator of [g·f]_axis restricted to the axis segment, per
        // generator
        let mut nums = Vec::with_capacity(m);
        for g in &gens {
            let mut acc = crate::QUniPoly::zero();
            for j in 0..n {
                if g[(axis, j)].is_zero() || field.numerators[j].is_zero() {
                    continue;
                }
                let restricted = field.numerators[j].restrict_to_line(axis, &unit);
                acc = &acc + &restricted.scale(&g[(axis, j)]);
            }
            nums.push(acc);
        }
        if nums.iter().all(|p| p.is_zero()) {
            continue;
        }
        let rows = class_condition_rows(&nums, &den);
        certified &= rows.certified;
        rat_rows.extend(rows.rat);
        log_rows.extend(rows.log);
        arc_rows.extend(rows.arctan);
    }
    let rank_of = |rows: Vec<Vec<Q>>| -> usize {
        if rows.is_empty() {
            0
        } else {
            rank_exact(&Mat::from_rows(rows))
        }
    };
    Ok(TauTriple {
        rational: rank_of(rat_rows),
        log: rank_of(log_rows),
        arctan: rank_of(arc_rows),
        certified,
    })
}

/// Attach τ data to a report.
pub fn with_tau(mut report: InvariantReport, tau: TauTriple) -> InvariantReport {
    report.tau_raw = Some((tau.rational, tau.log, tau.arctan));
    report.tau_reduced = Some((tau.rational, tau.log.saturating_sub(1), tau.arctan));
    report.tau_certified = tau.certified;
    report
}

/// Full report for an algebra: family invariants plus τ when an inverse
/// field exists.
pub fn invariant_report(alg: &Algebra, u: &ParamSymMatrix) -> Result<InvariantReport> {
    let base = sextuple(&alg.name, alg.dim, u);
    if alg.unital {
        let tau = tau_triple(alg, u)?;
        Ok(with_tau(base, tau))
    } else {
        Ok(base)
    }
}

// ---------------------------------------------------------------------------
// Verdicts.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    NotIsomorphic { witnesses: Vec<String> },
    Indistinguishable,
}

/// Compare two reports; only certified fields may ground a verdict.
pub fn compare(a: &InvariantReport, b: &InvariantReport) -> Verdict {
    let mut witnesses = Vec::new();
    if a.dim != b.dim {
        witnesses.push(format!("algebra dimension {} vs {}", a.dim, b.dim));
        return Verdict::NotIsomorphic { witnesses };
    }
    if a.anti_rotor_dim != b.anti_rotor_dim {
        witnesses.push(format!(
            "metric family dimension m: {} vs {}",
            a.anti_rotor_dim, b.anti_rotor_dim
        ));
    }
    if a.max_rank_method == RankMethod::Exact
        && b.max_rank_method == RankMethod::Exact
        && a.max_rank != b.max_rank
    {
        witnesses.push(format!("max rank: {} vs {}", a.max_rank, b.max_rank));
    }
    if a.min_nonzero_rank_certainty == Certainty::Certified
        && b.min_nonzero_rank_certainty == Certainty::Certified
        && a.min_nonzero_rank != b.min_nonzero_rank
    {
        witnesses.push(format!(
            "min nonzero rank: {} vs {}",
            a.min_nonzero_rank, b.min_nonzero_rank
        ));
    }
    if a.sensitive_param_count != b.sensitive_param_count {
        witnesses.push(format!(
            "sensitive parameter count: {} vs {}",
            a.sensitive_param_count, b.sensitive_param_count
        ));
    }
    if let (Some(da), Some(db)) = (a.variety.dim_components(), b.variety.dim_components()) {
        if da != db {
            witnesses.push(format!(
                "variety (dim, components): {:?} vs {:?}",
                da, db
            ));
        }
    }
    if a.tau_certified && b.tau_certified {
        if let (Some(ta), Some(tb)) = (a.tau_raw, b.tau_raw) {
            if ta != tb {
                witnesses.push(format!("τ triple: {:?} vs {:?}", ta, tb));
            }
        }
    }
    if witnesses.is_empty() {
        Verdict::Indistinguishable
    } else {
        Verdict::NotIsomorphic { witnesses }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum EpiVerdict {
    Excluded { reason: String },
    NoExclusion,
}

/// Epimorphism exclusion: a surjection can only shrink the metric family.
pub fn epimorphism_dim_check(from: &InvariantReport, to: &InvariantReport) -> EpiVerdict {
    if to.anti_rotor_dim > from.anti_rotor_dim {
        EpiVerdict::Excluded {
            reason: format!(
                "no epimorphism {} → {}: target family dimension {} exceeds source {}",
                from.algebra, to.algebra, to.anti_rotor_dim, from.anti_rotor_dim
            ),
        }
    } else {
        EpiVerdict::NoExclusion
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldKind;
    use crate::registry::registry;
    use crate::skewer::anti_rotor;

    fn report(name: &str) -> InvariantReport {
        let alg = registry(name).unwrap();
        let u = anti_rotor(&alg, FieldKind::Inverse).unwrap();
        invariant_report(&alg, &u).unwrap()
    }

    #[test]
    fn rrr_sextuple() {
        let r = report("rrr");
        assert_eq!(r.sextuple().unwrap(), (3, 3, 1, 3, 2, 3));
        assert_eq!(r.tau_raw, Some((0, 3, 0)));
        assert_eq!(r.tau_reduced, Some((0, 2, 0)));
    }

    #[test]
    fn rxc_sextuple_and_tau() {
        let r = report("rxc");
        assert_eq!(r.sextuple().unwrap(), (3, 3, 1, 3, 2, 2));
        assert_eq!(r.tau_reduced, Some((0, 1, 1)));
    }

    #[test]
    fn rxd_sextuple_and_tau() {
        let r = report("rxd");
        assert_eq!(r.sextuple().unwrap(), (3, 3, 1, 2, 1, 2));
        assert_eq!(r.tau_reduced, Some((1, 1, 0)));
    }

    #[test]
    fn toeplitz3_sextuple_and_tau() {
        let r = report("toeplitz:3");
        assert_eq!(r.sextuple().unwrap(), (3, 3, 1, 1, 0, 1));
        assert_eq!(r.tau_reduced, Some((2, 0, 0)));
    }

    #[test]
    fn nil2_sextuple_and_tau() {
        let r = report("nil2");
        assert_eq!(r.sextuple().unwrap(), (3, 2, 1, 0, 3, 0));
        assert_eq!(r.tau_reduced, Some((2, 0, 0)));
    }

    #[test]
    fn splitnil_sextuple_and_tau() {
        let r = report("splitnil");
        assert_eq!(r.sextuple().unwrap(), (2, 2, 1, 0, 2, 0));
        assert_eq!(r.tau_reduced, Some((0, 1, 0)));
    }

    #[test]
    fn two_dim_taus() {
        assert_eq!(report("complex").tau_raw, Some((0, 1, 1)));
        assert_eq!(report("split-complex").tau_raw, Some((0, 2, 0)));
        assert_eq!(report("rxr").tau_raw, Some((0, 2, 0)));
        assert_eq!(report("dual").tau_raw, Some((1, 1, 0)));
    }

    #[test]
    fn complex_min_rank_certified_definite() {
        let r = report("complex");
        assert_eq!(r.min_nonzero_rank, 2);
        assert_eq!(r.min_nonzero_rank_certainty, Certainty::Certified);
        // the family realized at (1, 0) has full rank
        let alg = registry("complex").unwrap();
        let u = anti_rotor(&alg, FieldKind::Inverse).unwrap();
        let at = u.realize(&[crate::q(1), crate::q(0)]);
        assert_eq!(crate::matrix::rank_exact(&at), 2);
    }

    #[test]
    fn matrix2_simple() {
        let r = report("matrix:2");
        assert_eq!(r.anti_rotor_dim, 1);
        assert_eq!(r.simple, Some(true));
        assert_eq!(r.min_nonzero_rank, 4);
        assert_eq!(r.min_nonzero_rank_certainty, Certainty::Certified);
    }

    #[test]
    fn variety_cases() {
        // αβγ → 3 coordinate planes in ℝ³
        let m = 3;
        let abc = QPoly::from_terms(m, [(Monomial(vec![1, 1, 1]), crate::q(1))]);
        assert_eq!(
            variety_summary(&abc),
            VarietySummary::Classified { dim: 2, components: 3 }
        );
        // −α(β² + γ²)
        let p = QPoly::from_terms(
            m,
            [
                (Monomial(vec![1, 2, 0]), crate::q(-1)),
                (Monomial(vec![1, 0, 2]), crate::q(-1)),
            ],
        );
        assert_eq!(
            variety_summary(&p),
            VarietySummary::Classified { dim: 2, components: 2 }
        );
        // 0 with m = 2
        assert_eq!(
            variety_summary(&QPoly::zero(2)),
            VarietySummary::ZeroPolynomial { dim: 2, components: 0 }
        );
        // −γ³ inside ℝ³: essential space is 1-dim, zero set a point
        let g3 = QPoly::from_terms(m, [(Monomial(vec![0, 0, 3]), crate::q(-1))]);
        assert_eq!(
            variety_summary(&g3),
            VarietySummary::Classified { dim: 0, components: 1 }
        );
        // α² − β²: two lines through the origin of ℝ²
        let h = QPoly::from_terms(
            2,
            [
                (Monomial(vec![2, 0]), crate::q(1)),
                (Monomial(vec![0, 2]), crate::q(-1)),
            ],
        );
        assert_eq!(
            variety_summary(&h),
            VarietySummary::Classified { dim: 1, components: 2 }
        );
        // −α² − β²: origin only
        let nd = QPoly::from_terms(
            2,
            [
                (Monomial(vec![2, 0]), crate::q(-1)),
                (Monomial(vec![0, 2]), crate::q(-1)),
            ],
        );
        assert_eq!(
            variety_summary(&nd),
            VarietySummary::Classified { dim: 0, components: 1 }
        );
        // a cubic that is not a product of linear forms is unsupported
        let c = QPoly::from_terms(
            2,
            [
                (Monomial(vec![3, 0]), crate::q(1)),
                (Monomial(vec![0, 3]), crate::q(1)),
                (Monomial(vec![1, 1]), crate::q(1)),
            ],
        );
        assert!(matches!(variety_summary(&c), VarietySummary::Unsupported { .. }));
    }

    #[test]
    fn linear_peel_mixed_form() {
        // (α + 2β − γ)³ has essential dimension 1 and one component
        let mut lin = QPoly::zero(3);
        lin.add_term(Monomial(vec![1, 0, 0]), crate::q(1));
        lin.add_term(Monomial(vec![0, 1, 0]), crate::q(2));
        lin.add_term(Monomial(vec![0, 0, 1]), crate::q(-1));
        let p = lin.pow(3);
        assert_eq!(essential_param_count(&p), 1);
        assert_eq!(
            variety_summary(&p),
            VarietySummary::Classified { dim: 0, components: 1 }
        );
        // (α+β)(α−β)(α+2β): three concurrent lines in ℝ²
        let a = QPoly::var(2, 0);
        let b = QPoly::var(2, 1);
        let p2 = &(&(&a + &b) * &(&a - &b)) * &(&a + &b.scale(&crate::q(2)));
        assert_eq!(
            variety_summary(&p2),
            VarietySummary::Classified { dim: 1, components: 3 }
        );
    }

    #[test]
    fn compare_verdicts() {
        let c = report("complex");
        let d = report("dual");
        let sc = report("split-complex");
        let rr = report("rxr");
        match compare(&c, &d) {
            Verdict::NotIsomorphic { witnesses } => {
                assert!(witnesses.iter().any(|w| w.contains("τ")));
            }
            _ => panic!("ℂ vs dual should be distinguished"),
        }
        assert_eq!(compare(&sc, &rr), Verdict::Indistinguishable);
        assert_eq!(compare(&c, &c), Verdict::Indistinguishable);
    }

    #[test]
    fn epimorphism_exclusion() {
        let t3 = report("toeplitz:3");
        let n2 = report("nil2");
        // equal dims: no exclusion either way
        assert_eq!(epimorphism_dim_check(&t3, &n2), EpiVerdict::NoExclusion);
        let m2 = report("matrix:2");
        // m(matrix:2) = 1 < m(toeplitz:3) = 3: no epimorphism matrix:2 → T₃
        assert!(matches!(epimorphism_dim_check(&m2, &t3), EpiVerdict::Excluded { .. }));
        assert_eq!(epimorphism_dim_check(&t3, &m2), EpiVerdict::NoExclusion);
    }

    #[test]
    fn report_serializes() {
        let r = report("toeplitz:3");
        let j = serde_json::to_value(&r).unwrap();
        assert_eq!(j["anti_rotor_dim"], 3);
        assert_eq!(j["variety"]["kind"], "classified");
        assert_eq!(j["variety_convention"], "sensitive-subspace");
    }

    use crate::poly::Monomial;
    use crate::QPoly;
}

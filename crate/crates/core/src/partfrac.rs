//! Hermite reduction and exact classification of the terms in the
//! antiderivative of a rational function: which of {rational function, real
//! logarithm, arctangent} appear with nonzero coefficient.
//!
//! The classification is exact at every degree: the rational part comes out
//! of Hermite reduction, and the log/arctan decision reduces to counting
//! real and purely-imaginary roots of the Rothstein–Trager resultant with
//! Sturm sequences. No floating point, no factorization over ℝ.

use crate::error::Error;
use crate::poly::MultiPoly;
use crate::univar::{
    all_roots_purely_imaginary, count_real_roots, gcd_q, inverse_mod, make_monic,
    normalize_primitive, rational_roots, rothstein_trager_resultant, squarefree_decomposition,
    squarefree_part, UniPoly,
};
use crate::{Q, Result};
use num_traits::{One, Signed, Zero};

/// Which antiderivative term classes appear with a nonzero coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TermClassSummary {
    pub has_rational: bool,
    pub has_log: bool,
    pub has_arctan: bool,
    /// Always `Certified` on this path; `Undecided` is reserved for the
    /// parametric fallback in [`class_condition_rows`].
    pub status: ClassifyStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassifyStatus {
    Certified,
    Undecided,
}

/// One Hermite step: the data needed to reduce a multiplicity-`m` factor `V`
/// out of the denominator `U·V^m`.
struct HermiteStep {
    v: UniPoly<Q>,
    u: UniPoly<Q>,
    m: u32,
    /// Inverse of `−(m−1)·U·V′` modulo `V`.
    w: UniPoly<Q>,
}

/// Denominator-only part of Hermite reduction, reusable across many
/// numerators over the same denominator (the reduction is linear in the
/// numerator once these are fixed).
struct HermitePlan {
    steps: Vec<HermiteStep>,
    /// Squarefree denominator of the residual integrand.
    dstar: UniPoly<Q>,
}

fn hermite_plan(den: &UniPoly<Q>) -> HermitePlan {
    let mut steps = Vec::new();
    let mut d = make_monic(den);
    loop {
        let sf = squarefree_decomposition(&d);
        let top = sf.iter().filter(|(_, m)| *m >= 2).max_by_key(|(_, m)| *m);
        let (v, m) = match top {
            Some((v, m)) => (v.clone(), *m),
            None => break,
        };
        let mut vm = UniPoly::one();
        for _ in 0..m {
            vm = &vm * &v;
        }
        let u = d.exact_div(&vm).expect("squarefree factor divides");
        let mut coef = Q::zero();
        for _ in 0..(m - 1) {
            coef = coef + Q::one();
        }
        let uvp = &u * &v.derivative();
        let w = inverse_mod(&uvp.scale(&-coef), &v)
            .expect("gcd(U·V', V) = 1 by squarefreeness");
        // Next denominator: U·V^{m−1}.
        let mut vm1 = UniPoly::one();
        for _ in 0..(m - 1) {
            vm1 = &vm1 * &v;
        }
        d = &u * &vm1;
        steps.push(HermiteStep { v, u, m, w });
    }
    HermitePlan { steps, dstar: d }
}

/// Run the plan on one numerator. Returns the rational-part numerators `B`
/// (one per step, fraction `B/V^{m−1}`) and the residual numerator over
/// `plan.dstar`.
fn hermite_apply(plan: &HermitePlan, num: &UniPoly<Q>) -> (Vec<UniPoly<Q>>, UniPoly<Q>) {
    let mut a = num.clone();
    let mut parts = Vec::with_capacity(plan.steps.len());
    for step in &plan.steps {
        let b = (&a * &step.w).div_rem(&step.v).1;
        // C = (A − U·B′·V + (m−1)·U·B·V′) / V, exact by construction.
        let mut coef = Q::zero();
        for _ in 0..(step.m - 1) {
            coef = coef + Q::one();
        }
        let t1 = &(&step.u * &b.derivative()) * &step.v;
        let t2 = (&(&step.u * &b) * &step.v.derivative()).scale(&coef);
        let numer = &(&a - &t1) + &t2;
        a = numer.exact_div(&step.v).expect("hermite numerator divisible by V");
        parts.push(b);
    }
    (parts, a)
}

fn to_unipoly(p: &MultiPoly<Q>, var: usize) -> Result<UniPoly<Q>> {
    let sup = p.support_vars();
    if sup.iter().any(|&v| v != var) {
        return Err(Error::usage(format!(
            "polynomial depends on variables other than x{var}"
        )));
    }
    let mut coeffs = vec![Q::zero(); p.degree_in(var) as usize + 1];
    for (m, c) in &p.terms {
        coeffs[m.0[var] as usize] = c.clone();
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// Classify the antiderivative terms of `num/den` where both polynomials
/// depend only on variable `var`.
pub fn univariate_real_factor_classify(
    num: &MultiPoly<Q>,
    den: &MultiPoly<Q>,
    var: usize,
) -> Result<TermClassSummary> {
    if den.is_zero() {
        return Err(Error::domain("integrand denominator is identically zero"));
    }
    let n = to_unipoly(num, var)?;
    let d = to_unipoly(den, var)?;
    Ok(classify_fraction(&n, &d))
}

/// Exact classification of `∫ num/den dt` term classes.
pub fn classify_fraction(num: &UniPoly<Q>, den: &UniPoly<Q>) -> TermClassSummary {
    assert!(!den.is_zero());
    let mut out = TermClassSummary {
        has_rational: false,
        has_log: false,
        has_arctan: false,
        status: ClassifyStatus::Certified,
    };
    if num.is_zero() {
        return out;
    }
    // Reduce and split off the polynomial part.
    let g = gcd_q(num, den);
    let num = num.exact_div(&g).unwrap();
    let den = den.exact_div(&g).unwrap();
    let (quo, rem) = num.div_rem(&den);
    if !quo.is_zero() {
        // Its antiderivative is a polynomial of degree ≥ 1.
        out.has_rational = true;
    }
    if rem.is_zero() {
        return out;
    }
    let plan = hermite_plan(&den);
    let (parts, residual) = hermite_apply(&plan, &rem);
    if parts.iter().any(|b| !b.is_zero()) {
        out.has_rational = true;
    }
    if residual.is_zero() || plan.dstar.is_constant() {
        return out;
    }
    // Residual is proper with squarefree denominator; reduce and apply
    // Rothstein–Trager: the residues are the roots of the resultant.
    let g = gcd_q(&residual, &plan.dstar);
    let a = residual.exact_div(&g).unwrap();
    let d = plan.dstar.exact_div(&g).unwrap();
    if d.is_constant() || a.is_zero() {
        return out;
    }
    let res = rothstein_trager_resultant(&a, &d);
    let s = normalize_primitive(&squarefree_part(&res));
    let total = s.degree().unwrap_or(0);
    let real = count_real_roots(&s);
    // A non-real residue belongs to a complex pole pair and contributes an
    // arctangent; any residue with nonzero real part contributes a real
    // logarithm.
    out.has_arctan = total > real;
    out.has_log = !all_roots_purely_imaginary(&s);
    out
}

// ---------------------------------------------------------------------------
// Parametric version: linear conditions on a numerator family.
// ---------------------------------------------------------------------------

/// Linear conditions, over the coefficients `v` of a numerator family
/// `Σ v_q·g_q` with a fixed denominator, for each antiderivative term class
/// to be absent. The rank of each row block is the dimension of the family
/// that touches the class.
#[derive(Debug, Clone, Default)]
pub struct ClassConditionRows {
    pub rat: Vec<Vec<Q>>,
    pub log: Vec<Vec<Q>>,
    pub arctan: Vec<Vec<Q>>,
    /// False when an irreducible denominator factor of degree ≥ 3 forced the
    /// per-generator presence fallback.
    pub certified: bool,
}

fn push_row(rows: &mut Vec<Vec<Q>>, row: Vec<Q>) {
    if row.iter().any(|x| !x.is_zero()) {
        rows.push(row);
    }
}

/// Build class-condition rows for numerators `gens` over denominator `den`.
pub fn class_condition_rows(gens: &[UniPoly<Q>], den: &UniPoly<Q>) -> ClassConditionRows {
    assert!(!den.is_zero());
    let m = gens.len();
    let mut out = ClassConditionRows { certified: true, ..Default::default() };
    if m == 0 {
        return out;
    }
    // Uniform common reduction keeps the family linear.
    let mut g = den.clone();
    for gen in gens {
        g = gcd_q(&g, gen);
        if g.is_constant() {
            break;
        }
    }
    let den = if g.is_constant() { make_monic(den) } else { make_monic(&den.exact_div(&g).unwrap()) };
    let gens: Vec<UniPoly<Q>> = if g.is_constant() {
        gens.to_vec()
    } else {
        gens.iter().map(|x| x.exact_div(&g).unwrap()).collect()
    };

    // Polynomial parts.
    let mut quos = Vec::with_capacity(m);
    let mut rems = Vec::with_capacity(m);
    for gq in &gens {
        let (quo, rem) = gq.div_rem(&den);
        quos.push(quo);
        rems.push(rem);
    }
    let max_deg = quos.iter().filter_map(|p| p.degree()).max();
    if let Some(dmax) = max_deg {
        for i in 0..=dmax {
            push_row(&mut out.rat, quos.iter().map(|p| p.coeff(i)).collect());
        }
    }

    // Hermite rational parts.
    let plan = hermite_plan(&den);
    let mut residuals = Vec::with_capacity(m);
    let mut part_cols: Vec<Vec<UniPoly<Q>>> = Vec::with_capacity(m);
    for rem in &rems {
        let (parts, residual) = hermite_apply(&plan, rem);
        part_cols.push(parts);
        residuals.push(residual);
    }
    for step in 0..plan.steps.len() {
        let deg_v = plan.steps[step].v.degree().unwrap_or(1);
        for i in 0..deg_v {
            push_row(&mut out.rat, part_cols.iter().map(|p| p[step].coeff(i)).collect());
        }
    }

    // Residuals over the squarefree denominator.
    let dstar = &plan.dstar;
    if dstar.is_constant() || residuals.iter().all(|r| r.is_zero()) {
        return out;
    }
    let (roots, mut rest, roots_complete) = rational_roots(dstar);
    if !roots_complete {
        out.certified = false;
    }
    for (r, _) in &roots {
        // Residue at a simple rational pole is h(r)/d*'(r) with a fixed
        // nonzero denominator, so the condition is h(r) = 0.
        push_row(&mut out.log, residuals.iter().map(|h| h.eval(r)).collect());
    }
    rest = make_monic(&rest);
    let handle_quadratic = |f: &UniPoly<Q>, out: &mut ClassConditionRows| {
        let cof = dstar.exact_div(f).unwrap();
        let w = inverse_mod(&cof, f).expect("squarefree cofactor is invertible");
        let b1 = f.coeff(1); // f = t² + b·t + c
        let mut bs = Vec::with_capacity(m);
        let mut cs = Vec::with_capacity(m);
        for h in &residuals {
            let n = (&(h * &w)).div_rem(f).1;
            bs.push(n.coeff(1));
            cs.push(n.coeff(0));
        }
        let disc = b1.clone() * b1.clone() - (Q::one() + Q::one() + Q::one() + Q::one()) * f.coeff(0);
        if disc.is_negative() {
            // Complex pair: B drives the log part, C − (b/2)B the arctangent.
            push_row(&mut out.log, bs.clone());
            let half_b = b1 / (Q::one() + Q::one());
            push_row(
                &mut out.arctan,
                cs.iter()
                    .zip(&bs)
                    .map(|(c, b)| c.clone() - half_b.clone() * b.clone())
                    .collect(),
            );
        } else {
            // Two irrational real roots: both residues must vanish.
            push_row(&mut out.log, bs);
            push_row(&mut out.log, cs);
        }
    };
    match rest.degree().unwrap_or(0) {
        0 => {}
        1 => {
            // Only reachable when the rational-root candidate search was
            // incomplete; the root of a linear factor is still exact.
            let r = -(rest.coeff(0) / rest.coeff(1));
            push_row(&mut out.log, residuals.iter().map(|h| h.eval(&r)).collect());
        }
        2 => handle_quadratic(&rest, &mut out),
        _ => {
            // Irreducible (or unfactored) residual of degree ≥ 3: fall back
            // to per-generator presence via exact single-fraction
            // classification. Presence rows are honest but the rank may
            // overcount joint cancellations, hence uncertified.
            out.certified = false;
            let cof = dstar.exact_div(&rest).unwrap();
            let w = inverse_mod(&cof, &rest).expect("squarefree cofactor invertible");
            for (qi, h) in residuals.iter().enumerate() {
                let n = (&(h * &w)).div_rem(&rest).1;
                if n.is_zero() {
                    continue;
                }
                let cls = classify_fraction(&n, &rest);
                let mut unit = vec![Q::zero(); m];
                unit[qi] = Q::one();
                if cls.has_log {
                    push_row(&mut out.log, unit.clone());
                }
                if cls.has_arctan {
                    push_row(&mut out.arctan, unit.clone());
                }
                if cls.has_rational {
                    push_row(&mut out.rat, unit);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, QPoly};

    fn upoly(cs: &[i64]) -> UniPoly<Q> {
        UniPoly::from_coeffs(cs.iter().map(|&c| q(c)).collect())
    }

    fn classify(n: &[i64], d: &[i64]) -> (bool, bool, bool) {
        let s = classify_fraction(&upoly(n), &upoly(d));
        (s.has_rational, s.has_log, s.has_arctan)
    }

    #[test]
    fn one_over_t_is_log() {
        assert_eq!(classify(&[1], &[0, 1]), (false, true, false));
    }

    #[test]
    fn one_over_t_squared_is_rational() {
        assert_eq!(classify(&[1], &[0, 0, 1]), (true, false, false));
    }

    #[test]
    fn one_over_t2_plus_1_is_arctan() {
        assert_eq!(classify(&[1], &[1, 0, 1]), (false, false, true));
    }

    #[test]
    fn derivative_over_quadratic_is_log() {
        // 2t/(t²+1)
        assert_eq!(classify(&[0, 2], &[1, 0, 1]), (false, true, false));
    }

    #[test]
    fn mixed_quadratic_numerator() {
        // (t+1)/(t²+1): both log and arctan
        assert_eq!(classify(&[1, 1], &[1, 0, 1]), (false, true, true));
    }

    #[test]
    fn polynomial_part_counts_as_rational() {
        // constant integrand → linear antiderivative
        assert_eq!(classify(&[3], &[1]), (true, false, false));
        // t²/(t²+1) = 1 − 1/(t²+1)
        assert_eq!(classify(&[0, 0, 1], &[1, 0, 1]), (true, false, true));
    }

    #[test]
    fn split_simple_poles() {
        // 1/(t²−1): two simple real poles → logs only
        assert_eq!(classify(&[1], &[-1, 0, 1]), (false, true, false));
    }

    #[test]
    fn gcd_reduction_before_classification() {
        // t/(t³) = 1/t²: rational, not log
        assert_eq!(classify(&[0, 1], &[0, 0, 0, 1]), (true, false, false));
    }

    #[test]
    fn higher_multiplicity_quadratic() {
        // 1/(t²+1)²: rational part plus arctangent
        let d = &upoly(&[1, 0, 1]) * &upoly(&[1, 0, 1]);
        let s = classify_fraction(&upoly(&[1]), &d);
        assert!(s.has_rational && !s.has_log && s.has_arctan);
    }

    #[test]
    fn quintic_denominator_still_certified() {
        // 1/(t⁵ − t − 1): irreducible quintic, one real root, two pairs
        let s = classify_fraction(&upoly(&[1]), &upoly(&[-1, -1, 0, 0, 0, 1]));
        assert_eq!(s.status, ClassifyStatus::Certified);
        assert!(s.has_log);
    }

    #[test]
    fn multipoly_interface_checks_variables() {
        let num = QPoly::one(2);
        let den = &QPoly::var(2, 0) * &QPoly::var(2, 1);
        assert!(univariate_real_factor_classify(&num, &den, 0).is_err());
        let den_zero = QPoly::zero(1);
        assert!(univariate_real_factor_classify(&QPoly::one(1), &den_zero, 0).is_err());
    }

    #[test]
    fn condition_rows_match_single_classification() {
        // Generators 1 and t over t²+1: log rank 1 (from t), arctan rank 1.
        let rows = class_condition_rows(&[upoly(&[1]), upoly(&[0, 1])], &upoly(&[1, 0, 1]));
        assert!(rows.certified);
        let log_rank =
            crate::matrix::rank_exact(&crate::matrix::Mat::from_rows(rows.log.clone()));
        let arc_rank =
            crate::matrix::rank_exact(&crate::matrix::Mat::from_rows(rows.arctan.clone()));
        assert_eq!(log_rank, 1);
        assert_eq!(arc_rank, 1);
        assert!(rows.rat.is_empty());
    }
}

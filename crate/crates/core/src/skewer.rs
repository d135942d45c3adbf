//! Curl constraints for a parametrized symmetric metric against a vector
//! field, and the resulting metric subspaces.
//!
//! For a field `f = p/q` with common denominator `q`, the condition that
//! `M·f` be curl-free near the unit is cleared by `q²` into the exact
//! polynomial identities (one per coordinate pair `i < j`)
//!
//! ```text
//! Σ_k M_{jk}·(∂_i p_k·q − p_k·∂_i q) − Σ_k M_{ik}·(∂_j p_k·q − p_k·∂_j q) = 0,
//! ```
//!
//! each monomial of which contributes one homogeneous linear equation in the
//! n(n+1)/2 symmetric entries of `M`. Rational functions agreeing on an open
//! set agree identically, so the neighborhood-of-the-unit quantifier is
//! discharged exactly, never by sampling.

use crate::algebra::{Algebra, FieldKind, RationalVectorField};
use crate::error::Error;
use crate::matrix::{IncrementalRref, Mat};
use crate::poly::Monomial;
use crate::{QMat, QPoly, Result, Q};
use num_traits::{One, Zero};
use rustc_hash::FxHashSet;
use std::collections::BTreeMap;
use std::fmt;

/// A linear form `Σ coeffs[q]·α_q + constant` in the family parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct LinForm {
    pub coeffs: Vec<Q>,
    pub constant: Q,
}

impl LinForm {
    pub fn zero(m: usize) -> Self {
        LinForm { coeffs: vec![Q::zero(); m], constant: Q::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, at: &[Q]) -> Q {
        let mut acc = self.constant.clone();
        for (c, a) in self.coeffs.iter().zip(at) {
            acc = acc + c.clone() * a.clone();
        }
        acc
    }
}

/// Symmetric n×n matrix whose entries are linear forms in m parameters;
/// realizations sweep out an affine family of symmetric matrices (a linear
/// subspace when every constant is zero).
#[derive(Debug, Clone, PartialEq)]
pub struct ParamSymMatrix {
    pub n: usize,
    pub param_count: usize,
    entries: Vec<LinForm>,
}

impl ParamSymMatrix {
    /// Assemble from a constant part and independent symmetric generators.
    pub fn from_parts(n: usize, constant: &QMat, generators: &[QMat]) -> Self {
        let m = generators.len();
        let entries = (0..n * n)
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                LinForm {
                    coeffs: generators.iter().map(|g| g[(i, j)].clone()).collect(),
                    constant: constant[(i, j)].clone(),
                }
            })
            .collect();
        ParamSymMatrix { n, param_count: m, entries }
    }

    pub fn from_generators(n: usize, generators: &[QMat]) -> Self {
        Self::from_parts(n, &Mat::zero(n, n), generators)
    }

    pub fn entry(&self, i: usize, j: usize) -> &LinForm {
        &self.entries[i * self.n + j]
    }

    pub fn is_homogeneous(&self) -> bool {
        self.entries.iter().all(|e| e.constant.is_zero())
    }

    /// Generator matrix for parameter `q` (that parameter 1, the rest 0,
    /// constant part dropped).
    pub fn generator(&self, q: usize) -> QMat {
        Mat::from_fn(self.n, self.n, |i, j| self.entry(i, j).coeffs[q].clone())
    }

    pub fn generators(&self) -> Vec<QMat> {
        (0..self.param_count).map(|q| self.generator(q)).collect()
    }

    pub fn constant_part(&self) -> QMat {
        Mat::from_fn(self.n, self.n, |i, j| self.entry(i, j).constant.clone())
    }

    /// Realize at a parameter point.
    pub fn realize(&self, at: &[Q]) -> QMat {
        assert_eq!(at.len(), self.param_count);
        Mat::from_fn(self.n, self.n, |i, j| self.entry(i, j).eval(at))
    }

    /// Congruence transform `M ↦ Kᵀ·M·K`, applied to the constant part and
    /// every generator.
    pub fn congruence(&self, k: &QMat) -> Self {
        let kt = k.transpose();
        let gens: Vec<QMat> =
            self.generators().iter().map(|g| &(&kt * g) * k).collect();
        let constant = &(&kt * &self.constant_part()) * k;
        Self::from_parts(self.n, &constant, &gens)
    }

    /// The family as a matrix of polynomials in the parameters (constants
    /// included), for determinant and rank work.
    pub fn to_poly_matrix(&self) -> Mat<QPoly> {
        let m = self.param_count;
        Mat::from_fn(self.n, self.n, |i, j| {
            let e = self.entry(i, j);
            let mut p = QPoly::constant(m, e.constant.clone());
            for (qi, c) in e.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    p.add_term(Monomial::var(m, qi), c.clone());
                }
            }
            p
        })
    }
}

const GREEK: [&str; 12] = ["α", "β", "γ", "δ", "ε", "ζ", "η", "θ", "ι", "κ", "λ", "μ"];

/// Parameter display names: Greek letters while they last.
pub fn param_name(q: usize) -> String {
    GREEK.get(q).map(|s| s.to_string()).unwrap_or_else(|| format!("a{}", q + 1))
}

impl fmt::Display for ParamSymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                let e = self.entry(i, j);
                let mut parts: Vec<String> = Vec::new();
                if !e.constant.is_zero() {
                    parts.push(e.constant.to_string());
                }
                for (qi, c) in e.coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let name = param_name(qi);
                    if c.is_one() {
                        parts.push(name);
                    } else if (-c.clone()).is_one() {
                        parts.push(format!("-{name}"));
                    } else {
                        parts.push(format!("{c}{name}"));
                    }
                }
                if parts.is_empty() {
                    write!(f, "0")?;
                } else {
                    write!(f, "{}", parts.join("+").replace("+-", "-"))?;
                }
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// The assembled homogeneous linear system over the n(n+1)/2 symmetric
/// unknowns.
pub struct ConstraintSystem {
    pub n: usize,
    pub unknowns: usize,
    /// Monomial-coefficient rows generated before deduplication.
    pub rows_generated: usize,
    /// Distinct rows actually eliminated.
    pub rows_unique: usize,
    rref: IncrementalRref,
}

impl ConstraintSystem {
    pub fn rank(&self) -> usize {
        self.rref.rank()
    }

    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        self.rref.nullspace()
    }
}

/// Index of entry (a, b), a ≤ b, in row-major upper-triangle order.
pub fn sym_index(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    a * n - a * (a + 1) / 2 + b
}

/// The n² polynomials `W[i][k] = ∂_i p_k·q − p_k·∂_i q` entering every curl
/// row.
fn curl_w_polys(field: &RationalVectorField) -> Vec<Vec<QPoly>> {
    let n = field.numerators.len();
    let nv = field.nvars;
    let q_const = field.denominator.is_constant();
    let dq: Vec<QPoly> = (0..nv).map(|i| field.denominator.derivative(i)).collect();
    let mut w = vec![vec![QPoly::zero(nv); n]; nv];
    for (i, w_i) in w.iter_mut().enumerate() {
        for (k, slot) in w_i.iter_mut().enumerate() {
            let dp = field.numerators[k].derivative(i);
            *slot = if q_const {
                dp.scale(&field.denominator.constant_term())
            } else {
                &(&dp * &field.denominator) - &(&field.numerators[k] * &dq[i])
            };
        }
    }
    w
}

/// Assemble the curl constraint system for a parametrized symmetric metric
/// against the field.
pub fn assemble_curl_system(alg: &Algebra, field: &RationalVectorField) -> ConstraintSystem {
    let n = alg.dim;
    assert_eq!(field.numerators.len(), n);
    let unknowns = n * (n + 1) / 2;
    let w = curl_w_polys(field);
    let mut rref = IncrementalRref::new(unknowns);
    let mut seen: FxHashSet<Vec<(u16, Q)>> = FxHashSet::default();
    let mut rows_generated = 0usize;
    let mut rows_unique = 0usize;
    for i in 0..n {
        for j in (i + 1)..n {
            // monomial → dense coefficient row over the unknowns
            let mut rows: BTreeMap<Monomial, Vec<Q>> = BTreeMap::new();
            for k in 0..n {
                let col_plus = sym_index(n, j, k);
                for (mono, c) in &w[i][k].terms {
                    let row = rows
                        .entry(mono.clone())
                        .or_insert_with(|| vec![Q::zero(); unknowns]);
                    row[col_plus] = row[col_plus].clone() + c.clone();
                }
                let col_minus = sym_index(n, i, k);
                for (mono, c) in &w[j][k].terms {
                    let row = rows
                        .entry(mono.clone())
                        .or_insert_with(|| vec![Q::zero(); unknowns]);
                    row[col_minus] = row[col_minus].clone() - c.clone();
                }
            }
            for (_, row) in rows {
                if row.iter().all(|x| x.is_zero()) {
                    continue;
                }
                rows_generated += 1;
                if let Some(key) = normalized_row_key(&row) {
                    if seen.insert(key) {
                        rows_unique += 1;
                        rref.add_row(row);
                    }
                }
            }
        }
    }
    ConstraintSystem { n, unknowns, rows_generated, rows_unique, rref }
}

/// Sparse scale-normalized form of a row, for deduplication.
fn normalized_row_key(row: &[Q]) -> Option<Vec<(u16, Q)>> {
    let lead = row.iter().position(|x| !x.is_zero())?;
    let inv = Q::one() / row[lead].clone();
    Some(
        row.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| (c as u16, x.clone() * inv.clone()))
            .collect(),
    )
}

/// The anti-rotor: the kernel of the curl map packed as a parametrized
/// symmetric matrix. Parameters follow the canonical free-column order of
/// the nullspace (row-major upper-triangle position of each leading entry).
pub fn anti_rotor(alg: &Algebra, kind: FieldKind) -> Result<ParamSymMatrix> {
    let field = alg.field(kind)?;
    Ok(anti_rotor_from_field(alg, &field))
}

pub fn anti_rotor_from_field(alg: &Algebra, field: &RationalVectorField) -> ParamSymMatrix {
    let n = alg.dim;
    let system = assemble_curl_system(alg, field);
    let basis = system.nullspace();
    let gens: Vec<QMat> = basis
        .iter()
        .map(|v| Mat::from_fn(n, n, |a, b| v[sym_index(n, a, b)].clone()))
        .collect();
    ParamSymMatrix::from_generators(n, &gens)
}

/// Direct check that one fixed symmetric matrix is an uncurling metric for
/// the field: every cleared curl polynomial vanishes identically.
pub fn is_uncurling(alg: &Algebra, field: &RationalVectorField, l: &QMat) -> Result<bool> {
    if !l.is_symmetric() || l.rows != alg.dim {
        return Err(Error::usage("metric must be a symmetric matrix of the algebra dimension"));
    }
    let n = alg.dim;
    let w = curl_w_polys(field);
    let nv = field.nvars;
    for i in 0..n {
        for j in (i + 1)..n {
            let mut acc = QPoly::zero(nv);
            for k in 0..n {
                if !l[(j, k)].is_zero() {
                    acc = &acc + &w[i][k].scale(&l[(j, k)]);
                }
                if !l[(i, k)].is_zero() {
                    acc = &acc - &w[j][k].scale(&l[(i, k)]);
                }
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Post-solve soundness check: every generator of the family annihilates the
/// curl identically.
pub fn verify_generators_uncurl(
    alg: &Algebra,
    field: &RationalVectorField,
    u: &ParamSymMatrix,
) -> Result<bool> {
    for g in u.generators() {
        if !is_uncurling(alg, field, &g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The affine family of normalized metrics: `s·(M·s⁻¹) = ‖1‖²` as an exact
/// polynomial identity, solved inside the given anti-rotor family.
pub struct NormalizedFamily {
    /// One normalized metric.
    pub base: QMat,
    /// Homogeneous directions staying inside the normalized set.
    pub directions: ParamSymMatrix,
    /// The same data as a single affine parametrized matrix.
    pub family: ParamSymMatrix,
}

pub fn normalized_subspace(alg: &Algebra, u: &ParamSymMatrix) -> Result<NormalizedFamily> {
    if alg.unit.is_none() {
        return Err(Error::domain("normalized metrics require a unital algebra"));
    }
    let norm_sq = alg.unit_norm_sq.clone().unwrap();
    let n = alg.dim;
    let field = alg.symbolic_inverse()?;
    // For each generator g: poly_g = Σ_{j,k} x_j·g_{jk}·p_k; require
    // Σ_g α_g·poly_g = ‖1‖²·q coefficientwise.
    let coords: Vec<QPoly> = (0..n).map(|i| QPoly::var(n, i)).collect();
    let mut gen_polys = Vec::with_capacity(u.param_count);
    for g in u.generators() {
        let mut acc = QPoly::zero(n);
        for j in 0..n {
            for k in 0..n {
                if g[(j, k)].is_zero() || field.numerators[k].is_zero() {
                    continue;
                }
                acc = &acc + &(&coords[j] * &field.numerators[k]).scale(&g[(j, k)]);
            }
        }
        gen_polys.push(acc);
    }
    let rhs_poly = field.denominator.scale(&norm_sq);
    let mut monos: std::collections::BTreeSet<Monomial> = std::collections::BTreeSet::new();
    for p in gen_polys.iter().chain(std::iter::once(&rhs_poly)) {
        monos.extend(p.terms.keys().cloned());
    }
    let mut rows = Vec::with_capacity(monos.len());
    let mut rhs = Vec::with_capacity(monos.len());
    for mono in &monos {
        rows.push(
            gen_polys
                .iter()
                .map(|p| p.terms.get(mono).cloned().unwrap_or_else(Q::zero))
                .collect::<Vec<_>>(),
        );
        rhs.push(rhs_poly.terms.get(mono).cloned().unwrap_or_else(Q::zero));
    }
    let mat = Mat::from_rows(rows);
    let (particular, homogeneous) = mat.solve_affine(&rhs).ok_or_else(|| {
        Error::verification(
            "normalized-metric system inconsistent; the norm family must be nonempty \
             for a unital associative algebra",
        )
    })?;
    let base = u.realize(&particular);
    let dirs: Vec<QMat> = homogeneous
        .iter()
        .map(|v| {
            let gens = u.generators();
            let mut acc: QMat = Mat::zero(n, n);
            for (g, c) in gens.iter().zip(v) {
                if !c.is_zero() {
                    acc = &acc + &g.scale(c);
                }
            }
            acc
        })
        .collect();
    let directions = ParamSymMatrix::from_generators(n, &dirs);
    let family = ParamSymMatrix::from_parts(n, &base, &dirs);
    Ok(NormalizedFamily { base, directions, family })
}

impl NormalizedFamily {
    /// Exact membership of a fixed matrix in the affine family.
    pub fn contains(&self, l: &QMat) -> Result<bool> {
        let delta = l - &self.base;
        Ok(membership_check(&self.directions, &delta)?.is_some())
    }
}

/// Exact membership of `L` in the span of the family's generators; returns
/// the coordinates when it is a member. `L` must be symmetric.
pub fn membership_check(u: &ParamSymMatrix, l: &QMat) -> Result<Option<Vec<Q>>> {
    if !l.is_symmetric() || l.rows != u.n {
        return Err(Error::usage("membership requires a symmetric matrix of matching size"));
    }
    let n = u.n;
    let m = u.param_count;
    if m == 0 {
        let zero = l.to_rows().iter().all(|r| r.iter().all(|x| x.is_zero()));
        return Ok(if zero { Some(vec![]) } else { None });
    }
    let mut rows = Vec::with_capacity(n * (n + 1) / 2);
    let mut rhs = Vec::with_capacity(n * (n + 1) / 2);
    let gens = u.generators();
    for a in 0..n {
        for b in a..n {
            rows.push(gens.iter().map(|g| g[(a, b)].clone()).collect::<Vec<_>>());
            rhs.push(l[(a, b)].clone());
        }
    }
    let mat = Mat::from_rows(rows);
    match mat.solve_affine(&rhs) {
        None => Ok(None),
        Some((coords, ns)) => {
            debug_assert!(ns.is_empty(), "generators must be linearly independent");
            Ok(Some(coords))
        }
    }
}

/// Exact equality of two homogeneous families as subspaces.
pub fn subspace_equal(u1: &ParamSymMatrix, u2: &ParamSymMatrix) -> Result<bool> {
    if u1.n != u2.n {
        return Err(Error::usage("subspace comparison requires equal matrix sizes"));
    }
    if u1.param_count != u2.param_count {
        return Ok(false);
    }
    for g in u1.generators() {
        if membership_check(u2, &g)?.is_none() {
            return Ok(false);
        }
    }
    for g in u2.generators() {
        if membership_check(u1, &g)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::{registry, transpose_permutation};
    use crate::{q, qr};

    fn mat(rows: Vec<Vec<i64>>) -> QMat {
        Mat::from_rows(rows.into_iter().map(|r| r.into_iter().map(q).collect()).collect())
    }

    fn param_sym(n: usize, gens: Vec<Vec<Vec<i64>>>) -> ParamSymMatrix {
        let gens: Vec<QMat> = gens.into_iter().map(mat).collect();
        ParamSymMatrix::from_generators(n, &gens)
    }

    /// The anti-rotor of ℂ from the table: [[α, β], [β, −α]].
    fn complex_table_family() -> ParamSymMatrix {
        param_sym(
            2,
            vec![vec![vec![1, 0], vec![0, -1]], vec![vec![0, 1], vec![1, 0]]],
        )
    }

    #[test]
    fn complex_anti_rotor_matches_table() {
        let alg = registry("complex").unwrap();
        let u = anti_rotor(&alg, FieldKind::Inverse).unwrap();
        assert_eq!(u.param_count, 2);
        assert!(subspace_equal(&u, &complex_table_family()).unwrap());
        let field = alg.symbolic_inverse().unwrap();
        assert!(verify_generators_uncurl(&alg, &field, &u).unwrap());
    }

    #[test]
    fn dual_anti_rotor_matches_table() {
        let alg = registry("dual").unwrap();
        let u = anti_rotor(&alg, FieldKind::Inverse).unwrap();
        let want = param_sym(
            2,
            vec![vec![vec![1, 0], vec![0, 0]], vec![vec![0, 1], vec![1, 0]]],
        );
        assert!(subspace_equal(&u, &want).unwrap());
    }

    #[test]
    fn linear_field_constrains_nothing() {
        // f(s) = s: every symmetric matrix uncurls it.
        let alg = registry("complex").unwrap();
        let field = RationalVectorField {
            nvars: 2,
            numerators: vec![QPoly::var(2, 0), QPoly::var(2, 1)],
            denominator: QPoly::one(2),
            kind: FieldKind::Power(1),
        };
        let sys = assemble_curl_system(&alg, &field);
        assert_eq!(sys.rank(), 0);
        assert_eq!(sys.nullspace().len(), 3);
    }

    #[test]
    fn toeplitz3_anti_rotor_is_hankel() {
        let alg = registry("toeplitz:3").unwrap();
        let u = anti_rotor(&alg, FieldKind::Inverse).unwrap();
        let want = param_sym(
            3,
            vec![
                vec![vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 0]],
                vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]],
                vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]],
            ],
        );
        assert_eq!(u.param_count, 3);
        assert!(subspace_equal(&u, &want).unwrap());
    }

    #[test]
    fn matrix2_anti_rotor_is_transpose_line() {
        let alg = registry("matrix:2").unwrap();
        let u = anti_rotor(&alg, FieldKind::Inverse).unwrap();
        assert_eq!(u.param_count, 1);
        let coords = membership_check(&u, &transpose_permutation(2)).unwrap();
        assert!(coords.is_some());
    }

    #[test]
    fn nilpotent_power_anti_rotors() {
        let alg = registry("nilpotent").unwrap();
        let u2 = anti_rotor(&alg, FieldKind::Power(2)).unwrap();
        assert_eq!(u2.param_count, 3);
        let want2 = param_sym(
            3,
            vec![
                vec![vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 0]],
                vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]],
                vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]],
            ],
        );
        assert!(subspace_equal(&u2, &want2).unwrap());
        let u3 = anti_rotor(&alg, FieldKind::Power(3)).unwrap();
        assert_eq!(u3.param_count, 4);
        let u4 = anti_rotor(&alg, FieldKind::Power(4)).unwrap();
        assert_eq!(u4.param_count, 6);
        assert!(!subspace_equal(&u2, &u3).unwrap());
    }

    #[test]
    fn membership_examples() {
        let alg = registry("complex").unwrap();
        let u = anti_rotor(&alg, FieldKind::Inverse).unwrap();
        // identity is not of the form [[α, β], [β, −α]]
        assert!(membership_check(&u, &mat(vec![vec![1, 0], vec![0, 1]])).unwrap().is_none());
        // zero matrix always belongs with zero coordinates
        let z = membership_check(&u, &mat(vec![vec![0, 0], vec![0, 0]])).unwrap().unwrap();
        assert!(z.iter().all(|x| x.is_zero()));
        // asymmetric input is a usage error
        let bad = Mat::from_rows(vec![vec![q(0), q(1)], vec![q(0), q(0)]]);
        assert!(membership_check(&u, &bad).is_err());
    }

    #[test]
    fn subspace_equal_reflexive_and_modes() {
        let alg = registry("complex").unwrap();
        let u_inv = anti_rotor(&alg, FieldKind::Inverse).unwrap();
        let u_sq = anti_rotor(&alg, FieldKind::Power(2)).unwrap();
        assert!(subspace_equal(&u_inv, &u_inv).unwrap());
        assert!(subspace_equal(&u_inv, &u_sq).unwrap());
    }

    #[test]
    fn normalized_family_toeplitz() {
        // Hankel metrics with top-left entry pinned to 1.
        let alg = registry("toeplitz:3").unwrap();
        let u = anti_rotor(&alg, FieldKind::Inverse).unwrap();
        let nf = normalized_subspace(&alg, &u).unwrap();
        assert_eq!(nf.directions.param_count, 2);
        assert_eq!(nf.base[(0, 0)], q(1));
        // every member has (0,0) entry 1 and stays Hankel
        let l = nf.family.realize(&[qr(1, 2), q(-3)]);
        assert_eq!(l[(0, 0)], q(1));
        assert_eq!(l[(0, 1)], l[(1, 0)]);
        assert_eq!(l[(1, 1)], l[(0, 2)]);
        assert_eq!(l[(2, 2)], q(0));
    }

    #[test]
    fn normalized_family_ut2() {
        // diag(1+σ, 1−σ, 0)
        let alg = registry("ut2").unwrap();
        let u = anti_rotor(&alg, FieldKind::Inverse).unwrap();
        let nf = normalized_subspace(&alg, &u).unwrap();
        assert_eq!(nf.directions.param_count, 1);
        assert!(nf.contains(&mat(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 0]])).unwrap());
        assert!(nf.contains(&mat(vec![vec![2, 0, 0], vec![0, 0, 0], vec![0, 0, 0]])).unwrap());
        assert!(!nf.contains(&mat(vec![vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 0]])).unwrap());
    }

    #[test]
    fn prodr3_normalized_is_trace_constraint() {
        let alg = registry("rrr").unwrap();
        let u = anti_rotor(&alg, FieldKind::Inverse).unwrap();
        assert_eq!(u.param_count, 3);
        let nf = normalized_subspace(&alg, &u).unwrap();
        // σ₁+σ₂+σ₃ = 3: identity is a member, diag(3,0,0) is a member
        assert!(nf.contains(&mat(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])).unwrap());
        assert!(nf.contains(&mat(vec![vec![3, 0, 0], vec![0, 0, 0], vec![0, 0, 0]])).unwrap());
        assert!(!nf.contains(&mat(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 2]])).unwrap());
    }

    #[test]
    fn diagonal_and_hankel_families_share_dimension_but_differ() {
        // Two families of full dimension n that are not the same subspace.
        for n in [3usize, 4] {
            let prod = registry(&format!("prodr:{n}")).unwrap();
            let toep = registry(&format!("toeplitz:{n}")).unwrap();
            let up = anti_rotor(&prod, FieldKind::Inverse).unwrap();
            let ut = anti_rotor(&toep, FieldKind::Inverse).unwrap();
            assert_eq!(up.param_count, n);
            assert_eq!(ut.param_count, n);
            assert!(!subspace_equal(&up, &ut).unwrap());
        }
    }

    #[test]
    fn transform_law_on_complex() {
        // u_{A} = Kᵀ·u_{A'}·K for A' = transform(A, K).
        let alg = registry("complex").unwrap();
        let u = anti_rotor(&alg, FieldKind::Inverse).unwrap();
        let k = mat(vec![vec![1, 2], vec![-1, 1]]);
        let talg = alg.transform(&k).unwrap();
        let tu = anti_rotor(&talg, FieldKind::Inverse).unwrap();
        let pulled = tu.congruence(&k);
        assert!(subspace_equal(&u, &pulled).unwrap());
    }
}

//! Algebras presented by structure constants over ℚ.
//!
//! `c[i][j][k]` means `e_i·e_j = Σ_k c[i][j][k]·e_k`. Validation checks
//! associativity exhaustively and finds the two-sided unit by solving the
//! defining linear system exactly. The symbolic inverse field is the
//! adjugate column arrangement `p/q` with `q = det(L_s)`, satisfying
//! `L_s · p = q·1` as a polynomial identity.

use crate::error::Error;
use crate::matrix::Mat;
use crate::scalar::rational_to_f64;
use crate::{QMat, QPoly, Result, Q};
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone)]
pub struct Algebra {
    pub name: String,
    pub dim: usize,
    /// Flattened `c[i][j][k]` at index `(i·n + j)·n + k`.
    structure: Vec<Q>,
    pub unit: Option<Vec<Q>>,
    pub unit_norm_sq: Option<Q>,
    pub associative: bool,
    pub unital: bool,
}

/// Outcome of validating raw structure constants.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub associative: bool,
    pub unital: bool,
    pub unit: Option<Vec<Q>>,
    pub unit_norm_sq: Option<Q>,
    pub warnings: Vec<String>,
}

/// Which unary operation the curl constraints are taken against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    /// `s ↦ s⁻¹`, components rational.
    Inverse,
    /// `s ↦ s^j` for integer `j ∉ {0, 1}`; polynomial for `j ≥ 2`.
    Power(i64),
}

/// A vector field with rational-function components sharing one denominator.
#[derive(Debug, Clone)]
pub struct RationalVectorField {
    pub nvars: usize,
    pub numerators: Vec<QPoly>,
    pub denominator: QPoly,
    pub kind: FieldKind,
}

impl Algebra {
    pub fn from_structure(name: &str, dim: usize, structure: Vec<Q>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::usage("algebra dimension must be at least 1"));
        }
        if structure.len() != dim * dim * dim {
            return Err(Error::usage(format!(
                "structure constants must be a {dim}×{dim}×{dim} array"
            )));
        }
        let mut alg = Algebra {
            name: name.to_string(),
            dim,
            structure,
            unit: None,
            unit_norm_sq: None,
            associative: false,
            unital: false,
        };
        alg.associative = alg.check_associative();
        if let Some(u) = alg.solve_unit()? {
            let norm_sq: Q = u.iter().map(|x| x.clone() * x.clone()).sum();
            alg.unit_norm_sq = Some(norm_sq);
            alg.unit = Some(u);
            alg.unital = true;
        }
        Ok(alg)
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn structure(&self) -> &[Q] {
        &self.structure
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let n = self.dim;
        let mut out = vec![Q::zero(); n];
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                let f = a[i].clone() * b[j].clone();
                for k in 0..n {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out[k] = out[k].clone() + c.clone() * f.clone();
                    }
                }
            }
        }
        out
    }

    /// Product of two vectors of polynomial components.
    pub fn multiply_poly(&self, a: &[QPoly], b: &[QPoly]) -> Vec<QPoly> {
        let n = self.dim;
        let nvars = a[0].nvars;
        let mut out = vec![QPoly::zero(nvars); n];
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                let prod = &a[i] * &b[j];
                for k in 0..n {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out[k] = &out[k] + &prod.scale(c);
                    }
                }
            }
        }
        out
    }

    fn check_associative(&self) -> bool {
        let n = self.dim;
        let basis: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|k| if i == k { Q::one() } else { Q::zero() }).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                let ij: Vec<Q> = (0..n).map(|k| self.c(i, j, k).clone()).collect();
                for k in 0..n {
                    let lhs = self.multiply(&ij, &basis[k]);
                    let jk: Vec<Q> = (0..n).map(|m| self.c(j, k, m).clone()).collect();
                    let rhs = self.multiply(&basis[i], &jk);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Two-sided unit by exact linear solve; `Err` when the solution is
    /// ambiguous (the defining system is underdetermined).
    fn solve_unit(&self) -> Result<Option<Vec<Q>>> {
        let n = self.dim;
        let mut rows = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        // u·e_j = e_j  →  Σ_i u_i c[i][j][k] = δ_jk
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.c(i, j, k).clone()).collect::<Vec<_>>());
                rhs.push(if j == k { Q::one() } else { Q::zero() });
            }
        }
        // e_i·u = e_i  →  Σ_j u_j c[i][j][k] = δ_ik
        for i in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|j| self.c(i, j, k).clone()).collect::<Vec<_>>());
                rhs.push(if i == k { Q::one() } else { Q::zero() });
            }
        }
        let m = Mat::from_rows(rows);
        match m.solve_affine(&rhs) {
            None => Ok(None),
            Some((u, ns)) => {
                if !ns.is_empty() {
                    return Err(Error::domain(
                        "unit is not unique: the defining linear system is underdetermined",
                    ));
                }
                Ok(Some(u))
            }
        }
    }

    /// Validation report for CLI consumption.
    pub fn validate(&self) -> ValidationReport {
        let mut warnings = Vec::new();
        if !self.associative {
            warnings.push(
                "algebra is not associative: inverse mode uses the left-solve inverse \
                 L_s⁻¹(1), which matches s*/(ss*) for the involutive cases"
                    .to_string(),
            );
        }
        if !self.unital {
            warnings
                .push("algebra has no two-sided unit: only power mode is available".to_string());
        }
        ValidationReport {
            associative: self.associative,
            unital: self.unital,
            unit: self.unit.clone(),
            unit_norm_sq: self.unit_norm_sq.clone(),
            warnings,
        }
    }

    /// Left regular representation: `(L_s)_{kj} = Σ_i c[i][j][k]·x_i`, so
    /// that `L_s·y = s·y`.
    pub fn left_regular_rep(&self) -> Mat<QPoly> {
        let n = self.dim;
        Mat::from_fn(n, n, |k, j| {
            let mut p = QPoly::zero(n);
            for i in 0..n {
                let c = self.c(i, j, k);
                if !c.is_zero() {
                    p.add_term(crate::poly::Monomial::var(n, i), c.clone());
                }
            }
            p
        })
    }

    /// `L_s` evaluated at a rational point.
    pub fn left_mul_matrix_q(&self, s: &[Q]) -> QMat {
        let n = self.dim;
        Mat::from_fn(n, n, |k, j| {
            let mut acc = Q::zero();
            for i in 0..n {
                let c = self.c(i, j, k);
                if !c.is_zero() {
                    acc = acc + c.clone() * s[i].clone();
                }
            }
            acc
        })
    }

    /// `L_s` evaluated at an f64 point.
    pub fn left_mul_matrix_f64(&self, s: &[f64]) -> Mat<f64> {
        let n = self.dim;
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            if s[i] == 0.0 {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        m[(k, j)] += rational_to_f64(c) * s[i];
                    }
                }
            }
        }
        m
    }

    pub fn unit_f64(&self) -> Option<Vec<f64>> {
        self.unit.as_ref().map(|u| u.iter().map(rational_to_f64).collect())
    }

    /// Numeric inverse at a point: solve `L_s·x = 1`.
    pub fn inverse_at_f64(&self, s: &[f64]) -> Option<Vec<f64>> {
        let unit = self.unit_f64()?;
        let (x, _) = self.left_mul_matrix_f64(s).lu_solve(&unit)?;
        Some(x)
    }

    /// The exact inverse field `s⁻¹ = p/q`, `q = det(L_s)`, content-reduced.
    /// For non-associative unital algebras this is the left-solve inverse.
    pub fn symbolic_inverse(&self) -> Result<RationalVectorField> {
        let unit = self
            .unit
            .as_ref()
            .ok_or_else(|| Error::domain("inverse field requires a unital algebra"))?;
        let n = self.dim;
        let rep = self.left_regular_rep();
        let det = rep.bareiss_det();
        if det.is_zero() {
            return Err(Error::domain(
                "no generic inverse: det(L_s) is the zero polynomial",
            ));
        }
        if n == 1 {
            return Ok(finish_field(
                vec![QPoly::constant(1, unit[0].clone())],
                det,
                FieldKind::Inverse,
            ));
        }
        // p = adj(L_s)·1: only cofactors of rows where the unit is nonzero.
        let mut numerators = vec![QPoly::zero(n); n];
        for (j, uj) in unit.iter().enumerate() {
            if uj.is_zero() {
                continue;
            }
            for (k, num) in numerators.iter_mut().enumerate() {
                let cof = rep.cofactor(j, k);
                if !cof.is_zero() {
                    *num = &*num + &cof.scale(uj);
                }
            }
        }
        Ok(finish_field(numerators, det, FieldKind::Inverse))
    }

    /// The field `s ↦ s^j` (`j ≥ 2` polynomial; `j ≤ −1` rational via exact
    /// composition of the inverse).
    pub fn symbolic_power(&self, j: i64) -> Result<RationalVectorField> {
        if j == 0 || j == 1 {
            return Err(Error::usage("power mode requires an exponent other than 0 and 1"));
        }
        let n = self.dim;
        if j >= 2 {
            let coords: Vec<QPoly> = (0..n).map(|i| QPoly::var(n, i)).collect();
            let mut acc = coords.clone();
            for _ in 1..j {
                acc = self.multiply_poly(&coords, &acc);
            }
            return Ok(RationalVectorField {
                nvars: n,
                numerators: acc,
                denominator: QPoly::one(n),
                kind: FieldKind::Power(j),
            });
        }
        if !self.unital {
            return Err(Error::domain(
                "negative powers require a unital algebra with generic inverse",
            ));
        }
        let inv = self.symbolic_inverse()?;
        let mut nums = inv.numerators.clone();
        let mut den = inv.denominator.clone();
        for _ in 1..(-j) {
            nums = self.multiply_poly(&inv.numerators, &nums);
            den = &den * &inv.denominator;
        }
        Ok(finish_field(nums, den, FieldKind::Power(j)))
    }

    pub fn field(&self, kind: FieldKind) -> Result<RationalVectorField> {
        match kind {
            FieldKind::Inverse => self.symbolic_inverse(),
            FieldKind::Power(j) => self.symbolic_power(j),
        }
    }

    /// Isomorphic image under invertible `K` (elements map as `s ↦ K·s`).
    pub fn transform(&self, k: &QMat) -> Result<Algebra> {
        if !k.is_square() || k.rows != self.dim {
            return Err(Error::usage("transform matrix has the wrong shape"));
        }
        let kinv = k
            .inverse()
            .ok_or_else(|| Error::usage("transform matrix is singular"))?;
        let n = self.dim;
        let mut structure = vec![Q::zero(); n * n * n];
        for i in 0..n {
            let ei: Vec<Q> = (0..n).map(|r| kinv[(r, i)].clone()).collect();
            for j in 0..n {
                let ej: Vec<Q> = (0..n).map(|r| kinv[(r, j)].clone()).collect();
                let prod = self.multiply(&ei, &ej);
                let image = k.mul_vec(&prod);
                for (kk, v) in image.into_iter().enumerate() {
                    structure[(i * n + j) * n + kk] = v;
                }
            }
        }
        Algebra::from_structure(&format!("{}~transformed", self.name), n, structure)
    }

    /// Trace form `tr(L_{e_i}·L_{e_j})` of the left regular representation.
    pub fn trace_form(&self) -> QMat {
        let n = self.dim;
        Mat::from_fn(n, n, |i, j| {
            let mut acc = Q::zero();
            // tr(L_{e_i} L_{e_j}) = Σ_{k,m} c[i][m][k] c[j][k][m]
            for k in 0..n {
                for m in 0..n {
                    let a = self.c(i, m, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = self.c(j, k, m);
                    if !b.is_zero() {
                        acc = acc + a.clone() * b.clone();
                    }
                }
            }
            acc
        })
    }

    /// Whether the left regular representation is closed under transpose.
    pub fn left_rep_self_adjoint(&self) -> bool {
        let n = self.dim;
        let mut basis_rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut flat = Vec::with_capacity(n * n);
            for k in 0..n {
                for j in 0..n {
                    flat.push(self.c(i, j, k).clone());
                }
            }
            basis_rows.push(flat);
        }
        let span = Mat::from_rows(basis_rows.clone());
        let rank = crate::matrix::rank_exact(&span);
        for i in 0..n {
            let mut flat = Vec::with_capacity(n * n);
            for k in 0..n {
                for j in 0..n {
                    // entry (k, j) of L_{e_i}ᵀ is entry (j, k) of L_{e_i}
                    flat.push(self.c(i, k, j).clone());
                }
            }
            let mut rows = basis_rows.clone();
            rows.push(flat);
            if crate::matrix::rank_exact(&Mat::from_rows(rows)) > rank {
                return false;
            }
        }
        true
    }
}

/// Content-reduce a common-denominator field and fix the denominator's
/// leading sign.
fn finish_field(
    numerators: Vec<QPoly>,
    denominator: QPoly,
    kind: FieldKind,
) -> RationalVectorField {
    let nvars = denominator.nvars;
    let mut content = denominator.content();
    for p in &numerators {
        if !p.is_zero() {
            content = gcd_rational(&content, &p.content());
        }
    }
    if let Some((_, lc)) = denominator.leading() {
        if lc.is_negative() {
            content = -content;
        }
    }
    if content.is_zero() || content.is_one() {
        return RationalVectorField { nvars, numerators, denominator, kind };
    }
    let inv = Q::one() / content;
    RationalVectorField {
        nvars,
        numerators: numerators.iter().map(|p| p.scale(&inv)).collect(),
        denominator: denominator.scale(&inv),
        kind,
    }
}

fn gcd_rational(a: &Q, b: &Q) -> Q {
    use num_integer::Integer;
    Q::new(a.numer().gcd(b.numer()), a.denom().lcm(b.denom()))
}

impl RationalVectorField {
    /// Check the defining identity `L_s·p = q·1` exactly (inverse mode).
    pub fn verify_inverse_identity(&self, alg: &Algebra) -> bool {
        let unit = match &alg.unit {
            Some(u) => u,
            None => return false,
        };
        let rep = alg.left_regular_rep();
        for k in 0..alg.dim {
            let mut acc = QPoly::zero(self.nvars);
            for j in 0..alg.dim {
                if rep[(k, j)].is_zero() || self.numerators[j].is_zero() {
                    continue;
                }
                acc = &acc + &(&rep[(k, j)] * &self.numerators[j]);
            }
            let want = self.denominator.scale(&unit[k]);
            if acc != want {
                return false;
            }
        }
        true
    }

    /// Evaluate componentwise at an f64 point; `None` on a denominator zero.
    pub fn eval_f64(&self, at: &[f64]) -> Option<Vec<f64>> {
        let den = self.denominator.eval_f64(at);
        if den == 0.0 || !den.is_finite() {
            return None;
        }
        Some(self.numerators.iter().map(|p| p.eval_f64(at) / den).collect())
    }

    /// Evaluate componentwise at an exact rational point.
    pub fn eval_q(&self, at: &[Q]) -> Option<Vec<Q>> {
        let den = self.denominator.eval(at);
        if den.is_zero() {
            return None;
        }
        Some(self.numerators.iter().map(|p| p.eval(at) / den.clone()).collect())
    }

    /// One component as a normalized rational function.
    pub fn component(&self, k: usize) -> crate::poly::RatFn {
        crate::poly::RatFn::new(self.numerators[k].clone(), self.denominator.clone())
            .expect("field denominator is nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::registry;
    use crate::{q, qr};

    #[test]
    fn complex_validates() {
        let alg = registry("complex").unwrap();
        assert!(alg.associative && alg.unital);
        assert_eq!(alg.unit.as_ref().unwrap(), &vec![q(1), q(0)]);
        assert_eq!(alg.unit_norm_sq.as_ref().unwrap(), &q(1));
    }

    #[test]
    fn rxr_unit_norm() {
        let alg = registry("rxr").unwrap();
        assert_eq!(alg.unit.as_ref().unwrap(), &vec![q(1), q(1)]);
        assert_eq!(alg.unit_norm_sq.as_ref().unwrap(), &q(2));
    }

    #[test]
    fn nilpotent_is_nonunital() {
        let alg = registry("nilpotent").unwrap();
        assert!(alg.associative);
        assert!(!alg.unital);
        assert!(alg.symbolic_inverse().is_err());
    }

    #[test]
    fn complex_left_rep() {
        let alg = registry("complex").unwrap();
        let rep = alg.left_regular_rep();
        let x = QPoly::var(2, 0);
        let y = QPoly::var(2, 1);
        assert_eq!(rep[(0, 0)], x);
        assert_eq!(rep[(0, 1)], -&y);
        assert_eq!(rep[(1, 0)], y);
        assert_eq!(rep[(1, 1)], x);
    }

    #[test]
    fn dual_left_rep_lower_triangular() {
        let alg = registry("dual").unwrap();
        let rep = alg.left_regular_rep();
        let x = QPoly::var(2, 0);
        let y = QPoly::var(2, 1);
        assert_eq!(rep[(0, 0)], x);
        assert!(rep[(0, 1)].is_zero());
        assert_eq!(rep[(1, 0)], y);
        assert_eq!(rep[(1, 1)], x);
    }

    #[test]
    fn complex_symbolic_inverse() {
        // (x, y)⁻¹ = (x, −y)/(x² + y²)
        let alg = registry("complex").unwrap();
        let f = alg.symbolic_inverse().unwrap();
        assert!(f.verify_inverse_identity(&alg));
        let x = QPoly::var(2, 0);
        let y = QPoly::var(2, 1);
        assert_eq!(f.denominator, &(&x * &x) + &(&y * &y));
        assert_eq!(f.numerators[0], x);
        assert_eq!(f.numerators[1], -&y);
    }

    #[test]
    fn dual_symbolic_inverse() {
        // (x, y)⁻¹ = (x, −y)/x²
        let alg = registry("dual").unwrap();
        let f = alg.symbolic_inverse().unwrap();
        assert!(f.verify_inverse_identity(&alg));
        let x = QPoly::var(2, 0);
        let y = QPoly::var(2, 1);
        assert_eq!(f.denominator, &x * &x);
        assert_eq!(f.numerators[0], x);
        assert_eq!(f.numerators[1], -&y);
    }

    #[test]
    fn toeplitz3_det_is_x_cubed() {
        let alg = registry("toeplitz:3").unwrap();
        let f = alg.symbolic_inverse().unwrap();
        let x = QPoly::var(3, 0);
        assert_eq!(f.denominator, &(&x * &x) * &x);
        assert!(f.verify_inverse_identity(&alg));
    }

    #[test]
    fn nilpotent_powers() {
        let alg = registry("nilpotent").unwrap();
        let s2 = alg.symbolic_power(2).unwrap();
        let x = QPoly::var(3, 0);
        let y = QPoly::var(3, 1);
        assert!(s2.numerators[0].is_zero());
        assert_eq!(s2.numerators[1], &x * &x);
        assert_eq!(s2.numerators[2], (&x * &y).scale(&q(2)));
        let s3 = alg.symbolic_power(3).unwrap();
        assert!(s3.numerators[0].is_zero());
        assert!(s3.numerators[1].is_zero());
        assert_eq!(s3.numerators[2], &(&x * &x) * &x);
        let s4 = alg.symbolic_power(4).unwrap();
        assert!(s4.numerators.iter().all(|p| p.is_zero()));
    }

    #[test]
    fn unit_squared_is_unit() {
        for name in ["complex", "rxr", "toeplitz:3", "spin:2"] {
            let alg = registry(name).unwrap();
            let u = alg.unit.clone().unwrap();
            assert_eq!(alg.multiply(&u, &u), u, "unit² ≠ unit for {name}");
            // the power field agrees at the unit
            let s2 = alg.symbolic_power(2).unwrap();
            assert_eq!(s2.eval_q(&u).unwrap(), u, "1² ≠ 1 for {name}");
        }
    }

    #[test]
    fn toeplitz3_left_rep_is_lower_triangular_toeplitz() {
        let alg = registry("toeplitz:3").unwrap();
        let rep = alg.left_regular_rep();
        let v = |i: usize| QPoly::var(3, i);
        for (k, j, want) in [
            (0usize, 0usize, Some(0usize)),
            (1, 1, Some(0)),
            (2, 2, Some(0)),
            (1, 0, Some(1)),
            (2, 1, Some(1)),
            (2, 0, Some(2)),
            (0, 1, None),
            (0, 2, None),
            (1, 2, None),
        ] {
            match want {
                Some(i) => assert_eq!(rep[(k, j)], v(i), "entry ({k},{j})"),
                None => assert!(rep[(k, j)].is_zero(), "entry ({k},{j})"),
            }
        }
    }

    #[test]
    fn power_recursion_consistency() {
        // s^j · s = s^{j+1} exactly for j = 2..4.
        for name in ["complex", "dual", "toeplitz:3"] {
            let alg = registry(name).unwrap();
            let n = alg.dim;
            let coords: Vec<QPoly> = (0..n).map(|i| QPoly::var(n, i)).collect();
            for j in 2..=4i64 {
                let sj = alg.symbolic_power(j).unwrap();
                let sj1 = alg.symbolic_power(j + 1).unwrap();
                let prod = alg.multiply_poly(&sj.numerators, &coords);
                assert_eq!(prod, sj1.numerators, "{name} power {j}");
            }
        }
    }

    #[test]
    fn transform_split_complex_to_rxr() {
        // K = [[1, −1], [1, 1]] maps split-ℂ exactly onto ℝ×ℝ.
        let alg = registry("split-complex").unwrap();
        let k = Mat::from_rows(vec![vec![q(1), q(-1)], vec![q(1), q(1)]]);
        let t = alg.transform(&k).unwrap();
        let rxr = registry("rxr").unwrap();
        assert_eq!(t.structure(), rxr.structure());
        assert_eq!(t.unit, rxr.unit);
    }

    #[test]
    fn transform_identity_and_roundtrip() {
        let alg = registry("toeplitz:3").unwrap();
        let id: QMat = Mat::identity(3);
        let t = alg.transform(&id).unwrap();
        assert_eq!(t.structure(), alg.structure());

        let k = Mat::from_rows(vec![
            vec![q(1), q(2), q(0)],
            vec![q(0), q(1), q(-1)],
            vec![q(1), q(0), q(1)],
        ]);
        let roundtrip = alg
            .transform(&k)
            .unwrap()
            .transform(&k.inverse().unwrap())
            .unwrap();
        assert_eq!(roundtrip.structure(), alg.structure());
    }

    #[test]
    fn singular_transform_rejected() {
        let alg = registry("complex").unwrap();
        let k = Mat::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert!(alg.transform(&k).is_err());
    }

    #[test]
    fn spin_inverse_matches_conjugate_formula() {
        // Left-solve inverse equals s*/(s s*) as exact rational functions.
        let alg = registry("spin:2").unwrap();
        let f = alg.symbolic_inverse().unwrap();
        let n = 3;
        let x0 = QPoly::var(n, 0);
        let x1 = QPoly::var(n, 1);
        let x2 = QPoly::var(n, 2);
        // s s* = x₀² − x₁² − x₂², s* = (x₀, −x₁, −x₂)
        let nsq = &(&x0 * &x0) - &(&(&x1 * &x1) + &(&x2 * &x2));
        let star = [x0, -&x1, -&x2];
        // Cross-multiplied equality p_k·(s s*) = s*_k·q
        for (k, st) in star.iter().enumerate() {
            let lhs = &f.numerators[k] * &nsq;
            let rhs = st * &f.denominator;
            assert_eq!(lhs, rhs, "component {k}");
        }
    }

    #[test]
    fn quaternion_inverse_denominator() {
        let alg = registry("quaternion").unwrap();
        assert!(alg.associative, "quaternions are associative");
        let f = alg.symbolic_inverse().unwrap();
        // den = (Σ x²)² up to content; numerators = conjugate·Σx².
        let n = 4;
        let mut nsq = QPoly::zero(n);
        for i in 0..n {
            let xi = QPoly::var(n, i);
            nsq = &nsq + &(&xi * &xi);
        }
        assert_eq!(f.denominator, &nsq * &nsq);
        assert_eq!(f.numerators[0], &QPoly::var(n, 0) * &nsq);
        assert_eq!(f.numerators[1], -&(&QPoly::var(n, 1) * &nsq));
    }

    #[test]
    fn octonion_nonassociative_but_invertible() {
        let alg = registry("cayley-dickson:8").unwrap();
        assert!(!alg.associative);
        assert!(alg.unital);
        let f = alg.symbolic_inverse().unwrap();
        // Spot-check the inverse numerically at a rational point.
        let pt: Vec<Q> =
            (0..8).map(|i| if i == 0 { q(1) } else { qr(1, 10 + i as i64) }).collect();
        let inv = f.eval_q(&pt).unwrap();
        let prod = alg.multiply(&pt, &inv);
        let unit = alg.unit.clone().unwrap();
        assert_eq!(prod, unit);
    }
}

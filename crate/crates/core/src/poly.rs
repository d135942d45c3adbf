//! Sparse multivariate polynomials with a canonical graded-lex term order.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is graded
//! lexicographic, so iteration order (and hence printing, hashing of rows
//! built from terms, etc.) is deterministic by construction. No zero
//! coefficient is ever stored.

use crate::error::Error;
use crate::scalar::Scalar;
use crate::univar::UniPoly;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector; `Ord` is graded lexicographic (total degree first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise division; `None` when not divisible.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            e.push(a - b);
        }
        Some(Monomial(e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over a scalar `T`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly<T: Scalar> {
    pub nvars: usize,
    pub terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> MultiPoly<T> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::constant(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, T::one())
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars, "variable index out of range");
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial::var(nvars, idx), T::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, T)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_constant())
    }

    pub fn constant_term(&self) -> T {
        self.terms
            .get(&Monomial::constant(self.nvars))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &T)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: T) {
        debug_assert_eq!(m.0.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut p = Self::zero(self.nvars);
        for (m, a) in &self.terms {
            let v = a.clone() * c.clone();
            if !v.is_zero() {
                p.terms.insert(m.clone(), v);
            }
        }
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Self {
        assert!(var < self.nvars, "variable index out of range");
        let mut p = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut em = m.clone();
            em.0[var] = e - 1;
            let mut k = T::zero();
            for _ in 0..e {
                k = k + T::one();
            }
            p.add_term(em, c.clone() * k);
        }
        p
    }

    /// Evaluate at a point.
    pub fn eval(&self, at: &[T]) -> T {
        assert_eq!(at.len(), self.nvars);
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t * at[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Evaluate at an f64 point (coefficients converted lazily).
    pub fn eval_f64(&self, at: &[f64]) -> f64 {
        assert_eq!(at.len(), self.nvars);
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut t = c.to_f64();
            for (i, &e) in m.0.iter().enumerate() {
                t *= at[i].powi(e as i32);
            }
            acc += t;
        }
        acc
    }

    /// Substitute rational values for every variable except `var`, producing
    /// a univariate polynomial in `var`.
    pub fn restrict_to_line(&self, var: usize, at: &[T]) -> UniPoly<T> {
        assert_eq!(at.len(), self.nvars);
        let mut coeffs: Vec<T> = vec![T::zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if i == var {
                    continue;
                }
                for _ in 0..e {
                    t = t * at[i].clone();
                }
            }
            let d = m.0[var] as usize;
            coeffs[d] = coeffs[d].clone() + t;
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Linear change of variables: substitute `x_i = Σ_j b[i][j]·y_j` where
    /// the new polynomial has `new_nvars` variables.
    pub fn linear_substitute(&self, b: &[Vec<T>], new_nvars: usize) -> Self {
        assert_eq!(b.len(), self.nvars);
        let images: Vec<MultiPoly<T>> = b
            .iter()
            .map(|row| {
                let mut p = MultiPoly::zero(new_nvars);
                for (j, c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        p.add_term(Monomial::var(new_nvars, j), c.clone());
                    }
                }
                p
            })
            .collect();
        let mut acc = MultiPoly::zero(new_nvars);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(new_nvars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = &t * &images[i];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Exact division; `None` if `self` is not a polynomial multiple of `d`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert_eq!(self.nvars, d.nvars);
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quo = Self::zero(self.nvars);
        let (dm, dc) = {
            let (m, c) = d.leading().unwrap();
            (m.clone(), c.clone())
        };
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = rm.div(&dm)?;
            let qc = rc / dc.clone();
            let mut t = Self::zero(self.nvars);
            t.terms.insert(qm.clone(), qc.clone());
            rem = &rem - &(&t * d);
            quo.add_term(qm, qc);
        }
        Some(quo)
    }

    /// Variables the polynomial actually depends on.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut used = vec![false; self.nvars];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        used.iter().enumerate().filter(|(_, &u)| u).map(|(i, _)| i).collect()
    }
}

/// Spec-facing arithmetic entry point with variable-count validation.
pub fn poly_arith<T: Scalar>(
    a: &MultiPoly<T>,
    b: &MultiPoly<T>,
    op: PolyOp,
) -> Result<MultiPoly<T>, Error> {
    if a.nvars != b.nvars {
        return Err(Error::usage(format!(
            "polynomial variable-count mismatch: {} vs {}",
            a.nvars, b.nvars
        )));
    }
    Ok(match op {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl<T: Scalar> Add for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn add(self, rhs: Self) -> MultiPoly<T> {
        assert_eq!(self.nvars, rhs.nvars, "variable-count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn sub(self, rhs: Self) -> MultiPoly<T> {
        assert_eq!(self.nvars, rhs.nvars, "variable-count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<T: Scalar> Neg for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn neg(self) -> MultiPoly<T> {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }
}

impl<T: Scalar> Mul for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn mul(self, rhs: Self) -> MultiPoly<T> {
        assert_eq!(self.nvars, rhs.nvars, "variable-count mismatch");
        let mut acc: FxHashMap<Monomial, T> = FxHashMap::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca.clone() * cb.clone();
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = e.get().clone() + c;
                        *e.get_mut() = s;
                    }
                }
            }
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in acc {
            if !c.is_zero() {
                out.terms.insert(m, c);
            }
        }
        out
    }
}

/// Ratio of two multivariate polynomials over ℚ. Normalized so the
/// denominator has positive graded-lex leading coefficient and the pair is
/// content-reduced; full gcd reduction is applied only when both parts are
/// univariate in the same variable.
#[derive(Debug, Clone, PartialEq)]
pub struct RatFn {
    pub num: MultiPoly<crate::Q>,
    pub den: MultiPoly<crate::Q>,
}

impl RatFn {
    pub fn new(num: MultiPoly<crate::Q>, den: MultiPoly<crate::Q>) -> Result<Self, Error> {
        use num_traits::Signed;
        if den.is_zero() {
            return Err(Error::domain("rational function with zero denominator"));
        }
        assert_eq!(num.nvars, den.nvars);
        let mut content = den.content();
        if !num.is_zero() {
            let nc = num.content();
            use num_integer::Integer;
            content = crate::Q::new(
                content.numer().gcd(nc.numer()),
                content.denom().lcm(nc.denom()),
            );
        }
        if den.leading().unwrap().1.is_negative() {
            content = -content;
        }
        let inv = crate::Q::one() / content;
        let mut num = num.scale(&inv);
        let mut den = den.scale(&inv);
        // Univariate pairs get the full gcd reduction.
        let nsup = num.support_vars();
        let dsup = den.support_vars();
        if nsup.len() <= 1 && dsup.len() <= 1 && (nsup.is_empty() || dsup.is_empty() || nsup == dsup)
        {
            if let Some(&var) = dsup.first().or(nsup.first()) {
                let nvars = num.nvars;
                let zeros = vec![crate::Q::zero(); nvars];
                let un = num.restrict_to_line(var, &zeros);
                let ud = den.restrict_to_line(var, &zeros);
                let g = crate::univar::gcd_q(&un, &ud);
                if g.degree().unwrap_or(0) > 0 {
                    let back = move |u: &UniPoly<crate::Q>| {
                        let mut p = MultiPoly::zero(nvars);
                        for (i, c) in u.coeffs().iter().enumerate() {
                            if !c.is_zero() {
                                let mut e = vec![0u16; nvars];
                                e[var] = i as u16;
                                p.add_term(Monomial(e), c.clone());
                            }
                        }
                        p
                    };
                    num = back(&un.exact_div(&g).unwrap());
                    den = back(&ud.exact_div(&g).unwrap());
                }
            }
        }
        Ok(RatFn { num, den })
    }

    pub fn eval_f64(&self, at: &[f64]) -> f64 {
        self.num.eval_f64(at) / self.den.eval_f64(at)
    }
}

// Rational-specific canonicalization.
impl MultiPoly<crate::Q> {
    /// Rational content: positive gcd of numerators over lcm of denominators
    /// (zero polynomial has content 0).
    pub fn content(&self) -> crate::Q {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return crate::Q::zero();
        }
        let mut num_gcd = BigInt::from(0);
        let mut den_lcm = BigInt::from(1);
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        crate::Q::new(num_gcd, den_lcm)
    }

    /// Divide by content and normalize the graded-lex leading coefficient to
    /// be positive. Returns the primitive part.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().unwrap().1 < &crate::Q::zero() {
            c = -c;
        }
        let inv = crate::Q::one() / c;
        self.scale(&inv)
    }
}

/// Render with the given variable names (fallback `x0, x1, ...`).
pub fn render_poly<T: Scalar + fmt::Display>(p: &MultiPoly<T>, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    // Highest-degree terms first reads better.
    for (m, c) in p.terms.iter().rev() {
        let cs = c.to_string();
        let (neg, mag) = match cs.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, cs),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut vars = String::new();
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !vars.is_empty() {
                vars.push('*');
            }
            let name = names.get(i).cloned().unwrap_or_else(|| format!("x{i}"));
            vars.push_str(&name);
            if e > 1 {
                vars.push_str(&format!("^{e}"));
            }
        }
        if vars.is_empty() {
            out.push_str(&mag);
        } else if mag == "1" {
            out.push_str(&vars);
        } else {
            out.push_str(&mag);
            out.push('*');
            out.push_str(&vars);
        }
    }
    out
}

impl<T: Scalar + fmt::Display> fmt::Display for MultiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_poly(self, &[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, Q, QPoly};

    fn x() -> QPoly {
        QPoly::var(2, 0)
    }
    fn y() -> QPoly {
        QPoly::var(2, 1)
    }

    #[test]
    fn difference_of_squares() {
        let a = &x() + &QPoly::one(2);
        let b = &x() - &QPoly::one(2);
        let p = poly_arith(&a, &b, PolyOp::Mul).unwrap();
        let want = &(&x() * &x()) - &QPoly::one(2);
        assert_eq!(p, want);
    }

    #[test]
    fn add_zero_is_identity() {
        let p = &(&x() * &y()) + &x();
        let z = QPoly::zero(2);
        assert_eq!(poly_arith(&p, &z, PolyOp::Add).unwrap(), p);
    }

    #[test]
    fn hand_expanded_product() {
        // (x²y + 2xy)·y = x²y² + 2xy²
        let x2y = QPoly::from_terms(2, [(Monomial(vec![2, 1]), q(1))]);
        let xy2 = QPoly::from_terms(2, [(Monomial(vec![1, 1]), q(2))]);
        let a = &x2y + &xy2;
        let p = poly_arith(&a, &y(), PolyOp::Mul).unwrap();
        let want = QPoly::from_terms(
            2,
            [(Monomial(vec![2, 2]), q(1)), (Monomial(vec![1, 2]), q(2))],
        );
        assert_eq!(p, want);
    }

    #[test]
    fn arity_mismatch_is_usage_error() {
        let a = QPoly::var(2, 0);
        let b = QPoly::var(3, 0);
        assert!(poly_arith(&a, &b, PolyOp::Add).is_err());
    }

    #[test]
    fn derivative_power_rule() {
        // ∂/∂x (x²y) = 2xy
        let p = QPoly::from_terms(2, [(Monomial(vec![2, 1]), q(1))]);
        let d = p.derivative(0);
        assert_eq!(d, QPoly::from_terms(2, [(Monomial(vec![1, 1]), q(2))]));
    }

    #[test]
    fn derivative_of_constant_in_var() {
        // ∂/∂y (x²) = 0
        let p = QPoly::from_terms(2, [(Monomial(vec![2, 0]), q(1))]);
        assert!(p.derivative(1).is_zero());
    }

    #[test]
    fn derivative_hand_expansion() {
        // ∂/∂x (x³ − 3xy²) = 3x² − 3y²
        let p = QPoly::from_terms(
            2,
            [(Monomial(vec![3, 0]), q(1)), (Monomial(vec![1, 2]), q(-3))],
        );
        let d = p.derivative(0);
        let want = QPoly::from_terms(
            2,
            [(Monomial(vec![2, 0]), q(3)), (Monomial(vec![0, 2]), q(-3))],
        );
        assert_eq!(d, want);
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = &(&x() + &y()) * &(&x() - &y());
        let d = &x() + &y();
        let q1 = a.exact_div(&d).unwrap();
        assert_eq!(q1, &x() - &y());
        assert!(a.exact_div(&(&x() + &QPoly::one(2))).is_none());
    }

    #[test]
    fn restriction_to_line() {
        // p = x²y + y restricted along y at (x, y) = (3, t): 9t + t
        let p = QPoly::from_terms(
            2,
            [(Monomial(vec![2, 1]), q(1)), (Monomial(vec![0, 1]), q(1))],
        );
        let u = p.restrict_to_line(1, &[q(3), Q::zero()]);
        assert_eq!(u.coeffs(), &[q(0), q(10)]);
    }

    #[test]
    fn content_and_primitive() {
        let p = QPoly::from_terms(
            2,
            [
                (Monomial(vec![1, 0]), crate::qr(4, 3)),
                (Monomial(vec![0, 1]), crate::qr(2, 9)),
            ],
        );
        let c = p.content();
        assert_eq!(c, crate::qr(2, 9));
        let pp = p.primitive_part();
        assert_eq!(pp.content(), Q::one());
    }
}

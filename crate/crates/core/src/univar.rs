//! Dense univariate polynomials and the exact real-root toolbox: Yun
//! squarefree decomposition, Sturm sequences, rational-root extraction, and
//! the Rothstein–Trager resultant used to classify antiderivative terms.

use crate::scalar::Scalar;
use crate::Q;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial; `coeffs[i]` multiplies `t^i`, no trailing
/// zeros stored.
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> UniPoly<T> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn var() -> Self {
        Self::from_coeffs(vec![T::zero(), T::one()])
    }

    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut k = T::zero();
            for _ in 0..i {
                k = k + T::one();
            }
            out.push(c.clone() * k);
        }
        Self::from_coeffs(out)
    }

    pub fn eval(&self, at: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + c.clone();
        }
        acc
    }

    pub fn eval_f64(&self, at: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c.to_f64();
        }
        acc
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(coeffs)
    }

    /// Euclidean division; panics on zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let lc = d.leading();
        let mut rem = self.clone();
        let mut quo = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = rem.leading() / lc.clone();
            let shift = rd - dd;
            quo[shift] = q.clone();
            // rem -= q·t^shift·d
            let mut new = rem.coeffs.clone();
            for (i, c) in d.coeffs.iter().enumerate() {
                let idx = i + shift;
                new[idx] = new[idx].clone() - q.clone() * c.clone();
            }
            rem = Self::from_coeffs(new);
            // Guard against non-termination if subtraction failed to kill the
            // leading term (cannot happen over a field).
            debug_assert!(rem.degree().map_or(true, |nd| nd < rd));
        }
        (Self::from_coeffs(quo), rem)
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
}

impl<T: Scalar> Add for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn add(self, rhs: Self) -> UniPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::from_coeffs(out)
    }
}

impl<T: Scalar> Sub for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn sub(self, rhs: Self) -> UniPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::from_coeffs(out)
    }
}

impl<T: Scalar> Neg for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn neg(self) -> UniPoly<T> {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> Mul for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn mul(self, rhs: Self) -> UniPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else if i == 1 {
                write!(f, "({c})*t")?;
            } else {
                write!(f, "({c})*t^{i}")?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Exact toolbox over ℚ.
// ---------------------------------------------------------------------------

/// Monic gcd over ℚ.
pub fn gcd_q(a: &UniPoly<Q>, b: &UniPoly<Q>) -> UniPoly<Q> {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = normalize_primitive(&r);
    }
    make_monic(&a)
}

/// Normalize coefficient sizes: divide by rational content, keep sign of the
/// leading coefficient positive. Identity on the zero polynomial.
pub fn normalize_primitive(p: &UniPoly<Q>) -> UniPoly<Q> {
    if p.is_zero() {
        return p.clone();
    }
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for c in p.coeffs() {
        num_gcd = num_gcd.gcd(c.numer());
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut content = Q::new(num_gcd, den_lcm);
    if p.leading() < Q::zero() {
        content = -content;
    }
    p.scale(&(Q::one() / content))
}

pub fn make_monic(p: &UniPoly<Q>) -> UniPoly<Q> {
    if p.is_zero() {
        return p.clone();
    }
    let inv = Q::one() / p.leading();
    p.scale(&inv)
}

/// Extended gcd: returns `(g, u, v)` with `u·a + v·b = g`, `g` monic.
pub fn ext_gcd_q(a: &UniPoly<Q>, b: &UniPoly<Q>) -> (UniPoly<Q>, UniPoly<Q>, UniPoly<Q>) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = UniPoly::one();
    let mut s1 = UniPoly::zero();
    let mut t0 = UniPoly::zero();
    let mut t1 = UniPoly::one();
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = &s0 - &(&q * &s1);
        let t = &t0 - &(&q * &t1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if r0.is_zero() {
        return (r0, s0, t0);
    }
    let inv = Q::one() / r0.leading();
    (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
}

/// Inverse of `a` modulo `m` (requires gcd(a, m) = 1).
pub fn inverse_mod(a: &UniPoly<Q>, m: &UniPoly<Q>) -> Option<UniPoly<Q>> {
    let (g, u, _) = ext_gcd_q(a, m);
    if g.degree() != Some(0) {
        return None;
    }
    Some(u.div_rem(m).1)
}

/// Yun squarefree decomposition: `p = c·∏ fᵢ^i` with the `fᵢ` squarefree,
/// pairwise coprime, monic. Returns `(fᵢ, i)` pairs with nonconstant `fᵢ`.
pub fn squarefree_decomposition(p: &UniPoly<Q>) -> Vec<(UniPoly<Q>, u32)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = p.derivative();
    let g = gcd_q(p, &dp);
    if g.degree() == Some(0) {
        out.push((make_monic(p), 1));
        return out;
    }
    let mut w = p.exact_div(&g).expect("gcd divides");
    let mut y = dp.exact_div(&g).expect("gcd divides");
    let mut i = 1u32;
    loop {
        let z = &y - &w.derivative();
        if z.is_zero() {
            if w.degree().unwrap_or(0) > 0 {
                out.push((make_monic(&w), i));
            }
            break;
        }
        let f = gcd_q(&w, &z);
        if f.degree().unwrap_or(0) > 0 {
            out.push((f.clone(), i));
        }
        w = w.exact_div(&f).expect("factor divides");
        y = z.exact_div(&f).expect("factor divides");
        i += 1;
    }
    out
}

/// Squarefree part: product of the distinct irreducible factors, monic.
pub fn squarefree_part(p: &UniPoly<Q>) -> UniPoly<Q> {
    let mut acc = UniPoly::one();
    for (f, _) in squarefree_decomposition(p) {
        acc = &acc * &f;
    }
    acc
}

fn sign_q(x: &Q) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Scale by a positive rational so coefficients stay small; never flips
/// signs (Sturm chains depend on them).
fn normalize_positive(p: &UniPoly<Q>) -> UniPoly<Q> {
    if p.is_zero() {
        return p.clone();
    }
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for c in p.coeffs() {
        num_gcd = num_gcd.gcd(c.numer());
        den_lcm = den_lcm.lcm(c.denom());
    }
    let content = Q::new(num_gcd.abs(), den_lcm);
    p.scale(&(Q::one() / content))
}

/// Sturm chain of a squarefree polynomial.
fn sturm_chain(p: &UniPoly<Q>) -> Vec<UniPoly<Q>> {
    let mut chain = vec![normalize_positive(p), normalize_positive(&p.derivative())];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(normalize_positive(&-&r));
    }
    chain
}

#[derive(Clone, Copy, PartialEq)]
pub enum Bound {
    NegInf,
    PosInf,
    At(i64),
}

fn sign_at(p: &UniPoly<Q>, b: Bound) -> i32 {
    match b {
        Bound::NegInf => {
            let d = match p.degree() {
                None => return 0,
                Some(d) => d,
            };
            let s = sign_q(&p.leading());
            if d % 2 == 0 {
                s
            } else {
                -s
            }
        }
        Bound::PosInf => sign_q(&p.leading()),
        Bound::At(x) => sign_q(&p.eval(&Q::from_integer(x.into()))),
    }
}

fn sign_variations(chain: &[UniPoly<Q>], b: Bound) -> usize {
    let mut vars = 0;
    let mut last = 0;
    for p in chain {
        let s = sign_at(p, b);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            vars += 1;
        }
        last = s;
    }
    vars
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`;
/// the endpoints must not be roots when finite.
pub fn count_real_roots_between(p: &UniPoly<Q>, lo: Bound, hi: Bound) -> usize {
    let sf = squarefree_part(p);
    if sf.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let chain = sturm_chain(&sf);
    sign_variations(&chain, lo) - sign_variations(&chain, hi)
}

/// Number of distinct real roots of `p` (multiplicities ignored).
pub fn count_real_roots(p: &UniPoly<Q>) -> usize {
    count_real_roots_between(p, Bound::NegInf, Bound::PosInf)
}

/// Number of distinct roots of `p` over ℂ = degree of the squarefree part.
pub fn count_distinct_roots(p: &UniPoly<Q>) -> usize {
    squarefree_part(p).degree().unwrap_or(0)
}

/// Divisors of `n` (|n| factored by trial division). Returns `None` when a
/// cofactor above the trial bound survives, i.e. the list would be
/// incomplete.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut m = n.abs();
    if m.is_zero() {
        return Some(vec![]);
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    let bound = BigInt::from(1_000_000u64);
    while &d * &d <= m && d <= bound {
        let mut e = 0u32;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += 1;
    }
    if m > BigInt::one() {
        if m > BigInt::from(1_000_000_000_000u64) {
            return None;
        }
        factors.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    Some(divs)
}

/// Rational roots of `p` with multiplicities, plus the cofactor after
/// dividing all of them out. The boolean is false when the candidate search
/// was incomplete (huge prime factors); the roots returned are still genuine.
pub fn rational_roots(p: &UniPoly<Q>) -> (Vec<(Q, u32)>, UniPoly<Q>, bool) {
    let mut rest = normalize_primitive(p);
    let mut roots: Vec<(Q, u32)> = Vec::new();
    if rest.degree().unwrap_or(0) == 0 {
        return (roots, rest, true);
    }
    // Peel t = 0.
    let mut zero_mult = 0u32;
    while rest.degree().unwrap_or(0) >= 1 && rest.coeff(0).is_zero() {
        rest = rest.exact_div(&UniPoly::var()).unwrap();
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Q::zero(), zero_mult));
    }
    if rest.degree().unwrap_or(0) == 0 {
        return (roots, rest, true);
    }
    // Integer-normalize: roots of the primitive integer polynomial.
    let rest_int = normalize_primitive(&rest);
    let a0 = rest_int.coeff(0).numer().clone();
    let ad = rest_int.leading().numer().clone();
    let (ps, qs, complete) = match (divisors(&a0), divisors(&ad)) {
        (Some(ps), Some(qs)) => (ps, qs, true),
        _ => (
            divisors(&BigInt::from(1)).unwrap(),
            divisors(&BigInt::from(1)).unwrap(),
            false,
        ),
    };
    let mut candidates: Vec<Q> = Vec::new();
    for pnum in &ps {
        for qden in &qs {
            let c = Q::new(pnum.clone(), qden.clone());
            candidates.push(c.clone());
            candidates.push(-c);
        }
    }
    candidates.sort();
    candidates.dedup();
    for c in candidates {
        let mut mult = 0u32;
        loop {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            if !rest.eval(&c).is_zero() {
                break;
            }
            let lin = UniPoly::from_coeffs(vec![-c.clone(), Q::one()]);
            rest = rest.exact_div(&lin).unwrap();
            mult += 1;
        }
        if mult > 0 {
            roots.push((c, mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    (roots, normalize_primitive(&rest), complete)
}

/// Rothstein–Trager resultant `Res_x(d, a − t·d′)` as a polynomial in `t`.
/// Its roots are exactly the residues of `a/d` (for `d` squarefree,
/// `gcd(a, d) = 1`, `deg a < deg d`).
pub fn rothstein_trager_resultant(a: &UniPoly<Q>, d: &UniPoly<Q>) -> UniPoly<Q> {
    // Entries of the Sylvester matrix are degree ≤ 1 polynomials in t;
    // fraction-free elimination keeps everything polynomial.
    let dp = d.derivative();
    let n = d.degree().expect("nonzero");
    let m = n - 1; // deg(a − t·d′) = n − 1 since lc(d′) ≠ 0
    let size = n + m;
    let mut s: Vec<Vec<UniPoly<Q>>> = vec![vec![UniPoly::zero(); size]; size];
    // m rows of d's coefficients
    for r in 0..m {
        for (k, c) in d.coeffs().iter().enumerate() {
            s[r][r + (n - k)] = UniPoly::constant(c.clone());
        }
    }
    // n rows of (a − t·d′)'s coefficients
    for r in 0..n {
        for k in 0..=m {
            let ac = a.coeff(k);
            let dc = dp.coeff(k);
            let entry = UniPoly::from_coeffs(vec![ac, -dc]);
            s[m + r][r + (m - k)] = entry;
        }
    }
    crate::matrix::bareiss_det_generic(s)
}

/// True when every root of `p` is purely imaginary and nonzero, i.e.
/// `p = c·∏(t² + aᵢ)` with all `aᵢ > 0`. Input must be squarefree with
/// `p(0) ≠ 0`.
pub fn all_roots_purely_imaginary(p: &UniPoly<Q>) -> bool {
    let d = match p.degree() {
        None | Some(0) => return false,
        Some(d) => d,
    };
    if d % 2 != 0 {
        return false;
    }
    // Must be even: only even powers of t.
    for (i, c) in p.coeffs().iter().enumerate() {
        if i % 2 == 1 && !c.is_zero() {
            return false;
        }
    }
    // v(u) = p(√u): all roots must be real and negative.
    let v = UniPoly::from_coeffs(p.coeffs().iter().step_by(2).cloned().collect());
    let deg_v = v.degree().unwrap();
    count_real_roots_between(&v, Bound::NegInf, Bound::At(0)) == deg_v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qr};

    fn upoly(cs: &[i64]) -> UniPoly<Q> {
        UniPoly::from_coeffs(cs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn div_rem_basic() {
        // t³ − 1 = (t − 1)(t² + t + 1)
        let p = upoly(&[-1, 0, 0, 1]);
        let d = upoly(&[-1, 1]);
        let (quo, rem) = p.div_rem(&d);
        assert!(rem.is_zero());
        assert_eq!(quo, upoly(&[1, 1, 1]));
    }

    #[test]
    fn gcd_of_common_factor() {
        let a = &upoly(&[-1, 1]) * &upoly(&[1, 1]); // (t−1)(t+1)
        let b = &upoly(&[-1, 1]) * &upoly(&[2, 1]); // (t−1)(t+2)
        assert_eq!(gcd_q(&a, &b), upoly(&[-1, 1]));
    }

    #[test]
    fn yun_decomposition() {
        // (t−1)²(t+2)
        let p = &(&upoly(&[-1, 1]) * &upoly(&[-1, 1])) * &upoly(&[2, 1]);
        let sf = squarefree_decomposition(&p);
        assert_eq!(sf.len(), 2);
        assert_eq!(sf[0], (upoly(&[2, 1]), 1));
        assert_eq!(sf[1], (upoly(&[-1, 1]), 2));
    }

    #[test]
    fn sturm_counts() {
        // t² − 2: two real roots; t² + 1: none.
        assert_eq!(count_real_roots(&upoly(&[-2, 0, 1])), 2);
        assert_eq!(count_real_roots(&upoly(&[1, 0, 1])), 0);
        // (t−1)(t+1)(t−3): three
        let p = &(&upoly(&[-1, 1]) * &upoly(&[1, 1])) * &upoly(&[-3, 1]);
        assert_eq!(count_real_roots(&p), 3);
        // negative-axis count for (u+2)(u+5)
        let v = &upoly(&[2, 1]) * &upoly(&[5, 1]);
        assert_eq!(count_real_roots_between(&v, Bound::NegInf, Bound::At(0)), 2);
    }

    #[test]
    fn rational_root_extraction() {
        // (2t − 3)(t + 1)² t
        let p = &(&(&upoly(&[-3, 2]) * &upoly(&[1, 1])) * &upoly(&[1, 1])) * &upoly(&[0, 1]);
        let (roots, rest, complete) = rational_roots(&p);
        assert!(complete);
        assert!(rest.is_constant());
        assert_eq!(
            roots,
            vec![(q(-1), 2), (q(0), 1), (qr(3, 2), 1)]
        );
    }

    #[test]
    fn rothstein_trager_residues() {
        // 1/(t² − 1) has residues ±1/2.
        let d = upoly(&[-1, 0, 1]);
        let a = upoly(&[1]);
        let r = rothstein_trager_resultant(&a, &d);
        // Roots of r must be ±1/2.
        assert!(r.eval(&qr(1, 2)).is_zero());
        assert!(r.eval(&qr(-1, 2)).is_zero());
        assert_eq!(count_distinct_roots(&r), 2);
    }

    #[test]
    fn purely_imaginary_detection() {
        // t² + 1 → yes; t² − 1 → no; t⁴ + 3t² + 2 → yes; t² + t + 1 → no.
        assert!(all_roots_purely_imaginary(&upoly(&[1, 0, 1])));
        assert!(!all_roots_purely_imaginary(&upoly(&[-1, 0, 1])));
        assert!(all_roots_purely_imaginary(&upoly(&[2, 0, 3, 0, 1])));
        assert!(!all_roots_purely_imaginary(&upoly(&[1, 1, 1])));
    }
}

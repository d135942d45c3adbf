//! Dense matrices over a scalar or a polynomial ring.
//!
//! Exact elimination comes in two flavors: fraction-free Bareiss (any
//! integral domain with exact division — used for determinants and ranks of
//! polynomial matrices and for rank over ℚ) and reduced row echelon form
//! over ℚ (used for nullspaces, solving, inverses). Nullspace bases are
//! canonical: one vector per free column, leading 1 in that column, sorted by
//! free-column index.

use crate::poly::MultiPoly;
use crate::scalar::Scalar;
use crate::univar::UniPoly;
use crate::Q;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Integral-domain operations for fraction-free elimination. `like`
/// exemplars carry shape information (a polynomial's variable count) that a
/// bare `zero()` could not.
pub trait EliminationRing: Clone + PartialEq + fmt::Debug {
    fn e_zero(like: &Self) -> Self;
    fn e_one(like: &Self) -> Self;
    fn e_is_zero(&self) -> bool;
    fn e_neg(&self) -> Self;
    fn e_mul(&self, other: &Self) -> Self;
    fn e_sub(&self, other: &Self) -> Self;
    /// Division known to be exact; panics otherwise (internal contract of
    /// the Bareiss recurrence).
    fn e_exact_div(&self, d: &Self) -> Self;
}

impl EliminationRing for Q {
    fn e_zero(_: &Self) -> Self {
        Q::zero()
    }
    fn e_one(_: &Self) -> Self {
        Q::one()
    }
    fn e_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn e_neg(&self) -> Self {
        -self.clone()
    }
    fn e_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn e_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn e_exact_div(&self, d: &Self) -> Self {
        self / d
    }
}

impl EliminationRing for MultiPoly<Q> {
    fn e_zero(like: &Self) -> Self {
        MultiPoly::zero(like.nvars)
    }
    fn e_one(like: &Self) -> Self {
        MultiPoly::one(like.nvars)
    }
    fn e_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn e_neg(&self) -> Self {
        -self
    }
    fn e_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn e_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn e_exact_div(&self, d: &Self) -> Self {
        self.exact_div(d).expect("fraction-free division must be exact")
    }
}

impl EliminationRing for UniPoly<Q> {
    fn e_zero(_: &Self) -> Self {
        UniPoly::zero()
    }
    fn e_one(_: &Self) -> Self {
        UniPoly::one()
    }
    fn e_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn e_neg(&self) -> Self {
        -self
    }
    fn e_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn e_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn e_exact_div(&self, d: &Self) -> Self {
        self.exact_div(d).expect("fraction-free division must be exact")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mat<T> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Mat<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Mat<U> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| f(x)).collect() }
    }
}

impl<T: Clone + PartialEq> Mat<T> {
    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Mat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc = acc + self[(i, j)].clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }
}

impl<T: Scalar> Mul for &Mat<T> {
    type Output = Mat<T>;
    fn mul(self, rhs: Self) -> Mat<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Mat::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self[(i, k)].clone() * rhs[(k, j)].clone();
            }
            acc
        })
    }
}

impl<T: Scalar> Add for &Mat<T> {
    type Output = Mat<T>;
    fn add(self, rhs: Self) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() + rhs[(i, j)].clone())
    }
}

impl<T: Scalar> Sub for &Mat<T> {
    type Output = Mat<T>;
    fn sub(self, rhs: Self) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() - rhs[(i, j)].clone())
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Fraction-free (Bareiss) elimination.
// ---------------------------------------------------------------------------

/// Fraction-free determinant of a nonempty square matrix given as rows.
pub fn bareiss_det_generic<T: EliminationRing>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    assert!(n > 0, "determinant of an empty matrix");
    assert!(m.iter().all(|r| r.len() == n));
    let exemplar = m[0][0].clone();
    let mut sign_flip = false;
    let mut prev = T::e_one(&exemplar);
    for k in 0..n.saturating_sub(1) {
        if m[k][k].e_is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].e_is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return T::e_zero(&exemplar),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].e_mul(&m[k][k]).e_sub(&m[i][k].e_mul(&m[k][j]));
                m[i][j] = num.e_exact_div(&prev);
            }
            m[i][k] = T::e_zero(&exemplar);
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        d.e_neg()
    } else {
        d
    }
}

impl<T: EliminationRing> Mat<T> {
    /// Exact determinant by fraction-free elimination.
    pub fn bareiss_det(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        bareiss_det_generic(self.to_rows())
    }

    /// Exact rank by fraction-free elimination with column skipping.
    pub fn bareiss_rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut m = self.to_rows();
        let exemplar = m[0][0].clone();
        let mut r = 0usize;
        let mut prev = T::e_one(&exemplar);
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let piv = match (r..self.rows).find(|&i| !m[i][c].e_is_zero()) {
                Some(p) => p,
                None => continue,
            };
            m.swap(r, piv);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let num = m[i][j].e_mul(&m[r][c]).e_sub(&m[i][c].e_mul(&m[r][j]));
                    m[i][j] = num.e_exact_div(&prev);
                }
                m[i][c] = T::e_zero(&exemplar);
            }
            prev = m[r][c].clone();
            r += 1;
        }
        r
    }

    /// Cofactor `C_{ij}` = (−1)^{i+j} · det(minor with row i, col j removed).
    pub fn cofactor(&self, i: usize, j: usize) -> T {
        assert!(self.is_square() && self.rows >= 2);
        let n = self.rows;
        let mut rows = Vec::with_capacity(n - 1);
        for r in 0..n {
            if r == i {
                continue;
            }
            let mut row = Vec::with_capacity(n - 1);
            for c in 0..n {
                if c == j {
                    continue;
                }
                row.push(self[(r, c)].clone());
            }
            rows.push(row);
        }
        let d = bareiss_det_generic(rows);
        if (i + j) % 2 == 0 {
            d
        } else {
            d.e_neg()
        }
    }

    /// Adjugate matrix: `M · adj(M) = det(M) · I` as an exact identity.
    pub fn adjugate(&self) -> Mat<T> {
        assert!(self.is_square());
        if self.rows == 1 {
            return Mat::from_fn(1, 1, |_, _| T::e_one(&self[(0, 0)]));
        }
        Mat::from_fn(self.rows, self.cols, |i, j| self.cofactor(j, i))
    }
}

// ---------------------------------------------------------------------------
// Reduced row echelon form over ℚ and friends.
// ---------------------------------------------------------------------------

impl Mat<Q> {
    /// In-place RREF; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let piv = match (r..self.rows).find(|&i| !self[(i, c)].is_zero()) {
                Some(p) => p,
                None => continue,
            };
            for j in 0..self.cols {
                let a = self[(piv, j)].clone();
                self[(piv, j)] = self[(r, j)].clone();
                self[(r, j)] = a;
            }
            let inv = Q::one() / self[(r, c)].clone();
            for j in c..self.cols {
                let v = self[(r, j)].clone() * inv.clone();
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    let v = self[(i, j)].clone() - f.clone() * self[(r, j)].clone();
                    self[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Canonical nullspace basis (see module docs). The zero matrix yields
    /// the standard basis.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        self.rref_nullspace().1
    }

    /// Pivot columns and canonical nullspace in one pass.
    pub fn rref_nullspace(&self) -> (Vec<usize>, Vec<Vec<Q>>) {
        let mut m = self.clone();
        let pivots = m.rref();
        let ns = nullspace_from_rref(&m, &pivots);
        (pivots, ns)
    }

    /// Exact inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Mat<Q>> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Q::one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| aug[(i, n + j)].clone()))
    }

    /// Solve `A·x = b`: `None` when inconsistent, otherwise a particular
    /// solution together with the canonical nullspace basis.
    pub fn solve_affine(&self, b: &[Q]) -> Option<(Vec<Q>, Vec<Vec<Q>>)> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // row [0 … 0 | 1]
        }
        let mut particular = vec![Q::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            particular[c] = aug[(r, self.cols)].clone();
        }
        let plain = Mat::from_fn(self.rows, self.cols, |i, j| aug[(i, j)].clone());
        let ns = nullspace_from_rref(&plain, &pivots);
        Some((particular, ns))
    }
}

fn nullspace_from_rref(m: &Mat<Q>, pivots: &[usize]) -> Vec<Vec<Q>> {
    let mut is_pivot = vec![false; m.cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for f in 0..m.cols {
        if is_pivot[f] {
            continue;
        }
        let mut v = vec![Q::zero(); m.cols];
        v[f] = Q::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -m[(r, f)].clone();
        }
        basis.push(v);
    }
    basis
}

/// Exact rank of a rational matrix by fraction-free elimination.
pub fn rank_exact(m: &Mat<Q>) -> usize {
    m.bareiss_rank()
}

/// Canonical exact nullspace of a rational matrix.
pub fn nullspace_exact(m: &Mat<Q>) -> Vec<Vec<Q>> {
    m.nullspace()
}

// ---------------------------------------------------------------------------
// Incremental RREF: feed homogeneous constraint rows one at a time.
// ---------------------------------------------------------------------------

/// Maintains the RREF of the row space of everything fed to [`Self::add_row`].
/// Memory stays `O(rank · cols)` no matter how many rows stream through.
pub struct IncrementalRref {
    cols: usize,
    /// Sorted by pivot column; each row is fully reduced with a leading 1.
    rows: Vec<(usize, Vec<Q>)>,
}

impl IncrementalRref {
    pub fn new(cols: usize) -> Self {
        IncrementalRref { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Returns true when the row increased the rank.
    pub fn add_row(&mut self, mut row: Vec<Q>) -> bool {
        assert_eq!(row.len(), self.cols);
        for (pc, prow) in &self.rows {
            if row[*pc].is_zero() {
                continue;
            }
            let f = row[*pc].clone();
            for j in *pc..self.cols {
                if !prow[j].is_zero() {
                    let v = row[j].clone() - f.clone() * prow[j].clone();
                    row[j] = v;
                }
            }
            row[*pc] = Q::zero();
        }
        let lead = match row.iter().position(|x| !x.is_zero()) {
            Some(c) => c,
            None => return false,
        };
        let inv = Q::one() / row[lead].clone();
        for x in row.iter_mut().skip(lead) {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        for (_, prow) in self.rows.iter_mut() {
            if prow[lead].is_zero() {
                continue;
            }
            let f = prow[lead].clone();
            for j in lead..self.cols {
                if !row[j].is_zero() {
                    let v = prow[j].clone() - f.clone() * row[j].clone();
                    prow[j] = v;
                }
            }
            prow[lead] = Q::zero();
        }
        let pos = self.rows.partition_point(|(pc, _)| *pc < lead);
        self.rows.insert(pos, (lead, row));
        true
    }

    /// Canonical nullspace basis of the accumulated system.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        if self.rows.is_empty() {
            let mut basis = Vec::new();
            for f in 0..self.cols {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::one();
                basis.push(v);
            }
            return basis;
        }
        let m = Mat::from_rows(self.rows.iter().map(|(_, r)| r.clone()).collect::<Vec<_>>());
        let pivots: Vec<usize> = self.rows.iter().map(|(c, _)| *c).collect();
        nullspace_from_rref(&m, &pivots)
    }
}

// ---------------------------------------------------------------------------
// Numeric layer: partial-pivot LU for f64.
// ---------------------------------------------------------------------------

impl Mat<f64> {
    /// Solve `A·x = b` with partial pivoting; returns `(x, det)` or `None`
    /// for a numerically singular matrix.
    pub fn lu_solve(&self, b: &[f64]) -> Option<(Vec<f64>, f64)> {
        assert!(self.is_square());
        let n = self.rows;
        assert_eq!(b.len(), n);
        let mut a = self.to_rows();
        let mut x = b.to_vec();
        let mut det = 1.0;
        for k in 0..n {
            let piv = (k..n)
                .max_by(|&i, &j| a[i][k].abs().partial_cmp(&a[j][k].abs()).unwrap())
                .unwrap();
            if a[piv][k].abs() < 1e-300 {
                return None;
            }
            if piv != k {
                a.swap(k, piv);
                x.swap(k, piv);
                det = -det;
            }
            det *= a[k][k];
            for i in k + 1..n {
                let f = a[i][k] / a[k][k];
                if f == 0.0 {
                    continue;
                }
                for j in k..n {
                    a[i][j] -= f * a[k][j];
                }
                x[i] -= f * x[k];
            }
        }
        for i in (0..n).rev() {
            let mut s = x[i];
            for j in i + 1..n {
                s -= a[i][j] * x[j];
            }
            x[i] = s / a[i][i];
        }
        Some((x, det))
    }

    /// Determinant via LU; 0.0 for numerically singular input.
    pub fn det_f64(&self) -> f64 {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = 1.0;
        for k in 0..n {
            let piv = (k..n)
                .max_by(|&i, &j| a[i][k].abs().partial_cmp(&a[j][k].abs()).unwrap())
                .unwrap();
            if a[piv][k] == 0.0 {
                return 0.0;
            }
            if piv != k {
                a.swap(k, piv);
                det = -det;
            }
            det *= a[k][k];
            for i in k + 1..n {
                let f = a[i][k] / a[k][k];
                if f == 0.0 {
                    continue;
                }
                for j in k..n {
                    a[i][j] -= f * a[k][j];
                }
            }
        }
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use crate::{q, QPoly};

    #[test]
    fn det_poly_x_squared_minus_one() {
        // det [[x, 1], [1, x]] = x² − 1
        let x = QPoly::var(1, 0);
        let one = QPoly::one(1);
        let m = Mat::from_rows(vec![vec![x.clone(), one.clone()], vec![one, x]]);
        let d = m.bareiss_det();
        let want =
            QPoly::from_terms(1, [(Monomial(vec![2]), q(1)), (Monomial(vec![0]), q(-1))]);
        assert_eq!(d, want);
    }

    #[test]
    fn det_poly_sum_of_squares() {
        // det [[x, −y], [y, x]] = x² + y²
        let x = QPoly::var(2, 0);
        let y = QPoly::var(2, 1);
        let m = Mat::from_rows(vec![vec![x.clone(), -&y], vec![y.clone(), x]]);
        let d = m.bareiss_det();
        let want = QPoly::from_terms(
            2,
            [(Monomial(vec![2, 0]), q(1)), (Monomial(vec![0, 2]), q(1))],
        );
        assert_eq!(d, want);
    }

    #[test]
    fn adjugate_2x2_closed_form() {
        // adj [[a,b],[c,d]] = [[d,−b],[−c,a]] on a polynomial instance
        let a = QPoly::var(4, 0);
        let b = QPoly::var(4, 1);
        let c = QPoly::var(4, 2);
        let d = QPoly::var(4, 3);
        let m = Mat::from_rows(vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]);
        let adj = m.adjugate();
        assert_eq!(adj[(0, 0)], d);
        assert_eq!(adj[(0, 1)], -&b);
        assert_eq!(adj[(1, 0)], -&c);
        assert_eq!(adj[(1, 1)], a);
    }

    #[test]
    fn adjugate_identity_is_identity() {
        let one = QPoly::one(1);
        let zero = QPoly::zero(1);
        let m: Mat<QPoly> =
            Mat::from_fn(3, 3, |i, j| if i == j { one.clone() } else { zero.clone() });
        assert_eq!(m.adjugate(), m);
    }

    #[test]
    fn adjugate_complex_left_rep() {
        // adj [[x,−y],[y,x]] = [[x, y],[−y, x]]
        let x = QPoly::var(2, 0);
        let y = QPoly::var(2, 1);
        let m = Mat::from_rows(vec![vec![x.clone(), -&y], vec![y.clone(), x.clone()]]);
        let adj = m.adjugate();
        assert_eq!(adj[(0, 0)], x);
        assert_eq!(adj[(0, 1)], y);
        assert_eq!(adj[(1, 0)], -&y);
        assert_eq!(adj[(1, 1)], x);
    }

    #[test]
    fn nullspace_canonical_single_row() {
        // [[1, 1]] → {(−1, 1)}
        let m = Mat::from_rows(vec![vec![q(1), q(1)]]);
        assert_eq!(m.nullspace(), vec![vec![q(-1), q(1)]]);
    }

    #[test]
    fn nullspace_of_zero_matrix_is_standard_basis() {
        let m: Mat<Q> = Mat::zero(2, 3);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 3);
        for (i, v) in ns.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(*x, if i == j { q(1) } else { q(0) });
            }
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_exact(&Mat::identity(3)), 3);
        let ones = Mat::from_rows(vec![vec![q(1), q(1)], vec![q(1), q(1)]]);
        assert_eq!(rank_exact(&ones), 1);
    }

    #[test]
    fn rank_plus_nullity_is_cols() {
        let m = Mat::from_rows(vec![
            vec![q(1), q(2), q(3), q(4)],
            vec![q(2), q(4), q(6), q(8)],
            vec![q(0), q(1), q(1), q(0)],
        ]);
        let ns = m.nullspace();
        assert_eq!(rank_exact(&m) + ns.len(), m.cols);
        for v in &ns {
            let prod = m.mul_vec(v);
            assert!(prod.iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn incremental_rref_matches_batch() {
        let rows = vec![
            vec![q(1), q(2), q(0), q(1)],
            vec![q(0), q(0), q(1), q(-1)],
            vec![q(1), q(2), q(1), q(0)],
            vec![q(2), q(4), q(1), q(1)],
        ];
        let mut inc = IncrementalRref::new(4);
        for r in rows.clone() {
            inc.add_row(r);
        }
        let batch = Mat::from_rows(rows).nullspace();
        assert_eq!(inc.nullspace(), batch);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Mat::from_rows(vec![
            vec![q(2), q(1), q(0)],
            vec![q(1), q(1), q(1)],
            vec![q(0), q(3), q(1)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Mat::identity(3));
        let sing = Mat::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn lu_solve_f64() {
        let m = Mat::from_rows(vec![vec![0.0, 2.0], vec![3.0, 1.0]]);
        let (x, det) = m.lu_solve(&[4.0, 5.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 2.0).abs() < 1e-12);
        assert!((det - (-6.0)).abs() < 1e-12);
    }
}

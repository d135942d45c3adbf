//! Built-in algebras, addressable as `name` or `name:<n>`.
//!
//! Each entry carries optional metadata for the norm checks: a designated
//! normalized uncurling metric and an oracle for the special unital norm it
//! induces (determinant of a self-adjoint representation image, or the
//! square root of the algebraic norm for the involutive families).

use crate::algebra::Algebra;
use crate::error::Error;
use crate::matrix::Mat;
use crate::{q, QMat, Result, Q};
use num_traits::{One, Zero};

#[derive(Debug, Clone)]
pub struct RegistryEntry {
    pub algebra: Algebra,
    pub meta: RegistryMeta,
}

#[derive(Debug, Clone, Default)]
pub struct RegistryMeta {
    /// A normalized uncurling metric known for this algebra.
    pub designated_metric: Option<QMat>,
    /// Closed-form oracle for the special unital norm of the designated
    /// metric.
    pub special_norm: Option<SpecialNormOracle>,
}

#[derive(Debug, Clone)]
pub enum SpecialNormOracle {
    /// `ℓ(s) = det(L_target(Ω·s))^(1/dim(target))`, where `L_target` is the
    /// left regular representation of the (self-adjoint-representation)
    /// target and `Ω` an epimorphism onto it.
    DetOfRep { omega: QMat, target: Algebra },
    /// `ℓ(s) = sqrt(Σ δ_i·x_i²)` with `δ` the involution signature
    /// (Euclidean for the doubling construction, Minkowski for spin).
    AlgebraicNormSqrt { signature: Vec<i64> },
}

/// Names accepted by [`registry`], with one-line descriptions.
pub fn registry_names() -> Vec<(&'static str, &'static str)> {
    vec![
        ("complex", "the complex numbers (dim 2)"),
        ("split-complex", "the split-complex numbers (dim 2)"),
        ("rxr", "direct product R×R (dim 2)"),
        ("dual", "the dual numbers (dim 2)"),
        ("rrr", "direct product R×R×R (dim 3)"),
        ("rxc", "direct product R×C (dim 3)"),
        ("rxd", "direct product R×D, D the dual numbers (dim 3)"),
        ("toeplitz:<n>", "upper triangular Toeplitz n×n matrices (dim n)"),
        ("nil2", "unit plus 2-dim zero-product radical (dim 3)"),
        ("splitnil", "split-complex plus 1-dim twisted radical (dim 3)"),
        ("matrix:<n>", "full matrix algebra on n×n matrices (dim n²), columns stacked"),
        ("quaternion", "the quaternions (dim 4)"),
        ("cayley-dickson:<d>", "doubling-construction algebra of dim d ∈ {1,2,4,8,16}"),
        ("octonion", "alias for cayley-dickson:8"),
        ("spin:<m>", "spin factor on R⊕R^m (dim m+1, m ≥ 2)"),
        ("prodr:<n>", "direct product of n copies of R (dim n)"),
        ("ut2", "2×2 upper triangular matrices [[x, z], [0, y]] (dim 3)"),
        ("ut4", "3×3 pattern [[x, y, w], [0, x, z], [0, 0, x]] (dim 4)"),
        ("ut5", "3×3 pattern [[x, z, w], [0, x, v], [0, 0, y]] (dim 5)"),
        ("nilpotent", "nilpotent shift-matrix span N, N², N³ (dim 3, nonunital)"),
    ]
}

/// Look up a built-in algebra.
pub fn registry(name: &str) -> Result<Algebra> {
    registry_entry(name).map(|e| e.algebra)
}

/// Look up a built-in algebra together with its metadata.
pub fn registry_entry(name: &str) -> Result<RegistryEntry> {
    let (base, param) = match name.split_once(':') {
        Some((b, p)) => {
            let n: usize = p
                .parse()
                .map_err(|_| Error::usage(format!("bad registry parameter in `{name}`")))?;
            (b, Some(n))
        }
        None => (name, None),
    };
    let no_param = || -> Result<()> {
        if param.is_some() {
            Err(Error::usage(format!("registry algebra `{base}` takes no parameter")))
        } else {
            Ok(())
        }
    };
    match (base, param) {
        ("complex", _) => {
            no_param()?;
            Ok(self_adjoint_entry(cayley_dickson(2)?))
        }
        ("split-complex", _) => {
            no_param()?;
            let mut c = StructureBuilder::new(2);
            c.unital_commutative(&[(1, 1, vec![(0, q(1))])]);
            Ok(self_adjoint_entry(c.build("split-complex")))
        }
        ("rxr", _) => {
            no_param()?;
            let mut alg = prod_r(2)?;
            alg.name = "rxr".into();
            Ok(self_adjoint_entry(alg))
        }
        ("dual", _) => {
            no_param()?;
            let mut c = StructureBuilder::new(2);
            c.unital_commutative(&[(1, 1, vec![])]);
            quotient_entry(c.build("dual"), first_coords(2, 1), prod_r(1)?)
        }
        ("rrr", _) => {
            no_param()?;
            let mut alg = prod_r(3)?;
            alg.name = "rrr".into();
            Ok(self_adjoint_entry(alg))
        }
        ("prodr", Some(n)) if n >= 1 => Ok(self_adjoint_entry(prod_r(n)?)),
        ("rxc", _) => {
            no_param()?;
            let mut c = StructureBuilder::new(3);
            c.set(0, 0, 0, q(1));
            // components 1, 2 form a complex plane
            c.set(1, 1, 1, q(1));
            c.set(1, 2, 2, q(1));
            c.set(2, 1, 2, q(1));
            c.set(2, 2, 1, q(-1));
            Ok(self_adjoint_entry(c.build("rxc")))
        }
        ("rxd", _) => {
            no_param()?;
            let mut c = StructureBuilder::new(3);
            c.set(0, 0, 0, q(1));
            c.set(1, 1, 1, q(1));
            c.set(1, 2, 2, q(1));
            c.set(2, 1, 2, q(1));
            quotient_entry(c.build("rxd"), first_coords(3, 2), prod_r(2)?)
        }
        ("toeplitz", Some(n)) if n >= 1 => {
            let mut c = StructureBuilder::new(n);
            for i in 0..n {
                for j in 0..n {
                    if i + j < n {
                        c.set(i, j, i + j, q(1));
                    }
                }
            }
            quotient_entry(c.build(&format!("toeplitz:{n}")), first_coords(n, 1), prod_r(1)?)
        }
        ("nil2", _) => {
            no_param()?;
            let mut c = StructureBuilder::new(3);
            c.unital_commutative(&[(1, 1, vec![]), (1, 2, vec![]), (2, 2, vec![])]);
            quotient_entry(c.build("nil2"), first_coords(3, 1), prod_r(1)?)
        }
        ("splitnil", _) => {
            no_param()?;
            let mut c = StructureBuilder::new(3);
            c.set(0, 0, 0, q(1));
            c.set(0, 1, 1, q(1));
            c.set(1, 0, 1, q(1));
            c.set(0, 2, 2, q(1));
            c.set(2, 0, 2, q(1));
            c.set(1, 1, 0, q(1));
            c.set(1, 2, 2, q(-1));
            c.set(2, 1, 2, q(1));
            let split = registry("split-complex")?;
            quotient_entry(c.build("splitnil"), first_coords(3, 2), split)
        }
        ("matrix", Some(n)) if n >= 1 => {
            let dim = n * n;
            let idx = |p: usize, qq: usize| qq * n + p; // columns stacked
            let mut c = StructureBuilder::new(dim);
            for p in 0..n {
                for qq in 0..n {
                    for r in 0..n {
                        for s in 0..n {
                            if qq == r {
                                c.set(idx(p, qq), idx(r, s), idx(p, s), q(1));
                            }
                        }
                    }
                }
            }
            Ok(self_adjoint_entry(c.build(&format!("matrix:{n}"))))
        }
        ("quaternion", _) => {
            no_param()?;
            star_entry(cayley_dickson(4)?)
        }
        ("octonion", _) => {
            no_param()?;
            star_entry(cayley_dickson(8)?)
        }
        ("cayley-dickson", Some(d)) => {
            let alg = cayley_dickson(d)?;
            if d == 2 {
                return Ok(self_adjoint_entry(alg));
            }
            star_entry(alg)
        }
        ("spin", Some(m)) if m >= 2 => {
            let n = m + 1;
            let mut c = StructureBuilder::new(n);
            c.set(0, 0, 0, q(1));
            for i in 1..n {
                c.set(0, i, i, q(1));
                c.set(i, 0, i, q(1));
                c.set(i, i, 0, q(1));
            }
            let alg = c.build(&format!("spin:{m}"));
            let mut sig = vec![1i64; n];
            for s in sig.iter_mut().skip(1) {
                *s = -1;
            }
            // Conjugation flips the vector part; N(s) = x₀² − Σᵢ xᵢ² and the
            // designated metric K₁K₂ is the identity.
            Ok(RegistryEntry {
                algebra: alg,
                meta: RegistryMeta {
                    designated_metric: Some(Mat::identity(n)),
                    special_norm: Some(SpecialNormOracle::AlgebraicNormSqrt { signature: sig }),
                },
            })
        }
        ("ut2", _) => {
            no_param()?;
            let mut c = StructureBuilder::new(3);
            c.set(0, 0, 0, q(1));
            c.set(1, 1, 1, q(1));
            c.set(0, 2, 2, q(1));
            c.set(2, 1, 2, q(1));
            quotient_entry(c.build("ut2"), first_coords(3, 2), prod_r(2)?)
        }
        ("ut4", _) => {
            no_param()?;
            let mut c = StructureBuilder::new(4);
            for i in 1..4 {
                c.set(0, i, i, q(1));
                c.set(i, 0, i, q(1));
            }
            c.set(0, 0, 0, q(1));
            c.set(1, 2, 3, q(1));
            quotient_entry(c.build("ut4"), first_coords(4, 1), prod_r(1)?)
        }
        ("ut5", _) => {
            no_param()?;
            let mut c = StructureBuilder::new(5);
            c.set(0, 0, 0, q(1));
            c.set(1, 1, 1, q(1));
            c.set(0, 2, 2, q(1));
            c.set(2, 0, 2, q(1));
            c.set(0, 3, 3, q(1));
            c.set(3, 1, 3, q(1));
            c.set(0, 4, 4, q(1));
            c.set(4, 1, 4, q(1));
            c.set(2, 3, 4, q(1));
            quotient_entry(c.build("ut5"), first_coords(5, 2), prod_r(2)?)
        }
        ("nilpotent", _) => {
            no_param()?;
            let mut c = StructureBuilder::new(3);
            c.set(0, 0, 1, q(1));
            c.set(0, 1, 2, q(1));
            c.set(1, 0, 2, q(1));
            Ok(RegistryEntry { algebra: c.build("nilpotent"), meta: RegistryMeta::default() })
        }
        _ => Err(Error::usage(format!("unknown registry algebra `{name}`"))),
    }
}

/// The transpose permutation on n×n matrices in columns-stacked coordinates,
/// as an n²×n² matrix. This is the designated normalized uncurling metric of
/// the full matrix algebra.
pub fn transpose_permutation(n: usize) -> QMat {
    let dim = n * n;
    let idx = |p: usize, qq: usize| qq * n + p;
    let mut t = Mat::zero(dim, dim);
    for p in 0..n {
        for qq in 0..n {
            t[(idx(p, qq), idx(qq, p))] = Q::one();
        }
    }
    t
}

// ---------------------------------------------------------------------------
// Builders.
// ---------------------------------------------------------------------------

struct StructureBuilder {
    n: usize,
    c: Vec<Q>,
}

impl StructureBuilder {
    fn new(n: usize) -> Self {
        StructureBuilder { n, c: vec![Q::zero(); n * n * n] }
    }

    fn set(&mut self, i: usize, j: usize, k: usize, v: Q) {
        self.c[(i * self.n + j) * self.n + k] = v;
    }

    /// e₀ acts as unit, all other products commutative per the given table;
    /// `(i, j, products)` sets eᵢ·eⱼ = eⱼ·eᵢ = Σ products.
    fn unital_commutative(&mut self, table: &[(usize, usize, Vec<(usize, Q)>)]) {
        let n = self.n;
        self.set(0, 0, 0, Q::one());
        for i in 1..n {
            self.set(0, i, i, Q::one());
            self.set(i, 0, i, Q::one());
        }
        for (i, j, prods) in table {
            for (k, v) in prods {
                self.set(*i, *j, *k, v.clone());
                if i != j {
                    self.set(*j, *i, *k, v.clone());
                }
            }
        }
    }

    fn build(self, name: &str) -> Algebra {
        Algebra::from_structure(name, self.n, self.c).expect("built-in structure is well formed")
    }
}

fn prod_r(n: usize) -> Result<Algebra> {
    let mut c = StructureBuilder::new(n);
    for i in 0..n {
        c.set(i, i, i, q(1));
    }
    Ok(c.build(&format!("prodr:{n}")))
}

/// Doubling construction; dims 1, 2, 4, 8, 16.
fn cayley_dickson(dim: usize) -> Result<Algebra> {
    if !matches!(dim, 1 | 2 | 4 | 8 | 16) {
        return Err(Error::usage("doubling-construction dimension must be 1, 2, 4, 8, or 16"));
    }
    // Multiplication table built recursively: basis vectors are pairs
    // (a, b), conjugation negates every coordinate but the first.
    fn mul_table(dim: usize) -> Vec<Vec<Vec<Q>>> {
        if dim == 1 {
            return vec![vec![vec![Q::one()]]];
        }
        let h = dim / 2;
        let sub = mul_table(h);
        let conj = |v: &[Q]| -> Vec<Q> {
            v.iter()
                .enumerate()
                .map(|(i, x)| if i == 0 { x.clone() } else { -x.clone() })
                .collect()
        };
        let mulv = |a: &[Q], b: &[Q]| -> Vec<Q> {
            let mut out = vec![Q::zero(); h];
            for i in 0..h {
                if a[i].is_zero() {
                    continue;
                }
                for j in 0..h {
                    if b[j].is_zero() {
                        continue;
                    }
                    let f = a[i].clone() * b[j].clone();
                    for k in 0..h {
                        if !sub[i][j][k].is_zero() {
                            out[k] = out[k].clone() + sub[i][j][k].clone() * f.clone();
                        }
                    }
                }
            }
            out
        };
        let mut table = vec![vec![vec![Q::zero(); dim]; dim]; dim];
        for i in 0..dim {
            let (a1, b1) = split_basis(i, h);
            for j in 0..dim {
                let (a2, b2) = split_basis(j, h);
                // (a1, b1)(a2, b2) = (a1·a2 − b2*·b1, b2·a1 + b1·a2*)
                let left = sub_vec(&mulv(&a1, &a2), &mulv(&conj(&b2), &b1));
                let right = add_vec(&mulv(&b2, &a1), &mulv(&b1, &conj(&a2)));
                for k in 0..h {
                    table[i][j][k] = left[k].clone();
                    table[i][j][h + k] = right[k].clone();
                }
            }
        }
        table
    }
    fn split_basis(i: usize, h: usize) -> (Vec<Q>, Vec<Q>) {
        let mut a = vec![Q::zero(); h];
        let mut b = vec![Q::zero(); h];
        if i < h {
            a[i] = Q::one();
        } else {
            b[i - h] = Q::one();
        }
        (a, b)
    }
    fn add_vec(a: &[Q], b: &[Q]) -> Vec<Q> {
        a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
    }
    fn sub_vec(a: &[Q], b: &[Q]) -> Vec<Q> {
        a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
    }

    let table = mul_table(dim);
    let mut flat = Vec::with_capacity(dim * dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                flat.push(table[i][j][k].clone());
            }
        }
    }
    let name = match dim {
        1 => "cayley-dickson:1".to_string(),
        2 => "complex".to_string(),
        4 => "quaternion".to_string(),
        8 => "octonion".to_string(),
        d => format!("cayley-dickson:{d}"),
    };
    Algebra::from_structure(&name, dim, flat)
}

/// `Ω` projecting onto the first `k` coordinates.
fn first_coords(n: usize, k: usize) -> QMat {
    Mat::from_fn(k, n, |i, j| if i == j { Q::one() } else { Q::zero() })
}

/// Entry for an algebra whose left regular representation is self-adjoint:
/// the designated metric is the scaled trace form and the special norm is
/// det of the representation.
fn self_adjoint_entry(alg: Algebra) -> RegistryEntry {
    let n = alg.dim;
    let norm_sq = alg.unit_norm_sq.clone().expect("unital");
    let scale = norm_sq / q(n as i64);
    let designated = alg.trace_form().scale(&scale);
    let meta = RegistryMeta {
        designated_metric: Some(designated),
        special_norm: Some(SpecialNormOracle::DetOfRep {
            omega: Mat::identity(n),
            target: alg.clone(),
        }),
    };
    RegistryEntry { algebra: alg, meta }
}

/// Entry whose special norm comes from an epimorphism `Ω` onto a quotient
/// with self-adjoint representation.
fn quotient_entry(alg: Algebra, omega: QMat, target: Algebra) -> Result<RegistryEntry> {
    let norm_sq = alg.unit_norm_sq.clone().expect("unital");
    let m = target.dim;
    let scale = norm_sq / q(m as i64);
    // (‖1‖²_src / m)·Ωᵀ·traceform(target)·Ω
    let tf = target.trace_form();
    let designated = (&(&omega.transpose() * &tf) * &omega).scale(&scale);
    Ok(RegistryEntry {
        algebra: alg,
        meta: RegistryMeta {
            designated_metric: Some(designated),
            special_norm: Some(SpecialNormOracle::DetOfRep { omega, target }),
        },
    })
}

/// Entry for the involutive doubling algebras: Euclidean algebraic norm.
fn star_entry(alg: Algebra) -> Result<RegistryEntry> {
    let n = alg.dim;
    let mut designated = Mat::identity(n);
    for i in 1..n {
        designated[(i, i)] = -Q::one();
    }
    Ok(RegistryEntry {
        algebra: alg,
        meta: RegistryMeta {
            designated_metric: Some(designated),
            special_norm: Some(SpecialNormOracle::AlgebraicNormSqrt { signature: vec![1; n] }),
        },
    })
}

//! Exact symbolic-numeric engine for uncurling metrics of finite-dimensional
//! real unital algebras.
//!
//! An algebra is given by rational structure constants. The library computes,
//! over exact rationals, the vector space of symmetric matrices `L` for which
//! the vector field `L·f(s)` is curl-free near the unit (the kernel of the
//! map sending a metric to the rotation tensor of that field), derives
//! isomorphism invariants from it, and numerically evaluates the dual
//! "unital norm" line integrals.
//!
//! Layout:
//! - [`poly`], [`univar`], [`partfrac`], [`matrix`]: the exact computer
//!   algebra substrate (multivariate/univariate polynomials over ℚ, exact
//!   linear algebra, antiderivative term classification),
//! - [`algebra`], [`registry`]: structure constants, validation, left regular
//!   representation, symbolic inverse / power fields, built-in algebras,
//! - [`skewer`]: curl constraint assembly and the anti-rotor nullspace,
//! - [`invariants`]: rank/determinant/variety invariants and the
//!   rational-log-arctan triples,
//! - [`norms`]: adaptive quadrature of the norm integrals and the floating
//!   point verification battery.

pub mod algebra;
pub mod error;
pub mod invariants;
pub mod matrix;
pub mod norms;
pub mod partfrac;
pub mod poly;
pub mod registry;
pub mod scalar;
pub mod skewer;
pub mod univar;

pub use error::Error;

/// Exact rational scalar used throughout the symbolic core.
pub type Q = num_rational::BigRational;
/// Multivariate polynomial over ℚ.
pub type QPoly = poly::MultiPoly<Q>;
/// Univariate polynomial over ℚ.
pub type QUniPoly = univar::UniPoly<Q>;
/// Dense matrix over ℚ.
pub type QMat = matrix::Mat<Q>;
/// Dense matrix of multivariate polynomials over ℚ.
pub type QPolyMat = matrix::Mat<QPoly>;

/// Result alias for fallible operations in this crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand: rational from an integer.
pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Shorthand: rational `n/d`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

//! Exact arithmetic for quantum generalized Heisenberg algebras
//! H_q(f, g) = ⟨x, y, h | hx = x f(h), yh = f(h) y, yx − q xy = g(h)⟩
//! over ℚ and prime fields.
//!
//! The kernel is generic over the ground-field [`Scalar`]; the aliases below
//! fix it to [`Rational`] or [`Fp`].

pub mod algebra;
pub mod classify;
pub mod error;
pub mod expr;
pub mod io;
pub mod limits;
pub mod poly;
pub mod scalar;
pub mod structure;

pub use algebra::{Algebra, AlgebraParams, BiDegree, Element, Monomial};
pub use error::{Error, Result};
pub use limits::Limits;
pub use poly::{Degree, Poly};
pub use scalar::{FieldKind, FieldSpec, Fp, Rational, Scalar};

pub type QPoly = Poly<Rational>;
pub type QAlgebra = Algebra<Rational>;
pub type QElement = Element<Rational>;
pub type FpPoly = Poly<Fp>;
pub type FpAlgebra = Algebra<Fp>;
pub type FpElement = Element<Fp>;

pub use scalar::rational::rat;

//! The algebra H_q(f, g): generators x, y, h with relations
//! `hx = x f(h)`, `yh = f(h) y`, `yx - q xy = g(h)`.

mod element;
mod product;
mod rewrite;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{Degree, Poly};
use crate::scalar::{FieldSpec, Scalar};

pub use element::{BiDegree, Element, Monomial, Terms};
pub use rewrite::{oracle_multiply, reduce_combination, reduce_word, FreeCombination, FreeWord, Letter, Strategy};

/// One presentation (q, f, g) of H_q(f, g) over a ground field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraParams<K> {
    pub field: FieldSpec,
    pub q: K,
    pub f: Poly<K>,
    pub g: Poly<K>,
}

impl<K: Scalar> AlgebraParams<K> {
    /// Validates that every parameter lives over `field`.
    pub fn new(field: FieldSpec, q: K, f: Poly<K>, g: Poly<K>) -> Result<Self> {
        if !K::supports(&field) {
            return Err(Error::FieldMismatch);
        }
        Ok(AlgebraParams {
            q: q.bind(&field)?,
            f: f.bind(&field)?,
            g: g.bind(&field)?,
            field,
        })
    }

    pub fn deg_f(&self) -> Degree {
        self.f.degree()
    }

    /// Domain criterion: q ≠ 0 and deg f ≥ 1.
    pub fn is_domain(&self) -> bool {
        !self.q.is_zero() && self.deg_f() >= Degree::Finite(1)
    }

    /// deg f ≤ 1, i.e. a generalized down-up algebra.
    pub fn is_gdua(&self) -> bool {
        self.deg_f() <= Degree::Finite(1)
    }
}

impl<K: Scalar> fmt::Display for AlgebraParams<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{}({}, {}) over {}", self.q, self.f, self.g, self.field)
    }
}

type YxMemo<K> = HashMap<(u32, u32), Arc<Terms<K>>>;

struct Inner<K> {
    params: AlgebraParams<K>,
    limits: Limits,
    /// Normal forms of y^b x^c, keyed by (b, c).
    yx_memo: RwLock<YxMemo<K>>,
    /// Γ_c for c = 1, 2, ... (index c - 1).
    gamma_memo: RwLock<Vec<Poly<K>>>,
}

/// Shared handle to an algebra instance; cloning is cheap.
///
/// The product caches live here. They only ever hold values that are a pure
/// function of the key, so concurrent use is observationally pure.
#[derive(Clone)]
pub struct Algebra<K>(Arc<Inner<K>>);

impl<K: Scalar> Algebra<K> {
    pub fn new(field: FieldSpec, q: K, f: Poly<K>, g: Poly<K>) -> Result<Self> {
        Ok(Self::from_params(AlgebraParams::new(field, q, f, g)?))
    }

    pub fn from_params(params: AlgebraParams<K>) -> Self {
        Self::with_limits(params, Limits::default())
    }

    pub fn with_limits(params: AlgebraParams<K>, limits: Limits) -> Self {
        Algebra(Arc::new(Inner {
            params,
            limits,
            yx_memo: RwLock::new(HashMap::new()),
            gamma_memo: RwLock::new(Vec::new()),
        }))
    }

    pub fn params(&self) -> &AlgebraParams<K> {
        &self.0.params
    }

    pub fn field(&self) -> &FieldSpec {
        &self.0.params.field
    }

    pub fn q(&self) -> &K {
        &self.0.params.q
    }

    pub fn f(&self) -> &Poly<K> {
        &self.0.params.f
    }

    pub fn g(&self) -> &Poly<K> {
        &self.0.params.g
    }

    pub fn limits(&self) -> &Limits {
        &self.0.limits
    }

    /// Same presentation (identical handle or equal parameters).
    pub fn same_as(&self, other: &Algebra<K>) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.params == other.0.params
    }

    pub(crate) fn check_same(&self, other: &Algebra<K>) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// The field-aware scalar for the integer `n`.
    pub fn int(&self, n: i64) -> K {
        K::from_int(n, self.field())
    }

    pub fn x(&self) -> Element<K> {
        Element::monomial(self, 1, Poly::one(), 0)
    }

    pub fn y(&self) -> Element<K> {
        Element::monomial(self, 0, Poly::one(), 1)
    }

    pub fn h(&self) -> Element<K> {
        Element::from_poly(self, Poly::h())
    }

    pub fn one(&self) -> Element<K> {
        Element::from_poly(self, Poly::one())
    }

    pub fn zero(&self) -> Element<K> {
        Element::zero(self)
    }
}

impl<K: Scalar> fmt::Debug for Algebra<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Algebra").field(&self.0.params).finish()
    }
}

impl<K: Scalar> PartialEq for Algebra<K> {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl<K: Scalar> Eq for Algebra<K> {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::rat;
    use crate::scalar::{Fp, Rational};

    #[test]
    fn presentation_flags() {
        let q = FieldSpec::rationals();
        let a = AlgebraParams::new(q, rat(1, 1), Poly::h(), Poly::h()).unwrap();
        assert!(a.is_domain() && a.is_gdua());
        let sq = Poly::monomial(rat(1, 1), 2);
        let b = AlgebraParams::new(q, rat(0, 1), sq, Poly::h()).unwrap();
        assert!(!b.is_domain() && !b.is_gdua());
        let c = AlgebraParams::new(q, rat(1, 1), Poly::constant(rat(5, 1)), Poly::h()).unwrap();
        assert!(!c.is_domain());
    }

    #[test]
    fn prime_field_presentation() {
        let f7 = FieldSpec::prime(7).unwrap();
        let f = Poly::from_coeffs(vec![Fp::new(0, &f7), Fp::new(0, &f7), Fp::new(1, &f7)]);
        let g = Poly::from_coeffs(vec![Fp::new(0, &f7), Fp::new(1, &f7), Fp::new(1, &f7)]);
        let a = AlgebraParams::new(f7, Fp::new(3, &f7), f, g).unwrap();
        assert_eq!(a.to_string(), "H_3(h^2, h^2 + h) over F_7");
    }

    #[test]
    fn mismatched_parameters_are_rejected() {
        let f7 = FieldSpec::prime(7).unwrap();
        let f5 = FieldSpec::prime(5).unwrap();
        let f = Poly::constant(Fp::new(1, &f5));
        assert_eq!(
            AlgebraParams::new(f7, Fp::new(3, &f7), f, Poly::zero()),
            Err(Error::FieldMismatch)
        );
        assert_eq!(
            AlgebraParams::<Rational>::new(f7, rat(1, 1), Poly::zero(), Poly::zero()),
            Err(Error::FieldMismatch)
        );
    }
}

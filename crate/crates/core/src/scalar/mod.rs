//! Exact ground-field scalars.
//!
//! Everything above this module is generic over [`Scalar`]; the two
//! implementations are [`Rational`] (ℚ, arbitrary precision) and [`Fp`]
//! (prime fields with a runtime modulus).

mod fp;
pub mod rational;

use std::fmt::{self, Debug, Display};
use std::ops::{Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::limits::Limits;

pub use fp::Fp;
pub use rational::Rational;

/// The kind of a computable ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    Rationals,
    PrimeField(u64),
}

/// A validated ground-field descriptor: ℚ or F_p with p prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec(FieldKind);

impl FieldSpec {
    pub fn new(kind: FieldKind) -> Result<Self> {
        match kind {
            FieldKind::Rationals => Ok(FieldSpec(kind)),
            FieldKind::PrimeField(p) if is_prime(p) => Ok(FieldSpec(kind)),
            FieldKind::PrimeField(p) => Err(Error::NotPrime(p)),
        }
    }

    pub fn rationals() -> Self {
        FieldSpec(FieldKind::Rationals)
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(FieldKind::PrimeField(p))
    }

    pub fn kind(&self) -> FieldKind {
        self.0
    }

    /// 0 for ℚ, p for F_p.
    pub fn characteristic(&self) -> u64 {
        match self.0 {
            FieldKind::Rationals => 0,
            FieldKind::PrimeField(p) => p,
        }
    }

    /// The modulus when this is a prime field.
    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            FieldKind::Rationals => None,
            FieldKind::PrimeField(p) => Some(p),
        }
    }

    /// Rejects exhaustive searches over fields larger than the search cap.
    pub(crate) fn check_search(&self, limits: &Limits) -> Result<u64> {
        match self.0 {
            FieldKind::Rationals => Err(Error::PreconditionViolated(
                "exhaustive search requires a finite field".into(),
            )),
            FieldKind::PrimeField(p) if p > limits.max_search => Err(crate::error::capacity(
                "field size for exhaustive search",
                p,
                limits.max_search,
            )),
            FieldKind::PrimeField(p) => Ok(p),
        }
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact element of a ground field.
///
/// `Zero::zero()` and `One::one()` are field-agnostic constants; values that
/// have been through [`Scalar::bind`] or [`Scalar::from_int`] belong to a
/// specific field. Mixing values bound to different fields through the
/// operator traits panics; the `try_*` methods report
/// [`Error::FieldMismatch`] instead.
pub trait Scalar:
    Clone + Debug + Display + Eq + Ord + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Send + Sync + 'static
{
    /// Whether values of this type can live in `field`.
    fn supports(field: &FieldSpec) -> bool;

    /// The image of the integer `n` in `field`.
    fn from_int(n: i64, field: &FieldSpec) -> Self;

    /// Attaches `self` to `field`, failing if it already belongs elsewhere.
    fn bind(&self, field: &FieldSpec) -> Result<Self>;

    /// The field this value is bound to; `None` for field-agnostic constants.
    fn field(&self) -> Option<FieldSpec>;

    /// `self · n` for an integer `n`.
    fn mul_int(&self, n: i64) -> Self;

    fn inv(&self) -> Result<Self>;

    /// Parses the scalar text format (`-3`, `5/6` over ℚ; residues over F_p).
    fn parse(text: &str, field: &FieldSpec) -> Result<Self>;

    /// All `u` in the ground field with `u^m = c`, ascending.
    fn nth_roots(m: u32, c: &Self, field: &FieldSpec, limits: &Limits) -> Result<Vec<Self>>;

    /// Smallest `l >= 1` with `self^l = 1`, if any.
    fn root_of_unity_order(&self, field: &FieldSpec, limits: &Limits) -> Result<Option<u64>>;

    /// A finite superset of the ground-field roots of the nonzero polynomial
    /// with ascending coefficients `coeffs`, in ascending order.
    fn root_candidates(coeffs: &[Self], field: &FieldSpec, limits: &Limits) -> Result<Vec<Self>>;

    /// Every field element in ascending order, for finite fields.
    fn elements(field: &FieldSpec, limits: &Limits) -> Result<Option<Vec<Self>>>;

    /// `self + other` by reference; override where normalization is costly.
    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    /// Coefficients of the product of two nonempty coefficient vectors.
    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        let mut out = vec![Self::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
            }
        }
        out
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        check_same_field(self, other)?;
        Ok(self.clone() + other.clone())
    }

    fn try_sub(&self, other: &Self) -> Result<Self> {
        check_same_field(self, other)?;
        Ok(self.clone() - other.clone())
    }

    fn try_mul(&self, other: &Self) -> Result<Self> {
        check_same_field(self, other)?;
        Ok(self.clone() * other.clone())
    }

    fn try_div(&self, other: &Self) -> Result<Self> {
        check_same_field(self, other)?;
        Ok(self.clone() * other.inv()?)
    }

    fn pow(&self, exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

fn check_same_field<K: Scalar>(a: &K, b: &K) -> Result<()> {
    match (a.field(), b.field()) {
        (Some(fa), Some(fb)) if fa != fb => Err(Error::FieldMismatch),
        _ => Ok(()),
    }
}

/// Positive divisors of `n`, ascending.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_make() {
        assert_eq!(FieldSpec::new(FieldKind::Rationals).unwrap().characteristic(), 0);
        assert_eq!(FieldSpec::prime(7).unwrap().modulus(), Some(7));
        assert_eq!(FieldSpec::prime(6), Err(Error::NotPrime(6)));
        assert_eq!(FieldSpec::prime(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(999_983));
        assert!(!is_prime(999_981));
    }

    #[test]
    fn divisor_listing() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }
}

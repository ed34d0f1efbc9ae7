//! Dense univariate polynomials in `h` over a [`Scalar`] field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{capacity, Error, Result};
use crate::limits::Limits;
use crate::scalar::{FieldSpec, Scalar};

/// Polynomial degree; the zero polynomial has degree `NegInfinity`, which
/// orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Coefficients ascending in `h` with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

impl<K: Scalar> Poly<K> {
    pub fn from_coeffs(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The identity polynomial `h`.
    pub fn h() -> Self {
        Self::monomial(K::one(), 1)
    }

    /// `c·h^d`.
    pub fn monomial(c: K, d: usize) -> Self {
        let mut coeffs = vec![K::zero(); d];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// Binds every coefficient to `field`.
    pub fn bind(&self, field: &FieldSpec) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|c| c.bind(field)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// Coefficient of `h^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn eval(&self, at: &K) -> K {
        self.coeffs
            .iter()
            .rev()
            .fold(K::zero(), |acc, c| acc.mul_ref(at).add_ref(c))
    }

    /// `self(r(h))` by Horner accumulation.
    pub fn compose(&self, r: &Poly<K>) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * r) + &Poly::constant(c.clone()))
    }

    /// σ^k(self) = self ∘ f ∘ … ∘ f with k copies of `f`.
    pub fn sigma_pow(&self, f: &Poly<K>, k: u64, limits: &Limits) -> Result<Self> {
        check_sigma_degree(self.degree(), f.degree(), k, limits)?;
        let mut out = self.clone();
        for _ in 0..k {
            out = out.compose(f);
        }
        Ok(out)
    }

    /// ψ ∘ self ∘ ψ⁻¹ for ψ(h) = u·h + v.
    pub fn affine_conjugate(&self, u: &K, v: &K) -> Result<Self> {
        if u.is_zero() {
            return Err(Error::ZeroScale);
        }
        let inv = Self::affine_inverse(u, v)?;
        let inner = self.compose(&inv);
        Ok(&inner.scale(u) + &Poly::constant(v.clone()))
    }

    /// ψ⁻¹(h) = u⁻¹·(h − v) for ψ(h) = u·h + v.
    pub fn affine_inverse(u: &K, v: &K) -> Result<Self> {
        let ui = u.inv().map_err(|_| Error::ZeroScale)?;
        Ok(Self::from_coeffs(vec![-(v.clone() * ui.clone()), ui]))
    }

    /// `u·h + v`.
    pub fn affine(u: &K, v: &K) -> Self {
        Self::from_coeffs(vec![v.clone(), u.clone()])
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly<K>) -> Result<(Self, Self)> {
        let lead_inv = d.leading().ok_or(Error::DivisionByZero)?.inv()?;
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![K::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = rem[idx].clone() - c.clone() * dc.clone();
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// All ground-field roots, ascending.
    pub fn roots(&self, field: &FieldSpec, limits: &Limits) -> Result<Vec<K>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let bound = self.bind(field)?;
        let candidates = K::root_candidates(&bound.coeffs, field, limits)?;
        Ok(candidates.into_iter().filter(|c| bound.eval(c).is_zero()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_int(i as i64))
                .collect(),
        )
    }

    /// Field-aware integer constant.
    pub fn int(n: i64, field: &FieldSpec) -> Self {
        Self::constant(K::from_int(n, field))
    }
}

/// Fails when σ^k of a degree-`p` polynomial would exceed the degree cap.
pub(crate) fn check_sigma_degree(p: Degree, f: Degree, k: u64, limits: &Limits) -> Result<()> {
    let (Degree::Finite(dp), Degree::Finite(df)) = (p, f) else {
        return Ok(());
    };
    if dp == 0 || df <= 1 || k == 0 {
        return Ok(());
    }
    let grows = u32::try_from(k)
        .ok()
        .and_then(|k| (df as u64).checked_pow(k))
        .and_then(|g| g.checked_mul(dp as u64));
    match grows {
        Some(d) if d <= limits.max_degree => Ok(()),
        Some(d) => Err(capacity("polynomial degree", d, limits.max_degree)),
        None => Err(capacity("polynomial degree", u64::MAX, limits.max_degree)),
    }
}

/// Coefficient-wise `op`, padding the shorter side with zeros.
fn zip_coeffs<K: Scalar>(a: &[K], b: &[K], op: impl Fn(&K, &K) -> K) -> Poly<K> {
    let zero = K::zero();
    let n = a.len().max(b.len());
    Poly::from_coeffs(
        (0..n)
            .map(|i| op(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
            .collect(),
    )
}

impl<K: Scalar> Add for &Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: &Poly<K>) -> Poly<K> {
        zip_coeffs(&self.coeffs, &rhs.coeffs, K::add_ref)
    }
}

impl<K: Scalar> Sub for &Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: &Poly<K>) -> Poly<K> {
        zip_coeffs(&self.coeffs, &rhs.coeffs, K::sub_ref)
    }
}

impl<K: Scalar> Mul for &Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: &Poly<K>) -> Poly<K> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(K::poly_mul(&self.coeffs, &rhs.coeffs))
    }
}

impl<K: Scalar> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

/// Splits a scalar's display into sign and magnitude.
pub(crate) fn signed_text<K: Scalar>(c: &K) -> (bool, String) {
    let s = c.to_string();
    match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s),
    }
}

/// Writes `coef·body` with the conventions of the expression grammar:
/// coefficient 1 omitted, `-` folded into the joiner.
pub(crate) fn write_signed_term<K: Scalar>(out: &mut String, first: bool, coef: &K, body: Option<&str>) {
    let (neg, mag) = signed_text(coef);
    match (first, neg) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    match body {
        None => out.push_str(&mag),
        Some(b) if mag == "1" && !(first && neg) => out.push_str(b),
        Some(b) => {
            out.push_str(&mag);
            out.push('*');
            out.push_str(b);
        }
    }
}

pub(crate) fn power_text(var: &str, e: usize) -> String {
    match e {
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl<K: Scalar> fmt::Display for Poly<K> {
    /// Terms descending in `h`, e.g. `2*h^2 + h - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let body = (i > 0).then(|| power_text("h", i));
            write_signed_term(&mut out, first, c, body.as_deref());
            first = false;
        }
        write!(f, "{out}")
    }
}

impl<K: Scalar> PartialOrd for Poly<K> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<K: Scalar> Ord for Poly<K> {
    /// Degree first, then coefficients from the top down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl<K: Scalar> One for Poly<K> {
    fn one() -> Self {
        Poly::constant(K::one())
    }
}

impl<K: Scalar> Mul for Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: Poly<K>) -> Poly<K> {
        &self * &rhs
    }
}

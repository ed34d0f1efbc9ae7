use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{divisors, FieldKind, FieldSpec, Scalar};
use crate::error::{capacity, Error, Result};
use crate::limits::Limits;

/// Arbitrary-precision rationals, always in lowest terms.
pub type Rational = BigRational;

/// Largest |coefficient| admitted to the rational root search.
const ROOT_SEARCH_BOUND: u64 = 1_000_000_000_000;

fn int_nth_root(n: &BigInt, m: u32) -> Option<BigInt> {
    let r = n.nth_root(m);
    if num_traits::pow(r.clone(), m as usize) == *n {
        Some(r)
    } else {
        None
    }
}

fn to_search_bound(n: &BigInt) -> Result<u64> {
    let bound = n.abs().to_u64().unwrap_or(u64::MAX);
    if bound > ROOT_SEARCH_BOUND {
        Err(capacity(
            "coefficient size for rational root search",
            bound,
            ROOT_SEARCH_BOUND,
        ))
    } else {
        Ok(bound)
    }
}

impl Scalar for BigRational {
    fn supports(field: &FieldSpec) -> bool {
        field.kind() == FieldKind::Rationals
    }

    fn from_int(n: i64, _field: &FieldSpec) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn bind(&self, field: &FieldSpec) -> Result<Self> {
        if Self::supports(field) {
            Ok(self.clone())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn field(&self) -> Option<FieldSpec> {
        Some(FieldSpec::rationals())
    }

    fn mul_int(&self, n: i64) -> Self {
        self * BigInt::from(n)
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn parse(text: &str, field: &FieldSpec) -> Result<Self> {
        if !Self::supports(field) {
            return Err(Error::FieldMismatch);
        }
        let bad = || Error::InvalidScalar(text.to_string());
        let t = text.trim();
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        if !digits(num) || !den.is_none_or(digits) {
            return Err(bad());
        }
        let mut n: BigInt = num.parse().map_err(|_| bad())?;
        if neg {
            n = -n;
        }
        let d: BigInt = match den {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::new(n, d))
    }

    fn nth_roots(m: u32, c: &Self, _field: &FieldSpec, _limits: &Limits) -> Result<Vec<Self>> {
        if c.is_zero() {
            return Err(Error::ZeroInput);
        }
        if m == 0 {
            return Err(Error::PreconditionViolated("root index must be positive".into()));
        }
        let even = m.is_multiple_of(2);
        if c.is_negative() && even {
            return Ok(Vec::new());
        }
        let (Some(n), Some(d)) = (int_nth_root(&c.numer().abs(), m), int_nth_root(c.denom(), m)) else {
            return Ok(Vec::new());
        };
        let root = BigRational::new(n, d);
        Ok(match (c.is_negative(), even) {
            (true, _) => vec![-root],
            (false, true) => vec![-root.clone(), root],
            (false, false) => vec![root],
        })
    }

    fn root_of_unity_order(&self, _field: &FieldSpec, _limits: &Limits) -> Result<Option<u64>> {
        if self.is_zero() {
            Err(Error::ZeroInput)
        } else if self.is_one() {
            Ok(Some(1))
        } else if (-self.clone()).is_one() {
            Ok(Some(2))
        } else {
            Ok(None)
        }
    }

    fn root_candidates(coeffs: &[Self], _field: &FieldSpec, _limits: &Limits) -> Result<Vec<Self>> {
        let Some(top) = coeffs.iter().rposition(|c| !c.is_zero()) else {
            return Err(Error::ZeroPolynomial);
        };
        let low = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        let mut out = Vec::new();
        if low > 0 {
            out.push(BigRational::zero());
        }
        if top > low {
            // Integer form: scale by the lcm of the denominators.
            let lcm = coeffs[low..=top]
                .iter()
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let constant = (&coeffs[low] * &lcm).to_integer();
            let leading = (&coeffs[top] * &lcm).to_integer();
            let dn = divisors(to_search_bound(&constant)?);
            let dd = divisors(to_search_bound(&leading)?);
            for &p in &dn {
                for &q in &dd {
                    let r = BigRational::new(BigInt::from(p), BigInt::from(q));
                    out.push(-r.clone());
                    out.push(r);
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    fn elements(_field: &FieldSpec, _limits: &Limits) -> Result<Option<Vec<Self>>> {
        Ok(None)
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_integer() && other.is_integer() {
            BigRational::from_integer(self.numer() + other.numer())
        } else {
            reduced(
                self.numer() * other.denom() + other.numer() * self.denom(),
                self.denom() * other.denom(),
            )
        }
    }

    fn sub_ref(&self, other: &Self) -> Self {
        if self.is_integer() && other.is_integer() {
            BigRational::from_integer(self.numer() - other.numer())
        } else {
            reduced(
                self.numer() * other.denom() - other.numer() * self.denom(),
                self.denom() * other.denom(),
            )
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_integer() && other.is_integer() {
            BigRational::from_integer(self.numer() * other.numer())
        } else {
            reduced(self.numer() * other.numer(), self.denom() * other.denom())
        }
    }

    /// Convolution over ℤ after clearing denominators.
    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        let (an, ad) = integral(a);
        let (bn, bd) = integral(b);
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in an.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in bn.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        let denom = ad * bd;
        if denom.is_one() {
            return out.into_iter().map(BigRational::from_integer).collect();
        }
        out.into_iter().map(|n| reduced(n, denom.clone())).collect()
    }
}

/// `n / d` in lowest terms for `d > 0`.
///
/// Reduces `n` modulo `d` before taking the gcd, which keeps the gcd at the
/// size of `d` when `n` is much larger.
fn reduced(n: BigInt, d: BigInt) -> Rational {
    if d.is_one() {
        return BigRational::from_integer(n);
    }
    let g = d.gcd(&n.mod_floor(&d));
    if g.is_one() {
        BigRational::new_raw(n, d)
    } else {
        BigRational::new_raw(n / &g, d / g)
    }
}

/// Numerators over the common denominator `d`, so that `c_i = n_i / d`.
fn integral(c: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let d = c
        .iter()
        .filter(|x| !x.is_integer())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    if d.is_one() {
        return (c.iter().map(|x| x.numer().clone()).collect(), d);
    }
    let nums = c.iter().map(|x| x.numer() * (&d / x.denom())).collect();
    (nums, d)
}

/// Convenience constructor for `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

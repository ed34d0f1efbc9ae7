use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{divisors, FieldKind, FieldSpec, Scalar};
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy)]
enum Repr {
    Residue {
        value: u64,
        modulus: u64,
    },
    /// A field-agnostic integer constant, reduced on first contact with a residue.
    Int(i64),
}

/// An element of a prime field F_p with the modulus carried at runtime.
#[derive(Debug, Clone, Copy)]
pub struct Fp(Repr);

fn reduce(n: i64, p: u64) -> u64 {
    (n as i128).rem_euclid(p as i128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl Fp {
    /// The residue of `n` modulo the field's prime.
    ///
    /// # Panics
    /// If `field` is not a prime field.
    pub fn new(n: i64, field: &FieldSpec) -> Self {
        let p = field.modulus().expect("Fp requires a prime field");
        Fp(Repr::Residue {
            value: reduce(n, p),
            modulus: p,
        })
    }

    /// The canonical residue in `[0, p)`, or `None` for an unbound constant.
    pub fn residue(&self) -> Option<u64> {
        match self.0 {
            Repr::Residue { value, .. } => Some(value),
            Repr::Int(_) => None,
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            Repr::Residue { modulus, .. } => Some(modulus),
            Repr::Int(_) => None,
        }
    }

    fn bound_to(&self, p: u64) -> u64 {
        match self.0 {
            Repr::Residue { value, modulus } => {
                assert_eq!(modulus, p, "arithmetic between different prime fields");
                value
            }
            Repr::Int(n) => reduce(n, p),
        }
    }

    fn combine(self, rhs: Fp, on_res: impl Fn(u64, u64, u64) -> u64, on_int: impl Fn(i64, i64) -> i64) -> Fp {
        match (self.0, rhs.0) {
            (Repr::Int(a), Repr::Int(b)) => Fp(Repr::Int(on_int(a, b))),
            (Repr::Residue { modulus, .. }, _) | (_, Repr::Residue { modulus, .. }) => {
                let a = self.bound_to(modulus);
                let b = rhs.bound_to(modulus);
                Fp(Repr::Residue {
                    value: on_res(a, b, modulus),
                    modulus,
                })
            }
        }
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.combine(
            rhs,
            |a, b, p| (a + b) % p,
            |a, b| a.checked_add(b).expect("integer overflow"),
        )
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.combine(
            rhs,
            |a, b, p| (a + p - b) % p,
            |a, b| a.checked_sub(b).expect("integer overflow"),
        )
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.combine(rhs, mul_mod, |a, b| a.checked_mul(b).expect("integer overflow"))
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        match self.0 {
            Repr::Residue { value, modulus } => Fp(Repr::Residue {
                value: (modulus - value) % modulus,
                modulus,
            }),
            Repr::Int(n) => Fp(Repr::Int(-n)),
        }
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp(Repr::Int(0))
    }
    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Int(0) | Repr::Residue { value: 0, .. })
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp(Repr::Int(1))
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Fp {}

impl PartialOrd for Fp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fp {
    /// Residues compare by canonical representative; unbound constants are
    /// reduced into the other operand's field first.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.0, other.0) {
            (Repr::Int(a), Repr::Int(b)) => a.cmp(&b),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: r }) => (p, a).cmp(&(r, b)),
            (Repr::Residue { value, modulus }, Repr::Int(n)) => value.cmp(&reduce(n, modulus)),
            (Repr::Int(n), Repr::Residue { value, modulus }) => reduce(n, modulus).cmp(&value),
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Repr::Residue { value, .. } => write!(f, "{value}"),
            Repr::Int(n) => write!(f, "{n}"),
        }
    }
}

fn prime_of(field: &FieldSpec) -> Result<u64> {
    field.modulus().ok_or(Error::FieldMismatch)
}

impl Scalar for Fp {
    fn supports(field: &FieldSpec) -> bool {
        matches!(field.kind(), FieldKind::PrimeField(_))
    }

    fn from_int(n: i64, field: &FieldSpec) -> Self {
        Fp::new(n, field)
    }

    fn bind(&self, field: &FieldSpec) -> Result<Self> {
        let p = prime_of(field)?;
        match self.0 {
            Repr::Residue { modulus, .. } if modulus != p => Err(Error::FieldMismatch),
            Repr::Residue { .. } => Ok(*self),
            Repr::Int(n) => Ok(Fp(Repr::Residue {
                value: reduce(n, p),
                modulus: p,
            })),
        }
    }

    fn field(&self) -> Option<FieldSpec> {
        self.modulus().map(|p| FieldSpec(FieldKind::PrimeField(p)))
    }

    fn mul_int(&self, n: i64) -> Self {
        match self.0 {
            Repr::Residue { value, modulus } => Fp(Repr::Residue {
                value: mul_mod(value, reduce(n, modulus), modulus),
                modulus,
            }),
            Repr::Int(m) => Fp(Repr::Int(m.checked_mul(n).expect("integer overflow"))),
        }
    }

    fn inv(&self) -> Result<Self> {
        match self.0 {
            _ if self.is_zero() => Err(Error::DivisionByZero),
            Repr::Residue { value, modulus } => Ok(Fp(Repr::Residue {
                value: pow_mod(value, modulus - 2, modulus),
                modulus,
            })),
            Repr::Int(n) if n == 1 || n == -1 => Ok(*self),
            Repr::Int(_) => Err(Error::PreconditionViolated(
                "inverse of an unbound integer constant".into(),
            )),
        }
    }

    fn parse(text: &str, field: &FieldSpec) -> Result<Self> {
        let p = prime_of(field)?;
        let bad = || Error::InvalidScalar(text.to_string());
        let t = text.trim();
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let residue_of = |s: &str| -> Result<u64> {
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            Ok(s.bytes().fold(0u64, |acc, b| (acc * 10 + (b - b'0') as u64) % p))
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (residue_of(n)?, Some(residue_of(d)?)),
            None => (residue_of(body)?, None),
        };
        let mut value = Fp(Repr::Residue { value: num, modulus: p });
        if neg {
            value = -value;
        }
        if let Some(d) = den {
            value = value * Fp(Repr::Residue { value: d, modulus: p }).inv()?;
        }
        Ok(value)
    }

    fn nth_roots(m: u32, c: &Self, field: &FieldSpec, limits: &Limits) -> Result<Vec<Self>> {
        if c.is_zero() {
            return Err(Error::ZeroInput);
        }
        let p = field.check_search(limits)?;
        let target = c.bind(field)?;
        Ok((1..p)
            .map(|u| Fp(Repr::Residue { value: u, modulus: p }))
            .filter(|u| {
                Fp(Repr::Residue {
                    value: pow_mod(u.bound_to(p), m as u64, p),
                    modulus: p,
                }) == target
            })
            .collect())
    }

    fn root_of_unity_order(&self, field: &FieldSpec, _limits: &Limits) -> Result<Option<u64>> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let p = prime_of(field)?;
        let v = self.bind(field)?.bound_to(p);
        // The order divides p - 1, so the first divisor that works is it.
        Ok(divisors(p - 1).into_iter().find(|&d| pow_mod(v, d, p) == 1))
    }

    fn root_candidates(coeffs: &[Self], field: &FieldSpec, limits: &Limits) -> Result<Vec<Self>> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::elements(field, limits)?.unwrap_or_default())
    }

    fn elements(field: &FieldSpec, limits: &Limits) -> Result<Option<Vec<Self>>> {
        let p = field.check_search(limits)?;
        Ok(Some(
            (0..p).map(|v| Fp(Repr::Residue { value: v, modulus: p })).collect(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> FieldSpec {
        FieldSpec::prime(7).unwrap()
    }

    #[test]
    fn arithmetic_mod_seven() {
        let f = f7();
        assert_eq!(Fp::new(3, &f).inv().unwrap(), Fp::new(5, &f));
        assert_eq!(Fp::new(0, &f).inv(), Err(Error::DivisionByZero));
        assert_eq!(Fp::new(5, &f) + Fp::new(4, &f), Fp::new(2, &f));
        assert_eq!(Fp::new(2, &f) - Fp::new(5, &f), Fp::new(4, &f));
        assert_eq!(-Fp::new(3, &f), Fp::new(4, &f));
        assert_eq!(Fp::new(-1, &f).residue(), Some(6));
    }

    #[test]
    fn unbound_constants_adopt_the_field() {
        let f = f7();
        let one = Fp::one();
        assert_eq!(one + Fp::new(6, &f), Fp::new(0, &f));
        assert!((Fp::new(3, &f) * Fp::zero()).is_zero());
        assert_eq!(Fp::one().bind(&f).unwrap().residue(), Some(1));
        assert_eq!(Fp::new(8, &f), Fp::one());
    }

    #[test]
    fn field_mismatch_is_reported() {
        let a = Fp::new(1, &f7());
        let b = Fp::new(1, &FieldSpec::prime(5).unwrap());
        assert_eq!(a.try_add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.bind(&FieldSpec::prime(5).unwrap()), Err(Error::FieldMismatch));
        assert_eq!(a.bind(&FieldSpec::rationals()), Err(Error::FieldMismatch));
    }

    #[test]
    #[should_panic]
    fn operator_mixing_fields_panics() {
        let _ = Fp::new(1, &f7()) + Fp::new(1, &FieldSpec::prime(5).unwrap());
    }

    #[test]
    fn unit_order_of_three_mod_seven() {
        let f = f7();
        let l = Limits::default();
        assert_eq!(Fp::new(3, &f).root_of_unity_order(&f, &l).unwrap(), Some(6));
        assert_eq!(Fp::new(2, &f).root_of_unity_order(&f, &l).unwrap(), Some(3));
        assert_eq!(Fp::new(6, &f).root_of_unity_order(&f, &l).unwrap(), Some(2));
        // matches brute force for every unit
        for v in 1..7 {
            let brute = (1..=6).find(|&l| pow_mod(v, l, 7) == 1);
            assert_eq!(Fp::new(v as i64, &f).root_of_unity_order(&f, &l).unwrap(), brute);
        }
    }

    #[test]
    fn cube_roots_of_unity_mod_seven() {
        let f = f7();
        let roots = Fp::nth_roots(3, &Fp::new(1, &f), &f, &Limits::default()).unwrap();
        assert_eq!(roots, vec![Fp::new(1, &f), Fp::new(2, &f), Fp::new(4, &f)]);
    }

    #[test]
    fn exhaustive_search_respects_capacity() {
        let big = FieldSpec::prime(10_007).unwrap();
        let err = Fp::nth_roots(2, &Fp::new(4, &big), &big, &Limits::default()).unwrap_err();
        assert!(matches!(err, Error::CapacityExceeded { .. }));
        // order computation does not need a search
        assert!(Fp::new(5, &big)
            .root_of_unity_order(&big, &Limits::default())
            .unwrap()
            .is_some());
    }

    #[test]
    fn parsing_residues() {
        let f = f7();
        assert_eq!(Fp::parse("10", &f).unwrap(), Fp::new(3, &f));
        assert_eq!(Fp::parse("-1", &f).unwrap(), Fp::new(6, &f));
        assert_eq!(Fp::parse("1/3", &f).unwrap(), Fp::new(5, &f));
        assert_eq!(Fp::parse("1/7", &f), Err(Error::DivisionByZero));
        assert!(Fp::parse("x", &f).is_err());
        assert_eq!(Fp::new(12, &f).to_string(), "5");
    }
}

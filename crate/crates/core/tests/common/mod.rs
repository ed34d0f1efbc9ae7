#![allow(dead_code)]

use qgha_core::expr::{Atom, Expr, Factor, ScalarLit, Sign, Term};
use qgha_core::{Algebra, AlgebraParams, Element, FieldSpec, Fp, Poly, Rational, Scalar};
use rand::Rng;

pub fn int_poly<K: Scalar>(c: &[i64], field: &FieldSpec) -> Poly<K> {
    Poly::from_coeffs(c.iter().map(|&n| K::from_int(n, field)).collect())
}

pub fn params<K: Scalar>(field: FieldSpec, q: i64, f: &[i64], g: &[i64]) -> AlgebraParams<K> {
    AlgebraParams::new(field, K::from_int(q, &field), int_poly(f, &field), int_poly(g, &field)).unwrap()
}

pub fn q_params(q: i64, f: &[i64], g: &[i64]) -> AlgebraParams<Rational> {
    params(FieldSpec::rationals(), q, f, g)
}

pub fn q_alg(q: i64, f: &[i64], g: &[i64]) -> Algebra<Rational> {
    Algebra::from_params(q_params(q, f, g))
}

pub fn fp_params(p: u64, q: i64, f: &[i64], g: &[i64]) -> AlgebraParams<Fp> {
    params(FieldSpec::prime(p).unwrap(), q, f, g)
}

pub fn fp_alg(p: u64, q: i64, f: &[i64], g: &[i64]) -> Algebra<Fp> {
    Algebra::from_params(fp_params(p, q, f, g))
}

/// Small nonzero scalar `n/d` with `|n| ≤ 5`, `1 ≤ d ≤ 3` (reduced mod p
/// over prime fields, where it may vanish).
pub fn small_scalar<K: Scalar, R: Rng>(rng: &mut R, field: &FieldSpec) -> K {
    loop {
        let n = rng.gen_range(-5..=5);
        let d = rng.gen_range(1..=3);
        let num = K::from_int(n, field);
        let Ok(v) = num.try_div(&K::from_int(d, field)) else {
            continue;
        };
        if !v.is_zero() {
            return v;
        }
    }
}

pub fn random_poly<K: Scalar, R: Rng>(rng: &mut R, field: &FieldSpec, max_deg: usize) -> Poly<K> {
    let d = rng.gen_range(0..=max_deg);
    Poly::from_coeffs(
        (0..=d)
            .map(|_| {
                if rng.gen_bool(0.7) {
                    small_scalar(rng, field)
                } else {
                    K::zero()
                }
            })
            .collect(),
    )
}

/// Up to `support` terms `x^i p(h) y^k`, `i, k ≤ max_exp`, `deg p ≤ max_deg`.
pub fn random_element<K: Scalar, R: Rng>(
    rng: &mut R,
    alg: &Algebra<K>,
    support: usize,
    max_exp: u32,
    max_deg: usize,
) -> Element<K> {
    let n = rng.gen_range(1..=support);
    let mut e = Element::zero(alg);
    for _ in 0..n {
        let i = rng.gen_range(0..=max_exp);
        let k = rng.gen_range(0..=max_exp);
        let p = random_poly(rng, alg.field(), max_deg);
        e = e.add(&Element::monomial(alg, i, p, k)).unwrap();
    }
    e
}

/// A random monomial with a nonzero coefficient.
pub fn random_monomial<K: Scalar, R: Rng>(rng: &mut R, alg: &Algebra<K>, max_exp: u32, max_deg: usize) -> Element<K> {
    loop {
        let p = random_poly(rng, alg.field(), max_deg);
        if !p.is_zero() {
            return Element::monomial(alg, rng.gen_range(0..=max_exp), p, rng.gen_range(0..=max_exp));
        }
    }
}

/// A random syntax tree with groups nested at most `depth` deep.
pub fn random_expr<R: Rng>(rng: &mut R, depth: u32) -> Expr {
    let n = rng.gen_range(1..=3);
    let terms = (0..n)
        .map(|i| {
            let sign = if i == 0 || rng.gen_bool(0.5) {
                Sign::Plus
            } else {
                Sign::Minus
            };
            (sign, random_term(rng, depth))
        })
        .collect();
    Expr { terms }
}

pub fn random_term<R: Rng>(rng: &mut R, depth: u32) -> Term {
    let n = rng.gen_range(1..=3);
    Term {
        factors: (0..n)
            .map(|_| Factor {
                atom: random_atom(rng, depth),
                exponent: rng.gen_bool(0.3).then(|| rng.gen_range(0..4)),
            })
            .collect(),
    }
}

pub fn random_atom<R: Rng>(rng: &mut R, depth: u32) -> Atom {
    match rng.gen_range(0..if depth == 0 { 4 } else { 5 }) {
        0 => Atom::X,
        1 => Atom::Y,
        2 => Atom::H,
        3 => Atom::Scalar(ScalarLit {
            negative: rng.gen_bool(0.3),
            numer: rng.gen_range(0..100).to_string(),
            denom: rng.gen_bool(0.3).then(|| rng.gen_range(1..20).to_string()),
        }),
        _ => Atom::Group(Box::new(random_expr(rng, depth - 1))),
    }
}

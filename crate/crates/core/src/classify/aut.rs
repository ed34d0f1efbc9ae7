use crate::algebra::{Algebra, AlgebraParams, Element, Terms};
use crate::classify::iso::relations_hold;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{Degree, Poly};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutRegime {
    GNonzero,
    GZero,
}

/// The automorphism `h ↦ a·h + b`, `x ↦ x`, `y ↦ c·y` with `c = a^{deg g}`
/// (or `c = 1` when `g = 0`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Automorphism<K> {
    pub a: K,
    pub b: K,
}

impl<K: Scalar> Automorphism<K> {
    pub fn identity(params: &AlgebraParams<K>) -> Self {
        Automorphism {
            a: K::from_int(1, &params.field),
            b: K::from_int(0, &params.field),
        }
    }

    pub fn y_scale(&self, params: &AlgebraParams<K>) -> K {
        match params.g.degree() {
            Degree::Finite(d) => self.a.pow(d as u64),
            Degree::NegInfinity => K::one(),
        }
    }

    /// `f(ah + b) = a·f(h) + b`, and `g(ah + b) = a^{deg g}·g(h)` when g ≠ 0.
    pub fn satisfies(&self, params: &AlgebraParams<K>) -> bool {
        let lin = Poly::affine(&self.a, &self.b);
        let f_ok = params.f.compose(&lin) == &params.f.scale(&self.a) + &Poly::constant(self.b.clone());
        f_ok && params.g.compose(&lin) == params.g.scale(&self.y_scale(params))
    }

    pub fn map_element(&self, e: &Element<K>) -> Element<K> {
        let alg = e.algebra();
        let lin = Poly::affine(&self.a, &self.b);
        let c = self.y_scale(alg.params());
        let terms: Terms<K> = e
            .terms()
            .iter()
            .map(|(&(i, k), p)| ((i, k), p.compose(&lin).scale(&c.pow(k as u64))))
            .collect();
        Element::from_terms(alg, terms)
    }

    /// Checks through the multiplication engine that the images of h, x, y
    /// satisfy the defining relations.
    pub fn verify_relations(&self, alg: &Algebra<K>) -> Result<bool> {
        let (h, x, y) = (self.map_element(&alg.h()), alg.x(), self.map_element(&alg.y()));
        relations_hold(alg.params(), &h, &x, &y)
    }

    /// `h ↦ a·h + b` as text.
    pub fn h_image(&self) -> Poly<K> {
        Poly::affine(&self.a, &self.b)
    }
}

/// `φ∘ψ` as algebra maps: `h ↦ φ(ψ(h)) = a a'·h + (a' b + b')`.
pub fn compose_automorphisms<K: Scalar>(phi: &Automorphism<K>, psi: &Automorphism<K>) -> Automorphism<K> {
    Automorphism {
        a: phi.a.clone() * psi.a.clone(),
        b: psi.a.clone() * phi.b.clone() + psi.b.clone(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroupDescription<K> {
    /// 1 for the central scalings of x and y when g ≠ 0, 2 when g = 0.
    pub torus_rank: u8,
    /// Every `(a, b)` of the affine part, ascending.
    pub finite_part: Vec<Automorphism<K>>,
    pub abelian: bool,
    pub regime: AutRegime,
    /// 0 < char ≤ deg f, where the finite part was found by exhaustive search.
    pub char_caveat: bool,
}

/// Aut(H_q(f, g)) for deg f ≥ 2 and q ≠ 0.
pub fn automorphism_group<K: Scalar>(params: &AlgebraParams<K>, limits: &Limits) -> Result<AutGroupDescription<K>> {
    let Degree::Finite(n) = params.deg_f() else {
        return Err(Error::PreconditionViolated("requires deg f >= 2".into()));
    };
    if n < 2 {
        return Err(Error::PreconditionViolated("requires deg f >= 2".into()));
    }
    if params.q.is_zero() {
        return Err(Error::PreconditionViolated("requires q != 0".into()));
    }
    let field = &params.field;
    let p = field.characteristic();
    let char_caveat = p != 0 && p <= n as u64;

    let candidates: Vec<Automorphism<K>> = if char_caveat {
        let elems = K::elements(field, limits)?.expect("finite field");
        let mut all = Vec::new();
        for a in elems.iter().filter(|a| !a.is_zero()) {
            for b in &elems {
                all.push(Automorphism {
                    a: a.clone(),
                    b: b.clone(),
                });
            }
        }
        all
    } else {
        let an = params.f.coeff(n);
        let an1 = params.f.coeff(n - 1);
        let denom = K::from_int(n as i64, field) * an;
        let inv = denom.inv()?;
        K::nth_roots((n - 1) as u32, &K::from_int(1, field), field, limits)?
            .into_iter()
            .map(|a| {
                let b = (a.clone() - K::one()) * an1.clone() * inv.clone();
                Automorphism { a, b }
            })
            .collect()
    };
    let mut finite_part: Vec<_> = candidates.into_iter().filter(|m| m.satisfies(params)).collect();
    finite_part.sort();
    finite_part.dedup();

    let abelian = finite_part.iter().all(|phi| {
        finite_part
            .iter()
            .all(|psi| compose_automorphisms(phi, psi) == compose_automorphisms(psi, phi))
    });
    let regime = if params.g.is_zero() {
        AutRegime::GZero
    } else {
        AutRegime::GNonzero
    };
    Ok(AutGroupDescription {
        torus_rank: if regime == AutRegime::GZero { 2 } else { 1 },
        finite_part,
        abelian,
        regime,
        char_caveat,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::rat;
    use crate::scalar::{FieldSpec, Fp, Rational};

    fn params(q: i64, f: &[i64], g: &[i64]) -> AlgebraParams<Rational> {
        let p = |c: &[i64]| Poly::from_coeffs(c.iter().map(|&n| rat(n, 1)).collect());
        AlgebraParams::new(FieldSpec::rationals(), rat(q, 1), p(f), p(g)).unwrap()
    }

    fn pair(a: i64, b: i64) -> Automorphism<Rational> {
        Automorphism {
            a: rat(a, 1),
            b: rat(b, 1),
        }
    }

    #[test]
    fn quadratic_f_has_trivial_finite_part() {
        let g = automorphism_group(&params(2, &[0, 0, 1], &[0, 1]), &Limits::default()).unwrap();
        assert_eq!(g.finite_part, vec![pair(1, 0)]);
        assert!(g.abelian && !g.char_caveat);
        assert_eq!((g.torus_rank, g.regime), (1, AutRegime::GNonzero));
    }

    #[test]
    fn cubic_f_has_sign_flip() {
        let p = params(2, &[0, 0, 0, 1], &[0, 1]);
        let g = automorphism_group(&p, &Limits::default()).unwrap();
        assert_eq!(g.finite_part, vec![pair(-1, 0), pair(1, 0)]);
        assert!(g.abelian);
        let alg = Algebra::from_params(p);
        for m in &g.finite_part {
            assert!(m.verify_relations(&alg).unwrap());
        }
        assert!(!pair(2, 0).satisfies(alg.params()));
        assert!(!pair(2, 0).verify_relations(&alg).unwrap());
    }

    #[test]
    fn g_zero_regime() {
        let g = automorphism_group(&params(2, &[0, 0, 0, 1], &[]), &Limits::default()).unwrap();
        assert_eq!((g.torus_rank, g.regime), (2, AutRegime::GZero));
        assert_eq!(g.finite_part, vec![pair(-1, 0), pair(1, 0)]);
    }

    #[test]
    fn small_characteristic_is_not_abelian() {
        let f3 = FieldSpec::prime(3).unwrap();
        let fp = |c: &[i64]| Poly::from_coeffs(c.iter().map(|&n| Fp::new(n, &f3)).collect());
        let p = AlgebraParams::new(f3, Fp::new(2, &f3), fp(&[0, 0, 0, 1]), fp(&[0, -1, 0, 1])).unwrap();
        let g = automorphism_group(&p, &Limits::default()).unwrap();
        assert!(g.char_caveat);
        let m = |a, b| Automorphism {
            a: Fp::new(a, &f3),
            b: Fp::new(b, &f3),
        };
        let (phi, psi) = (m(1, 1), m(2, 0));
        assert!(g.finite_part.contains(&phi) && g.finite_part.contains(&psi));
        assert_eq!(compose_automorphisms(&phi, &psi), m(2, 2));
        assert_eq!(compose_automorphisms(&psi, &phi), m(2, 1));
        assert!(!g.abelian);
        let alg = Algebra::from_params(p);
        for x in &g.finite_part {
            assert!(x.verify_relations(&alg).unwrap());
            for y in &g.finite_part {
                assert!(g.finite_part.contains(&compose_automorphisms(x, y)));
            }
        }
    }

    #[test]
    fn preconditions() {
        let l = Limits::default();
        assert!(automorphism_group(&params(2, &[0, 1], &[0, 1]), &l).is_err());
        assert!(automorphism_group(&params(0, &[0, 0, 1], &[0, 1]), &l).is_err());
    }
}

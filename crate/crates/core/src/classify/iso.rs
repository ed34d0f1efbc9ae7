use serde_json::{json, Value};

use crate::algebra::{Algebra, AlgebraParams, Element, Terms};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{Degree, Poly};
use crate::scalar::Scalar;

/// An isomorphism `H_q(f, g) → H_q(f', g')` given by `ψ(h) = u·h + v` and
/// the scaling `c`, with `f' = ψ∘f∘ψ⁻¹` and `g' = c·(g∘ψ⁻¹)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness<K> {
    pub u: K,
    pub v: K,
    pub c: K,
}

impl<K: Scalar> IsoWitness<K> {
    /// Shift amount of the equivalent shift-scale-rescale factorization.
    pub fn alpha(&self) -> Result<K> {
        self.v.try_div(&self.u)
    }

    pub fn lambda(&self) -> &K {
        &self.u
    }

    pub fn lambda_mu(&self) -> &K {
        &self.c
    }

    /// The parameters this witness sends `a` to.
    pub fn apply(&self, a: &AlgebraParams<K>) -> Result<AlgebraParams<K>> {
        let inv = Poly::affine_inverse(&self.u, &self.v)?;
        AlgebraParams::new(
            a.field,
            a.q.clone(),
            a.f.affine_conjugate(&self.u, &self.v)?,
            a.g.compose(&inv).scale(&self.c),
        )
    }

    /// Image of `e ∈ A` in `b`: `h ↦ ψ⁻¹(h)`, `x ↦ x`, `y ↦ c⁻¹·y`.
    pub fn map_element(&self, e: &Element<K>, b: &Algebra<K>) -> Result<Element<K>> {
        let inv = Poly::affine_inverse(&self.u, &self.v)?;
        let c_inv = self.c.inv()?;
        let terms: Terms<K> = e
            .terms()
            .iter()
            .map(|(&(i, k), p)| ((i, k), p.compose(&inv).scale(&c_inv.pow(k as u64))))
            .collect();
        Ok(Element::from_terms(b, terms))
    }

    /// Checks in `b` that the images of h, x, y satisfy `a`'s relations.
    pub fn verify_relations(&self, a: &AlgebraParams<K>, b: &Algebra<K>) -> Result<bool> {
        let src = Algebra::with_limits(a.clone(), *b.limits());
        let (h, x, y) = (
            self.map_element(&src.h(), b)?,
            self.map_element(&src.x(), b)?,
            self.map_element(&src.y(), b)?,
        );
        relations_hold(a, &h, &x, &y)
    }

    pub fn to_json(&self) -> Result<Value> {
        Ok(json!({
            "u": self.u.to_string(),
            "v": self.v.to_string(),
            "c": self.c.to_string(),
            "decomposition": {
                "alpha": self.alpha()?.to_string(),
                "lambda": self.lambda().to_string(),
                "lambda_mu": self.lambda_mu().to_string(),
            }
        }))
    }
}

/// Whether `h, x, y` (elements of one algebra) satisfy the defining
/// relations of `params`.
pub(crate) fn relations_hold<K: Scalar>(
    params: &AlgebraParams<K>,
    h: &Element<K>,
    x: &Element<K>,
    y: &Element<K>,
) -> Result<bool> {
    let f_h = h.eval_poly(&params.f)?;
    let g_h = h.eval_poly(&params.g)?;
    let hx = h.mul(x)?.sub(&x.mul(&f_h)?)?;
    let yh = y.mul(h)?.sub(&f_h.mul(y)?)?;
    let yx = y.mul(x)?.sub(&x.mul(y)?.scale(&params.q))?.sub(&g_h)?;
    Ok(hx.is_zero() && yh.is_zero() && yx.is_zero())
}

fn check_regime<K: Scalar>(a: &AlgebraParams<K>) -> Result<()> {
    if a.deg_f() < Degree::Finite(2) {
        return Err(Error::UnsupportedRegime(
            "isomorphism decision needs deg f >= 2; deg f <= 1 is the generalized down-up case".into(),
        ));
    }
    if a.q.is_zero() {
        return Err(Error::UnsupportedRegime("isomorphism decision needs q != 0".into()));
    }
    Ok(())
}

/// Decides whether `a ≅ b` in the regime deg f ≥ 2, q ≠ 0, returning the
/// first witness in ascending `(u, v)` order.
pub fn is_isomorphic<K: Scalar>(
    a: &AlgebraParams<K>,
    b: &AlgebraParams<K>,
    limits: &Limits,
) -> Result<Option<IsoWitness<K>>> {
    check_regime(a)?;
    if a.field != b.field {
        return Err(Error::FieldMismatch);
    }
    if a.q != b.q || a.f.degree() != b.f.degree() || a.g.degree() != b.g.degree() {
        return Ok(None);
    }
    let field = &a.field;
    let n = a.f.degree().finite().expect("deg f >= 2");
    let an = a.f.coeff(n);
    let an1 = a.f.coeff(n - 1);
    let bn1 = b.f.coeff(n - 1);
    let ratio = an.clone() * b.f.coeff(n).inv()?;
    let us = K::nth_roots((n - 1) as u32, &ratio, field, limits)?;

    let n_in_field = K::from_int(n as i64, field);
    for u in us {
        let u_inv = u.inv()?;
        let vs = if n_in_field.is_zero() {
            K::elements(field, limits)?
                .ok_or_else(|| Error::UnsupportedRegime("characteristic divides deg f over an infinite field".into()))?
        } else {
            // −n·a_n·u^{1−n}·v + a_{n−1}·u^{2−n} = b_{n−1}
            let u1n = u_inv.pow(n as u64 - 1);
            let u2n = u_inv.pow(n as u64 - 2);
            let denom = n_in_field.clone() * an.clone() * u1n;
            vec![(an1.clone() * u2n - bn1.clone()) * denom.inv()?]
        };
        for v in vs {
            if a.f.affine_conjugate(&u, &v)? != b.f {
                continue;
            }
            let moved = a.g.compose(&Poly::affine_inverse(&u, &v)?);
            let c = match (b.g.leading(), moved.leading()) {
                (Some(lb), Some(lm)) => lb.clone() * lm.inv()?,
                _ => K::one(),
            };
            if moved.scale(&c) != b.g {
                continue;
            }
            let w = IsoWitness { u: u.clone(), v, c };
            debug_assert_eq!(w.apply(a).as_ref(), Ok(b));
            return Ok(Some(w));
        }
    }
    Ok(None)
}

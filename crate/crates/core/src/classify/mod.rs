//! Parameter transformations, isomorphism decision, automorphism groups and
//! down-up conversions.

mod aut;
mod downup;
mod iso;

use crate::algebra::AlgebraParams;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

pub use aut::{automorphism_group, compose_automorphisms, AutGroupDescription, AutRegime, Automorphism};
pub use downup::{downup_candidates, from_downup, gdua_to_qgha, qgha_to_gdua, DownUpParams};
pub use iso::{is_isomorphic, IsoWitness};

/// Shift `h ↦ h − α`: `(q, f(h−α) + α, g(h−α))`.
pub fn transform_type_i<K: Scalar>(a: &AlgebraParams<K>, alpha: &K) -> Result<AlgebraParams<K>> {
    let alpha = alpha.bind(&a.field)?;
    let shift = Poly::affine(&K::one(), &-alpha.clone());
    AlgebraParams::new(
        a.field,
        a.q.clone(),
        &a.f.compose(&shift) + &Poly::constant(alpha),
        a.g.compose(&shift),
    )
}

/// Scale `h ↦ λ⁻¹h`: `(q, λ·f(λ⁻¹h), g(λ⁻¹h))`.
pub fn transform_type_ii<K: Scalar>(a: &AlgebraParams<K>, lambda: &K) -> Result<AlgebraParams<K>> {
    let lambda = lambda.bind(&a.field)?;
    if lambda.is_zero() {
        return Err(Error::ZeroScale);
    }
    let scale = Poly::monomial(lambda.inv()?, 1);
    AlgebraParams::new(
        a.field,
        a.q.clone(),
        a.f.compose(&scale).scale(&lambda),
        a.g.compose(&scale),
    )
}

/// Rescale the last relation: `(q, f, λμ·g)`.
pub fn transform_type_iii<K: Scalar>(a: &AlgebraParams<K>, lambda: &K, mu: &K) -> Result<AlgebraParams<K>> {
    let (lambda, mu) = (lambda.bind(&a.field)?, mu.bind(&a.field)?);
    if lambda.is_zero() || mu.is_zero() {
        return Err(Error::ZeroScale);
    }
    AlgebraParams::new(a.field, a.q.clone(), a.f.clone(), a.g.scale(&(lambda * mu)))
}

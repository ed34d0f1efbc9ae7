use std::fmt;

use crate::algebra::AlgebraParams;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{Degree, Poly};
use crate::scalar::{FieldSpec, Scalar};

/// A down-up algebra `A(α, β, γ)` or a generalized down-up algebra
/// `L(v, r, s, γ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DownUpParams<K> {
    A { alpha: K, beta: K, gamma: K },
    L { v: Poly<K>, r: K, s: K, gamma: K },
}

impl<K: Scalar> fmt::Display for DownUpParams<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DownUpParams::A { alpha, beta, gamma } => write!(f, "A({alpha}, {beta}, {gamma})"),
            DownUpParams::L { v, r, s, gamma } => write!(f, "L({v}, {r}, {s}, {gamma})"),
        }
    }
}

/// Every `H_s(r·h + γ, h)` isomorphic to `A(α, β, γ)`, one per ordering
/// `(r, s)` of the roots of `h² − α·h − β`, ascending in `r`.
pub fn downup_candidates<K: Scalar>(
    alpha: &K,
    beta: &K,
    gamma: &K,
    field: &FieldSpec,
    limits: &Limits,
) -> Result<Vec<AlgebraParams<K>>> {
    let (alpha, beta, gamma) = (alpha.bind(field)?, beta.bind(field)?, gamma.bind(field)?);
    let quadratic = Poly::from_coeffs(vec![-beta, -alpha.clone(), K::from_int(1, field)]);
    let roots = quadratic.roots(field, limits)?;
    let Some(r0) = roots.first().cloned() else {
        return Err(Error::NonSplitQuadratic);
    };
    let s0 = alpha - r0.clone();
    let mut pairs = vec![(r0.clone(), s0.clone())];
    if s0 != r0 {
        pairs.push((s0, r0));
    }
    pairs.sort();
    pairs
        .into_iter()
        .map(|(r, s)| AlgebraParams::new(*field, s, Poly::affine(&r, &gamma), Poly::h()))
        .collect()
}

/// `A(α, β, γ) ≅ H_s(r·h + γ, h)` with `α = r + s`, `β = −r·s`; `choice`
/// indexes [`downup_candidates`].
pub fn from_downup<K: Scalar>(
    alpha: &K,
    beta: &K,
    gamma: &K,
    field: &FieldSpec,
    choice: usize,
    limits: &Limits,
) -> Result<AlgebraParams<K>> {
    let mut all = downup_candidates(alpha, beta, gamma, field, limits)?;
    let count = all.len();
    if choice >= count {
        return Err(Error::PreconditionViolated(format!(
            "root ordering {choice} out of range, {count} available"
        )));
    }
    Ok(all.swap_remove(choice))
}

/// `L(v, r, s, γ) ≅ H_s(r·h − γ, −v)`.
pub fn gdua_to_qgha<K: Scalar>(v: &Poly<K>, r: &K, s: &K, gamma: &K, field: &FieldSpec) -> Result<AlgebraParams<K>> {
    AlgebraParams::new(*field, s.clone(), Poly::affine(r, &-gamma.clone()), -v)
}

/// `H_q(a·h + b, g) ≅ L(−g, a, q, −b)`; only for deg f ≤ 1.
pub fn qgha_to_gdua<K: Scalar>(params: &AlgebraParams<K>) -> Result<DownUpParams<K>> {
    if params.deg_f() > Degree::Finite(1) {
        return Err(Error::WrongDegree(format!(
            "generalized down-up form needs deg f <= 1, got {}",
            params.deg_f()
        )));
    }
    Ok(DownUpParams::L {
        v: -&params.g,
        r: params.f.coeff(1),
        s: params.q.clone(),
        gamma: -params.f.coeff(0),
    })
}

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::poly::{Degree, Poly};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CenterDescription<K: Scalar> {
    /// Z(H) = 𝔽.
    ScalarsOnly,
    /// Z(H) = 𝔽[Z^ℓ] with Z = q(xy − a) and σ(a) − q·a = g.
    PolynomialInZl { ell: u64, a: Poly<K>, z: Element<K> },
    /// q is a root of unity but g is not of the form σ(a) − q·a.
    Undetermined { reason: String },
}

fn require_regime<K: Scalar>(alg: &Algebra<K>) -> Result<()> {
    if alg.f().degree() < Degree::Finite(2) {
        return Err(Error::PreconditionViolated("requires deg f >= 2".into()));
    }
    if alg.q().is_zero() {
        return Err(Error::PreconditionViolated("requires q != 0".into()));
    }
    Ok(())
}

/// Solves σ(a) − q·a = g for a ∈ 𝔽[h], where σ(a) = a ∘ f.
///
/// Needs deg f ≥ 2 and q ≠ 0. The map a ↦ σ(a) − q·a sends h^j to a
/// polynomial of degree j·deg f (j ≥ 1), so coefficients are fixed from the
/// top down. For q = 1 constants lie in the kernel; the representative
/// with a(0) = 0 is returned.
pub fn solve_sigma_q<K: Scalar>(alg: &Algebra<K>) -> Result<Option<Poly<K>>> {
    require_regime(alg)?;
    let f = alg.f();
    let q = alg.q();
    let g = alg.g();
    let Degree::Finite(dg) = g.degree() else {
        return Ok(Some(Poly::zero()));
    };
    let n = f.degree().finite().unwrap_or(0);
    if dg % n != 0 {
        return Ok(None);
    }
    let m = dg / n;
    let lead_f = f.leading().expect("deg f >= 2").clone();

    let mut f_pows = vec![Poly::one()];
    for j in 1..=m {
        f_pows.push(&f_pows[j - 1] * f);
    }
    let mut residual = g.clone();
    let mut a = vec![K::zero(); m + 1];
    for j in (1..=m).rev() {
        let column = &f_pows[j] - &Poly::monomial(q.clone(), j);
        let coef = residual.coeff(j * n) * lead_f.pow(j as u64).inv()?;
        residual = &residual - &column.scale(&coef);
        a[j] = coef;
    }
    let one_minus_q = K::one() - q.clone();
    if !one_minus_q.is_zero() {
        a[0] = residual.coeff(0) * one_minus_q.inv()?;
        residual = &residual - &Poly::constant(a[0].clone() * one_minus_q);
    }
    if !residual.is_zero() {
        return Ok(None);
    }
    let a = Poly::from_coeffs(a).bind(alg.field())?;
    debug_assert_eq!(&alg.sigma_pow(&a, 1)? - &a.scale(q), *g);
    Ok(Some(a))
}

/// z commutes with x, y and h.
pub fn is_central<K: Scalar>(z: &Element<K>) -> Result<bool> {
    let alg = z.algebra();
    for gen in [alg.x(), alg.y(), alg.h()] {
        if z.mul(&gen)? != gen.mul(z)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership in the centralizer of h, i.e. diagonal support (valid for
/// deg f ≥ 2).
pub fn centralizer_of_h_contains<K: Scalar>(a: &Element<K>) -> Result<bool> {
    let alg = a.algebra();
    if alg.f().degree() < Degree::Finite(2) {
        return Err(Error::PreconditionViolated("requires deg f >= 2".into()));
    }
    let diagonal = a.terms().keys().all(|&(i, k)| i == k);
    debug_assert_eq!(diagonal, alg.h().mul(a)? == a.mul(&alg.h())?);
    Ok(diagonal)
}

/// Describes Z(H) for deg f ≥ 2 and q ≠ 0.
pub fn center_describe<K: Scalar>(alg: &Algebra<K>) -> Result<CenterDescription<K>> {
    require_regime(alg)?;
    let Some(ell) = alg.q().root_of_unity_order(alg.field(), alg.limits())? else {
        return Ok(CenterDescription::ScalarsOnly);
    };
    let Some(a) = solve_sigma_q(alg)? else {
        return Ok(CenterDescription::Undetermined {
            reason: format!("q has order {ell} but g is not of the form sigma(a) - q*a"),
        });
    };
    let xy = alg.x().mul(&alg.y())?;
    let z = xy.sub(&Element::from_poly(alg, a.clone()))?.scale(alg.q());
    let zl = z.pow(u32::try_from(ell).map_err(|_| Error::PreconditionViolated("order too large".into()))?)?;
    if !is_central(&zl)? {
        return Ok(CenterDescription::Undetermined {
            reason: format!("Z^{ell} failed the centrality check"),
        });
    }
    Ok(CenterDescription::PolynomialInZl { ell, a, z })
}

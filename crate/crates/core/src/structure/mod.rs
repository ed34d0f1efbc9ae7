//! Ring-theoretic properties: domain and Noetherian criteria, the center,
//! and the growth experiment.

mod center;
mod growth;

use crate::algebra::AlgebraParams;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{Degree, Poly};
use crate::scalar::Scalar;

pub use center::{center_describe, centralizer_of_h_contains, is_central, solve_sigma_q, CenterDescription};
pub use growth::{gk_dimension_sequence, GrowthReport};

/// Depth used when [`is_noetherian`] attaches a witness chain.
pub const DEFAULT_WITNESS_DEPTH: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainReason {
    QZero,
    ConstantF,
    QNonzeroAndNonconstantF,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DomainReport {
    pub verdict: bool,
    pub reason: DomainReason,
}

/// H_q(f, g) is a domain iff q ≠ 0 and deg f ≥ 1.
pub fn is_domain<K: Scalar>(params: &AlgebraParams<K>) -> DomainReport {
    let reason = if params.q.is_zero() {
        DomainReason::QZero
    } else if params.deg_f() < Degree::Finite(1) {
        DomainReason::ConstantF
    } else {
        DomainReason::QNonzeroAndNonconstantF
    };
    DomainReport {
        verdict: reason == DomainReason::QNonzeroAndNonconstantF,
        reason,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoetherianReason {
    DegF1AndQNonzero,
    QZero,
    DegFNot1,
}

/// Strictness of `I_n ⊊ I_{n+1}` at one level of the witness chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelCheck {
    pub n: u32,
    /// `σ^k(h) ≡ 0 mod f` for `k = 1..=n+1`.
    pub sigma_divisible: Vec<bool>,
    /// `h ≢ 0 mod f`.
    pub h_not_divisible: bool,
}

impl LevelCheck {
    pub fn passed(&self) -> bool {
        self.h_not_divisible && self.sigma_divisible.iter().all(|&b| b)
    }
}

/// Evidence that the left ideals `I_n = Σ_{i≤n} H·h·y^i` strictly ascend.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessChain<K> {
    /// Fixed point of the original `f`.
    pub beta: K,
    /// `f(h + β) − β`, which vanishes at 0.
    pub shifted_f: Poly<K>,
    pub depth: u32,
    pub checks: Vec<LevelCheck>,
}

impl<K: Scalar> WitnessChain<K> {
    pub fn verified(&self) -> bool {
        self.checks.len() == self.depth as usize + 1 && self.checks.iter().all(LevelCheck::passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoetherianReport<K> {
    pub verdict: bool,
    pub reason: NoetherianReason,
    pub witness: Option<WitnessChain<K>>,
}

/// Right/left Noetherian iff deg f = 1 and q ≠ 0.
///
/// The verdict comes from the criterion. When deg f ≥ 2 and f has a fixed
/// point in the ground field, a witness chain is attached.
pub fn is_noetherian<K: Scalar>(params: &AlgebraParams<K>, limits: &Limits) -> NoetherianReport<K> {
    let deg = params.deg_f();
    let reason = if deg != Degree::Finite(1) {
        NoetherianReason::DegFNot1
    } else if params.q.is_zero() {
        NoetherianReason::QZero
    } else {
        NoetherianReason::DegF1AndQNonzero
    };
    let witness = if deg >= Degree::Finite(2) {
        noetherian_witness_check(params, DEFAULT_WITNESS_DEPTH, limits).ok()
    } else {
        None
    };
    NoetherianReport {
        verdict: reason == NoetherianReason::DegF1AndQNonzero,
        reason,
        witness,
    }
}

/// Shifts f to fix 0 and checks the ascending-chain divisibility pattern up
/// to level `depth`.
pub fn noetherian_witness_check<K: Scalar>(
    params: &AlgebraParams<K>,
    depth: u32,
    limits: &Limits,
) -> Result<WitnessChain<K>> {
    let deg = params.deg_f();
    if deg < Degree::Finite(2) {
        return Err(Error::WrongDegree(format!("witness chain needs deg f >= 2, got {deg}")));
    }
    let field = &params.field;
    let fixed = &params.f - &Poly::h();
    let beta = fixed
        .roots(field, limits)?
        .into_iter()
        .next()
        .ok_or(Error::NoFixedPointInField)?;
    let shift = Poly::from_coeffs(vec![beta.clone(), K::one()]);
    let shifted_f = &params.f.compose(&shift) - &Poly::constant(beta.clone());
    debug_assert!(shifted_f.coeff(0).is_zero());

    let levels = depth as u64 + 1;
    crate::poly::check_sigma_degree(Degree::Finite(1), shifted_f.degree(), levels, limits)?;
    let mut sigma_in_f = Vec::with_capacity(levels as usize);
    let mut s = Poly::h();
    for _ in 0..levels {
        s = s.compose(&shifted_f);
        sigma_in_f.push(s.div_rem(&shifted_f)?.1.is_zero());
    }
    let h_not_divisible = !Poly::h().div_rem(&shifted_f)?.1.is_zero();
    let checks = (0..=depth)
        .map(|n| LevelCheck {
            n,
            sigma_divisible: sigma_in_f[..=n as usize].to_vec(),
            h_not_divisible,
        })
        .collect();
    Ok(WitnessChain {
        beta,
        shifted_f,
        depth,
        checks,
    })
}

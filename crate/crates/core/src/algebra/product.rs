//! Fast multiplication by closed-form straightening of `y^b x^c`.

use std::collections::HashMap;
use std::sync::Arc;

use super::element::{add_term, Monomial, Terms};
use super::{Algebra, Element};
use crate::error::{capacity, Error, Result};
use crate::poly::{Degree, Poly};
use crate::scalar::Scalar;

const MAX_EXPONENT: u64 = 1 << 31;

fn checked_exp(a: u32, b: u32) -> Result<u32> {
    let s = a as u64 + b as u64;
    if s > MAX_EXPONENT {
        Err(capacity("monomial exponent", s, MAX_EXPONENT))
    } else {
        Ok(s as u32)
    }
}

impl<K: Scalar> Algebra<K> {
    /// σ^k(p) under this algebra's degree cap.
    pub fn sigma_pow(&self, p: &Poly<K>, k: u32) -> Result<Poly<K>> {
        p.sigma_pow(self.f(), k as u64, self.limits())
    }

    /// Γ_c = Σ_{j<c} q^{c-1-j} σ^j(g), the polynomial in `y x^c = q^c x^c y + x^{c-1} Γ_c`.
    pub fn gamma(&self, c: u32) -> Result<Poly<K>> {
        assert!(c >= 1, "Γ_c is defined for c >= 1");
        let idx = c as usize - 1;
        if let Some(p) = self.0.gamma_memo.read().unwrap().get(idx) {
            return Ok(p.clone());
        }
        let mut memo = self.0.gamma_memo.write().unwrap();
        while memo.len() <= idx {
            let j = memo.len() as u32;
            let next = match memo.last() {
                None => self.g().clone(),
                Some(prev) => &prev.scale(self.q()) + &self.sigma_pow(self.g(), j)?,
            };
            memo.push(next);
        }
        Ok(memo[idx].clone())
    }

    /// Normal form of `y^b x^c`.
    pub fn yx_expand(&self, b: u32, c: u32) -> Result<Element<K>> {
        Ok(Element::from_terms(self, (*self.yx_terms(b, c)?).clone()))
    }

    pub(crate) fn yx_terms(&self, b: u32, c: u32) -> Result<Arc<Terms<K>>> {
        if let Some(t) = self.0.yx_memo.read().unwrap().get(&(b, c)) {
            return Ok(t.clone());
        }
        let terms = self.compute_yx(b, c)?;
        let terms = Arc::new(terms);
        self.0
            .yx_memo
            .write()
            .unwrap()
            .entry((b, c))
            .or_insert_with(|| terms.clone());
        Ok(terms)
    }

    fn compute_yx(&self, b: u32, c: u32) -> Result<Terms<K>> {
        let mut out = Terms::new();
        if b == 0 || c == 0 {
            add_term(&mut out, (c, b), Poly::one());
            return Ok(out);
        }
        // y^b x^c = y · (y^{b-1} x^c), and for each term x^i s y^k:
        // y x^i s y^k = q^i x^i σ(s) y^{k+1} + x^{i-1} Γ_i s y^k.
        let prev = self.yx_terms(b - 1, c)?;
        for (&(i, k), s) in prev.iter() {
            let lifted = self.sigma_pow(s, 1)?.scale(&self.q().pow(i as u64));
            add_term(&mut out, (i, k + 1), lifted);
            if i >= 1 {
                add_term(&mut out, (i - 1, k), &self.gamma(i)? * s);
            }
        }
        Ok(out)
    }

    /// Exact product in normal form.
    ///
    /// `(x^a p y^b)(x^c r y^d) = Σ x^{a+i} σ^i(p) s σ^k(r) y^{k+d}` over the
    /// terms `x^i s y^k` of `y^b x^c`.
    pub fn multiply(&self, lhs: &Element<K>, rhs: &Element<K>) -> Result<Element<K>> {
        self.check_same(lhs.algebra())?;
        self.check_same(rhs.algebra())?;
        let mut out = Terms::new();
        let mut left_sigma: HashMap<(u32, u32, u32), Poly<K>> = HashMap::new();
        let mut right_sigma: HashMap<(u32, u32, u32), Poly<K>> = HashMap::new();
        for (&(a, b), p) in lhs.terms() {
            for (&(c, d), r) in rhs.terms() {
                let expanded = self.yx_terms(b, c)?;
                for (&(i, k), s) in expanded.iter() {
                    let sp = match left_sigma.get(&(a, b, i)) {
                        Some(v) => v.clone(),
                        None => {
                            let v = self.sigma_pow(p, i)?;
                            left_sigma.insert((a, b, i), v.clone());
                            v
                        }
                    };
                    let sr = match right_sigma.get(&(c, d, k)) {
                        Some(v) => v.clone(),
                        None => {
                            let v = self.sigma_pow(r, k)?;
                            right_sigma.insert((c, d, k), v.clone());
                            v
                        }
                    };
                    let coeff = &(&sp * s) * &sr;
                    add_term(&mut out, (checked_exp(a, i)?, checked_exp(k, d)?), coeff);
                }
            }
        }
        Ok(Element::from_terms(self, out))
    }

    /// The predicted top term `q^{c b} x^{a+c} σ^c(p) σ^b(r) y^{b+d}` of
    /// `(x^a p y^b)(x^c r y^d)`.
    pub fn leading_term_product(&self, m1: &Monomial<K>, m2: &Monomial<K>) -> Result<Monomial<K>> {
        if self.q().is_zero() {
            return Err(Error::DegenerateAlgebra("q = 0"));
        }
        if self.f().degree() < Degree::Finite(1) {
            return Err(Error::DegenerateAlgebra("f is constant"));
        }
        let qpow = self.q().pow(m2.i as u64 * m1.k as u64);
        let p = self.sigma_pow(&m1.p, m2.i)?;
        let r = self.sigma_pow(&m2.p, m1.k)?;
        Ok(Monomial::new(
            checked_exp(m1.i, m2.i)?,
            (&p * &r).scale(&qpow),
            checked_exp(m1.k, m2.k)?,
        ))
    }
}

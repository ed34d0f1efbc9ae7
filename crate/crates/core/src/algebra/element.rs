use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use super::Algebra;
use crate::error::Result;
use crate::poly::{power_text, write_signed_term, Poly};
use crate::scalar::Scalar;

/// Sparse normal form `Σ x^i p_{ik}(h) y^k`, keyed by `(i, k)`; every stored
/// polynomial is nonzero.
pub type Terms<K> = BTreeMap<(u32, u32), Poly<K>>;

/// Lexicographic bidegree of an element; `Bottom` is the degree of 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BiDegree {
    Bottom,
    Pair(u32, u32),
}

impl Add for BiDegree {
    type Output = BiDegree;
    fn add(self, rhs: BiDegree) -> BiDegree {
        match (self, rhs) {
            (BiDegree::Pair(a, b), BiDegree::Pair(c, d)) => BiDegree::Pair(a + c, b + d),
            _ => BiDegree::Bottom,
        }
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BiDegree::Bottom => write!(f, "(-inf, -inf)"),
            BiDegree::Pair(i, k) => write!(f, "({i}, {k})"),
        }
    }
}

/// A single basis-direction term `x^i p(h) y^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial<K> {
    pub i: u32,
    pub p: Poly<K>,
    pub k: u32,
}

impl<K: Scalar> Monomial<K> {
    pub fn new(i: u32, p: Poly<K>, k: u32) -> Self {
        Monomial { i, p, k }
    }

    pub fn to_element(&self, alg: &Algebra<K>) -> Element<K> {
        Element::monomial(alg, self.i, self.p.clone(), self.k)
    }
}

#[derive(Clone)]
pub struct Element<K> {
    alg: Algebra<K>,
    terms: Terms<K>,
}

pub(crate) fn add_term<K: Scalar>(terms: &mut Terms<K>, key: (u32, u32), p: Poly<K>) {
    if p.is_zero() {
        return;
    }
    match terms.get_mut(&key) {
        Some(existing) => {
            let sum = &*existing + &p;
            if sum.is_zero() {
                terms.remove(&key);
            } else {
                *existing = sum;
            }
        }
        None => {
            terms.insert(key, p);
        }
    }
}

impl<K: Scalar> Element<K> {
    pub fn zero(alg: &Algebra<K>) -> Self {
        Element {
            alg: alg.clone(),
            terms: Terms::new(),
        }
    }

    pub fn from_terms(alg: &Algebra<K>, mut terms: Terms<K>) -> Self {
        terms.retain(|_, p| !p.is_zero());
        Element {
            alg: alg.clone(),
            terms,
        }
    }

    pub fn monomial(alg: &Algebra<K>, i: u32, p: Poly<K>, k: u32) -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, (i, k), p);
        Element {
            alg: alg.clone(),
            terms,
        }
    }

    pub fn from_poly(alg: &Algebra<K>, p: Poly<K>) -> Self {
        Self::monomial(alg, 0, p, 0)
    }

    pub fn scalar(alg: &Algebra<K>, c: K) -> Self {
        Self::from_poly(alg, Poly::constant(c))
    }

    pub fn algebra(&self) -> &Algebra<K> {
        &self.alg
    }

    pub fn terms(&self) -> &Terms<K> {
        &self.terms
    }

    pub fn into_terms(self) -> Terms<K> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Pairs `(i, k)` with nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<(u32, u32)> {
        self.terms.keys().copied().collect()
    }

    pub fn coeff(&self, i: u32, k: u32) -> Poly<K> {
        self.terms.get(&(i, k)).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn add(&self, other: &Element<K>) -> Result<Element<K>> {
        self.alg.check_same(&other.alg)?;
        let mut terms = self.terms.clone();
        for (key, p) in &other.terms {
            add_term(&mut terms, *key, p.clone());
        }
        Ok(Element {
            alg: self.alg.clone(),
            terms,
        })
    }

    pub fn sub(&self, other: &Element<K>) -> Result<Element<K>> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element<K> {
        self.map_coeffs(|p| -p)
    }

    pub fn scale(&self, c: &K) -> Element<K> {
        self.map_coeffs(|p| p.scale(c))
    }

    fn map_coeffs(&self, op: impl Fn(&Poly<K>) -> Poly<K>) -> Element<K> {
        let terms = self.terms.iter().map(|(k, p)| (*k, op(p))).collect();
        Element::from_terms(&self.alg, terms)
    }

    /// Exact product in normal form.
    pub fn mul(&self, other: &Element<K>) -> Result<Element<K>> {
        self.alg.multiply(self, other)
    }

    pub fn pow(&self, n: u32) -> Result<Element<K>> {
        let mut acc = self.alg.one();
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Lexicographic maximum of the support.
    pub fn deg_lex(&self) -> BiDegree {
        self.terms
            .keys()
            .next_back()
            .map_or(BiDegree::Bottom, |&(i, k)| BiDegree::Pair(i, k))
    }

    /// The term sitting at [`Element::deg_lex`].
    pub fn leading_monomial(&self) -> Option<Monomial<K>> {
        self.terms
            .iter()
            .next_back()
            .map(|(&(i, k), p)| Monomial::new(i, p.clone(), k))
    }

    /// Splits by ℤ-degree `i - k`.
    pub fn graded_components(&self) -> BTreeMap<i64, Element<K>> {
        let mut out: BTreeMap<i64, Terms<K>> = BTreeMap::new();
        for (&(i, k), p) in &self.terms {
            out.entry(i as i64 - k as i64).or_default().insert((i, k), p.clone());
        }
        out.into_iter()
            .map(|(d, terms)| {
                (
                    d,
                    Element {
                        alg: self.alg.clone(),
                        terms,
                    },
                )
            })
            .collect()
    }

    /// Whether every term has the same ℤ-degree `d`.
    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.terms.keys().all(|&(i, k)| i as i64 - k as i64 == d)
    }

    /// The anti-automorphism fixing h and swapping x and y.
    pub fn iota(&self) -> Element<K> {
        let terms = self.terms.iter().map(|(&(i, k), p)| ((k, i), p.clone())).collect();
        Element {
            alg: self.alg.clone(),
            terms,
        }
    }

    /// Evaluates the polynomial `p` at this element by Horner's rule.
    pub fn eval_poly(&self, p: &Poly<K>) -> Result<Element<K>> {
        let mut acc = Element::zero(&self.alg);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self)?.add(&Element::scalar(&self.alg, c.clone()))?;
        }
        Ok(acc)
    }
}

impl<K: Scalar> PartialEq for Element<K> {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_as(&other.alg) && self.terms == other.terms
    }
}

impl<K: Scalar> Eq for Element<K> {}

impl<K: Scalar> fmt::Debug for Element<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

impl<K: Scalar> fmt::Display for Element<K> {
    /// Descending lexicographic bidegree, then descending powers of h,
    /// in the expression grammar (`3*x^2*h*y + 1/2*h^3`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        let mut first = true;
        for (&(i, k), p) in self.terms.iter().rev() {
            for (j, c) in p.coeffs().iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let parts: Vec<String> = [("x", i as usize), ("h", j), ("y", k as usize)]
                    .into_iter()
                    .filter(|&(_, e)| e > 0)
                    .map(|(v, e)| power_text(v, e))
                    .collect();
                let body = (!parts.is_empty()).then(|| parts.join("*"));
                write_signed_term(&mut out, first, c, body.as_deref());
                first = false;
            }
        }
        write!(f, "{out}")
    }
}

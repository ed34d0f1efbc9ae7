//! Free-algebra rewriting: the reference normal-form computation.
//!
//! Words over {x, y, h} are rewritten with
//! `hx → x f(h)`, `yh → f(h) y`, `yx → q xy + g(h)` until every word has the
//! shape `x^i h^j y^k`. This path only reads the coefficients of q, f, g and
//! never touches the closed-form product, so it can be used to check it.

use std::collections::BTreeMap;
use std::fmt;

use super::element::{add_term, Terms};
use super::{Algebra, Element};
use crate::error::{capacity, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
    H,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::X, Letter::Y, Letter::H];

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'x' => Some(Letter::X),
            'y' => Some(Letter::Y),
            'h' => Some(Letter::H),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Letter::X => 'x',
            Letter::Y => 'y',
            Letter::H => 'h',
        };
        write!(f, "{c}")
    }
}

/// A scalar multiple of a word in the free algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeWord<K> {
    pub coeff: K,
    pub letters: Vec<Letter>,
}

impl<K: Scalar> FreeWord<K> {
    pub fn new(coeff: K, letters: Vec<Letter>) -> Self {
        FreeWord { coeff, letters }
    }

    /// Parses a word such as `"yxx"`; `None` on any other character.
    pub fn parse(word: &str) -> Option<Self> {
        let letters = word.chars().map(Letter::from_char).collect::<Option<Vec<_>>>()?;
        Some(FreeWord::new(K::one(), letters))
    }
}

/// A linear combination of free words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FreeCombination<K>(BTreeMap<Vec<Letter>, K>);

impl<K: Scalar> FreeCombination<K> {
    pub fn new() -> Self {
        FreeCombination(BTreeMap::new())
    }

    pub fn word(w: FreeWord<K>) -> Self {
        let mut c = Self::new();
        c.add_word(w.letters, w.coeff);
        c
    }

    pub fn add_word(&mut self, letters: Vec<Letter>, coeff: K) {
        if coeff.is_zero() {
            return;
        }
        match self.0.get_mut(&letters) {
            Some(c) => {
                let sum = c.clone() + coeff;
                if sum.is_zero() {
                    self.0.remove(&letters);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.0.insert(letters, coeff);
            }
        }
    }

    pub fn add(&mut self, other: &FreeCombination<K>) {
        for (w, c) in &other.0 {
            self.add_word(w.clone(), c.clone());
        }
    }

    pub fn scale(&self, s: &K) -> Self {
        let mut out = Self::new();
        for (w, c) in &self.0 {
            out.add_word(w.clone(), c.clone() * s.clone());
        }
        out
    }

    /// Concatenation product.
    pub fn concat(&self, other: &FreeCombination<K>) -> Self {
        let mut out = Self::new();
        for (w1, c1) in &self.0 {
            for (w2, c2) in &other.0 {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_word(w, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn words(&self) -> impl Iterator<Item = (&Vec<Letter>, &K)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The normal-form terms of `e` as words `x^i h^j y^k`.
    pub fn from_element(e: &Element<K>) -> Self {
        let mut out = Self::new();
        for (&(i, k), p) in e.terms() {
            for (j, c) in p.coeffs().iter().enumerate() {
                let mut w = vec![Letter::X; i as usize];
                w.extend(std::iter::repeat_n(Letter::H, j));
                w.extend(std::iter::repeat_n(Letter::Y, k as usize));
                out.add_word(w, c.clone());
            }
        }
        out
    }
}

/// Which redex to rewrite first inside a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

fn is_redex(a: Letter, b: Letter) -> bool {
    matches!(
        (a, b),
        (Letter::H, Letter::X) | (Letter::Y, Letter::H) | (Letter::Y, Letter::X)
    )
}

fn find_redex(w: &[Letter], strategy: Strategy) -> Option<usize> {
    let mut positions = (0..w.len().saturating_sub(1)).filter(|&j| is_redex(w[j], w[j + 1]));
    match strategy {
        Strategy::Leftmost => positions.next(),
        Strategy::Rightmost => positions.next_back(),
    }
}

fn splice(w: &[Letter], at: usize, middle: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut out = Vec::with_capacity(w.len() + 4);
    out.extend_from_slice(&w[..at]);
    out.extend(middle);
    out.extend_from_slice(&w[at + 2..]);
    out
}

fn h_run(n: usize) -> impl Iterator<Item = Letter> {
    std::iter::repeat_n(Letter::H, n)
}

/// Rewrites every word of `comb` to normal form and collects the h-runs.
pub fn reduce_combination<K: Scalar>(
    comb: &FreeCombination<K>,
    alg: &Algebra<K>,
    strategy: Strategy,
) -> Result<Element<K>> {
    let f = alg.f().coeffs().to_vec();
    let g = alg.g().coeffs().to_vec();
    let q = alg.q().clone();
    let limit = alg.limits().max_basis;

    let mut done = FreeCombination::<K>::new();
    let mut pending = comb.clone();
    while !pending.is_empty() {
        if pending.len() as u64 > limit {
            return Err(capacity("live words during rewriting", pending.len() as u64, limit));
        }
        let mut next = FreeCombination::new();
        for (w, c) in pending.0 {
            let Some(j) = find_redex(&w, strategy) else {
                done.add_word(w, c);
                continue;
            };
            match (w[j], w[j + 1]) {
                (Letter::H, Letter::X) => {
                    for (t, ft) in f.iter().enumerate() {
                        let word = splice(&w, j, std::iter::once(Letter::X).chain(h_run(t)));
                        next.add_word(word, c.clone() * ft.clone());
                    }
                }
                (Letter::Y, Letter::H) => {
                    for (t, ft) in f.iter().enumerate() {
                        let word = splice(&w, j, h_run(t).chain(std::iter::once(Letter::Y)));
                        next.add_word(word, c.clone() * ft.clone());
                    }
                }
                _ => {
                    next.add_word(splice(&w, j, [Letter::X, Letter::Y]), c.clone() * q.clone());
                    for (t, gt) in g.iter().enumerate() {
                        next.add_word(splice(&w, j, h_run(t)), c.clone() * gt.clone());
                    }
                }
            }
        }
        pending = next;
    }

    let mut terms = Terms::new();
    for (w, c) in done.0 {
        let i = w.iter().take_while(|&&l| l == Letter::X).count();
        let j = w[i..].iter().take_while(|&&l| l == Letter::H).count();
        let k = w.len() - i - j;
        add_term(&mut terms, (i as u32, k as u32), Poly::monomial(c, j));
    }
    Ok(Element::from_terms(alg, terms))
}

/// Normal form of a single word via the rewriting system.
pub fn reduce_word<K: Scalar>(w: &FreeWord<K>, alg: &Algebra<K>) -> Result<Element<K>> {
    reduce_combination(&FreeCombination::word(w.clone()), alg, Strategy::Leftmost)
}

/// `a·b` computed by concatenating normal-form words and rewriting.
pub fn oracle_multiply<K: Scalar>(a: &Element<K>, b: &Element<K>) -> Result<Element<K>> {
    a.algebra().check_same(b.algebra())?;
    let prod = FreeCombination::from_element(a).concat(&FreeCombination::from_element(b));
    reduce_combination(&prod, a.algebra(), Strategy::Leftmost)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::rat;
    use crate::scalar::{FieldSpec, Rational};

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::from_coeffs(c.iter().map(|&n| rat(n, 1)).collect())
    }

    fn alg(q: i64, f: &[i64], g: &[i64]) -> Algebra<Rational> {
        Algebra::new(FieldSpec::rationals(), rat(q, 1), p(f), p(g)).unwrap()
    }

    fn word(s: &str) -> FreeWord<Rational> {
        FreeWord::parse(s).unwrap()
    }

    #[test]
    fn single_relations() {
        let a = alg(3, &[1, 0, 1], &[0, 2]);
        let yx = reduce_word(&word("yx"), &a).unwrap();
        let expect = Element::monomial(&a, 1, p(&[3]), 1)
            .add(&Element::from_poly(&a, p(&[0, 2])))
            .unwrap();
        assert_eq!(yx, expect);
        assert_eq!(
            reduce_word(&word("hx"), &a).unwrap(),
            Element::monomial(&a, 1, p(&[1, 0, 1]), 0)
        );
        assert_eq!(
            reduce_word(&word("yh"), &a).unwrap(),
            Element::monomial(&a, 0, p(&[1, 0, 1]), 1)
        );
    }

    #[test]
    fn two_step_rewrite() {
        // y x^2 = x^2 y + x (h + h^2) with q = 1, f = h^2, g = h
        let a = alg(1, &[0, 0, 1], &[0, 1]);
        let expect = Element::monomial(&a, 2, Poly::one(), 1)
            .add(&Element::monomial(&a, 1, p(&[0, 1, 1]), 0))
            .unwrap();
        assert_eq!(reduce_word(&word("yxx"), &a).unwrap(), expect);
    }

    #[test]
    fn normal_words_are_fixed() {
        let a = alg(2, &[0, 0, 1], &[0, 1]);
        let r = reduce_word(&word("xxhhy"), &a).unwrap();
        assert_eq!(r, Element::monomial(&a, 2, p(&[0, 0, 1]), 1));
        assert_eq!(reduce_word(&word(""), &a).unwrap(), a.one());
    }

    #[test]
    fn strategies_agree() {
        let a = alg(2, &[1, 0, 1], &[0, 0, 0, 1]);
        for w in ["yyxx", "hyxh", "yhxyx", "yyhxx"] {
            let c = FreeCombination::word(word(w));
            assert_eq!(
                reduce_combination(&c, &a, Strategy::Leftmost).unwrap(),
                reduce_combination(&c, &a, Strategy::Rightmost).unwrap(),
                "word {w}"
            );
        }
    }

    #[test]
    fn oracle_product_matches_fast_path() {
        let a = alg(2, &[1, 0, 1], &[0, 1]);
        let e1 = Element::monomial(&a, 1, p(&[1, 1]), 2);
        let e2 = Element::monomial(&a, 2, p(&[0, 3]), 1).add(&a.h()).unwrap();
        assert_eq!(oracle_multiply(&e1, &e2).unwrap(), e1.mul(&e2).unwrap());
    }
}

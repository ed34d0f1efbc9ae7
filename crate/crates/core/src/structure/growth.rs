use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebra::{Algebra, Element, Terms};
use crate::error::{capacity, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Ordering key `(i + j + k, i, j, k)` for the basis word `x^i h^j y^k`.
type Key = (u64, u32, u32, u32);
type SparseVec<K> = BTreeMap<Key, K>;

/// `dim V^n` for `V = span{1, x, y, h}`, `n = 0..=max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthReport {
    pub dims: Vec<u64>,
}

impl GrowthReport {
    /// `log(d_n / d_{n-1}) / log(n / (n-1))` for `n >= 2`.
    pub fn slopes(&self) -> Vec<Option<f64>> {
        (0..self.dims.len())
            .map(|n| {
                (n >= 2).then(|| {
                    let ratio = self.dims[n] as f64 / self.dims[n - 1] as f64;
                    ratio.ln() / (n as f64 / (n - 1) as f64).ln()
                })
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,dim,slope\n");
        for (n, (d, s)) in self.dims.iter().zip(self.slopes()).enumerate() {
            match s {
                Some(s) => writeln!(out, "{n},{d},{s:.6}"),
                None => writeln!(out, "{n},{d},"),
            }
            .expect("writing to a String");
        }
        out
    }
}

fn to_sparse<K: Scalar>(e: &Element<K>) -> SparseVec<K> {
    let mut v = SparseVec::new();
    for (&(i, k), p) in e.terms() {
        for (j, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let j = j as u32;
                v.insert((i as u64 + j as u64 + k as u64, i, j, k), c.clone());
            }
        }
    }
    v
}

fn to_element<K: Scalar>(alg: &Algebra<K>, v: &SparseVec<K>) -> Element<K> {
    let mut grouped: BTreeMap<(u32, u32), Vec<K>> = BTreeMap::new();
    for (&(_, i, j, k), c) in v {
        let coeffs = grouped.entry((i, k)).or_default();
        if coeffs.len() <= j as usize {
            coeffs.resize(j as usize + 1, K::zero());
        }
        coeffs[j as usize] = c.clone();
    }
    let terms: Terms<K> = grouped.into_iter().map(|(ik, c)| (ik, Poly::from_coeffs(c))).collect();
    Element::from_terms(alg, terms)
}

/// Rows keyed by pivot (largest key), each normalized to pivot coefficient 1.
struct Echelon<K> {
    rows: BTreeMap<Key, SparseVec<K>>,
}

impl<K: Scalar> Echelon<K> {
    fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        while let Some((&key, c)) = v.last_key_value() {
            let Some(row) = self.rows.get(&key) else { break };
            let c = c.clone();
            for (k, r) in row {
                let entry = v.entry(*k).or_insert_with(K::zero);
                *entry = entry.clone() - c.clone() * r.clone();
                if entry.is_zero() {
                    v.remove(k);
                }
            }
        }
        v
    }

    /// Inserts `v` if it is independent; returns the reduced vector then.
    fn insert(&mut self, v: SparseVec<K>) -> Result<Option<SparseVec<K>>> {
        let v = self.reduce(v);
        let Some((&key, c)) = v.last_key_value() else {
            return Ok(None);
        };
        let inv = c.inv()?;
        let row: SparseVec<K> = v.iter().map(|(k, c)| (*k, c.clone() * inv.clone())).collect();
        self.rows.insert(key, row.clone());
        Ok(Some(row))
    }
}

/// Dimensions of the filtration `V^0 ⊆ V^1 ⊆ … ⊆ V^max_n`.
///
/// Each step multiplies only the vectors added at the previous step by the
/// generators, since `V^n = V^{n-1} + V^{n-1}·{x, y, h}` and the older
/// part is already spanned.
pub fn gk_dimension_sequence<K: Scalar>(alg: &Algebra<K>, max_n: u32) -> Result<GrowthReport> {
    let max_basis = alg.limits().max_basis;
    let gens = [alg.x(), alg.y(), alg.h()];
    let mut echelon = Echelon { rows: BTreeMap::new() };
    let mut frontier = Vec::new();
    if let Some(v) = echelon.insert(to_sparse(&alg.one()))? {
        frontier.push(v);
    }
    let mut dims = vec![echelon.rows.len() as u64];
    for _ in 1..=max_n {
        let mut next = Vec::new();
        for v in &frontier {
            let e = to_element(alg, v);
            for gen in &gens {
                if let Some(row) = echelon.insert(to_sparse(&e.mul(gen)?))? {
                    next.push(row);
                    if echelon.rows.len() as u64 > max_basis {
                        return Err(capacity("basis size", echelon.rows.len() as u64, max_basis));
                    }
                }
            }
        }
        dims.push(echelon.rows.len() as u64);
        frontier = next;
    }
    Ok(GrowthReport { dims })
}

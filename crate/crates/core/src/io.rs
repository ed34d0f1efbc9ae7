//! JSON form of algebra parameters.
//!
//! ```json
//! {"field": {"type": "Fp", "p": 7}, "q": "3", "f": ["0", "0", "1"], "g": ["0", "1", "1"]}
//! ```
//!
//! Polynomial coefficients are listed in ascending degree; `{"type": "Q"}`
//! selects the rationals.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraParams;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{FieldKind, FieldSpec, Fp, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", deny_unknown_fields)]
enum FieldJson {
    Q,
    Fp { p: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraJson {
    field: FieldJson,
    q: String,
    f: Vec<String>,
    g: Vec<String>,
}

/// Parameters over whichever field the input names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyParams {
    Q(AlgebraParams<Rational>),
    Fp(AlgebraParams<Fp>),
}

impl AnyParams {
    pub fn field(&self) -> FieldSpec {
        match self {
            AnyParams::Q(p) => p.field,
            AnyParams::Fp(p) => p.field,
        }
    }
}

fn parse_params<K: Scalar>(raw: &AlgebraJson, field: FieldSpec) -> Result<AlgebraParams<K>> {
    let poly = |cs: &[String]| -> Result<Poly<K>> {
        Ok(Poly::from_coeffs(
            cs.iter().map(|c| K::parse(c, &field)).collect::<Result<_>>()?,
        ))
    };
    AlgebraParams::new(field, K::parse(&raw.q, &field)?, poly(&raw.f)?, poly(&raw.g)?)
}

pub fn parse_algebra_json(text: &str) -> Result<AnyParams> {
    let raw: AlgebraJson = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    match raw.field {
        FieldJson::Q => Ok(AnyParams::Q(parse_params(&raw, FieldSpec::rationals())?)),
        FieldJson::Fp { p } => Ok(AnyParams::Fp(parse_params(&raw, FieldSpec::prime(p)?)?)),
    }
}

pub fn read_algebra_file(path: impl AsRef<Path>) -> Result<AnyParams> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_algebra_json(&text)
}

pub fn algebra_to_json<K: Scalar>(params: &AlgebraParams<K>) -> String {
    let field = match params.field.kind() {
        FieldKind::Rationals => FieldJson::Q,
        FieldKind::PrimeField(p) => FieldJson::Fp { p },
    };
    let coeffs = |p: &Poly<K>| p.coeffs().iter().map(ToString::to_string).collect();
    let raw = AlgebraJson {
        field,
        q: params.q.to_string(),
        f: coeffs(&params.f),
        g: coeffs(&params.g),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::rat;

    #[test]
    fn rational_file() {
        let p = parse_algebra_json(r#"{"field":{"type":"Q"},"q":"1","f":["0","1"],"g":["0","1"]}"#).unwrap();
        let AnyParams::Q(p) = p else { panic!() };
        assert_eq!(
            (p.q.clone(), p.f.clone(), p.g.clone()),
            (rat(1, 1), Poly::h(), Poly::h())
        );
        assert_eq!(parse_algebra_json(&algebra_to_json(&p)).unwrap(), AnyParams::Q(p));
    }

    #[test]
    fn prime_file() {
        let text = r#"{"field":{"type":"Fp","p":7},"q":"3","f":["0","0","1"],"g":["0","1","1"]}"#;
        let AnyParams::Fp(p) = parse_algebra_json(text).unwrap() else {
            panic!()
        };
        assert_eq!(p.to_string(), "H_3(h^2, h^2 + h) over F_7");
        assert_eq!(algebra_to_json(&p), text);
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(
            parse_algebra_json(r#"{"field":{"type":"Q"},"q":"1","g":["0","1"]}"#),
            Err(Error::Schema(_))
        ));
        assert_eq!(
            parse_algebra_json(r#"{"field":{"type":"Fp","p":8},"q":"1","f":["1"],"g":[]}"#),
            Err(Error::NotPrime(8))
        );
        assert!(matches!(
            parse_algebra_json(r#"{"field":{"type":"Q"},"q":"x","f":["1"],"g":[]}"#),
            Err(Error::InvalidScalar(_))
        ));
        assert!(matches!(read_algebra_file("/nonexistent/alg.json"), Err(Error::Io(_))));
    }
}

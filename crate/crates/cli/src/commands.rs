use std::fmt::Write as _;

use qgha_core::algebra::oracle_multiply;
use qgha_core::classify::{automorphism_group, from_downup, gdua_to_qgha, is_isomorphic, qgha_to_gdua, AutRegime};
use qgha_core::expr::parse_element;
use qgha_core::io::{algebra_to_json, read_algebra_file, AnyParams};
use qgha_core::structure::{
    center_describe, gk_dimension_sequence, is_domain, is_noetherian, noetherian_witness_check, CenterDescription,
    DomainReason, NoetherianReason,
};
use qgha_core::{Algebra, AlgebraParams, Degree, Error, FieldSpec, Fp, Limits, Poly, Rational, Result, Scalar};
use serde_json::json;

use crate::Command;

macro_rules! with_params {
    ($any:expr, $p:ident => $body:expr) => {
        match $any {
            AnyParams::Q($p) => $body,
            AnyParams::Fp($p) => $body,
        }
    };
}

pub fn run(command: Command, limits: &Limits) -> Result<String> {
    match command {
        Command::Analyze { file } => with_params!(read_algebra_file(file)?, p => analyze(p, limits)),
        Command::Mul { file, lhs, rhs, oracle } => {
            with_params!(read_algebra_file(file)?, p => mul(p, limits, &lhs, &rhs, oracle))
        }
        Command::Deg { file, expr } => with_params!(read_algebra_file(file)?, p => {
            let alg = Algebra::with_limits(p, *limits);
            Ok(format!("{}\n", parse_element(&expr, &alg)?.deg_lex()))
        }),
        Command::Iota { file, expr } => with_params!(read_algebra_file(file)?, p => {
            let alg = Algebra::with_limits(p, *limits);
            Ok(format!("{}\n", parse_element(&expr, &alg)?.iota()))
        }),
        Command::Iso { file_a, file_b } => match (read_algebra_file(file_a)?, read_algebra_file(file_b)?) {
            (AnyParams::Q(a), AnyParams::Q(b)) => iso(&a, &b, limits),
            (AnyParams::Fp(a), AnyParams::Fp(b)) => iso(&a, &b, limits),
            _ => Err(Error::FieldMismatch),
        },
        Command::Aut { file } => with_params!(read_algebra_file(file)?, p => aut(p, limits)),
        Command::Center { file } => with_params!(read_algebra_file(file)?, p => {
            let alg = Algebra::with_limits(p, *limits);
            Ok(format!("{}\n", center_text(&center_describe(&alg)?)))
        }),
        Command::Gk { file, max_n } => with_params!(read_algebra_file(file)?, p => {
            let alg = Algebra::with_limits(p, *limits);
            Ok(gk_dimension_sequence(&alg, max_n)?.to_csv())
        }),
        Command::NoethWitness { file, depth } => {
            with_params!(read_algebra_file(file)?, p => noeth_witness(&p, depth, limits))
        }
        Command::Convert {
            from_downup,
            from_gdua,
            to_gdua,
            p,
            choice,
        } => {
            let field = match p {
                Some(p) => FieldSpec::prime(p)?,
                None => FieldSpec::rationals(),
            };
            if let Some(file) = to_gdua {
                return with_params!(read_algebra_file(file)?, p => Ok(format!("{}\n", qgha_to_gdua(&p)?)));
            }
            match field.modulus() {
                None => convert::<Rational>(from_downup, from_gdua, &field, choice, limits),
                Some(_) => convert::<Fp>(from_downup, from_gdua, &field, choice, limits),
            }
        }
    }
}

fn analyze<K: Scalar>(p: AlgebraParams<K>, limits: &Limits) -> Result<String> {
    let mut out = String::new();
    let domain = is_domain(&p);
    let noeth = is_noetherian(&p, limits);
    let domain_reason = match domain.reason {
        DomainReason::QZero => "q = 0",
        DomainReason::ConstantF => "f is constant",
        DomainReason::QNonzeroAndNonconstantF => "q != 0 and deg f >= 1",
    };
    let noeth_reason = match noeth.reason {
        NoetherianReason::DegF1AndQNonzero => "deg f = 1 and q != 0",
        NoetherianReason::QZero => "q = 0",
        NoetherianReason::DegFNot1 => "deg f != 1",
    };
    writeln!(out, "algebra: {p}").unwrap();
    writeln!(out, "domain: {} ({domain_reason})", domain.verdict).unwrap();
    writeln!(out, "noetherian: {} ({noeth_reason})", noeth.verdict).unwrap();
    if let Some(w) = &noeth.witness {
        writeln!(
            out,
            "noetherian-witness: depth {} {} (beta = {})",
            w.depth,
            if w.verified() { "verified" } else { "failed" },
            w.beta
        )
        .unwrap();
    }
    writeln!(out, "gdua: {}", p.is_gdua()).unwrap();
    let center = if p.deg_f() >= Degree::Finite(2) && !p.q.is_zero() {
        center_text(&center_describe(&Algebra::with_limits(p, *limits))?)
    } else {
        "not described (requires deg f >= 2 and q != 0)".to_string()
    };
    writeln!(out, "center: {center}").unwrap();
    Ok(out)
}

fn center_text<K: Scalar>(c: &CenterDescription<K>) -> String {
    match c {
        CenterDescription::ScalarsOnly => "scalars only".to_string(),
        CenterDescription::PolynomialInZl { ell, a, z } => {
            format!("polynomial ring in Z^{ell}, Z = {z}, a = {a}")
        }
        CenterDescription::Undetermined { reason } => format!("undetermined ({reason})"),
    }
}

fn mul<K: Scalar>(p: AlgebraParams<K>, limits: &Limits, lhs: &str, rhs: &str, oracle: bool) -> Result<String> {
    let alg = Algebra::with_limits(p, *limits);
    let (a, b) = (parse_element(lhs, &alg)?, parse_element(rhs, &alg)?);
    let prod = if oracle { oracle_multiply(&a, &b)? } else { a.mul(&b)? };
    Ok(format!("{prod}\n"))
}

fn iso<K: Scalar>(a: &AlgebraParams<K>, b: &AlgebraParams<K>, limits: &Limits) -> Result<String> {
    match is_isomorphic(a, b, limits)? {
        Some(w) => Ok(format!("{}\n", serde_json::to_string_pretty(&w.to_json()?).unwrap())),
        None => Ok("not isomorphic\n".to_string()),
    }
}

fn aut<K: Scalar>(p: AlgebraParams<K>, limits: &Limits) -> Result<String> {
    let g = automorphism_group(&p, limits)?;
    let finite: Vec<_> = g
        .finite_part
        .iter()
        .map(|m| json!({"a": m.a.to_string(), "b": m.b.to_string()}))
        .collect();
    let report = json!({
        "torus_rank": g.torus_rank,
        "finite_part": finite,
        "abelian": g.abelian,
        "regime": match g.regime { AutRegime::GNonzero => "GNonzero", AutRegime::GZero => "GZero" },
        "char_caveat": g.char_caveat,
    });
    Ok(format!("{}\n", serde_json::to_string_pretty(&report).unwrap()))
}

fn noeth_witness<K: Scalar>(p: &AlgebraParams<K>, depth: u32, limits: &Limits) -> Result<String> {
    let w = noetherian_witness_check(p, depth, limits)?;
    let mut out = String::new();
    writeln!(out, "beta: {}", w.beta).unwrap();
    writeln!(out, "shifted f: {}", w.shifted_f).unwrap();
    for c in &w.checks {
        let sigma: Vec<_> = c.sigma_divisible.iter().map(|b| if *b { "1" } else { "0" }).collect();
        writeln!(
            out,
            "n={}: sigma^k(h) mod f == 0 for k=1..{}: [{}]; h mod f != 0: {}",
            c.n,
            c.n + 1,
            sigma.join(","),
            c.h_not_divisible
        )
        .unwrap();
    }
    writeln!(out, "verified: {}", w.verified()).unwrap();
    Ok(out)
}

/// Parses a polynomial in h written in the element grammar.
fn parse_h_poly<K: Scalar>(text: &str, field: &FieldSpec) -> Result<Poly<K>> {
    let scratch = Algebra::new(*field, K::from_int(1, field), Poly::h(), Poly::zero())?;
    let e = parse_element(text, &scratch)?;
    if e.terms().keys().any(|&key| key != (0, 0)) {
        return Err(Error::PreconditionViolated(format!(
            "{text:?} is not a polynomial in h"
        )));
    }
    Ok(e.coeff(0, 0))
}

fn convert<K: Scalar>(
    downup: Option<Vec<String>>,
    gdua: Option<Vec<String>>,
    field: &FieldSpec,
    choice: usize,
    limits: &Limits,
) -> Result<String> {
    let scalar = |s: &String| K::parse(s, field);
    let params = if let Some(args) = downup {
        let [a, b, g] = [scalar(&args[0])?, scalar(&args[1])?, scalar(&args[2])?];
        from_downup(&a, &b, &g, field, choice, limits)?
    } else if let Some(args) = gdua {
        let v = parse_h_poly::<K>(&args[0], field)?;
        gdua_to_qgha(&v, &scalar(&args[1])?, &scalar(&args[2])?, &scalar(&args[3])?, field)?
    } else {
        unreachable!("clap requires one conversion mode")
    };
    Ok(format!("{}\n", algebra_to_json(&params)))
}

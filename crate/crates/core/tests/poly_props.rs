use proptest::prelude::*;
use qgha_core::{rat, Degree, FieldSpec, Fp, Limits, Poly, Rational};

fn q_poly(c: &[(i64, i64)]) -> Poly<Rational> {
    Poly::from_coeffs(c.iter().map(|&(n, d)| rat(n, d)).collect())
}

fn fp_poly(c: &[i64], field: &FieldSpec) -> Poly<Fp> {
    Poly::from_coeffs(c.iter().map(|&n| Fp::new(n, field)).collect())
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-40i64..40, 1i64..12), 0..6)
}

/// Schoolbook product through the operator traits only.
fn naive_mul(a: &Poly<Rational>, b: &Poly<Rational>) -> Poly<Rational> {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![rat(0, 1); a.coeffs().len() + b.coeffs().len() - 1];
    for (i, x) in a.coeffs().iter().enumerate() {
        for (j, y) in b.coeffs().iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    Poly::from_coeffs(out)
}

proptest! {
    #[test]
    fn product_matches_schoolbook(a in coeffs(), b in coeffs()) {
        let (a, b) = (q_poly(&a), q_poly(&b));
        prop_assert_eq!(&a * &b, naive_mul(&a, &b));
    }

    #[test]
    fn sums_match_operator_traits(a in coeffs(), b in coeffs()) {
        let (a, b) = (q_poly(&a), q_poly(&b));
        let n = a.coeffs().len().max(b.coeffs().len());
        let sum: Vec<Rational> = (0..n).map(|i| a.coeff(i) + b.coeff(i)).collect();
        let diff: Vec<Rational> = (0..n).map(|i| a.coeff(i) - b.coeff(i)).collect();
        prop_assert_eq!(&a + &b, Poly::from_coeffs(sum));
        prop_assert_eq!(&a - &b, Poly::from_coeffs(diff));
    }

    #[test]
    fn composition_is_associative(a in coeffs(), b in coeffs(), c in coeffs()) {
        let (a, b, c) = (q_poly(&a[..a.len().min(4)]), q_poly(&b[..b.len().min(3)]), q_poly(&c[..c.len().min(3)]));
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn composition_evaluates_pointwise(a in coeffs(), b in coeffs(), t in -6i64..6) {
        let (a, b) = (q_poly(&a), q_poly(&b));
        let t = rat(t, 1);
        prop_assert_eq!(a.compose(&b).eval(&t), a.eval(&b.eval(&t)));
    }

    #[test]
    fn division_identity(a in coeffs(), b in coeffs()) {
        let (a, b) = (q_poly(&a), q_poly(&b));
        prop_assume!(!b.is_zero());
        let (quot, rem) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&quot * &b) + &rem, a);
        prop_assert!(rem.degree() < b.degree());
    }

    #[test]
    fn affine_conjugation_inverts(a in coeffs(), u in 1i64..5, v in -5i64..5) {
        let a = q_poly(&a);
        let (u, v) = (rat(u, 1), rat(v, 1));
        let conj = a.affine_conjugate(&u, &v).unwrap();
        let inv = Poly::affine_inverse(&u, &v).unwrap();
        let (ui, vi) = (inv.coeff(1), inv.coeff(0));
        prop_assert_eq!(conj.affine_conjugate(&ui, &vi).unwrap(), a);
    }

    #[test]
    fn fp_roots_match_enumeration(c in prop::collection::vec(0i64..11, 1..6)) {
        let field = FieldSpec::prime(11).unwrap();
        let p = fp_poly(&c, &field);
        prop_assume!(!p.is_zero());
        let brute: Vec<Fp> = (0..11).map(|t| Fp::new(t, &field)).filter(|t| p.eval(t) == Fp::new(0, &field)).collect();
        prop_assert_eq!(p.roots(&field, &Limits::default()).unwrap(), brute);
    }

    #[test]
    fn rational_roots_are_roots(r in prop::collection::vec((-6i64..6, 1i64..4), 1..4), lead in 1i64..4) {
        // ∏ (d·h − n) has exactly the roots n/d
        let mut p = Poly::constant(rat(lead, 1));
        for &(n, d) in &r {
            p = &p * &q_poly(&[(-n, 1), (d, 1)]);
        }
        let mut expected: Vec<Rational> = r.iter().map(|&(n, d)| rat(n, d)).collect();
        expected.sort();
        expected.dedup();
        prop_assert_eq!(p.roots(&FieldSpec::rationals(), &Limits::default()).unwrap(), expected);
    }
}

#[test]
fn sigma_powers_iterate_composition() {
    let f = q_poly(&[(1, 1), (0, 1), (1, 2)]);
    let p = q_poly(&[(0, 1), (3, 1), (1, 1)]);
    let l = Limits::default();
    let mut expected = p.clone();
    for k in 0..5u64 {
        assert_eq!(p.sigma_pow(&f, k, &l).unwrap(), expected);
        expected = expected.compose(&f);
    }
    assert_eq!(p.sigma_pow(&f, 4, &l).unwrap().degree(), Degree::Finite(32));
}

#[test]
fn sigma_power_capacity() {
    let f = q_poly(&[(0, 1), (0, 1), (1, 1)]);
    let l = Limits {
        max_degree: 1000,
        ..Limits::default()
    };
    assert!(Poly::h().sigma_pow(&f, 9, &l).is_ok());
    assert!(matches!(
        Poly::h().sigma_pow(&f, 10, &l),
        Err(qgha_core::Error::CapacityExceeded { .. })
    ));
}

#[test]
fn large_rational_coefficients_stay_reduced() {
    let f = q_poly(&[(1, 3), (2, 5), (7, 2)]);
    let iterate = Poly::h().sigma_pow(&f, 6, &Limits::default()).unwrap();
    for c in iterate.coeffs() {
        assert_eq!(c.clone(), Rational::new(c.numer().clone(), c.denom().clone()));
    }
    assert_eq!(iterate.eval(&rat(0, 1)), {
        let mut t = rat(0, 1);
        for _ in 0..6 {
            t = f.eval(&t);
        }
        t
    });
}

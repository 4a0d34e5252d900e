mod common;

use proptest::prelude::*;
use squaring::algcheck::{
    conjugate_lemma_check, minpoly_quadratic, positive_real_part_all_roots, routh_first_column,
    AlgError, IntPoly,
};
use squaring::{Field, QuadExt, QuadField, Rational};

use common::oracle_real_parts;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=9).prop_map(|(n, d)| Rational::frac(n, d))
}

fn quad() -> impl Strategy<Value = QuadExt> {
    (
        prop::sample::select(vec![2u64, 3, 5, 6, 7, 13]),
        rational(),
        rational(),
    )
        .prop_map(|(d, a, b)| QuadField::new(d).unwrap().elem(a, b))
}

fn int_poly(max_degree: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-9i64..=9, 1..=max_degree + 1).prop_map(|c| IntPoly::from_i64(&c))
}

/// Positive real parts for a monic `x² + bx + c`: with a positive
/// discriminant both roots are real and positive iff their sum `−b` and
/// product `c` are; otherwise the roots share the real part `−b/2`.
fn closed_form(b: i64, c: i64) -> bool {
    if b * b - 4 * c > 0 {
        -b > 0 && c > 0
    } else {
        -b > 0
    }
}

proptest! {
    #[test]
    fn minpoly_vanishes(x in quad()) {
        let m = minpoly_quadratic(&x);
        prop_assert!(m.eval_in(&x).is_zero());
        prop_assert_eq!(m.degree(), Some(if x.is_rational() { 1 } else { 2 }));
        prop_assert_eq!(m.content(), 1.into());
    }

    #[test]
    fn evaluations_at_conjugates_are_conjugate(p in int_poly(6), x in quad()) {
        let rep = conjugate_lemma_check(&p, &x);
        prop_assert!(rep.conjugation_commutes);
        prop_assert_eq!(rep.at_x.a(), rep.at_conjugate.a());
        prop_assert_eq!(rep.at_x.b().clone(), -rep.at_conjugate.b().clone());
        prop_assert!(rep.lemma_holds());
    }

    #[test]
    fn roots_of_minpolys_transfer(x in quad(), extra in int_poly(3)) {
        let p = IntPoly::from_rational_poly(&minpoly_quadratic(&x).to_poly().mul(&extra.to_poly()));
        prop_assume!(!p.is_zero());
        let rep = conjugate_lemma_check(&p, &x);
        prop_assert!(rep.at_x.is_zero() && rep.at_conjugate.is_zero());
        prop_assert_eq!(rep.minpoly_divides, Some(true));
    }

    #[test]
    fn quadratics_match_closed_form(b in -12i64..=12, c in -12i64..=12) {
        let p = IntPoly::from_i64(&[c, b, 1]);
        if b * b == 4 * c {
            prop_assert_eq!(positive_real_part_all_roots(&p), Err(AlgError::NotSquarefree));
        } else {
            prop_assert_eq!(positive_real_part_all_roots(&p), Ok(closed_form(b, c)));
        }
    }

    #[test]
    fn routh_agrees_with_eigenvalues(p in int_poly(6)) {
        prop_assume!(p.degree().unwrap_or(0) >= 1 && p.is_squarefree());
        let re = oracle_real_parts(&p);
        prop_assume!(re.iter().all(|r| r.abs() > 1e-3));
        prop_assert_eq!(positive_real_part_all_roots(&p).unwrap(), re.iter().all(|&r| r > 0.0));
    }

    #[test]
    fn sign_and_scale_do_not_matter(p in int_poly(5), k in 1i64..6) {
        prop_assume!(p.degree().unwrap_or(0) >= 1 && p.is_squarefree());
        let scaled = IntPoly::from_i64(
            &p.coeffs().iter().map(|c| -(i64::try_from(c.clone()).unwrap()) * k).collect::<Vec<_>>(),
        );
        prop_assert_eq!(positive_real_part_all_roots(&p), positive_real_part_all_roots(&scaled));
        prop_assert!(routh_first_column(&p).unwrap().len() <= p.degree().unwrap() + 1);
    }
}

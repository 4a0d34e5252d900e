use proptest::prelude::*;
use squaring::arith::parse_rational;
use squaring::{Field, OrderedField, Poly, QuadExt, QuadField, RatFunc, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::frac(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |q| !q.is_zero())
}

fn quad(d: u64) -> impl Strategy<Value = QuadExt> {
    (rational(), rational()).prop_map(move |(a, b)| QuadField::new(d).unwrap().elem(a, b))
}

fn poly() -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec(rational(), 0..5).prop_map(Poly::new)
}

fn nonzero_poly() -> impl Strategy<Value = Poly<Rational>> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn field_laws<K: Field>(a: &K, b: &K, c: &K) {
    assert_eq!(a.clone() + b, b.clone() + a);
    assert_eq!(a.clone() * b, b.clone() * a);
    assert_eq!((a.clone() + b) + c, a.clone() + &(b.clone() + c));
    assert_eq!((a.clone() * b) * c, a.clone() * &(b.clone() * c));
    assert_eq!(
        a.clone() * &(b.clone() + c),
        a.clone() * b + &(a.clone() * c)
    );
    assert_eq!(a.clone() - a, K::zero());
    assert_eq!(a.clone() + &K::zero(), *a);
    assert_eq!(a.clone() * &K::one(), *a);
    if a.is_zero() {
        assert!(a.inv().is_err());
    } else {
        assert!((a.clone() * &a.inv().unwrap()).is_one());
    }
}

proptest! {
    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        field_laws(&a, &b, &c);
    }

    #[test]
    fn quad_field_laws(a in quad(3), b in quad(3), c in quad(3)) {
        field_laws(&a, &b, &c);
    }

    #[test]
    fn ratfunc_field_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        field_laws(&a, &b, &c);
    }

    #[test]
    fn rational_is_canonical(n in -500i64..500, d in 1i64..60, k in 1i64..20) {
        let q = Rational::frac(n * k, d * k);
        prop_assert_eq!(&q, &Rational::frac(n, d));
        prop_assert!(q.denom() > &0.into());
        prop_assert_eq!(parse_rational(&q.to_string()).unwrap(), q);
    }

    #[test]
    fn ratfunc_is_canonical(p in poly(), d in nonzero_poly(), s in nonzero_rational()) {
        let f = RatFunc::new(p.clone(), d.clone()).unwrap();
        prop_assert_eq!(&f, &RatFunc::new(p.scale(&s), d.scale(&s)).unwrap());
        prop_assert!(f.den().leading().unwrap().is_one());
        prop_assert_eq!(f.num().gcd(f.den()).unwrap().degree(), Some(0));
        prop_assert_eq!(RatFunc::new(f.num().clone(), f.den().clone()).unwrap(), f);
    }

    #[test]
    fn conjugation_is_an_automorphism(a in quad(2), b in quad(2)) {
        prop_assert_eq!((a.clone() + &b).conjugate(), a.conjugate() + &b.conjugate());
        prop_assert_eq!((a.clone() * &b).conjugate(), a.conjugate() * &b.conjugate());
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!(QuadExt::rational(a.norm()), a.clone() * &a.conjugate());
    }

    #[test]
    fn quad_order_matches_floats(a in quad(5), b in quad(5)) {
        let (x, y) = (a.to_f64().unwrap(), b.to_f64().unwrap());
        if (x - y).abs() > 1e-9 {
            prop_assert_eq!(a.cmp_exact(&b), x.partial_cmp(&y).unwrap());
        }
    }

    #[test]
    fn divmod_reconstructs(p in poly(), d in nonzero_poly()) {
        let (q, r) = p.divmod(&d).unwrap();
        prop_assert_eq!(q.mul(&d).add(&r), p);
        if let Some(rd) = r.degree() {
            prop_assert!(rd < d.degree().unwrap());
        }
    }

    #[test]
    fn evaluation_is_a_ring_map(p in poly(), q in poly(), x in rational()) {
        prop_assert_eq!(p.add(&q).eval(&x), p.eval(&x) + &q.eval(&x));
        prop_assert_eq!(p.mul(&q).eval(&x), p.eval(&x) * &q.eval(&x));
    }
}

#[test]
fn squarefree_examples() {
    let p = |c: &[i64]| Poly::new(c.iter().map(|&n| Rational::from(n)).collect());
    assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])).unwrap(), p(&[-1, 1]));
    assert!(p(&[-1, -2, 1]).is_squarefree());
    assert!(!p(&[1, -2, 1]).is_squarefree());
}

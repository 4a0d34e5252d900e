use super::*;
use crate::algcheck::IntPoly;
use crate::arith::{QuadExt, Rational};
use crate::circuit::resistance;
use crate::dissection::{solve_sizes, validate_geometric};
use crate::fixtures;

fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

#[test]
fn shelf_network_shape() {
    let net = circuit_of_dissection(&fixtures::shelf()).unwrap();
    assert_eq!(net.nodes().len(), 6);
    assert_eq!(net.resistors().len(), 9);
    assert_eq!(net.battery().unwrap().voltage, q(33, 32));
    assert_eq!(resistance(&net).unwrap(), q(33, 32));
}

#[test]
fn series_and_parallel_networks() {
    let s = circuit_of_dissection(&fixtures::side_by_side(q(1, 2), q(3, 1))).unwrap();
    assert_eq!(s.nodes().len(), 3);
    let (r1, r2) = (&s.resistors()[0], &s.resistors()[1]);
    assert_eq!(r1.b, r2.a);
    assert_eq!(resistance(&s).unwrap(), q(7, 2));

    let p = circuit_of_dissection(&fixtures::stacked(q(1, 2), q(3, 1))).unwrap();
    assert_eq!(p.nodes().len(), 2);
    let (r1, r2) = (&p.resistors()[0], &p.resistors()[1]);
    assert_eq!((r1.a, r1.b), (r2.a, r2.b));
    assert_eq!(resistance(&p).unwrap(), q(3, 7));
}

#[test]
fn shelf_equivalence() {
    let rep = certify_equivalence(&fixtures::shelf()).unwrap();
    assert!(rep.holds(), "{:?}", rep.mismatches);
    let currents: Vec<Rational> = rep.rows.iter().map(|r| r.2.clone()).collect();
    let sides = [1, 10, 9, 8, 7, 4, 18, 14, 15].map(|s| q(s, 32));
    assert_eq!(currents, sides.to_vec());
    assert!(rep.battery_current.is_one());
    assert_eq!(rep.resistance, q(33, 32));
}

#[test]
fn equivalence_on_other_fixtures() {
    for d in [
        fixtures::single_square(),
        fixtures::pinwheel(),
        fixtures::grid(3, 2),
        fixtures::brick_pair(),
    ] {
        let rep = certify_equivalence(&d).unwrap();
        assert!(rep.holds(), "{:?}", rep.mismatches);
        assert!(rep.sizes_solve_kirchhoff && rep.currents_solve_stitching);
    }
    let rep = certify_equivalence(&fixtures::two_ratio_square()).unwrap();
    assert!(rep.holds());
    assert!(rep.resistance.is_one());
}

#[test]
fn stretching() {
    let d = fixtures::shelf();
    assert_eq!(stretch(&d, &q(1, 1)).unwrap(), d);
    let s = stretch(&d, &q(5, 2)).unwrap();
    assert!(s.tiles.iter().all(|t| t.aspect == q(5, 2)));
    assert_eq!(solve_sizes(&s).unwrap().ratio, q(33, 32) * &q(5, 2));
    let back = stretch(&s, &q(2, 5)).unwrap();
    for (a, b) in back.tiles.iter().zip(&d.tiles) {
        assert_eq!(a.aspect, b.aspect);
        assert!((a.sketch.x - b.sketch.x).abs() < 1e-9);
    }
    assert_eq!(
        stretch(&d, &q(0, 1)),
        Err(CorrespondenceError::NonPositiveStretch)
    );
}

#[test]
fn certificate_for_two_ratio_square() {
    let cert = theorem1_certificate(&fixtures::two_ratio_square(), None).unwrap();
    assert_eq!(cert.r, fixtures::two_ratio_r());
    assert_eq!(cert.w.to_string(), "3*t/(t + 3/2)");
    assert_eq!(cert.f, IntPoly::from_i64(&[0, 3, -6, 2]));
    assert!(cert.value_at_r.is_zero());
    assert!(cert.f.degree().unwrap() <= 2 * cert.resistors + 1);
}

#[test]
fn certificate_trivial_and_brick() {
    let unit: Dissection<QuadExt> = lift(&fixtures::single_square());
    let cert = theorem1_certificate(&unit, None).unwrap();
    assert_eq!(cert.f, IntPoly::from_i64(&[-1, 1]));

    let bricks = lift(&fixtures::brick_pair());
    let cert = theorem1_certificate(&bricks, None).unwrap();
    // two t's in parallel: W = t/2, so F ∝ x - x²/2
    assert_eq!(cert.f, IntPoly::from_i64(&[0, -2, 1]));
    assert!(cert.f.eval_in(&QuadExt::from_int(2)).is_zero());
}

#[test]
fn certificate_rejects_bad_input() {
    let mut d = fixtures::two_ratio_square();
    d.tiles[0].aspect = QuadExt::from_int(2);
    assert!(matches!(
        theorem1_certificate(&d, None),
        Err(CorrespondenceError::AspectOutsidePair { .. })
    ));
    let wide = lift(&fixtures::grid(2, 1));
    assert!(matches!(
        theorem1_certificate(&wide, None),
        Err(CorrespondenceError::NotSquare(_))
    ));
}

fn lift(d: &Dissection<Rational>) -> Dissection<QuadExt> {
    Dissection {
        big_w: None,
        big_h: None,
        tiles: d
            .tiles
            .iter()
            .map(|t| {
                crate::dissection::Tile::new(t.id, t.sketch, QuadExt::rational(t.aspect.clone()))
            })
            .collect(),
    }
}

#[test]
fn continued_fractions() {
    assert!(cf_eval(&LadderSpec::new(q(1, 1), vec![q(1, 1)]))
        .unwrap()
        .is_one());
    assert!(cf_eval(&LadderSpec::new(q(2, 1), vec![q(1, 2)]))
        .unwrap()
        .is_one());
    let r = fixtures::two_ratio_r();
    assert!(cf_eval(&LadderSpec::new(r.clone(), vec![q(1, 3), q(2, 1)]))
        .unwrap()
        .is_one());
    assert_eq!(
        cf_eval(&LadderSpec::new(q(1, 1), vec![q(1, 1), q(1, 1)])).unwrap(),
        q(2, 1)
    );
    assert!(cf_eval(&LadderSpec::<Rational>::new(q(1, 1), vec![])).is_err());
    assert!(cf_eval(&LadderSpec::new(q(1, 1), vec![q(1, 1), q(0, 1)])).is_err());
}

#[test]
fn ladders() {
    let one = ladder_dissection(&LadderSpec::new(q(1, 1), vec![q(1, 1)])).unwrap();
    assert_eq!(one.tiles.len(), 1);

    let two = ladder_dissection(&LadderSpec::new(q(2, 1), vec![q(1, 2)])).unwrap();
    assert_eq!(two.tiles.len(), 2);
    for t in &two.tiles {
        let r = t.rect.as_ref().unwrap();
        assert_eq!((r.w.clone(), r.h.clone()), (q(1, 1), q(1, 2)));
    }

    let r = fixtures::two_ratio_r();
    let spec = LadderSpec::new(r.clone(), vec![q(1, 3), q(2, 1)]);
    let d = ladder_dissection(&spec).unwrap();
    assert_eq!(d.tiles.len(), 3 + 2);
    assert!(validate_geometric(&d).unwrap().is_valid());
    let r_inv = r.inv().unwrap();
    assert!(d.tiles.iter().all(|t| t.aspect == r || t.aspect == r_inv));
    assert!(solve_sizes(&d).unwrap().ratio.is_one());

    let bad = LadderSpec::new(r, vec![q(1, 2), q(2, 1)]);
    assert!(matches!(
        ladder_dissection(&bad),
        Err(CorrespondenceError::Ladder(_))
    ));
}

#[test]
fn ladder_json() {
    let text = r#"{"field":{"kind":"quadratic","d":3},"R":"3/2 + 1/2*sqrt(3)","c":["1/3","2"]}"#;
    let l = AnyLadder::from_json(text).unwrap();
    let AnyLadder::Quadratic(f, spec) = &l else {
        panic!()
    };
    assert_eq!(f.d(), 3);
    assert_eq!(spec.c, vec![q(1, 3), q(2, 1)]);
    assert_eq!(AnyLadder::from_json(&l.to_json()).unwrap(), l);
}

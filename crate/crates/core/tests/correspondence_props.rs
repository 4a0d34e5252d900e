mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use squaring::circuit::resistance;
use squaring::correspondence::{
    certify_equivalence, circuit_of_dissection, ladder_dissection, theorem1_certificate, LadderSpec,
};
use squaring::dissection::{solve_sizes, validate_geometric};
use squaring::{Field, OrderedField, QuadExt, Rational};

use common::{random_guillotine, sqrt_rational};

fn small(max_num: i64, max_den: i64) -> impl Strategy<Value = Rational> {
    (1..=max_num, 1..=max_den).prop_map(|(n, d)| Rational::frac(n, d))
}

fn cells(c: &[Rational]) -> usize {
    c.iter()
        .map(|x| {
            let n: usize = x.numer().try_into().unwrap_or(usize::MAX / 4);
            let d: usize = x.denom().try_into().unwrap_or(usize::MAX / 4);
            n.saturating_mul(d)
        })
        .fold(0usize, usize::saturating_add)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tilings_and_networks_agree(seed in any::<u64>(), leaves in 1usize..9) {
        let d = random_guillotine(&mut ChaCha8Rng::seed_from_u64(seed), leaves);
        let rep = certify_equivalence(&d).unwrap();
        prop_assert!(rep.holds(), "{:?}", rep.mismatches);
        let ratio = solve_sizes(&d).unwrap().ratio;
        prop_assert_eq!(resistance(&circuit_of_dissection(&d).unwrap()).unwrap(), ratio);
    }

    /// `R` and the trailing coefficients are drawn, then `c₁` is solved
    /// from `c₁R + 1/T₂ = 1`.
    #[test]
    fn rational_ladders_tile_the_square(
        r in small(7, 5),
        rest in prop::collection::vec(small(4, 3), 0..3),
    ) {
        let c1 = if rest.is_empty() {
            r.inv().unwrap()
        } else {
            let tails = LadderSpec::new(r.clone(), rest.clone()).tails().unwrap();
            let t2 = tails[0].clone();
            prop_assume!(t2.cmp_exact(&Rational::one()).is_gt());
            (Rational::one() - t2.inv().unwrap()).checked_div(&r).unwrap()
        };
        let mut c = vec![c1];
        c.extend(rest);
        prop_assume!(cells(&c) <= 40);
        let spec = LadderSpec::new(r.clone(), c);
        let d = ladder_dissection(&spec).unwrap();
        prop_assert!(validate_geometric(&d).unwrap().is_valid());
        let r_inv = r.inv().unwrap();
        prop_assert!(d.tiles.iter().all(|t| t.aspect == r || t.aspect == r_inv));
        prop_assert!(solve_sizes(&d).unwrap().ratio.is_one());
    }

    /// Two-step ladders `c₁R + 1/(c₂R) = 1`, with `R` a root of
    /// `c₁c₂R² − c₂R + 1`, feed the certificate.
    #[test]
    fn certificates_for_two_step_ladders(c1 in small(2, 3), c2 in small(4, 2)) {
        let disc = c2.clone() * &c2 - Rational::from(4) * &c1 * &c2;
        prop_assume!(disc.is_positive());
        prop_assume!(cells(&[c1.clone(), c2.clone()]) <= 30);
        let root = sqrt_rational(&disc).unwrap();
        let two_a = QuadExt::rational(Rational::from(2) * &c1 * &c2);
        let r = (QuadExt::rational(c2.clone()) + root).checked_div(&two_a).unwrap();
        let spec = LadderSpec::new(r.clone(), vec![c1, c2]);
        let d = ladder_dissection(&spec).unwrap();
        let cert = theorem1_certificate(&d, Some(&r)).unwrap();
        prop_assert!(cert.value_at_r.is_zero());
        prop_assert!(cert.f.degree().unwrap() <= 2 * cert.resistors + 1);
    }
}

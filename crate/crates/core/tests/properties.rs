use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trilie::random::{certified_from, perturb, random_bracket};
use trilie::{
    build_l_r_varpi, cochain_to_datum, datum_to_cochain, fundamental_oracle_check, is_extension_isomorphism,
    leibniz_extension_defects, mc_defect, parse_expr, Assignment, ExtensionDatum, Scalar,
};

fn base(seed: u64) -> (ExtensionDatum, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_bracket("g", "x", 3, -2, 2, &mut rng);
    let h = random_bracket("h", "v", 2, -2, 2, &mut rng);
    (ExtensionDatum::zero(g, h), rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn conditions_match_the_fundamental_identity(seed in any::<u64>()) {
        let (b, mut rng) = base(seed);
        for d in [ExtensionDatum::random(b.g().clone(), b.h().clone(), -2, 2, &mut rng), perturb(&certified_from(&b, -2, 2, &mut rng).unwrap(), &mut rng)] {
            let conditions = d.extension_defects().passed();
            prop_assert_eq!(conditions, d.extension_bracket().is_three_lie().passed());
            prop_assert_eq!(conditions, mc_defect(&datum_to_cochain(&d)).unwrap().is_zero());
        }
    }

    #[test]
    fn gauge_orbits_are_isomorphic_extensions(seed in any::<u64>()) {
        let (b, mut rng) = base(seed);
        let d = certified_from(&b, -2, 2, &mut rng).unwrap();
        prop_assert!(d.extension_defects().passed());
        let xi = trilie::random::random_xi(&d, -2, 2, &mut rng);
        let d2 = trilie::random::gauge_datum(&xi, &d).unwrap();
        prop_assert!(is_extension_isomorphism(&xi, &d, &d2).unwrap().passed());
        prop_assert_eq!(cochain_to_datum(&datum_to_cochain(&d2)).unwrap(), d2);
    }

    #[test]
    fn fundamental_objects_of_certified_data(seed in any::<u64>()) {
        let (b, mut rng) = base(seed);
        let d = certified_from(&b, -2, 2, &mut rng).unwrap();
        prop_assert!(fundamental_oracle_check(&d).unwrap().passed());
        prop_assert!(leibniz_extension_defects(&build_l_r_varpi(&d).unwrap()).passed());
    }

    #[test]
    fn rational_literals_evaluate_exactly(n in -1000i64..1000, m in 1i64..1000) {
        let e = parse_expr(&format!("{n}/{m}")).unwrap();
        prop_assert_eq!(e.eval(&Assignment::new()).unwrap(), Scalar::ratio(n, m).unwrap());
    }
}

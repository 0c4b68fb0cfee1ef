use std::collections::HashMap;

use num::BigRational;
use proptest::prelude::*;
use wigner_moments::poly::BetaPoly;

fn poly() -> impl Strategy<Value = BetaPoly> {
    let term = (proptest::collection::vec(prop_oneof![Just(2u32), Just(4), Just(6), Just(8)], 0..4), -20i64..20, 1i64..5);
    proptest::collection::vec(term, 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(mono, n, d)| BetaPoly::term(mono, BigRational::new(n.into(), d.into())))
            .sum()
    })
}

proptest! {
    #[test]
    fn text_round_trip(p in poly()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<BetaPoly>().unwrap(), p);
    }

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((a.clone() - a.clone()).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), v in proptest::collection::vec(-2.0f64..2.0, 4)) {
        let values: HashMap<u32, f64> = [2, 4, 6, 8].into_iter().zip(v).collect();
        let sum = (&a + &b).evaluate(&values).unwrap();
        let prod = (&a * &b).evaluate(&values).unwrap();
        let (ea, eb) = (a.evaluate(&values).unwrap(), b.evaluate(&values).unwrap());
        prop_assert!((sum - ea - eb).abs() < 1e-6 * (1.0 + sum.abs()));
        prop_assert!((prod - ea * eb).abs() < 1e-6 * (1.0 + prod.abs()));
    }

    #[test]
    fn gue_specialization_is_a_homomorphism(a in poly(), b in poly()) {
        prop_assert_eq!((&a * &b).gue_specialize(), a.gue_specialize() * b.gue_specialize());
    }
}

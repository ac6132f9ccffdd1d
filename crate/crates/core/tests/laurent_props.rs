use braidet_core::laurent::LaurentPoly;
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -20i64..=20), 0..8).prop_map(LaurentPoly::from_terms)
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert!((&a * &LaurentPoly::zero()).is_zero());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn no_zero_coefficients_stored(a in poly(), b in poly()) {
        for p in [&a + &b, &a - &b, &a * &b] {
            prop_assert!(p.terms().all(|(_, c)| c != &BigInt::from(0)));
        }
    }

    #[test]
    fn div_exact_recovers_factor(q in poly(), d in nonzero_poly()) {
        let a = &q * &d;
        prop_assert_eq!(a.div_exact(&d).unwrap(), q);
    }

    #[test]
    fn eval_is_multiplicative(a in poly(), b in poly(), x in prop_oneof![Just(1i64), Just(-1i64), Just(2), Just(-3)]) {
        let ab = (&a * &b).eval_int(x).unwrap();
        prop_assert_eq!(ab, a.eval_int(x).unwrap() * b.eval_int(x).unwrap());
    }

    #[test]
    fn eval_at_units_is_integral(a in poly()) {
        prop_assert_eq!(a.eval_int(-1).unwrap().to_integer(), a.eval_at_minus_one());
        prop_assert_eq!(a.eval_int(1).unwrap().to_integer(), a.eval_at_one());
        prop_assert!(a.eval_int(-1).unwrap().is_integer());
    }

    #[test]
    fn unit_equivalence_is_an_equivalence(a in nonzero_poly(), k in -5i64..=5, j in -5i64..=5, s in prop::bool::ANY) {
        let b = if s { -a.shift(k) } else { a.shift(k) };
        let c = b.shift(j);
        prop_assert!(a.unit_equivalent(&a));
        prop_assert!(a.unit_equivalent(&b) && b.unit_equivalent(&a));
        prop_assert!(b.unit_equivalent(&c) && a.unit_equivalent(&c));
        let doubled = &a + &a;
        prop_assert!(!a.unit_equivalent(&doubled));
    }

    #[test]
    fn render_parse_round_trip(a in poly()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<LaurentPoly>().unwrap(), a);
    }
}

use greenfn::exactalg::{rat, LaurentPoly, Rational, RationalFunction};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..5, -6i64..7), 0..6)
        .prop_map(|t| LaurentPoly::from_terms(t.into_iter().map(|(e, c)| (e, rat(c)))))
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (poly(), nonzero_poly()).prop_map(|(a, b)| RationalFunction::new(a, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &LaurentPoly::zero(), a.clone());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn star_is_multiplicative_involution(a in poly(), b in poly()) {
        prop_assert_eq!((&a * &b).star(), &a.star() * &b.star());
        prop_assert_eq!((&a + &b).star(), &a.star() + &b.star());
        prop_assert_eq!(a.star().star(), a);
    }

    #[test]
    fn split_round_trip(a in nonzero_poly()) {
        let (k, f) = a.qprime_split().unwrap();
        prop_assert!(!f.coeff(0).is_zero());
        prop_assert!(f.is_ordinary());
        prop_assert_eq!(f.shift(k), a);
    }

    #[test]
    fn opposite_fractions_cancel(a in poly(), b in nonzero_poly()) {
        let f = RationalFunction::new(a.clone(), b.clone()).unwrap();
        let g = RationalFunction::new(-a, b).unwrap();
        prop_assert!((&f + &g).is_zero());
    }

    #[test]
    fn representation_equality_is_field_equality(a in poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let f = RationalFunction::new(a.clone(), b.clone()).unwrap();
        let g = RationalFunction::new(&a * &c, &b * &c).unwrap();
        prop_assert_eq!(&f, &g);
        prop_assert!((&f - &g).is_zero());
        prop_assert_eq!(f.denom().leading_coeff().cloned(), Some(Rational::one()));
    }

    #[test]
    fn field_operations(f in ratfunc(), g in ratfunc(), h in ratfunc()) {
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!((&f * &g).star(), &f.star() * &g.star());
        if !f.is_zero() {
            prop_assert_eq!(&f * &f.inv().unwrap(), RationalFunction::one());
        }
    }
}

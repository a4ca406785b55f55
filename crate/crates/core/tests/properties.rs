//! Algebraic invariants as property tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use bingdouble::habiro::eval_at_root;
use bingdouble::qnum::{cyclotomic_sym, d_order, qbinom, CycIndex};
use bingdouble::{HbarSeries, LaurentV};

fn laurent(max_terms: usize, span: i64) -> impl Strategy<Value = LaurentV> {
    prop::collection::vec((-span..=span, -30i64..=30), 0..=max_terms).prop_map(LaurentV::from_terms)
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentV> {
    laurent(5, 10).prop_filter("nonzero", |f| !f.is_zero())
}

fn even_laurent() -> impl Strategy<Value = LaurentV> {
    prop::collection::vec((-6i64..=6, -20i64..=20), 0..=6)
        .prop_map(|terms| LaurentV::from_terms(terms.into_iter().map(|(k, c)| (2 * k, c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_axioms(f in laurent(6, 12), g in laurent(6, 12), h in laurent(4, 8)) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn exact_division_round_trip(f in laurent(6, 12), g in nonzero_laurent()) {
        let product = &f * &g;
        prop_assert_eq!(product.exact_div(&g).unwrap(), f);
    }

    #[test]
    fn v_inverse_is_a_ring_involution(f in laurent(6, 12), g in laurent(6, 12)) {
        prop_assert_eq!(f.substitute_v_inverse().substitute_v_inverse(), f.clone());
        prop_assert_eq!(
            (&f * &g).substitute_v_inverse(),
            &f.substitute_v_inverse() * &g.substitute_v_inverse()
        );
    }

    #[test]
    fn value_at_one_is_multiplicative(f in laurent(6, 12), g in laurent(6, 12)) {
        prop_assert_eq!((&f * &g).eval_at_v1(), f.eval_at_v1() * g.eval_at_v1());
    }

    #[test]
    fn hbar_expansion_is_a_ring_map(f in laurent(5, 10), g in laurent(5, 10)) {
        let n = 6;
        prop_assert_eq!((&f * &g).hbar_expand(n), &f.hbar_expand(n) * &g.hbar_expand(n));
        prop_assert_eq!((&f + &g).hbar_expand(n), &f.hbar_expand(n) + &g.hbar_expand(n));
    }

    #[test]
    fn d_order_is_additive(f in nonzero_laurent(), g in nonzero_laurent(), l in 1u32..=8, e in 0u32..=3) {
        let l = CycIndex::new(l).unwrap();
        let f = &f * &cyclotomic_sym(l.get()).pow(e);
        let df = d_order(&f, l).unwrap();
        let dg = d_order(&g, l).unwrap();
        prop_assert!(df >= e);
        prop_assert_eq!(d_order(&(&f * &g), l), Some(df + dg));
    }

    #[test]
    fn series_inverse(c0 in 1i64..=20, rest in prop::collection::vec(-20i64..=20, 0..8)) {
        let mut coeffs = vec![BigRational::from_integer(BigInt::from(c0))];
        coeffs.extend(rest.into_iter().map(|c| BigRational::from_integer(c.into())));
        let s = HbarSeries::new(coeffs);
        let inv = s.invert().unwrap();
        prop_assert_eq!(&s * &inv, HbarSeries::one(s.order()));
    }

    #[test]
    fn json_round_trip(f in laurent(8, 40)) {
        prop_assert_eq!(LaurentV::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn root_evaluation_is_a_ring_map(f in even_laurent(), g in even_laurent(), m in 1u32..=12) {
        let lhs = eval_at_root(&(&f * &g), m).unwrap();
        let rhs = eval_at_root(&f, m).unwrap().mul(&eval_at_root(&g, m).unwrap());
        prop_assert_eq!(lhs, rhs);
        let sum = eval_at_root(&(&f + &g), m).unwrap();
        prop_assert_eq!(sum, eval_at_root(&f, m).unwrap().add(&eval_at_root(&g, m).unwrap()));
    }

    #[test]
    fn qbinom_symmetry(i in 0i64..=14, n in 0u32..=14) {
        prop_assume!(n as i64 <= i);
        prop_assert_eq!(qbinom(i, n), qbinom(i, (i - n as i64) as u32));
        prop_assert_eq!(qbinom(i, n).substitute_v_inverse(), qbinom(i, n));
    }
}

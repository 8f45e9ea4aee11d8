//! Property suites: parser round-trips and soundness of the normal-form
//! zero decision against brute-force evaluation.

use bcj3::bcq::Bc;
use bcj3::bicomplex::ConjKind;
use bcj3::identities::exp_poly::ExpPoly;
use bcj3::scalars::Rational;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12)
        .prop_map(|(num, den)| Rational::new(BigInt::from(num), BigInt::from(den)))
}

fn arb_bc() -> impl Strategy<Value = Bc> {
    (arb_rational(), arb_rational(), arb_rational(), arb_rational())
        .prop_map(|(w0, w1, w2, w3)| Bc::new(w0, w1, w2, w3))
}

/// Random normal form of degree at most 3 with independent residue rows.
fn arb_poly() -> impl Strategy<Value = ExpPoly> {
    proptest::collection::vec(arb_bc(), 12).prop_map(|values| {
        let mut acc = ExpPoly::zero();
        for (degree, row) in values.chunks(3).enumerate() {
            let table = [row[0].clone(), row[1].clone(), row[2].clone()];
            acc = acc + ExpPoly::periodic(table) * ExpPoly::two_pow(degree, 0);
        }
        acc
    })
}

proptest! {
    #[test]
    fn displayed_values_parse_back(value in arb_bc()) {
        let round_tripped: Bc = value.to_string().parse().unwrap();
        prop_assert_eq!(round_tripped, value);
    }

    #[test]
    fn conjugation_names_round_trip(kind in prop::sample::select(&ConjKind::ALL[..])) {
        prop_assert_eq!(kind.to_string().parse::<ConjKind>().unwrap(), kind);
    }

    #[test]
    fn zero_decision_matches_brute_scan(poly in arb_poly()) {
        match poly.first_nonzero() {
            None => {
                for n in 0..60u64 {
                    prop_assert!(poly.eval(n).is_zero(), "claimed zero but eval({n}) != 0");
                }
            }
            Some(first) => {
                prop_assert!(first < poly.sample_window());
                prop_assert!(!poly.eval(first).is_zero());
                for n in 0..first {
                    prop_assert!(poly.eval(n).is_zero(), "eval({n}) nonzero below the minimum");
                }
            }
        }
    }

    #[test]
    fn normal_form_operations_commute_with_evaluation(
        f in arb_poly(),
        g in arb_poly(),
        n in 0u64..24,
        shift in 0u64..6,
        kind in prop::sample::select(&ConjKind::ALL[..]),
    ) {
        prop_assert_eq!((f.clone() + g.clone()).eval(n), f.eval(n) + g.eval(n));
        prop_assert_eq!((f.clone() - g.clone()).eval(n), f.eval(n) - g.eval(n));
        prop_assert_eq!((f.clone() * g.clone()).eval(n), f.eval(n) * g.eval(n));
        prop_assert_eq!(f.shift(shift).eval(n), f.eval(n + shift));
        prop_assert_eq!(f.conj(kind).eval(n), f.eval(n).conj(kind));
    }
}

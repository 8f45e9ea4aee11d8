//! Acceptance gate: twelve checks, each a single test that prints one
//! pass line on success and fails loudly otherwise. Everything is exact
//! arithmetic; the two timed checks carry generous wall-clock budgets.

mod common;

use std::time::Instant;

use bcj3::bcq::{
    bcj, bcj_binet, bcj_iter, bcj_recurrence, bcj_sum, bcj_sum_case, norm_candidates_eval, Bc,
};
use bcj3::bench::{self, Strategy, DET_CAP};
use bcj3::bicomplex::{Bicomplex, ConjKind};
use bcj3::detmat::{bcj_via_det, bicomplex_spec, build_matrix, det_bicomplex};
use bcj3::identities::exp_poly::bcj_poly;
use bcj3::identities::{checks, GridParams, Verdict};
use bcj3::scalars::{rat, Cyclo, Rational};
use bcj3::sequences::{j3, j3_binet, j3_matpow, quadratic_approx_check};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pass(line: &str) {
    println!("acceptance {line}: pass");
}

#[test]
fn criterion_01_scalar_routes_agree_to_200() {
    let clock = Instant::now();
    for n in 0..=200u64 {
        let by_recurrence = j3(n);
        assert_eq!(by_recurrence, j3_binet(n), "closed form at {n}");
        assert_eq!(by_recurrence, j3_matpow(n), "matrix power at {n}");
    }
    let elapsed = clock.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    pass("01 scalar recurrence, closed form, and matrix power agree for n = 0..=200");
}

#[test]
fn criterion_02_quaternion_routes_agree_to_200() {
    for (n, streamed) in bcj_iter().take(201).enumerate() {
        let n = n as u64;
        let windowed = bcj(n);
        assert_eq!(windowed, streamed, "stream at {n}");
        assert_eq!(windowed, bcj_recurrence(n), "recurrence at {n}");
        assert_eq!(windowed, bcj_binet(n), "closed form at {n}");
    }
    pass("02 windowed, streamed, recurrence, and closed-form BCJ agree for n = 0..=200");
}

#[test]
fn criterion_03_partial_sums_match_closed_and_case_forms() {
    let mut direct = Bc::zero();
    for (n, term) in bcj_iter().take(101).enumerate() {
        let n = n as u64;
        direct = direct + term;
        assert_eq!(direct, bcj_sum(n), "closed sum at {n}");
        assert_eq!(direct, bcj_sum_case(n), "residue-case sum at {n}");
    }
    pass("03 partial sums match the closed form and the three-case form for n = 0..=100");
}

#[test]
fn criterion_04_series_times_denominator_leaves_quadratic_numerator() {
    let denominator = [1i64, -1, -1, -2];
    let numerator = [
        Bc::from_ints(0, 1, 1, 2),
        Bc::from_ints(1, 0, 1, 3),
        Bc::from_ints(0, 0, 2, 2),
    ];
    for k in 0..64u64 {
        let mut coeff = Bc::zero();
        for (i, d) in denominator.iter().enumerate() {
            let i = i as u64;
            if i <= k {
                coeff = coeff + bcj(k - i).scale(&rat(*d));
            }
        }
        if k < 3 {
            assert_eq!(coeff, numerator[k as usize], "numerator coefficient t^{k}");
        } else {
            assert!(coeff.is_zero(), "coefficient of t^{k} must vanish");
        }
    }
    pass("04 (1 - t - t^2 - 2t^3) times the series leaves a degree-2 numerator");
}

#[test]
fn criterion_05_pole_decomposition_reproduces_terms() {
    let params = GridParams {
        series_n: 64,
        ..GridParams::default()
    };
    let report = checks::partial_fractions(&params);
    assert_eq!(
        report.verdict,
        Verdict::GridVerified,
        "pole decomposition failed: {report:?}"
    );
    pass("05 pole decomposition over Q(w) reproduces every coefficient for n = 0..=63");
}

#[test]
fn criterion_06_banded_determinants_reproduce_terms() {
    let clock = Instant::now();
    let eighth = Rational::new(BigInt::from(1), BigInt::from(8));
    let expected_inverse = Bc::new(
        eighth.clone(),
        -eighth.clone(),
        -eighth.clone(),
        eighth * rat(3),
    );
    assert_eq!(Bc::from_ints(0, 1, 1, 2).inv().unwrap(), expected_inverse);

    let spec = bicomplex_spec();
    for n in 0..=12u64 {
        assert_eq!(bcj_via_det(n), bcj(n), "determinant route at {n}");
        if n >= 2 {
            let matrix = build_matrix(&spec, n, &[]).unwrap();
            assert_eq!(matrix[1][2], expected_inverse, "(2,3) entry at order {n}");
        }
    }

    let small = build_matrix(&spec, 5, &[]).unwrap();
    assert_eq!(det_bicomplex(&small), common::det_cofactor(&small));

    let elapsed = clock.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    pass("06 banded determinants reproduce BCJ(0..=12), with the tessarine inverse in place");
}

#[test]
fn criterion_07_product_difference_engine_verdicts() {
    let params = GridParams::default();

    let b = bcj_poly();
    let successor_lhs = b.shift(1) * b.shift(1) - b.shift(2) * b.clone();
    let square = |f: &bcj3::identities::exp_poly::ExpPoly| f.clone() * f.clone();
    let squares_lhs = square(&b) + square(&b.shift(1)) + square(&b.shift(2));
    for lhs in [&successor_lhs, &squares_lhs] {
        let degree = lhs.degree().expect("nonzero left side");
        assert!(degree <= 2, "degree {degree} exceeds the decision bound");
        assert!(lhs.sample_window() <= 9, "window exceeds 9 samples");
    }

    for report in [checks::cassini(&params), checks::sum_squares(&params)] {
        match report.verdict {
            Verdict::ProvedAllN => {}
            Verdict::Refuted => {
                let ce = report
                    .counterexample
                    .as_ref()
                    .expect("refutation must carry a counterexample");
                assert_eq!(ce.get("n"), Some(&0), "ascending scan finds n = 0 first");
                assert!(report.bound.contains("minimal counterexample"));
                assert_ne!(report.lhs, report.rhs, "witness sides must differ");
            }
            Verdict::GridVerified => panic!("{} must be decided, not sampled", report.name),
        }
    }
    for report in [
        checks::cassini_corrected(&params),
        checks::sum_squares_corrected(&params),
    ] {
        assert_eq!(report.verdict, Verdict::ProvedAllN, "{report:?}");
    }

    let grid = GridParams {
        grid_n: 30,
        gap: 30,
        ..GridParams::default()
    };
    let report = checks::docagne_corrected(&grid);
    assert_eq!(report.verdict, Verdict::GridVerified, "{report:?}");
    let printed = checks::docagne(&grid);
    assert_eq!(printed.verdict, Verdict::Refuted);
    assert!(printed.counterexample.is_some());

    for n in 0..30u64 {
        assert_eq!(
            checks::cassini_lhs(n),
            checks::docagne_lhs(n + 1, n),
            "successor specialization at {n}"
        );
    }
    pass("07 product-difference identities decided (proof or minimal counterexample), grids agree");
}

#[test]
fn criterion_08_conjugation_distributes_over_products() {
    let terms: Vec<Bc> = bcj_iter().take(21).collect();
    for kind in ConjKind::ALL {
        for x in &terms {
            for y in &terms {
                let product_then_conj = (x.clone() * y.clone()).conj(kind);
                let conj_then_product = x.conj(kind) * y.conj(kind);
                let swapped = y.conj(kind) * x.conj(kind);
                assert_eq!(product_then_conj, conj_then_product, "{kind}");
                assert_eq!(product_then_conj, swapped, "{kind} swapped");
            }
        }
    }
    pass("08 conjugation distributes over products, all three kinds, 0 <= n, m <= 20");
}

#[test]
fn criterion_09_norm_shapes_and_catalog_candidates() {
    for n in 0..=30u64 {
        for kind in ConjKind::ALL {
            let (_, definitional) = norm_candidates_eval(n, kind);
            let (first, second) = match kind {
                ConjKind::I => (&definitional.w1, &definitional.w3),
                ConjKind::J => (&definitional.w2, &definitional.w3),
                ConjKind::IJ => (&definitional.w1, &definitional.w2),
            };
            assert!(
                first.is_zero() && second.is_zero(),
                "norm of kind {kind} left its two-axis span at n = {n}"
            );
        }
    }

    let params = GridParams::default();
    let kind_i = checks::norm_i(&params);
    assert_eq!(kind_i.verdict, Verdict::Refuted);
    let ce = kind_i
        .counterexample
        .expect("kind-i verdict needs a counterexample certificate");
    assert_eq!(ce.get("n"), Some(&0));
    let (candidate, definitional) = norm_candidates_eval(0, ConjKind::I);
    assert_ne!(candidate, definitional, "witness at n = 0");

    for (report, kind) in [
        (checks::norm_j(&params), ConjKind::J),
        (checks::norm_ij(&params), ConjKind::IJ),
    ] {
        assert_eq!(report.verdict, Verdict::ProvedAllN, "{report:?}");
        for n in 0..=30u64 {
            let (candidate, definitional) = norm_candidates_eval(n, kind);
            assert_eq!(candidate, definitional, "kind {kind} at n = {n}");
        }
    }
    pass("09 norm shapes hold unconditionally; every catalog candidate carries a certificate");
}

#[test]
fn criterion_10_quadratic_branch_identities_alpha_two() {
    let alpha = Cyclo::from_ints(2, 0);
    for n in 0..=50u64 {
        for (branch, (ok, lhs, rhs)) in quadratic_approx_check(n, &alpha).iter().enumerate() {
            assert!(ok, "branch {branch} at n = {n}: {lhs} != {rhs}");
        }
    }
    pass("10 quadratic branch identities hold exactly for alpha = 2, n = 0..=50");
}

#[test]
fn criterion_11_randomized_algebra_properties() {
    const CASES: usize = 1000;

    let mut rng = ChaCha8Rng::seed_from_u64(0x11aa);
    for _ in 0..CASES {
        let (x, y, z) = (
            common::rand_bc(&mut rng),
            common::rand_bc(&mut rng),
            common::rand_bc(&mut rng),
        );
        assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        assert_eq!(
            (x.clone() + y.clone()) + z.clone(),
            x.clone() + (y.clone() + z.clone())
        );
        assert_eq!(
            (x.clone() * y.clone()) * z.clone(),
            x.clone() * (y.clone() * z.clone())
        );
        assert_eq!(
            x.clone() * (y.clone() + z.clone()),
            x.clone() * y.clone() + x * z
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x22bb);
    for _ in 0..CASES {
        let (x, y) = (common::rand_bc(&mut rng), common::rand_bc(&mut rng));
        let (sx, sy) = (x.split(), y.split());
        let product = (x.clone() * y.clone()).split();
        assert_eq!(product.c1, sx.c1.clone() * sy.c1.clone());
        assert_eq!(product.c2, sx.c2.clone() * sy.c2.clone());
        let sum = (x.clone() + y).split();
        assert_eq!(sum.c1, sx.c1 + sy.c1);
        assert_eq!(sum.c2, sx.c2 + sy.c2);
        assert_eq!(Bicomplex::recompose(&x.split()), x);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x33cc);
    for case in 0..CASES {
        let kind = ConjKind::ALL[case % 3];
        let (x, y) = (common::rand_bc(&mut rng), common::rand_bc(&mut rng));
        assert_eq!(x.conj(kind).conj(kind), x);
        assert_eq!(
            (x.clone() * y.clone()).conj(kind),
            x.conj(kind) * y.conj(kind)
        );
        assert_eq!((x.clone() + y.clone()).conj(kind), x.conj(kind) + y.conj(kind));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x44dd);
    let mut invertible = 0usize;
    let mut attempts = 0usize;
    while invertible < CASES {
        attempts += 1;
        assert!(attempts < 20 * CASES, "generator starved of invertible values");
        let x = common::rand_bc(&mut rng);
        let pair = x.split();
        match x.inv() {
            Ok(inverse) => {
                assert!(!pair.c1.is_zero() && !pair.c2.is_zero());
                assert!((x.clone() * inverse.clone()).is_one());
                assert_eq!(inverse.inv().unwrap(), x);
                invertible += 1;
            }
            Err(_) => assert!(pair.c1.is_zero() || pair.c2.is_zero()),
        }
    }
    pass("11 ring laws, idempotent split, conjugation, and inversion hold on 1000 random cases each");
}

#[test]
fn criterion_12_strategies_agree_up_to_1000() {
    let rows = bench::run(1000, &Strategy::ALL).expect("all strategies agree with the recurrence");
    assert_eq!(rows.len(), Strategy::ALL.len());
    for row in &rows {
        assert!(row.agree, "{} diverged", row.strategy);
        let expected_terms = match row.strategy {
            Strategy::Det => DET_CAP + 1,
            _ => 1001,
        };
        assert_eq!(row.terms, expected_terms, "{}", row.strategy);
    }
    pass("12 every generation strategy agrees with the recurrence up to n = 1000 (det capped)");
}

//! The individual identity checks. Each function computes both sides of
//! one candidate formula with exact arithmetic and reports the outcome;
//! nothing here asserts, so refuted catalog formulas surface as data.
//!
//! Single-index checks go through the exponential-polynomial normal form
//! and return proved-for-all-n verdicts; two-index and Q(w)-valued checks
//! scan explicit grids and say so in their bounds.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::bcq::{bcj, bcj_binet, bcj_iter, bcu, lift, project, Bc, BcqConstants};
use crate::bicomplex::{Bicomplex, ConjKind};
use crate::identities::exp_poly::{bcj_sum_poly, bcu_poly, bcv_poly, j3_poly, v3_poly, ExpPoly};
use crate::identities::report::{IdentityReport, Verdict};
use crate::identities::GridParams;
use crate::scalars::{rat, Cyclo, Rational};
use crate::sequences::{j3, pow2, quadratic_approx_check, u3};

fn cst(v: i64) -> Bc {
    Bicomplex::from_scalar(rat(v))
}

fn cst_frac(num: i64, den: i64) -> Bc {
    Bicomplex::from_scalar(rat(num) / rat(den))
}

fn p2r(e: u64) -> Rational {
    Rational::from(pow2(e))
}

fn ce(pairs: &[(&str, u64)]) -> BTreeMap<String, u64> {
    pairs
        .iter()
        .map(|(key, value)| (key.to_string(), *value))
        .collect()
}

/// Decides lhs = rhs for every n at once: the difference is a normal form
/// whose vanishing is settled by finitely many samples, and the ascending
/// scan makes a reported counterexample globally minimal.
fn prove_unary(name: &str, var: &str, lhs: &ExpPoly, rhs: &ExpPoly) -> IdentityReport {
    let window = lhs.sample_window().max(rhs.sample_window()).max(3);
    let degree = window / 3 - 1;
    let diff = lhs.clone() - rhs.clone();
    match (0..window).find(|&n| !diff.eval(n).is_zero()) {
        None => IdentityReport::verified(
            name,
            Verdict::ProvedAllN,
            format!(
                "normal form degree <= {degree}; vanishing decided by {var} = 0..={}",
                window - 1
            ),
        ),
        Some(n) => IdentityReport::refuted(
            name,
            format!("normal form degree <= {degree}; minimal counterexample from ascending scan"),
            ce(&[(var, n)]),
            lhs.eval(n).to_string(),
            rhs.eval(n).to_string(),
        ),
    }
}

/// Conjugation distributes over the product and the factors commute.
fn conj_product(kind: ConjKind, name: &str, params: &GridParams) -> IdentityReport {
    let terms: Vec<Bc> = bcj_iter().take(params.grid_n as usize + 1).collect();
    for n in 0..=params.grid_n {
        for m in 0..=params.grid_n {
            let tn = &terms[n as usize];
            let tm = &terms[m as usize];
            let product_conj = (tn.clone() * tm.clone()).conj(kind);
            let forward = tn.conj(kind) * tm.conj(kind);
            let swapped = tm.conj(kind) * tn.conj(kind);
            if product_conj != forward || forward != swapped {
                return IdentityReport::refuted(
                    name,
                    format!("grid 0 <= n, m <= {}", params.grid_n),
                    ce(&[("m", m), ("n", n)]),
                    product_conj.to_string(),
                    forward.to_string(),
                );
            }
        }
    }
    IdentityReport::verified(
        name,
        Verdict::GridVerified,
        format!("0 <= n, m <= {}", params.grid_n),
    )
}

pub fn conj_product_i(params: &GridParams) -> IdentityReport {
    conj_product(ConjKind::I, "conj_product_i", params)
}

pub fn conj_product_j(params: &GridParams) -> IdentityReport {
    conj_product(ConjKind::J, "conj_product_j", params)
}

pub fn conj_product_ij(params: &GridParams) -> IdentityReport {
    conj_product(ConjKind::IJ, "conj_product_ij", params)
}

/// The catalog closed forms for the three conjugation products, as pairs
/// of scalar normal forms X and Y combined into X + 2 * unit * Y.
pub struct NormCandidates {
    pub x1: ExpPoly,
    pub y1: ExpPoly,
    pub x2: ExpPoly,
    pub y2: ExpPoly,
    pub x3: ExpPoly,
    pub y3: ExpPoly,
}

impl NormCandidates {
    pub fn catalog() -> Self {
        let v0 = v3_poly();
        let v1 = v0.shift(1);
        let v2 = v0.shift(2);
        let over49 = cst_frac(1, 49);
        let x1 = (ExpPoly::two_pow(2, 2).scale(&cst(-75))
            - ExpPoly::two_pow(1, 2).scale(&cst(3))
                * (v1.scale(&cst(2)) - v0.scale(&cst(3)))
            - v0.clone() * v1.scale(&cst(2))
            - v0.clone() * v0.clone())
        .scale(&over49);
        let y1 = (ExpPoly::two_pow(2, 4).scale(&cst(5))
            - ExpPoly::two_pow(1, 1) * (v1.scale(&cst(2)) - v2.scale(&cst(5)))
            - v0.clone() * v0.clone())
        .scale(&over49);
        let x2 = (ExpPoly::two_pow(2, 2).scale(&cst(-51))
            - ExpPoly::two_pow(1, 2) * (v2.scale(&cst(6)) - v0.scale(&cst(5)))
            + v0.clone() * v1.scale(&cst(2))
            + v0.clone() * v0.clone())
        .scale(&over49);
        let y2 = (ExpPoly::two_pow(2, 3).scale(&cst(17))
            - ExpPoly::two_pow(1, 1) * (v0.scale(&cst(5)) + v2.scale(&cst(7)))
            - v0.clone() * v0.clone())
        .scale(&over49);
        let x3 = (ExpPoly::two_pow(2, 2).scale(&cst(85))
            - ExpPoly::two_pow(1, 2) * (v2.scale(&cst(2)) + v0.scale(&cst(7)))
            - v1.clone() * v2.scale(&cst(2))
            + (v0.clone() * v0.clone()).scale(&cst(3)))
        .scale(&over49);
        let y3 = (v0.clone() * v0.clone() - v1.clone() * v2.clone()
            - ExpPoly::two_pow(1, 1) * (v0.scale(&cst(11)) - v1.scale(&cst(2))))
        .scale(&over49);
        NormCandidates {
            x1,
            y1,
            x2,
            y2,
            x3,
            y3,
        }
    }

    /// X + 2 * unit * Y for the unit paired with the conjugation kind.
    pub fn candidate(&self, kind: ConjKind) -> ExpPoly {
        match kind {
            ConjKind::I => self.x1.clone() + self.y1.scale(&Bicomplex::from_ints(0, 0, 2, 0)),
            ConjKind::J => self.x2.clone() + self.y2.scale(&Bicomplex::from_ints(0, 2, 0, 0)),
            ConjKind::IJ => self.x3.clone() + self.y3.scale(&Bicomplex::from_ints(0, 0, 0, 2)),
        }
    }
}

/// BCJ(n) times its conjugate, as a normal form in n.
pub fn norm_product_poly(kind: ConjKind) -> ExpPoly {
    bcj_poly_local() * bcj_poly_local().conj(kind)
}

fn bcj_poly_local() -> ExpPoly {
    crate::identities::exp_poly::bcj_poly()
}

/// Zeroes the components outside the two-dimensional span that the
/// conjugation product is confined to.
fn span_keep(kind: ConjKind, v: &Bc) -> Bc {
    let zero = Rational::zero();
    match kind {
        ConjKind::I => Bicomplex::new(v.w0.clone(), zero.clone(), v.w2.clone(), zero),
        ConjKind::J => Bicomplex::new(v.w0.clone(), v.w1.clone(), zero.clone(), zero),
        ConjKind::IJ => Bicomplex::new(v.w0.clone(), zero.clone(), zero, v.w3.clone()),
    }
}

fn norm_check(kind: ConjKind, name: &str) -> IdentityReport {
    let definitional = norm_product_poly(kind);
    let masked = definitional.map_linear(|v| span_keep(kind, v));
    // The span containment is independent of the X/Y candidates and must
    // hold outright; a failure here is an arithmetic bug, not a refutable
    // formula.
    assert!(
        (definitional.clone() - masked).first_nonzero().is_none(),
        "conjugation product left its two-component span"
    );
    let candidate = NormCandidates::catalog().candidate(kind);
    prove_unary(name, "n", &definitional, &candidate)
}

pub fn norm_i(_params: &GridParams) -> IdentityReport {
    norm_check(ConjKind::I, "norm_i")
}

pub fn norm_j(_params: &GridParams) -> IdentityReport {
    norm_check(ConjKind::J, "norm_j")
}

pub fn norm_ij(_params: &GridParams) -> IdentityReport {
    norm_check(ConjKind::IJ, "norm_ij")
}

/// Prefix sums equal both the closed form built from the scalar partial
/// sums and the per-residue windowed form.
pub fn sum_theorem(_params: &GridParams) -> IdentityReport {
    let name = "sum_theorem";
    let sums = bcj_sum_poly();
    let one = ExpPoly::constant(cst(1));
    let two = ExpPoly::constant(cst(2));
    let scalar_sum = (j3_poly().shift(2) + j3_poly().scale(&cst(2)) - one.clone())
        .scale(&cst_frac(1, 3));
    let closed = scalar_sum.clone()
        + scalar_sum.shift(1).scale(&Bicomplex::unit_i())
        + (scalar_sum.shift(2) - one).scale(&Bicomplex::unit_j())
        + (scalar_sum.shift(3) - two).scale(&Bicomplex::unit_ij());
    let per_residue = bcj_poly_local().shift(1)
        - ExpPoly::periodic([
            Bicomplex::from_ints(1, 0, 1, 3),
            Bicomplex::from_ints(0, 0, 2, 2),
            Bicomplex::from_ints(0, 1, 1, 2),
        ]);
    let against_closed = prove_unary(name, "n", &sums, &closed);
    if against_closed.verdict == Verdict::Refuted {
        return against_closed;
    }
    let against_case = prove_unary(name, "n", &sums, &per_residue);
    if against_case.verdict == Verdict::Refuted {
        return against_case;
    }
    IdentityReport::verified(
        name,
        Verdict::ProvedAllN,
        format!("closed and per-residue forms; {}", against_closed.bound),
    )
}

/// Multiplying the series by 1 - t - t^2 - 2t^3 must leave exactly the
/// claimed quadratic numerator.
pub fn genfun(params: &GridParams) -> IdentityReport {
    let name = "genfun";
    let order = params.series_n.max(4);
    let series: Vec<Bc> = bcj_iter().take(order).collect();
    let numerator = [
        Bicomplex::from_ints(0, 1, 1, 2),
        Bicomplex::from_ints(1, 0, 1, 3),
        Bicomplex::from_ints(0, 0, 2, 2),
    ];
    for k in 0..order {
        let mut value = series[k].clone();
        if k >= 1 {
            value = value - series[k - 1].clone();
        }
        if k >= 2 {
            value = value - series[k - 2].clone();
        }
        if k >= 3 {
            value = value - series[k - 3].scale(&rat(2));
        }
        let expected = if k < 3 {
            numerator[k].clone()
        } else {
            Bc::zero()
        };
        if value != expected {
            return IdentityReport::refuted(
                name,
                format!("series coefficients through t^{}", order - 1),
                ce(&[("t_degree", k as u64)]),
                value.to_string(),
                expected.to_string(),
            );
        }
    }
    IdentityReport::verified(
        name,
        Verdict::GridVerified,
        format!("series coefficients through t^{}", order - 1),
    )
}

/// The three-pole partial-fraction weights reproduce every series
/// coefficient after projection back to rational components.
pub fn partial_fractions(params: &GridParams) -> IdentityReport {
    let name = "partial_fractions";
    let bound = format!("coefficients n = 0..{}", params.series_n.saturating_sub(1));
    let w1 = Cyclo::omega1();
    let w2 = Cyclo::omega2();
    let one = Cyclo::one();
    let two = Cyclo::from_ints(2, 0);
    let constants = BcqConstants::new();
    let bc0 = lift(&bcj(0));
    let bc1 = lift(&bcj(1));
    let bc2 = lift(&bcj(2));
    let weight_geo =
        (bc2.clone() + bc1.clone() + bc0.clone()).scale(&(w1.clone() - w2.clone()));
    let quad = |w: &Cyclo| w.clone() * w.clone() - w.clone() - one.clone();
    let weight_w1 = bc2.clone()
        + bc1.clone().scale(&(w1.clone() - one.clone()))
        + bc0.clone().scale(&quad(&w1));
    let weight_w2 = bc2 + bc1.scale(&(w2.clone() - one.clone())) + bc0.scale(&quad(&w2));
    let phi_inv = constants.phi.inv().expect("phi is nonzero");
    for n in 0..params.series_n as u64 {
        let geo = weight_geo.scale(&Cyclo::from_rational(p2r(n)));
        let pole1 = weight_w1.scale(&((two.clone() - w2.clone()) * w1.pow(n)));
        let pole2 = weight_w2.scale(&((two.clone() - w1.clone()) * w2.pow(n)));
        let value = (geo - pole1 + pole2).scale(&phi_inv);
        let expected = bcj(n);
        match project(value.clone()) {
            Some(v) if v == expected => {}
            Some(v) => {
                return IdentityReport::refuted(
                    name,
                    bound,
                    ce(&[("n", n)]),
                    expected.to_string(),
                    v.to_string(),
                )
            }
            None => {
                return IdentityReport::refuted(
                    name,
                    bound,
                    ce(&[("n", n)]),
                    expected.to_string(),
                    value.to_string(),
                )
            }
        }
    }
    IdentityReport::verified(name, Verdict::GridVerified, bound)
}

/// The windowed, recurrence, and Q(w) closed-form routes to BCJ(n) agree.
pub fn binet(params: &GridParams) -> IdentityReport {
    let name = "binet";
    for (n, recurrent) in bcj_iter().take(params.unary_n as usize + 1).enumerate() {
        let n = n as u64;
        let windowed = bcj(n);
        let closed = bcj_binet(n);
        if windowed != recurrent || recurrent != closed {
            return IdentityReport::refuted(
                name,
                format!("0 <= n <= {}", params.unary_n),
                ce(&[("n", n)]),
                windowed.to_string(),
                closed.to_string(),
            );
        }
    }
    IdentityReport::verified(
        name,
        Verdict::GridVerified,
        format!(
            "0 <= n <= {}; windowed, recurrence, and Q(w) closed-form routes",
            params.unary_n
        ),
    )
}

/// f(n+3) - f(n+2) - f(n+1) - 2 f(n) as a normal form.
fn recurrence_image(f: &ExpPoly) -> ExpPoly {
    f.shift(3) - f.shift(2) - f.shift(1) - f.scale(&cst(2))
}

/// Proves a closed form equals a recurrence-defined sequence for all n:
/// the form must satisfy the recurrence identically and match the first
/// three terms.
fn prove_against_recurrence(
    name: &str,
    form: &ExpPoly,
    initial: impl Fn(u64) -> Bc,
) -> IdentityReport {
    let image = recurrence_image(form);
    if let Some(n) = image.first_nonzero() {
        return IdentityReport::refuted(
            name,
            "recurrence image in normal form".to_string(),
            ce(&[("n", n)]),
            image.eval(n).to_string(),
            Bc::zero().to_string(),
        );
    }
    for n in 0..3u64 {
        let expected = initial(n);
        let got = form.eval(n);
        if expected != got {
            return IdentityReport::refuted(
                name,
                "initial terms".to_string(),
                ce(&[("n", n)]),
                expected.to_string(),
                got.to_string(),
            );
        }
    }
    IdentityReport::verified(
        name,
        Verdict::ProvedAllN,
        "satisfies the defining recurrence identically and matches the first three terms"
            .to_string(),
    )
}

/// 7 BCJ(n) = hat2 * 2^(n+1) - BCV(n), proved against the recurrence.
pub fn binet_compact(_params: &GridParams) -> IdentityReport {
    let hat2 = Bicomplex::from_ints(1, 2, 4, 8);
    let form = (ExpPoly::two_pow(1, 1).scale(&hat2) - bcv_poly()).scale(&cst_frac(1, 7));
    prove_against_recurrence("binet_compact", &form, bcj)
}

/// 7 J(n) = 2^(n+1) - V(n), proved against the recurrence.
pub fn binet_scalar(_params: &GridParams) -> IdentityReport {
    let form = (ExpPoly::two_pow(1, 1) - v3_poly()).scale(&cst_frac(1, 7));
    prove_against_recurrence("binet_scalar", &form, |n| {
        Bicomplex::from_scalar(Rational::from(j3(n)))
    })
}

/// BCV(n) + BCV(n+1) + BCV(n+2) vanishes identically.
pub fn vsum_zero(_params: &GridParams) -> IdentityReport {
    let lhs = bcv_poly() + bcv_poly().shift(1) + bcv_poly().shift(2);
    prove_unary("vsum_zero", "n", &lhs, &ExpPoly::zero())
}

/// The three quadratic-difference branches hold exactly in Q(w).
pub fn quadratic_approx(params: &GridParams) -> IdentityReport {
    let name = "quadratic_approx";
    let alpha = Cyclo::from_ints(2, 0);
    for n in 0..=params.unary_n {
        for (branch, (holds, lhs, rhs)) in
            quadratic_approx_check(n, &alpha).iter().enumerate()
        {
            if !holds {
                return IdentityReport::refuted(
                    name,
                    format!("0 <= n <= {}, alpha = 2", params.unary_n),
                    ce(&[("branch", branch as u64), ("n", n)]),
                    lhs.to_string(),
                    rhs.to_string(),
                );
            }
        }
    }
    IdentityReport::verified(
        name,
        Verdict::GridVerified,
        format!("0 <= n <= {}, alpha = 2, all three branches", params.unary_n),
    )
}

/// Shared left side of the two-index product-difference identities.
pub fn docagne_lhs(m: u64, n: u64) -> Bc {
    bcj(m) * bcj(n + 1) - bcj(m + 1) * bcj(n)
}

/// Left side of the successor-pair product difference.
pub fn cassini_lhs(n: u64) -> Bc {
    bcj(n + 1) * bcj(n + 1) - bcj(n + 2) * bcj(n)
}

fn docagne_grid(
    name: &str,
    params: &GridParams,
    rhs: impl Fn(u64, u64) -> Bc,
) -> IdentityReport {
    let bound = format!(
        "grid 0 <= n < {}, n < m <= n + {}",
        params.grid_n, params.gap
    );
    for n in 0..params.grid_n {
        for m in n + 1..=n + params.gap {
            let lhs = docagne_lhs(m, n);
            let rhs_value = rhs(m, n);
            if lhs != rhs_value {
                return IdentityReport::refuted(
                    name,
                    bound,
                    ce(&[("m", m), ("n", n)]),
                    lhs.to_string(),
                    rhs_value.to_string(),
                );
            }
        }
    }
    IdentityReport::verified(name, Verdict::GridVerified, bound)
}

/// Catalog two-index form: fails, the index offsets inside are shifted.
pub fn docagne(params: &GridParams) -> IdentityReport {
    let constants = BcqConstants::new();
    let hat2 = constants.hat2.clone();
    let cross = constants.hat_product();
    let seventh = rat(1) / rat(7);
    docagne_grid("docagne", params, move |m, n| {
        (hat2.scale(&p2r(m + 1)) * bcu(n + 1) - hat2.scale(&p2r(n + 1)) * bcu(m + 1)
            + cross.scale(&Rational::from(u3(m - n))))
        .scale(&seventh)
    })
}

/// Two-index form with the offsets repaired; holds on the whole grid.
pub fn docagne_corrected(params: &GridParams) -> IdentityReport {
    let constants = BcqConstants::new();
    let hat2 = constants.hat2.clone();
    let cross = constants.hat_product();
    let seventh = rat(1) / rat(7);
    docagne_grid("docagne_corrected", params, move |m, n| {
        (hat2.scale(&p2r(m + 1)) * bcu(n) - hat2.scale(&p2r(n + 1)) * bcu(m)
            + cross.scale(&Rational::from(u3(m - n + 2))))
        .scale(&seventh)
    })
}

/// (1/7)(hat2 * 2^(n+1) * (2 BCU(n+s) - BCU(n+s+1)) + cross), the shape
/// shared by the successor-pair closed forms; s selects the offset.
fn cassini_rhs_poly(constants: &BcqConstants, offset: u64) -> ExpPoly {
    let bracket = bcu_poly().shift(offset).scale(&cst(2)) - bcu_poly().shift(offset + 1);
    (ExpPoly::two_pow(1, 1).scale(&constants.hat2) * bracket
        + ExpPoly::constant(constants.hat_product()))
    .scale(&cst_frac(1, 7))
}

fn cassini_lhs_poly() -> ExpPoly {
    let b = bcj_poly_local();
    b.shift(1) * b.shift(1) - b.shift(2) * b
}

/// Catalog successor-pair form: fails for the same offset reason.
pub fn cassini(_params: &GridParams) -> IdentityReport {
    let constants = BcqConstants::new();
    let lhs = cassini_lhs_poly();
    let rhs = cassini_rhs_poly(&constants, 1);
    prove_unary("cassini", "n", &lhs, &rhs)
}

/// Successor-pair form with the offset repaired; proved for all n.
pub fn cassini_corrected(_params: &GridParams) -> IdentityReport {
    let constants = BcqConstants::new();
    let lhs = cassini_lhs_poly();
    let rhs = cassini_rhs_poly(&constants, 0);
    prove_unary("cassini_corrected", "n", &lhs, &rhs)
}

fn sum_squares_lhs_poly() -> ExpPoly {
    let b = bcj_poly_local();
    let square = |f: ExpPoly| f.clone() * f;
    square(b.clone()) + square(b.shift(1)) + square(b.shift(2))
}

fn sum_squares_rhs_poly(constants: &BcqConstants, offset: u64) -> ExpPoly {
    let hat2_sq = constants.hat2.clone() * constants.hat2.clone();
    (ExpPoly::two_pow(2, 2).scale(&hat2_sq.scale(&rat(3)))
        - ExpPoly::two_pow(1, 2).scale(&constants.hat2) * bcu_poly().shift(offset)
        + ExpPoly::constant(constants.hat_product().scale(&rat(2))))
    .scale(&cst_frac(1, 7))
}

/// Catalog three-square form: fails at the same offset.
pub fn sum_squares(_params: &GridParams) -> IdentityReport {
    let constants = BcqConstants::new();
    let lhs = sum_squares_lhs_poly();
    let rhs = sum_squares_rhs_poly(&constants, 0);
    prove_unary("sum_squares", "n", &lhs, &rhs)
}

/// Three-square form with the offset repaired; proved for all n.
pub fn sum_squares_corrected(_params: &GridParams) -> IdentityReport {
    let constants = BcqConstants::new();
    let lhs = sum_squares_lhs_poly();
    let rhs = sum_squares_rhs_poly(&constants, 2);
    prove_unary("sum_squares_corrected", "n", &lhs, &rhs)
}

/// BCV(n)^2 + BCV(n+1)^2 + BCV(n+2)^2 is the constant 14ij, the lemma
/// the three-square reduction leans on.
pub fn bcv_squares_const(_params: &GridParams) -> IdentityReport {
    let v = bcv_poly();
    let square = |f: ExpPoly| f.clone() * f;
    let lhs = square(v.clone()) + square(v.shift(1)) + square(v.shift(2));
    let rhs = ExpPoly::constant(Bicomplex::from_ints(0, 0, 0, 14));
    prove_unary("bcv_squares_const", "n", &lhs, &rhs)
}

/// The two-index closed form specialized to m = n + 1, as a normal form.
fn docagne_rhs_at_successor(constants: &BcqConstants, offset: u64, cross_index: u64) -> ExpPoly {
    let cross = constants
        .hat_product()
        .scale(&Rational::from(u3(cross_index)));
    (ExpPoly::two_pow(1, 2).scale(&constants.hat2) * bcu_poly().shift(offset)
        - ExpPoly::two_pow(1, 1).scale(&constants.hat2) * bcu_poly().shift(offset + 1)
        + ExpPoly::constant(cross))
    .scale(&cst_frac(1, 7))
}

/// The catalog two-index and successor-pair forms disagree with each
/// other at m = n + 1: their stated right sides differ by a constant.
pub fn docagne_cassini_link(_params: &GridParams) -> IdentityReport {
    let constants = BcqConstants::new();
    let two_index = docagne_rhs_at_successor(&constants, 1, 1);
    let successor = cassini_rhs_poly(&constants, 1);
    prove_unary("docagne_cassini_link", "n", &two_index, &successor)
}

/// After the offset repair the two closed forms coincide at m = n + 1.
pub fn docagne_cassini_link_corrected(_params: &GridParams) -> IdentityReport {
    let constants = BcqConstants::new();
    let two_index = docagne_rhs_at_successor(&constants, 0, 3);
    let successor = cassini_rhs_poly(&constants, 0);
    prove_unary(
        "docagne_cassini_link_corrected",
        "n",
        &two_index,
        &successor,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bcq::norm_candidates_eval;
    use crate::identities::GridParams;

    fn params() -> GridParams {
        GridParams::default()
    }

    #[test]
    fn candidate_polys_match_pointwise_evaluation() {
        let catalog = NormCandidates::catalog();
        for kind in ConjKind::ALL {
            let poly = catalog.candidate(kind);
            for n in 0..=30u64 {
                let (pointwise, definitional) = norm_candidates_eval(n, kind);
                assert_eq!(poly.eval(n), pointwise, "candidate {kind} at {n}");
                assert_eq!(
                    norm_product_poly(kind).eval(n),
                    definitional,
                    "definitional {kind} at {n}"
                );
            }
        }
    }

    #[test]
    fn kind_i_candidate_fails_first_at_zero() {
        let report = norm_i(&params());
        assert_eq!(report.verdict, Verdict::Refuted);
        assert_eq!(report.counterexample.unwrap()["n"], 0);
        assert_eq!(
            report.lhs.unwrap(),
            Bc::from_ints(-4, 0, 4, 0).to_string()
        );
        let expected_rhs = Bicomplex::new(
            rat(-148) / rat(49),
            rat(0),
            rat(4),
            rat(0),
        );
        assert_eq!(report.rhs.unwrap(), expected_rhs.to_string());
    }

    #[test]
    fn kind_j_and_ij_candidates_are_proved() {
        assert_eq!(norm_j(&params()).verdict, Verdict::ProvedAllN);
        assert_eq!(norm_ij(&params()).verdict, Verdict::ProvedAllN);
    }

    #[test]
    fn two_index_form_fails_first_at_the_corner() {
        let report = docagne(&params());
        assert_eq!(report.verdict, Verdict::Refuted);
        let at = report.counterexample.unwrap();
        assert_eq!(at["n"], 0);
        assert_eq!(at["m"], 1);
        assert_eq!(
            report.lhs.unwrap(),
            Bc::from_ints(10, 0, 6, 5).to_string()
        );
    }

    #[test]
    fn successor_pair_form_fails_at_zero_with_known_values() {
        let report = cassini(&params());
        assert_eq!(report.verdict, Verdict::Refuted);
        assert_eq!(report.counterexample.unwrap()["n"], 0);
        assert_eq!(
            report.lhs.unwrap(),
            Bc::from_ints(10, 0, 6, 5).to_string()
        );
        let expected_rhs = Bicomplex::new(rat(-8), rat(-6), rat(2), rat(-31) / rat(7));
        assert_eq!(report.rhs.unwrap(), expected_rhs.to_string());
    }

    #[test]
    fn three_square_form_fails_at_zero() {
        let report = sum_squares(&params());
        assert_eq!(report.verdict, Verdict::Refuted);
        assert_eq!(report.counterexample.unwrap()["n"], 0);
        assert_eq!(
            report.lhs.unwrap(),
            Bc::from_ints(76, -108, -36, 54).to_string()
        );
    }

    #[test]
    fn corrected_forms_are_proved_or_grid_verified() {
        assert_eq!(docagne_corrected(&params()).verdict, Verdict::GridVerified);
        assert_eq!(cassini_corrected(&params()).verdict, Verdict::ProvedAllN);
        assert_eq!(
            sum_squares_corrected(&params()).verdict,
            Verdict::ProvedAllN
        );
        assert_eq!(
            docagne_cassini_link_corrected(&params()).verdict,
            Verdict::ProvedAllN
        );
    }

    #[test]
    fn the_two_catalog_closed_forms_disagree_by_a_constant() {
        let report = docagne_cassini_link(&params());
        assert_eq!(report.verdict, Verdict::Refuted);
        assert_eq!(report.counterexample.unwrap()["n"], 0);
        // Difference is -2ij/7 at every n: check it stays put at n = 1.
        let constants = BcqConstants::new();
        let diff = docagne_rhs_at_successor(&constants, 1, 1) - cassini_rhs_poly(&constants, 1);
        let expected = Bc::from_ints(0, 0, 0, -2).scale(&(rat(1) / rat(7)));
        assert_eq!(diff.eval(0), expected);
        assert_eq!(diff.eval(1), expected);
    }

    #[test]
    fn successor_left_sides_agree_between_engines() {
        for n in 0..=20u64 {
            assert_eq!(docagne_lhs(n + 1, n), cassini_lhs(n));
            assert_eq!(cassini_lhs_poly().eval(n), cassini_lhs(n));
        }
    }

    #[test]
    fn recurrence_proofs_cover_both_scalar_and_quaternion_forms() {
        assert_eq!(binet_compact(&params()).verdict, Verdict::ProvedAllN);
        assert_eq!(binet_scalar(&params()).verdict, Verdict::ProvedAllN);
        assert_eq!(vsum_zero(&params()).verdict, Verdict::ProvedAllN);
        assert_eq!(bcv_squares_const(&params()).verdict, Verdict::ProvedAllN);
    }

    #[test]
    fn sum_theorem_and_series_checks_pass_default_ranges() {
        assert_eq!(sum_theorem(&params()).verdict, Verdict::ProvedAllN);
        assert_eq!(genfun(&params()).verdict, Verdict::GridVerified);
        assert_eq!(partial_fractions(&params()).verdict, Verdict::GridVerified);
        assert_eq!(binet(&params()).verdict, Verdict::GridVerified);
        assert_eq!(quadratic_approx(&params()).verdict, Verdict::GridVerified);
    }
}

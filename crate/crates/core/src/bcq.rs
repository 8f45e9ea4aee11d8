//! Bicomplex quaternion terms over the third-order Jacobsthal family:
//! BCJ(n) = J(n) + i J(n+1) + j J(n+2) + ij J(n+3), with companions BCV and
//! BCU built the same way over V and U.
//!
//! Three independent evaluation paths are kept for BCJ and must agree: the
//! definition, the quaternion-level recurrence from the initial terms
//! i+j+2ij, 1+i+2j+5ij, 1+2i+5j+9ij, and the cyclotomic Binet form
//! phi^-1 ((w1-w2) hat2 2^(n+1) - (2-w2) hatw1 w1^(n+1)
//! + (2-w1) hatw2 w2^(n+1)). The compact form 7 BCJ(n) = hat2 2^(n+1)
//! - BCV(n) ties the quaternion level back to the scalar identities.
//!
//! The printed closed forms X1..Y3 for the three conjugation norms are kept
//! as candidates only; `norm_candidates_eval` returns the candidate next to
//! the definitional product so callers adjudicate instead of trusting.

use num_traits::One;

use crate::bicomplex::{Bicomplex, ConjKind};
use crate::scalars::{rat, Cyclo, Rational};
use crate::sequences::{j3, j3_iter, j3_sum, pow2, u3, v3};

/// Shorthand for the rational-coefficient bicomplex values used throughout.
pub type Bc = Bicomplex<Rational>;

/// Quaternion-width slice of a scalar sequence: f(n) + i f(n+1) + j f(n+2)
/// + ij f(n+3).
fn window_term(f: impl Fn(u64) -> num_bigint::BigInt, n: u64) -> Bc {
    Bicomplex::new(
        Rational::from(f(n)),
        Rational::from(f(n + 1)),
        Rational::from(f(n + 2)),
        Rational::from(f(n + 3)),
    )
}

/// BCJ(n) from the definition.
pub fn bcj(n: u64) -> Bc {
    window_term(j3, n)
}

/// BCJ(n) by running the quaternion recurrence from the initial terms.
pub fn bcj_recurrence(n: u64) -> Bc {
    let mut a = bcj(0);
    let mut b = bcj(1);
    let mut c = bcj(2);
    if n < 3 {
        return [a, b, c][n as usize].clone();
    }
    for _ in 3..=n {
        let next = c.clone() + b.clone() + a.scale(&rat(2));
        a = std::mem::replace(&mut b, std::mem::replace(&mut c, next));
    }
    c
}

/// Infinite iterator of BCJ terms starting at n = 0.
pub fn bcj_iter() -> impl Iterator<Item = Bc> {
    let mut tail = j3_iter();
    let mut w = [
        tail.next().unwrap(),
        tail.next().unwrap(),
        tail.next().unwrap(),
        tail.next().unwrap(),
    ];
    std::iter::from_fn(move || {
        let out = Bicomplex::new(
            Rational::from(w[0].clone()),
            Rational::from(w[1].clone()),
            Rational::from(w[2].clone()),
            Rational::from(w[3].clone()),
        );
        w.rotate_left(1);
        w[3] = tail.next().unwrap();
        Some(out)
    })
}

/// BCV(n): period three, values 2-3i+j+2ij, -3+i+2j-3ij, 1+2i-3j+ij.
pub fn bcv(n: u64) -> Bc {
    window_term(v3, n)
}

/// BCU(n): period three, values built over U = 1, -1, 0.
pub fn bcu(n: u64) -> Bc {
    window_term(u3, n)
}

/// Conjugation of the n-th term.
pub fn bcj_conj(n: u64, kind: ConjKind) -> Bc {
    bcj(n).conj(kind)
}

/// Exact squared norm of the n-th term: BCJ(n) times its conjugate.
pub fn bcj_norm(n: u64, kind: ConjKind) -> Bc {
    bcj(n).norm_sq(kind)
}

/// Sum of BCJ(0) through BCJ(n) in closed form, written through the scalar
/// prefix sums: S(n) + i S(n+1) + j (S(n+2) - 1) + ij (S(n+3) - 2).
pub fn bcj_sum(n: u64) -> Bc {
    Bicomplex::new(
        Rational::from(j3_sum(n)),
        Rational::from(j3_sum(n + 1)),
        Rational::from(j3_sum(n + 2) - 1),
        Rational::from(j3_sum(n + 3) - 2),
    )
}

/// The same sum in the three-case form keyed on n mod 3; each case is one
/// quaternion of shifted J values minus a constant correction.
pub fn bcj_sum_case(n: u64) -> Bc {
    let corr: [i64; 4] = match n % 3 {
        0 => [1, 0, 1, 3],
        1 => [0, 0, 2, 2],
        _ => [0, 1, 1, 2],
    };
    let shifted = window_term(j3, n + 1);
    shifted - Bicomplex::from_ints(corr[0], corr[1], corr[2], corr[3])
}

/// The fixed bicomplex quaternion constants of the Binet form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BcqConstants {
    /// hat2 = 1 + 2i + 4j + 8ij.
    pub hat2: Bc,
    /// hatw1 = 1 + i w1 + j w1^2 + ij w1^3.
    pub hat_w1: Bicomplex<Cyclo>,
    /// hatw2 = 1 + i w2 + j w2^2 + ij w2^3.
    pub hat_w2: Bicomplex<Cyclo>,
    /// phi = (2 - w1)(2 - w2)(w1 - w2) = 7 (w1 - w2).
    pub phi: Cyclo,
}

impl BcqConstants {
    pub fn new() -> Self {
        let w1 = Cyclo::omega1();
        let w2 = Cyclo::omega2();
        let two = Cyclo::from_ints(2, 0);
        let hat = |w: &Cyclo| Bicomplex::new(Cyclo::one(), w.clone(), w.pow(2), w.pow(3));
        let phi = (two.clone() - w1.clone()) * (two - w2.clone()) * (w1.clone() - w2.clone());
        BcqConstants {
            hat2: Bicomplex::from_ints(1, 2, 4, 8),
            hat_w1: hat(&w1),
            hat_w2: hat(&w2),
            phi,
        }
    }

    /// hatw1 times hatw2, projected to rational coefficients. The product
    /// is symmetric under the w1/w2 swap, so projection always succeeds.
    pub fn hat_product(&self) -> Bc {
        project(self.hat_w1.clone() * self.hat_w2.clone())
            .expect("symmetric product must be rational")
    }
}

impl Default for BcqConstants {
    fn default() -> Self {
        Self::new()
    }
}

/// Lifts rational coefficients into Q(w).
pub fn lift(bc: &Bc) -> Bicomplex<Cyclo> {
    Bicomplex::new(
        Cyclo::from_rational(bc.w0.clone()),
        Cyclo::from_rational(bc.w1.clone()),
        Cyclo::from_rational(bc.w2.clone()),
        Cyclo::from_rational(bc.w3.clone()),
    )
}

/// Drops coefficients back to rationals; `None` if any w-part survives.
pub fn project(bc: Bicomplex<Cyclo>) -> Option<Bc> {
    Some(Bicomplex::new(
        bc.w0.to_rational()?,
        bc.w1.to_rational()?,
        bc.w2.to_rational()?,
        bc.w3.to_rational()?,
    ))
}

/// BCJ(n) by the Binet form, computed entirely in Q(w) coefficients and
/// projected at the end; panics if any w-part fails to cancel, which would
/// mean the closed form itself is broken.
pub fn bcj_binet(n: u64) -> Bc {
    let c = BcqConstants::new();
    let w1 = Cyclo::omega1();
    let w2 = Cyclo::omega2();
    let two = Cyclo::from_ints(2, 0);
    let pow2_next = Cyclo::from_rational(Rational::from(pow2(n + 1)));
    let term_2 = lift(&c.hat2).scale(&((w1.clone() - w2.clone()) * pow2_next));
    let term_w1 = c
        .hat_w1
        .scale(&((two.clone() - w2.clone()) * w1.pow(n + 1)));
    let term_w2 = c.hat_w2.scale(&((two - w1) * w2.pow(n + 1)));
    let phi_inv = c.phi.inv().expect("phi is nonzero");
    let value = (term_2 - term_w1 + term_w2).scale(&phi_inv);
    project(value).expect("Binet form must project to rational coefficients")
}

/// The printed norm closed form for the kind: X1 + 2j Y1, X2 + 2i Y2, or
/// X3 + 2ij Y3, evaluated pointwise at n with exact rationals.
pub fn norm_candidate(n: u64, kind: ConjKind) -> Bc {
    let v = |k: u64| Rational::from(v3(n + k));
    let p2 = |e: u64| Rational::from(pow2(e));
    let r = rat;
    let over49 = |x: Rational| x / r(49);
    match kind {
        ConjKind::I => {
            let x1 = over49(
                r(-75) * p2(2 * n + 2) - r(3) * p2(n + 2) * (r(2) * v(1) - r(3) * v(0))
                    - r(2) * v(0) * v(1)
                    - v(0) * v(0),
            );
            let y1 = over49(
                r(5) * p2(2 * n + 4) - p2(n + 1) * (r(2) * v(1) - r(5) * v(2)) - v(0) * v(0),
            );
            Bicomplex::new(x1, rat(0), r(2) * y1, rat(0))
        }
        ConjKind::J => {
            let x2 = over49(
                r(-51) * p2(2 * n + 2) - p2(n + 2) * (r(6) * v(2) - r(5) * v(0))
                    + r(2) * v(0) * v(1)
                    + v(0) * v(0),
            );
            let y2 = over49(
                r(17) * p2(2 * n + 3) - p2(n + 1) * (r(5) * v(0) + r(7) * v(2)) - v(0) * v(0),
            );
            Bicomplex::new(x2, r(2) * y2, rat(0), rat(0))
        }
        ConjKind::IJ => {
            let x3 = over49(
                r(85) * p2(2 * n + 2) - p2(n + 2) * (r(2) * v(2) + r(7) * v(0))
                    - r(2) * v(1) * v(2)
                    + r(3) * v(0) * v(0),
            );
            let y3 = over49(
                -p2(n + 1) * (r(11) * v(0) - r(2) * v(1)) + v(0) * v(0) - v(1) * v(2),
            );
            Bicomplex::new(x3, rat(0), rat(0), r(2) * y3)
        }
    }
}

/// The printed candidate next to the definitional product, for adjudication.
pub fn norm_candidates_eval(n: u64, kind: ConjKind) -> (Bc, Bc) {
    (norm_candidate(n, kind), bcj_norm(n, kind))
}

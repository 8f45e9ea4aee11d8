//! Third-order Jacobsthal integer sequences: J (0, 1, 1, 2, 5, 9, ...) with
//! J(n) = J(n-1) + J(n-2) + 2 J(n-3), its period-three companion
//! V (2, -3, 1, ...), and the auxiliary U (1, -1, 0, ...) defined by
//! U(n) = (2 V(n) - V(n+1)) / 7.
//!
//! Invariants maintained across the module: 7 J(n) + V(n) = 2^(n+1);
//! V(n) + V(n+1) + V(n+2) = 0; the recurrence, companion-matrix, and
//! cyclotomic Binet evaluation paths agree pointwise. Divisions by 3 and 7
//! are checked for zero remainder, so a wrong formula fails loudly instead
//! of rounding.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalars::{Cyclo, Rational};

/// 2^n as an exact big integer.
pub fn pow2(n: u64) -> BigInt {
    BigInt::one() << (n as usize)
}

/// Quotient of an exact division; panics if the divisor does not divide.
fn exact_div(value: BigInt, divisor: i64) -> BigInt {
    let (q, r) = value.div_rem(&BigInt::from(divisor));
    assert!(r.is_zero(), "expected {divisor} to divide exactly");
    q
}

/// Infinite iterator of J values starting at J(0).
pub fn j3_iter() -> impl Iterator<Item = BigInt> {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    let mut c = BigInt::one();
    std::iter::from_fn(move || {
        let out = a.clone();
        let next = &c + &b + 2 * &a;
        a = std::mem::replace(&mut b, std::mem::replace(&mut c, next));
        Some(out)
    })
}

/// J(n) by running the recurrence from the initial terms 0, 1, 1.
pub fn j3(n: u64) -> BigInt {
    let (mut a, mut b, mut c) = (BigInt::zero(), BigInt::one(), BigInt::one());
    for _ in 0..n {
        let next = &c + &b + 2 * &a;
        a = b;
        b = c;
        c = next;
    }
    a
}

/// V(n): period three with values 2, -3, 1.
pub fn v3(n: u64) -> BigInt {
    BigInt::from([2i64, -3, 1][(n % 3) as usize])
}

/// U(n) = (2 V(n) - V(n+1)) / 7: period three with values 1, -1, 0.
pub fn u3(n: u64) -> BigInt {
    exact_div(2 * v3(n) - v3(n + 1), 7)
}

/// Binet numerator constant A = -3 - 2*w2.
pub fn binet_a() -> Cyclo {
    Cyclo::from_ints(-3, 0) - Cyclo::from_ints(2, 0) * Cyclo::omega2()
}

/// Binet numerator constant B = -3 - 2*w1.
pub fn binet_b() -> Cyclo {
    Cyclo::from_ints(-3, 0) - Cyclo::from_ints(2, 0) * Cyclo::omega1()
}

/// V(n) through the closed form (A w1^n - B w2^n) / (w1 - w2), evaluated
/// exactly in Q(w) and projected; panics if the result fails to be a plain
/// integer, which would signal a broken formula.
pub fn v3_closed(n: u64) -> BigInt {
    let w1 = Cyclo::omega1();
    let w2 = Cyclo::omega2();
    let delta_inv = (w1.clone() - w2.clone())
        .inv()
        .expect("w1 - w2 is nonzero");
    let value = (binet_a() * w1.pow(n) - binet_b() * w2.pow(n)) * delta_inv;
    let rational = value
        .to_rational()
        .expect("V closed form must have zero w-part");
    assert!(rational.is_integer(), "V closed form must be an integer");
    rational.to_integer()
}

/// J(n) through the Binet form (2^(n+1) - V(n)) / 7 with V evaluated from
/// its closed form over Q(w).
pub fn j3_binet(n: u64) -> BigInt {
    exact_div(pow2(n + 1) - v3_closed(n), 7)
}

/// 3x3 integer matrix, used for the companion-matrix evaluation path.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat3(pub [[BigInt; 3]; 3]);

impl Mat3 {
    /// Companion matrix of the recurrence: top row holds the weights
    /// (1, 1, 2), the subdiagonal shifts the window.
    pub fn companion() -> Self {
        Mat3([
            [BigInt::one(), BigInt::one(), BigInt::from(2)],
            [BigInt::one(), BigInt::zero(), BigInt::zero()],
            [BigInt::zero(), BigInt::one(), BigInt::zero()],
        ])
    }

    pub fn identity() -> Self {
        let mut rows: [[BigInt; 3]; 3] = Default::default();
        for (k, row) in rows.iter_mut().enumerate() {
            row[k] = BigInt::one();
        }
        Mat3(rows)
    }

    pub fn mul(&self, rhs: &Mat3) -> Mat3 {
        let mut out: [[BigInt; 3]; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = (0..3).map(|k| &self.0[i][k] * &rhs.0[k][j]).sum();
            }
        }
        Mat3(out)
    }

    /// Matrix power by binary exponentiation.
    pub fn pow(&self, mut n: u64) -> Mat3 {
        let mut base = self.clone();
        let mut acc = Mat3::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    pub fn apply(&self, v: &[BigInt; 3]) -> [BigInt; 3] {
        let mut out: [BigInt; 3] = Default::default();
        for (i, row) in self.0.iter().enumerate() {
            out[i] = (0..3).map(|k| &row[k] * &v[k]).sum();
        }
        out
    }
}

/// J(n) via companion-matrix exponentiation: M^n applied to the initial
/// window (J2, J1, J0) puts J(n) in the last slot.
pub fn j3_matpow(n: u64) -> BigInt {
    let window = [BigInt::one(), BigInt::one(), BigInt::zero()];
    Mat3::companion().pow(n).apply(&window)[2].clone()
}

/// J(n), J(n+1), J(n+2), J(n+3) from a single matrix power, for callers
/// that need one quaternion-width window without four separate powers.
pub fn j3_window(n: u64) -> [BigInt; 4] {
    let p = Mat3::companion().pow(n);
    let window = [BigInt::one(), BigInt::one(), BigInt::zero()];
    let applied = p.apply(&window);
    // First row of M^(n+1) applied to the window, without forming M^(n+1).
    let bumped = [BigInt::from(2), BigInt::one(), BigInt::one()];
    let top: BigInt = (0..3).map(|k| &p.0[0][k] * &bumped[k]).sum();
    [
        applied[2].clone(),
        applied[1].clone(),
        applied[0].clone(),
        top,
    ]
}

/// Sum of J(0) through J(n), in closed form (J(n+2) + 2 J(n) - 1) / 3.
pub fn j3_sum(n: u64) -> BigInt {
    exact_div(j3(n + 2) + 2 * j3(n) - 1, 3)
}

/// Constants of the quadratic-approximation branches: P = 1 - (w1 + w2),
/// Q = 1 - (alpha + w2), R = 1 - (alpha + w1).
pub fn quadratic_constants(alpha: &Cyclo) -> (Cyclo, Cyclo, Cyclo) {
    let one = Cyclo::one();
    let p = one.clone() - (Cyclo::omega1() + Cyclo::omega2());
    let q = one.clone() - (alpha.clone() + Cyclo::omega2());
    let r = one - (alpha.clone() + Cyclo::omega1());
    (p, q, r)
}

/// Checks the three quadratic-approximation branches at index n: for each
/// base x in {2, w1, w2} with constant K in {P, Q, R},
/// K x^(n+2) = x^2 J(n+2) + x (J(n+1) + 2 J(n)) + 2 J(n+1).
/// Returns one verdict per branch together with both exact side values.
pub fn quadratic_approx_check(n: u64, alpha: &Cyclo) -> [(bool, Cyclo, Cyclo); 3] {
    let (p, q, r) = quadratic_constants(alpha);
    let jn = Cyclo::from_rational(Rational::from(j3(n)));
    let jn1 = Cyclo::from_rational(Rational::from(j3(n + 1)));
    let jn2 = Cyclo::from_rational(Rational::from(j3(n + 2)));
    let two = Cyclo::from_ints(2, 0);
    let branch = |base: Cyclo, k: Cyclo| {
        let lhs = k * base.pow(n + 2);
        let rhs = base.pow(2) * jn2.clone()
            + base * (jn1.clone() + two.clone() * jn.clone())
            + two.clone() * jn1.clone();
        (lhs == rhs, lhs, rhs)
    };
    [
        branch(two.clone(), p),
        branch(Cyclo::omega1(), q),
        branch(Cyclo::omega2(), r),
    ]
}

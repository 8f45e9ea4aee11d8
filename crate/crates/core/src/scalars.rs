//! Exact scalar arithmetic: arbitrary-precision rationals and the quadratic
//! field Q(w) with w^2 = -w - 1, where w is a primitive cube root of unity.
//!
//! The non-real roots of x^3 - x^2 - x - 2 live here as w1 = w and
//! w2 = -1 - w. They satisfy w1 + w2 = -1, w1 * w2 = 1, w1^3 = w2^3 = 1,
//! and (w1 - w2)^2 = -3. Nonzero elements of Q(w) are invertible through
//! the Galois conjugate over the field norm a^2 - a*b + b^2.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::BcjError;

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator (enforced by the underlying representation).
pub type Rational = BigRational;

/// Ring scalar the bicomplex layer is generic over.
///
/// `try_inv` returns `None` exactly when the element has no multiplicative
/// inverse. For the field instances (`Rational`, `Cyclo`, complex pairs over
/// them) that means zero; for the bicomplex ring it also covers the zero
/// divisors.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Sub<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
    fn try_inv(&self) -> Option<Self>;
}

impl Scalar for Rational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Shorthand for embedding a machine integer into `Rational`.
pub fn rat(v: i64) -> Rational {
    Rational::from_i64(v)
}

/// Element a + b*w of Q(w), reduced by w^2 = -w - 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cyclo {
    pub a: Rational,
    pub b: Rational,
}

impl Cyclo {
    pub fn new(a: Rational, b: Rational) -> Self {
        Cyclo { a, b }
    }

    /// a + b*w with small integer parts.
    pub fn from_ints(a: i64, b: i64) -> Self {
        Cyclo::new(Rational::from_i64(a), Rational::from_i64(b))
    }

    pub fn from_rational(a: Rational) -> Self {
        Cyclo::new(a, Rational::zero())
    }

    /// w1 = w, the first non-real characteristic root.
    pub fn omega1() -> Self {
        Cyclo::from_ints(0, 1)
    }

    /// w2 = -1 - w, the second non-real characteristic root.
    pub fn omega2() -> Self {
        Cyclo::from_ints(-1, -1)
    }

    /// Galois conjugate: w maps to w^2 = -1 - w.
    pub fn conj(&self) -> Self {
        Cyclo::new(self.a.clone() - self.b.clone(), -self.b.clone())
    }

    /// Field norm a^2 - a*b + b^2; zero only at zero.
    pub fn norm(&self) -> Rational {
        let a = &self.a;
        let b = &self.b;
        a * a - a * b + b * b
    }

    /// Multiplicative inverse via conjugate over norm.
    pub fn inv(&self) -> Result<Self, BcjError> {
        if self.is_zero() {
            return Err(BcjError::CycloDivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(Cyclo::new(c.a / n.clone(), c.b / n))
    }

    /// x^e by square and multiply; x^0 = 1.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclo::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    /// The rational part when the w-part vanishes.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.b.is_zero() {
            Some(self.a.clone())
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: Cyclo) -> Cyclo {
        Cyclo::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: Cyclo) -> Cyclo {
        Cyclo::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo::new(-self.a, -self.b)
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    /// (a + b*w)(c + d*w) = (ac - bd) + (ad + bc - bd)*w.
    fn mul(self, rhs: Cyclo) -> Cyclo {
        let ac = self.a.clone() * rhs.a.clone();
        let bd = self.b.clone() * rhs.b.clone();
        let ad = self.a * rhs.b;
        let bc = self.b * rhs.a;
        Cyclo::new(ac - bd.clone(), ad + bc - bd)
    }
}

impl Zero for Cyclo {
    fn zero() -> Self {
        Cyclo::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Cyclo {
    fn one() -> Self {
        Cyclo::new(Rational::one(), Rational::zero())
    }
}

impl Scalar for Cyclo {
    fn from_i64(v: i64) -> Self {
        Cyclo::from_ints(v, 0)
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*w", self.b);
        }
        if self.b < Rational::zero() {
            write!(f, "{}-{}*w", self.a, -self.b.clone())
        } else {
            write!(f, "{}+{}*w", self.a, self.b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn omega_root_relations() {
        let w1 = Cyclo::omega1();
        let w2 = Cyclo::omega2();
        assert_eq!(w1.clone() + w2.clone(), Cyclo::from_ints(-1, 0));
        assert_eq!(w1.clone() * w2.clone(), Cyclo::one());
        assert_eq!(w1.clone() * w1.clone(), Cyclo::from_ints(-1, -1));
        assert_eq!(w1.pow(3), Cyclo::one());
        assert_eq!(w2.pow(3), Cyclo::one());
        let diff = w1 - w2;
        assert_eq!(diff.clone() * diff, Cyclo::from_ints(-3, 0));
    }

    #[test]
    fn characteristic_cubic_annihilates_both_roots() {
        for x in [Cyclo::omega1(), Cyclo::omega2()] {
            let value = x.pow(3) - x.pow(2) - x.clone() - Cyclo::from_ints(2, 0);
            assert!(value.is_zero());
        }
    }

    #[test]
    fn addition_examples() {
        assert_eq!(
            Cyclo::from_ints(1, 0) + Cyclo::from_ints(0, 1),
            Cyclo::from_ints(1, 1)
        );
        let half = Cyclo::new(q(1, 2), Rational::one());
        let other = Cyclo::new(q(1, 2), -Rational::one());
        assert_eq!(half + other, Cyclo::one());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Cyclo::one().inv().unwrap(), Cyclo::one());
        assert_eq!(Cyclo::omega1().inv().unwrap(), Cyclo::omega2());
        assert_eq!(
            Cyclo::from_ints(2, 0).inv().unwrap(),
            Cyclo::new(q(1, 2), Rational::zero())
        );
        assert_eq!(Cyclo::zero().inv(), Err(BcjError::CycloDivisionByZero));
    }

    #[test]
    fn power_periodicity() {
        let w1 = Cyclo::omega1();
        for n in 0..=30u64 {
            assert_eq!(w1.pow(n), w1.pow(n % 3));
        }
        assert_eq!(w1.pow(4), w1);
        assert_eq!(Cyclo::from_ints(7, -5).pow(0), Cyclo::one());
    }

    fn sample(rng: &mut ChaCha8Rng) -> Cyclo {
        let part = |rng: &mut ChaCha8Rng| {
            q(rng.gen_range(-99..=99), rng.gen_range(1..=20))
        };
        Cyclo::new(part(rng), part(rng))
    }

    #[test]
    fn ring_laws_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5ca1a);
        for _ in 0..200 {
            let x = sample(&mut rng);
            let y = sample(&mut rng);
            let z = sample(&mut rng);
            assert_eq!(
                (x.clone() * y.clone()) * z.clone(),
                x.clone() * (y.clone() * z.clone())
            );
            assert_eq!(
                x.clone() * (y.clone() + z.clone()),
                x.clone() * y.clone() + x.clone() * z.clone()
            );
            assert_eq!(x.clone() * y.clone(), y * x);
        }
    }

    #[test]
    fn inverse_round_trip_on_random_nonzero() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1237);
        for _ in 0..200 {
            let x = sample(&mut rng);
            if x.is_zero() {
                continue;
            }
            assert_eq!(x.clone() * x.inv().unwrap(), Cyclo::one());
        }
    }
}

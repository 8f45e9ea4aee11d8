//! Shared helpers for the integration suites: seeded random generators
//! over exact scalars and a first-row cofactor determinant oracle.

#![allow(dead_code)]

use bcj3::bcq::Bc;
use bcj3::scalars::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Small random rational with numerator in -9..=9 and denominator in 1..=4.
pub fn rand_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num = rng.gen_range(-9i64..=9);
    let den = rng.gen_range(1i64..=4);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Random bicomplex value with small rational components.
pub fn rand_bc(rng: &mut ChaCha8Rng) -> Bc {
    Bc::new(
        rand_rational(rng),
        rand_rational(rng),
        rand_rational(rng),
        rand_rational(rng),
    )
}

/// Expands the determinant along the first row. Exponential time, so it
/// only serves as an oracle for small matrices.
pub fn det_cofactor(m: &[Vec<Bc>]) -> Bc {
    let n = m.len();
    if n == 0 {
        return Bc::from_scalar(Rational::one());
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Bc::zero();
    let mut sign = Rational::one();
    for (col, entry) in m[0].iter().enumerate() {
        if !entry.is_zero() {
            let minor: Vec<Vec<Bc>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != col)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            acc = acc + entry.clone().scale(&sign) * det_cofactor(&minor);
        }
        sign = -sign;
    }
    acc
}

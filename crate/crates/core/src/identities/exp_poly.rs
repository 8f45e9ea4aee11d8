//! Exponential-polynomial normal form for identity proofs: a function of n
//! written as sum over d of c[d, n mod 3] * (2^n)^d with bicomplex rational
//! coefficients. The closed form 7 J(n) = 2^(n+1) - V(n) puts every
//! sequence quantity in scope into this shape, and the shape is closed
//! under addition, multiplication, index shift, and conjugation.
//!
//! Zero decision: a normal form of degree D vanishes for every n >= 0 if
//! and only if it vanishes at n = 0 .. 3(D+1)-1. Within one residue class
//! the function is a polynomial of degree at most D in x = 2^n, and that
//! window supplies D+1 distinct x values per class. Scanning the window in
//! ascending order therefore yields the globally minimal counterexample
//! when one exists.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::bcq::{bcu, bcv, Bc};
use crate::bicomplex::{Bicomplex, ConjKind};
use crate::scalars::{rat, Rational};
use crate::sequences::{pow2, u3, v3};

/// Coefficient table: row index is the degree in x = 2^n, column index is
/// n mod 3. Trailing all-zero rows are trimmed so the degree stays honest.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExpPoly {
    coeff: Vec<[Bc; 3]>,
}

fn zero_row() -> [Bc; 3] {
    [Bc::zero(), Bc::zero(), Bc::zero()]
}

impl ExpPoly {
    pub fn zero() -> Self {
        ExpPoly { coeff: Vec::new() }
    }

    fn from_rows(coeff: Vec<[Bc; 3]>) -> Self {
        let mut p = ExpPoly { coeff };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self
            .coeff
            .last()
            .is_some_and(|row| row.iter().all(Zero::is_zero))
        {
            self.coeff.pop();
        }
    }

    /// The constant function with the given value.
    pub fn constant(c: Bc) -> Self {
        Self::periodic([c.clone(), c.clone(), c])
    }

    /// A purely period-3 function: degree 0 with one value per residue.
    pub fn periodic(table: [Bc; 3]) -> Self {
        Self::from_rows(vec![table])
    }

    /// 2^(a*n + b) as a single degree-a term.
    pub fn two_pow(a: usize, b: u64) -> Self {
        let mut rows = vec![zero_row(); a + 1];
        let c = Bicomplex::from_scalar(Rational::from(pow2(b)));
        rows[a] = [c.clone(), c.clone(), c];
        Self::from_rows(rows)
    }

    /// Degree in x = 2^n, or None for the zero function.
    pub fn degree(&self) -> Option<usize> {
        self.coeff.len().checked_sub(1)
    }

    /// Number of evaluations that decide whether this function vanishes.
    pub fn sample_window(&self) -> u64 {
        3 * self.coeff.len() as u64
    }

    pub fn scale(&self, c: &Bc) -> Self {
        Self::from_rows(
            self.coeff
                .iter()
                .map(|row| {
                    [
                        row[0].clone() * c.clone(),
                        row[1].clone() * c.clone(),
                        row[2].clone() * c.clone(),
                    ]
                })
                .collect(),
        )
    }

    /// The function n -> f(n + k): rotates residues and multiplies the
    /// degree-d row by 2^(k*d).
    pub fn shift(&self, k: u64) -> Self {
        Self::from_rows(
            self.coeff
                .iter()
                .enumerate()
                .map(|(d, row)| {
                    let factor = Bicomplex::from_scalar(Rational::from(pow2(k * d as u64)));
                    let mut out = zero_row();
                    for (r, slot) in out.iter_mut().enumerate() {
                        *slot = row[((r as u64 + k) % 3) as usize].clone() * factor.clone();
                    }
                    out
                })
                .collect(),
        )
    }

    /// Componentwise conjugation; 2^n is a rational scalar, so conjugating
    /// every coefficient conjugates the represented function pointwise.
    pub fn conj(&self, kind: ConjKind) -> Self {
        self.map_linear(|v| v.conj(kind))
    }

    /// Apply a map to every coefficient. This represents the pointwise
    /// image of the function only when the map is linear over the rational
    /// scalars, as conjugation and component masking are.
    pub fn map_linear(&self, f: impl Fn(&Bc) -> Bc) -> Self {
        Self::from_rows(
            self.coeff
                .iter()
                .map(|row| [f(&row[0]), f(&row[1]), f(&row[2])])
                .collect(),
        )
    }

    pub fn eval(&self, n: u64) -> Bc {
        let r = (n % 3) as usize;
        let x = Rational::from(pow2(n));
        let mut acc = Bc::zero();
        for row in self.coeff.iter().rev() {
            acc = acc.scale(&x) + row[r].clone();
        }
        acc
    }

    /// Least n with a nonzero value, or None if the function is zero
    /// everywhere (see the module doc for why the finite scan decides).
    pub fn first_nonzero(&self) -> Option<u64> {
        (0..self.sample_window()).find(|&n| !self.eval(n).is_zero())
    }
}

impl Add for ExpPoly {
    type Output = ExpPoly;
    fn add(self, rhs: Self) -> Self {
        let mut rows = vec![zero_row(); self.coeff.len().max(rhs.coeff.len())];
        for (d, row) in rows.iter_mut().enumerate() {
            for r in 0..3 {
                let mut sum = Bc::zero();
                if let Some(a) = self.coeff.get(d) {
                    sum = sum + a[r].clone();
                }
                if let Some(b) = rhs.coeff.get(d) {
                    sum = sum + b[r].clone();
                }
                row[r] = sum;
            }
        }
        Self::from_rows(rows)
    }
}

impl Neg for ExpPoly {
    type Output = ExpPoly;
    fn neg(self) -> Self {
        self.scale(&-Bc::from_ints(1, 0, 0, 0))
    }
}

impl Sub for ExpPoly {
    type Output = ExpPoly;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for ExpPoly {
    type Output = ExpPoly;
    /// Product combines coefficients of the same residue class, since both
    /// factors are evaluated at the same n.
    fn mul(self, rhs: Self) -> Self {
        if self.coeff.is_empty() || rhs.coeff.is_empty() {
            return ExpPoly::zero();
        }
        let mut rows = vec![zero_row(); self.coeff.len() + rhs.coeff.len() - 1];
        for (d1, a) in self.coeff.iter().enumerate() {
            for (d2, b) in rhs.coeff.iter().enumerate() {
                for r in 0..3 {
                    rows[d1 + d2][r] = rows[d1 + d2][r].clone() + a[r].clone() * b[r].clone();
                }
            }
        }
        Self::from_rows(rows)
    }
}

fn embed(x: Rational) -> Bc {
    Bicomplex::from_scalar(x)
}

/// J(n) in normal form: (2 * 2^n - V table) / 7 on the scalar axis.
pub fn j3_poly() -> ExpPoly {
    let seventh = embed(rat(1) / rat(7));
    (ExpPoly::two_pow(1, 1) - v3_poly()).scale(&seventh)
}

/// V(n) in normal form: the degree-0 table 2, -3, 1.
pub fn v3_poly() -> ExpPoly {
    ExpPoly::periodic([
        embed(Rational::from(v3(0))),
        embed(Rational::from(v3(1))),
        embed(Rational::from(v3(2))),
    ])
}

/// U(n) in normal form: the degree-0 table 1, -1, 0.
pub fn u3_poly() -> ExpPoly {
    ExpPoly::periodic([
        embed(Rational::from(u3(0))),
        embed(Rational::from(u3(1))),
        embed(Rational::from(u3(2))),
    ])
}

/// BCJ(n) in normal form via 7 BCJ(n) = hat2 * 2^(n+1) - BCV(n).
pub fn bcj_poly() -> ExpPoly {
    let hat2 = Bc::from_ints(1, 2, 4, 8);
    let seventh = embed(rat(1) / rat(7));
    (ExpPoly::two_pow(1, 1).scale(&hat2) - bcv_poly()).scale(&seventh)
}

/// BCV(n) in normal form: a degree-0 period-3 table.
pub fn bcv_poly() -> ExpPoly {
    ExpPoly::periodic([bcv(0), bcv(1), bcv(2)])
}

/// BCU(n) in normal form: a degree-0 period-3 table.
pub fn bcu_poly() -> ExpPoly {
    ExpPoly::periodic([bcu(0), bcu(1), bcu(2)])
}

/// Sum of BCJ(0) through BCJ(n) in normal form: summing the compact form
/// gives 7 * sum = hat2 (2^(n+2) - 2) - (BCV prefix sum), and the BCV
/// prefix sum is itself period 3.
pub fn bcj_sum_poly() -> ExpPoly {
    let hat2 = Bc::from_ints(1, 2, 4, 8);
    let seventh = embed(rat(1) / rat(7));
    let vsum = ExpPoly::periodic([bcv(0), bcv(0) + bcv(1), Bc::zero()]);
    let two_hat2 = ExpPoly::constant(hat2.scale(&rat(2)));
    (ExpPoly::two_pow(1, 2).scale(&hat2) - two_hat2 - vsum).scale(&seventh)
}

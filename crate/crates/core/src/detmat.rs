//! Banded-matrix route to third-order sequence terms: the (n+1) x (n+1)
//! four-diagonal determinant built here equals the n-th term of the
//! sequence x defined by x(k+3) = r x(k+2) + s x(k+1) + t x(k) with
//! initial terms A, B, C. The construction needs A and t invertible as
//! soon as the corresponding reciprocal entries appear (order >= 3 for
//! 1/A, order >= 4 for 1/t).
//!
//! Determinants over the bicomplex quaternions cannot use naive
//! elimination because of zero divisors; they are computed through the
//! idempotent splitting, which is a componentwise ring isomorphism onto
//! two complex coordinates, each a field where exact Gaussian elimination
//! is total.

use num_traits::One;

use crate::bcq::{bcj, Bc};
use crate::bicomplex::{Bicomplex, Complex, IdempotentPair};
use crate::scalars::Scalar;
use crate::BcjError;

/// Recurrence data x(k+3) = r x(k+2) + s x(k+1) + t x(k) with initial
/// terms a, b, c.
#[derive(Clone, Debug, PartialEq)]
pub struct ThirdOrderSpec<S: Scalar> {
    pub r: S,
    pub s: S,
    pub t: S,
    pub a: S,
    pub b: S,
    pub c: S,
}

impl<S: Scalar> ThirdOrderSpec<S> {
    /// The n-th term by direct recurrence unrolling.
    pub fn term(&self, n: u64) -> S {
        let mut window = [self.a.clone(), self.b.clone(), self.c.clone()];
        if n < 3 {
            return window[n as usize].clone();
        }
        for _ in 3..=n {
            let next = self.r.clone() * window[2].clone()
                + self.s.clone() * window[1].clone()
                + self.t.clone() * window[0].clone();
            window.rotate_left(1);
            window[2] = next;
        }
        window[2].clone()
    }
}

/// The sequence of bicomplex third-order Jacobsthal quaternions as
/// recurrence data; its leading term is invertible, so the full matrix
/// construction applies.
pub fn bicomplex_spec() -> ThirdOrderSpec<Bc> {
    ThirdOrderSpec {
        r: Bc::one(),
        s: Bc::one(),
        t: Bicomplex::from_ints(2, 0, 0, 0),
        a: bcj(0),
        b: bcj(1),
        c: bcj(2),
    }
}

/// Builds the (n+1) x (n+1) banded matrix whose determinant is the n-th
/// term, then applies the 1-indexed entry overrides. Overrides outside
/// the matrix are rejected before any arithmetic.
pub fn build_matrix<S: Scalar>(
    spec: &ThirdOrderSpec<S>,
    n: u64,
    overrides: &[(usize, usize, S)],
) -> Result<Vec<Vec<S>>, BcjError> {
    let order = n as usize + 1;
    for (row, col, _) in overrides {
        if *row == 0 || *col == 0 || *row > order || *col > order {
            return Err(BcjError::OverrideOutOfRange {
                row: *row,
                col: *col,
                order,
            });
        }
    }
    let mut m = vec![vec![S::zero(); order]; order];
    let set = |m: &mut Vec<Vec<S>>, row: usize, col: usize, value: S| {
        if row < order && col < order {
            m[row][col] = value;
        }
    };
    set(&mut m, 0, 0, spec.a.clone());
    set(&mut m, 0, 1, S::one());
    if order >= 2 {
        set(
            &mut m,
            1,
            0,
            spec.a.clone() * spec.r.clone() - spec.b.clone(),
        );
        set(&mut m, 1, 1, spec.r.clone());
        if order >= 3 {
            let a_inv = spec
                .a
                .try_inv()
                .ok_or(BcjError::SingularParameter("initial term x0"))?;
            set(&mut m, 1, 2, a_inv);
        }
    }
    if order >= 3 {
        set(
            &mut m,
            2,
            1,
            spec.b.clone() * spec.r.clone() - spec.c.clone(),
        );
        set(&mut m, 2, 2, spec.r.clone());
        set(&mut m, 2, 3, spec.t.clone());
    }
    if order >= 4 {
        let t_inv = spec
            .t
            .try_inv()
            .ok_or(BcjError::SingularParameter("step weight t"))?;
        let s_over_t = -(spec.s.clone() * t_inv.clone());
        set(&mut m, 3, 1, spec.a.clone());
        set(&mut m, 3, 2, s_over_t.clone());
        set(&mut m, 3, 3, spec.r.clone());
        set(&mut m, 3, 4, spec.t.clone());
        for row in 4..order {
            set(&mut m, row, row - 2, t_inv.clone());
            set(&mut m, row, row - 1, s_over_t.clone());
            set(&mut m, row, row, spec.r.clone());
            set(&mut m, row, row + 1, spec.t.clone());
        }
    }
    for (row, col, value) in overrides {
        m[row - 1][col - 1] = value.clone();
    }
    Ok(m)
}

/// Exact determinant by Gaussian elimination with pivot search. Over a
/// field this is total; over a ring with zero divisors it fails cleanly
/// when a column has nonzero entries but no invertible pivot.
pub fn det_exact<S: Scalar>(mut m: Vec<Vec<S>>) -> Result<S, BcjError> {
    let order = m.len();
    for row in &m {
        assert_eq!(row.len(), order, "determinant needs a square matrix");
    }
    let mut det = S::one();
    for col in 0..order {
        let pivot_row = match (col..order).find(|&r| m[r][col].try_inv().is_some()) {
            Some(r) => r,
            None => {
                if (col..order).all(|r| m[r][col].is_zero()) {
                    return Ok(S::zero());
                }
                return Err(BcjError::NoInvertiblePivot { column: col + 1 });
            }
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        let pivot_inv = pivot.try_inv().expect("pivot was selected as invertible");
        det = det * pivot.clone();
        for row in col + 1..order {
            let factor = m[row][col].clone() * pivot_inv.clone();
            if factor.is_zero() {
                continue;
            }
            for k in col..order {
                if m[col][k].is_zero() {
                    continue;
                }
                let delta = factor.clone() * m[col][k].clone();
                m[row][k] = m[row][k].clone() - delta;
            }
        }
    }
    Ok(det)
}

/// Determinant of a bicomplex matrix through the idempotent splitting:
/// split every entry, take one exact determinant per complex coordinate,
/// and recompose. Total, because each coordinate lives in a field.
pub fn det_bicomplex(m: &[Vec<Bc>]) -> Bc {
    let split: Vec<Vec<IdempotentPair<_>>> = m
        .iter()
        .map(|row| row.iter().map(Bicomplex::split).collect())
        .collect();
    let component = |pick: fn(&IdempotentPair<crate::scalars::Rational>) -> &Complex<_>| {
        let rows: Vec<Vec<Complex<_>>> = split
            .iter()
            .map(|row| row.iter().map(|pair| pick(pair).clone()).collect())
            .collect();
        det_exact(rows).expect("complex coordinates form a field")
    };
    let pair = IdempotentPair {
        c1: component(|p| &p.c1),
        c2: component(|p| &p.c2),
    };
    Bicomplex::recompose(&pair)
}

/// The n-th bicomplex term as a banded determinant.
pub fn bcj_via_det(n: u64) -> Bc {
    let matrix = build_matrix(&bicomplex_spec(), n, &[])
        .expect("the sequence matrix has invertible parameters");
    det_bicomplex(&matrix)
}

//! Exact arithmetic for bicomplex third-order Jacobsthal quaternions.
//!
//! The crate builds up in layers: rational and cyclotomic scalars, the
//! commutative bicomplex ring, the third-order Jacobsthal integer sequences
//! with their closed forms, bicomplex quaternion terms over those sequences,
//! a verification engine that proves or refutes each candidate identity with
//! an exact certificate, and a banded-determinant realization of the
//! sequences. All arithmetic is over arbitrary-precision rationals; nothing
//! result-bearing goes through floating point.

pub mod bcq;
pub mod bench;
pub mod bicomplex;
pub mod detmat;
pub mod identities;
pub mod scalars;
pub mod sequences;

use thiserror::Error;

/// Errors surfaced by exact arithmetic and by the determinant tooling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BcjError {
    /// Division by zero in the cyclotomic field Q(w).
    #[error("division by zero in Q(w)")]
    CycloDivisionByZero,
    /// Inversion of a zero divisor; names the idempotent component that is
    /// zero.
    #[error("bicomplex value not invertible: component at {0} is zero")]
    NotInvertible(&'static str),
    /// An override entry addressed a cell outside the matrix.
    #[error("override entry ({row},{col}) is outside the {order}x{order} matrix")]
    OverrideOutOfRange { row: usize, col: usize, order: usize },
    /// A matrix construction needed the inverse of a recurrence parameter
    /// that is not invertible.
    #[error("matrix construction needs an invertible {0}")]
    SingularParameter(&'static str),
    /// Elimination met a column with nonzero entries but no invertible
    /// pivot, which only happens outside a field.
    #[error("no invertible pivot available in column {column}")]
    NoInvertiblePivot { column: usize },
}

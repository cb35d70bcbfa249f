//! Exact scalar rings: rationals, multivariate polynomials, rational functions
//! and Laurent polynomials.
//!
//! Every ring element carries its ring context (the ordered variable list for
//! polynomial rings). Arithmetic between elements of different contexts is a
//! programming error and panics; the checked entry points on [`Scalar`] report
//! a [`ScalarError::RingMismatch`] instead.

mod dynamic;
mod gcd;
mod poly;
mod ratfunc;
mod rational;
mod text;

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

pub use dynamic::{RingDesc, Scalar};
pub use poly::{Exponent, Laurent, Monomial, MultiPoly, SparsePoly};
pub use ratfunc::RatFunc;
pub use rational::{int, rat, Rational};

use crate::matrix::{Matrix, MatrixError};

/// Ordered variable names of a polynomial ring.
pub type Vars = Arc<[String]>;

pub fn vars(names: &[&str]) -> Vars {
    names
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .into()
}

pub(crate) fn no_vars() -> Vars {
    Vec::<String>::new().into()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("{element} is not a unit in {ring}")]
    NotUnit { element: String, ring: String },
    #[error("parameter outside domain: denominator {denominator} vanishes")]
    OutsideDomain { denominator: String },
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("value {value} is not representable in {ring}")]
    NotRepresentable { value: String, ring: String },
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

/// A commutative ring with exact arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    type Ctx: Clone + PartialEq + Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_rational(q: Rational, ctx: &Self::Ctx) -> Self;
    fn is_zero(&self) -> bool;

    fn from_int(n: i64, ctx: &Self::Ctx) -> Self {
        Self::from_rational(int(n), ctx)
    }

    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }

    /// Multiplicative inverse when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    /// Image in the rational function field over the same variables.
    fn lift(&self) -> RatFunc;

    /// Inverse of [`Ring::lift`], `None` when the value lies outside the ring.
    fn lower(value: &RatFunc, ctx: &Self::Ctx) -> Option<Self>;

    fn descriptor(ctx: &Self::Ctx) -> RingDesc;
    fn ctx_from_desc(desc: &RingDesc) -> Option<Self::Ctx>;
    fn parse_in(text: &str, ctx: &Self::Ctx) -> Result<Self, ScalarError>;

    /// Determinant, computed in the fraction field and brought back.
    fn matrix_det(m: &Matrix<Self>) -> Self {
        let lifted = m.map(|e| e.lift());
        let det = crate::matrix::field_det(&lifted);
        Self::lower(&det, m.ctx()).expect("determinant of a ring matrix lies in the ring")
    }

    /// Inverse via Gauss-Jordan in the fraction field; fails unless every entry
    /// of the inverse is representable in the ring.
    fn matrix_inverse(m: &Matrix<Self>) -> Result<Matrix<Self>, MatrixError> {
        let lifted = m.map(|e| e.lift());
        let inv = crate::matrix::field_inverse(&lifted)?;
        let mut rows = Vec::with_capacity(m.dim());
        for r in 0..m.dim() {
            let mut row = Vec::with_capacity(m.dim());
            for c in 0..m.dim() {
                match Self::lower(inv.get(r, c), m.ctx()) {
                    Some(v) => row.push(v),
                    None => {
                        return Err(MatrixError::NotInvertible {
                            det: Self::matrix_det(m).to_string(),
                        })
                    }
                }
            }
            rows.push(row);
        }
        Ok(Matrix::from_rows_in(rows, m.ctx().clone()))
    }
}

/// A ring in which every nonzero element is a unit.
pub trait Field: Ring + Div<Output = Self> + for<'a> Div<&'a Self, Output = Self> {
    /// Square root inside the field, if one exists.
    fn sqrt_exact(&self) -> Option<Self>;

    fn inv(&self) -> Self {
        self.unit_inverse().expect("inverse of zero")
    }
}

//! Dense square matrices over the exact scalar rings.

mod linear;
mod lines;

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{Field, RatFunc, Ring, RingDesc, Scalar, ScalarError};

pub use linear::{field_det, field_inverse, rank, solve_linear, LinearSolution};
pub use lines::{
    common_invariant_line, invariant_lines, shares_eigenvector_over_closure, InvariantLines, Line,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
    #[error("matrix is not invertible (determinant {det})")]
    NotInvertible { det: String },
    #[error("block of size {block} at position {position} does not fit in dimension {total}")]
    OutOfRange {
        position: usize,
        block: usize,
        total: usize,
    },
    #[error("expected a 2x2 matrix, got {0}x{0}")]
    NotTwoByTwo(usize),
    #[error("malformed matrix: {0}")]
    Malformed(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Square matrix with entries in a single ring instance.
#[derive(Clone, PartialEq)]
pub struct Matrix<T: Ring> {
    dim: usize,
    ctx: T::Ctx,
    entries: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    /// Builds a matrix from rows, checking shape and that every entry lives in
    /// the same ring.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let ctx = rows
            .first()
            .and_then(|r| r.first())
            .map(|e| e.ctx())
            .ok_or_else(|| MatrixError::Malformed("empty matrix".into()))?;
        for e in rows.iter().flatten() {
            let c = e.ctx();
            if c != ctx {
                return Err(ScalarError::RingMismatch {
                    left: T::descriptor(&ctx).to_string(),
                    right: T::descriptor(&c).to_string(),
                }
                .into());
            }
        }
        Self::checked_rows(rows, ctx)
    }

    fn checked_rows(rows: Vec<Vec<T>>, ctx: T::Ctx) -> Result<Self, MatrixError> {
        let dim = rows.len();
        if dim == 0 {
            return Err(MatrixError::Malformed("empty matrix".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(MatrixError::DimMismatch {
                left: dim,
                right: r.len(),
            });
        }
        Ok(Matrix {
            dim,
            ctx,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Like [`Matrix::from_rows`] for rows already known to be square and in `ctx`.
    pub fn from_rows_in(rows: Vec<Vec<T>>, ctx: T::Ctx) -> Self {
        Self::checked_rows(rows, ctx).expect("square matrix")
    }

    pub fn from_fn(dim: usize, ctx: &T::Ctx, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(dim > 0, "dimension must be positive");
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(f(r, c));
            }
        }
        Matrix {
            dim,
            ctx: ctx.clone(),
            entries,
        }
    }

    pub fn identity(dim: usize, ctx: &T::Ctx) -> Self {
        Self::from_fn(
            dim,
            ctx,
            |r, c| if r == c { T::one(ctx) } else { T::zero(ctx) },
        )
    }

    pub fn zero(dim: usize, ctx: &T::Ctx) -> Self {
        Self::from_fn(dim, ctx, |_, _| T::zero(ctx))
    }

    pub fn diagonal(values: Vec<T>, ctx: &T::Ctx) -> Self {
        let n = values.len();
        Self::from_fn(n, ctx, |r, c| {
            if r == c {
                values[r].clone()
            } else {
                T::zero(ctx)
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
    }

    pub fn ring(&self) -> RingDesc {
        T::descriptor(&self.ctx)
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.entries[r * self.dim + c] = value;
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        let entries: Vec<U> = self.entries.iter().map(f).collect();
        let ctx = entries[0].ctx();
        Matrix {
            dim: self.dim,
            ctx,
            entries,
        }
    }

    pub fn try_map<U: Ring, E>(&self, f: impl Fn(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<U>, E>>()?;
        let ctx = entries[0].ctx();
        Ok(Matrix {
            dim: self.dim,
            ctx,
            entries,
        })
    }

    fn check_same(&self, other: &Self) -> Result<(), MatrixError> {
        if self.dim != other.dim {
            return Err(MatrixError::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        if self.ctx != other.ctx {
            return Err(ScalarError::RingMismatch {
                left: self.ring().to_string(),
                right: other.ring().to_string(),
            }
            .into());
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_same(other)?;
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = T::zero(&self.ctx);
                for k in 0..n {
                    let a = self.get(r, k);
                    let b = other.get(k, c);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc + a.clone() * b;
                }
                entries.push(acc);
            }
        }
        Ok(Matrix {
            dim: n,
            ctx: self.ctx.clone(),
            entries,
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_same(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.clone() + b)
            .collect();
        Ok(Matrix {
            dim: self.dim,
            ctx: self.ctx.clone(),
            entries,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_same(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.clone() - b)
            .collect();
        Ok(Matrix {
            dim: self.dim,
            ctx: self.ctx.clone(),
            entries,
        })
    }

    pub fn scale(&self, k: &T) -> Self {
        let entries = self.entries.iter().map(|e| e.clone() * k).collect();
        Matrix {
            dim: self.dim,
            ctx: self.ctx.clone(),
            entries,
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, &self.ctx, |r, c| self.get(c, r).clone())
    }

    pub fn det(&self) -> T {
        T::matrix_det(self)
    }

    pub fn inverse(&self) -> Result<Self, MatrixError> {
        T::matrix_inverse(self)
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|r| {
            (0..self.dim).all(|c| {
                let e = self.get(r, c);
                if r == c {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Scalar multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        let d = self.get(0, 0);
        (0..self.dim).all(|r| {
            (0..self.dim).all(|c| {
                if r == c {
                    self.get(r, c) == d
                } else {
                    self.get(r, c).is_zero()
                }
            })
        })
    }

    /// `I_{position-1} ⊕ self ⊕ I_rest` inside a `total x total` matrix.
    pub fn block_embed(&self, position: usize, total: usize) -> Result<Self, MatrixError> {
        if position == 0 || position - 1 + self.dim > total {
            return Err(MatrixError::OutOfRange {
                position,
                block: self.dim,
                total,
            });
        }
        let off = position - 1;
        let mut out = Self::identity(total, &self.ctx);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.set(r + off, c + off, self.get(r, c).clone());
            }
        }
        Ok(out)
    }

    /// Square sub-block of size `size` starting at `start` (0-based).
    pub fn sub_block(&self, start: usize, size: usize) -> Self {
        Self::from_fn(size, &self.ctx, |r, c| {
            self.get(start + r, start + c).clone()
        })
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.dim + other.dim;
        Self::from_fn(n, &self.ctx, |r, c| match (r < self.dim, c < self.dim) {
            (true, true) => self.get(r, c).clone(),
            (false, false) => other.get(r - self.dim, c - self.dim).clone(),
            _ => T::zero(&self.ctx),
        })
    }

    pub fn lift(&self) -> Matrix<RatFunc> {
        self.map(|e| e.lift())
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            ring: self.ring().to_string(),
            dim: self.dim,
            entries: self
                .rows()
                .iter()
                .map(|r| r.iter().map(|e| e.to_string()).collect())
                .collect(),
        }
    }

    /// Parses the JSON form; the declared ring must be the ring of `T`.
    pub fn from_json(json: &MatrixJson) -> Result<Self, MatrixError> {
        let desc: RingDesc = json.ring.parse()?;
        let ctx = T::ctx_from_desc(&desc).ok_or_else(|| ScalarError::RingMismatch {
            left: desc.to_string(),
            right: std::any::type_name::<T>().to_string(),
        })?;
        let rows = json_rows(json, |s| T::parse_in(s, &ctx))?;
        Self::checked_rows(rows, ctx)
    }
}

impl<F: Field> Matrix<F> {
    pub fn rank(&self) -> usize {
        rank(self)
    }
}

impl Matrix<RatFunc> {
    /// Parses a JSON matrix over any ring and lifts it into the fraction field
    /// over the same variables.
    pub fn from_json_lifted(json: &MatrixJson) -> Result<Self, MatrixError> {
        let desc: RingDesc = json.ring.parse()?;
        let rows = json_rows(json, |s| Scalar::parse(s, &desc).map(|v| v.lift()))?;
        let ctx = desc.vars();
        Self::checked_rows(rows, ctx)
    }
}

fn json_rows<T>(
    json: &MatrixJson,
    parse: impl Fn(&str) -> Result<T, ScalarError>,
) -> Result<Vec<Vec<T>>, MatrixError> {
    if json.entries.len() != json.dim || json.dim == 0 {
        return Err(MatrixError::Malformed(format!(
            "declared dim {} but {} rows",
            json.dim,
            json.entries.len()
        )));
    }
    json.entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| parse(s).map_err(MatrixError::from))
                .collect()
        })
        .collect()
}

/// Serialized matrix: ring descriptor, dimension and row-major scalar strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub ring: String,
    pub dim: usize,
    pub entries: Vec<Vec<String>>,
}

impl<'a, T: Ring> Mul<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<T: Ring> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}]", self)
    }
}

impl<T: Ring> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.entries.chunks(self.dim).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

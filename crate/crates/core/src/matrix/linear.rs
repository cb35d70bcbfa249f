//! Exact elimination over a field.

use super::{Matrix, MatrixError};
use crate::scalar::Field;

/// Determinant by Gaussian elimination with the first nonzero pivot.
pub fn field_det<F: Field>(m: &Matrix<F>) -> F {
    let n = m.dim();
    let ctx = m.ctx();
    let mut a = m.rows();
    let mut det = F::one(ctx);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return F::zero(ctx);
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det = det * &pivot;
        let inv = pivot.inv();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone() * &inv;
            let (upper, lower) = a.split_at_mut(r);
            for (x, p) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *x = x.clone() - factor.clone() * p;
            }
        }
    }
    det
}

/// Reduced row echelon form of `rows` in place; returns the pivot columns.
fn rref<F: Field>(rows: &mut [Vec<F>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        let inv = rows[r][col].inv();
        for c in col..rows[r].len() {
            rows[r][c] = rows[r][c].clone() * &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            for c in col..rows[i].len() {
                let sub = factor.clone() * &rows[r][c];
                rows[i][c] = rows[i][c].clone() - sub;
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Inverse by Gauss-Jordan elimination.
pub fn field_inverse<F: Field>(m: &Matrix<F>) -> Result<Matrix<F>, MatrixError> {
    let n = m.dim();
    let ctx = m.ctx();
    let mut rows: Vec<Vec<F>> = m
        .rows()
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| if i == j { F::one(ctx) } else { F::zero(ctx) }));
            row
        })
        .collect();
    let pivots = rref(&mut rows, n);
    if pivots.len() < n {
        return Err(MatrixError::NotInvertible {
            det: F::zero(ctx).to_string(),
        });
    }
    let inv = rows.into_iter().map(|row| row[n..].to_vec()).collect();
    Ok(Matrix::from_rows_in(inv, ctx.clone()))
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    let mut rows = m.rows();
    rref(&mut rows, m.dim()).len()
}

/// Outcome of solving a square linear system `A x = b`.
#[derive(Clone, Debug, PartialEq)]
pub enum LinearSolution<F> {
    Unique(Vec<F>),
    /// `A` is singular; the system is consistent iff both ranks agree.
    Singular {
        rank: usize,
        augmented_rank: usize,
    },
}

pub fn solve_linear<F: Field>(a: &Matrix<F>, b: &[F]) -> Result<LinearSolution<F>, MatrixError> {
    let n = a.dim();
    if b.len() != n {
        return Err(MatrixError::DimMismatch {
            left: n,
            right: b.len(),
        });
    }
    let mut rows: Vec<Vec<F>> = a
        .rows()
        .into_iter()
        .zip(b)
        .map(|(mut row, v)| {
            row.push(v.clone());
            row
        })
        .collect();
    let pivots = rref(&mut rows, n + 1);
    let rank = pivots.iter().filter(|&&c| c < n).count();
    if rank == n {
        return Ok(LinearSolution::Unique(
            rows.into_iter().map(|r| r[n].clone()).collect(),
        ));
    }
    Ok(LinearSolution::Singular {
        rank,
        augmented_rank: pivots.len(),
    })
}

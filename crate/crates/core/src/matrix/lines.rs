//! Invariant lines of 2x2 matrices over a field.
//!
//! A line spanned by `v` is invariant under `A = [[a,b],[c,d]]` exactly when
//! `c v1^2 + (d-a) v1 v2 - b v2^2 = 0`.

use std::fmt;

use super::{Matrix, MatrixError};
use crate::scalar::Field;

/// A one-dimensional subspace of `F^2`, stored with first nonzero coordinate 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Line<F: Field> {
    direction: [F; 2],
}

impl<F: Field> Line<F> {
    /// `None` for the zero vector.
    pub fn new(v1: F, v2: F) -> Option<Self> {
        if !v1.is_zero() {
            let inv = v1.inv();
            let one = v1 * &inv;
            Some(Line {
                direction: [one, v2 * &inv],
            })
        } else if !v2.is_zero() {
            let one = v2.inv() * &v2;
            Some(Line {
                direction: [v1, one],
            })
        } else {
            None
        }
    }

    pub fn direction(&self) -> &[F; 2] {
        &self.direction
    }

    pub fn is_invariant_under(&self, m: &Matrix<F>) -> bool {
        let [v1, v2] = &self.direction;
        let w1 = m.get(0, 0).clone() * v1 + m.get(0, 1).clone() * v2;
        let w2 = m.get(1, 0).clone() * v1 + m.get(1, 1).clone() * v2;
        (w1 * v2 - w2 * v1).is_zero()
    }
}

impl<F: Field> fmt::Display for Line<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span({}, {})", self.direction[0], self.direction[1])
    }
}

/// Invariant lines with coordinates in the working field.
#[derive(Clone, Debug, PartialEq)]
pub enum InvariantLines<F: Field> {
    /// The matrix is scalar; every line is invariant.
    All,
    Finite(Vec<Line<F>>),
}

fn entries<F: Field>(m: &Matrix<F>) -> Result<[F; 4], MatrixError> {
    if m.dim() != 2 {
        return Err(MatrixError::NotTwoByTwo(m.dim()));
    }
    Ok([
        m.get(0, 0).clone(),
        m.get(0, 1).clone(),
        m.get(1, 0).clone(),
        m.get(1, 1).clone(),
    ])
}

pub fn invariant_lines<F: Field>(m: &Matrix<F>) -> Result<InvariantLines<F>, MatrixError> {
    let [a, b, c, d] = entries(m)?;
    let ctx = m.ctx();
    if b.is_zero() && c.is_zero() && a == d {
        return Ok(InvariantLines::All);
    }
    let one = F::one(ctx);
    let zero = F::zero(ctx);
    let mut lines = Vec::new();
    if c.is_zero() {
        lines.push(Line::new(one.clone(), zero).unwrap());
    }
    // Lines (lambda, 1): c lambda^2 + (d-a) lambda - b = 0.
    let lin = d - &a;
    let mut roots = Vec::new();
    if !c.is_zero() {
        let disc = lin.clone() * &lin + F::from_int(4, ctx) * &b * &c;
        if let Some(s) = disc.sqrt_exact() {
            let two_c_inv = (F::from_int(2, ctx) * &c).inv();
            roots.push((-lin.clone() + &s) * &two_c_inv);
            if !s.is_zero() {
                roots.push((-lin - &s) * &two_c_inv);
            }
        }
    } else if !lin.is_zero() {
        roots.push(b * &lin.inv());
    }
    for lambda in roots {
        let line = Line::new(lambda, one.clone()).unwrap();
        if !lines.contains(&line) {
            lines.push(line);
        }
    }
    Ok(InvariantLines::Finite(lines))
}

/// A line invariant under every matrix, with coordinates in the working field.
/// An empty or all-scalar input yields `span(1, 0)`.
pub fn common_invariant_line<F: Field>(
    mats: &[Matrix<F>],
    ctx: &F::Ctx,
) -> Result<Option<Line<F>>, MatrixError> {
    for m in mats {
        entries(m)?;
    }
    let Some(first) = mats.iter().find(|m| !m.is_scalar()) else {
        return Ok(Some(Line::new(F::one(ctx), F::zero(ctx)).unwrap()));
    };
    let InvariantLines::Finite(candidates) = invariant_lines(first)? else {
        unreachable!("non-scalar matrix has finitely many invariant lines");
    };
    Ok(candidates
        .into_iter()
        .find(|l| mats.iter().all(|m| l.is_invariant_under(m))))
}

/// Whether the matrices share an eigenvector over the algebraic closure of the
/// working field: the gcd of their invariant-line forms is nonconstant.
pub fn shares_eigenvector_over_closure<F: Field>(mats: &[Matrix<F>]) -> Result<bool, MatrixError> {
    let mut forms = Vec::new();
    for m in mats {
        let [a, b, c, d] = entries(m)?;
        if m.is_scalar() {
            continue;
        }
        forms.push((c, d - &a, -b));
    }
    if forms.is_empty() {
        return Ok(true);
    }
    // The point at infinity (1, 0) is common iff every c vanishes.
    if forms.iter().all(|(c, _, _)| c.is_zero()) {
        return Ok(true);
    }
    let mut g: Vec<F> = Vec::new();
    for (c, l, k) in forms {
        g = poly_gcd(g, trim(vec![k, l, c]));
    }
    Ok(g.len() >= 2)
}

/// Drops leading zero coefficients (coefficients stored low degree first).
fn trim<F: Field>(mut p: Vec<F>) -> Vec<F> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_rem<F: Field>(mut a: Vec<F>, b: &[F]) -> Vec<F> {
    let lead_inv = b.last().unwrap().inv();
    while a.len() >= b.len() {
        let factor = a.last().unwrap().clone() * &lead_inv;
        let shift = a.len() - b.len();
        for (i, bc) in b.iter().enumerate() {
            a[shift + i] = a[shift + i].clone() - factor.clone() * bc;
        }
        a.pop();
        a = trim(a);
    }
    a
}

fn poly_gcd<F: Field>(mut a: Vec<F>, mut b: Vec<F>) -> Vec<F> {
    while !b.is_empty() {
        let r = poly_rem(a, &b);
        a = b;
        b = r;
    }
    a
}

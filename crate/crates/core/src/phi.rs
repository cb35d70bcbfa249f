//! Extensions of twisted virtual braid representations to the singular
//! monoid by `tau_i -> t*phi(sigma_i) + u*phi(sigma_i)^-1 + v*I`, matching
//! against the local extension family, and promotion to the group.

use std::collections::BTreeMap;

use serde_json::json;
use thiserror::Error;

use crate::catalog::{FamilyId, FamilyParams, RepError, Representation};
use crate::matrix::{solve_linear, LinearSolution, Matrix, MatrixError};
use crate::presentation::{Family, Generator, Structure};
use crate::scalar::{Field, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PhiError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("expected a representation of {expected}, got {found}")]
    WrongStructure {
        expected: Structure,
        found: Structure,
    },
    #[error("image of {generator} is not invertible (determinant {det})")]
    NotInvertible { generator: String, det: String },
    #[error("outside the domain: {0}")]
    Domain(String),
    #[error("expected parameters of {expected}, got {found}")]
    WrongFamily { expected: FamilyId, found: FamilyId },
}

/// Coefficients `(t, u, v)` of the extension.
#[derive(Clone, Debug, PartialEq)]
pub struct PhiCoefficients<T: Ring> {
    pub t: T,
    pub u: T,
    pub v: T,
}

impl<T: Ring> PhiCoefficients<T> {
    pub fn new(t: T, u: T, v: T) -> Self {
        PhiCoefficients { t, u, v }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({"t": self.t.to_string(), "u": self.u.to_string(), "v": self.v.to_string()})
    }
}

fn not_invertible(g: &Generator, e: MatrixError) -> PhiError {
    match e {
        MatrixError::NotInvertible { det } => PhiError::NotInvertible {
            generator: g.to_string(),
            det,
        },
        other => other.into(),
    }
}

/// `t*S + u*S^-1 + v*I`.
pub fn phi_combination<T: Ring>(
    sigma: &Matrix<T>,
    coeffs: &PhiCoefficients<T>,
) -> Result<Matrix<T>, MatrixError> {
    let inv = sigma.inverse()?;
    let id = Matrix::identity(sigma.dim(), sigma.ctx());
    sigma
        .scale(&coeffs.t)
        .checked_add(&inv.scale(&coeffs.u))?
        .checked_add(&id.scale(&coeffs.v))
}

/// Extends a twisted virtual braid representation to the singular monoid,
/// keeping the sigma, rho and gamma images.
pub fn phi_extend<T: Ring>(
    base: &Representation<T>,
    coeffs: &PhiCoefficients<T>,
) -> Result<Representation<T>, PhiError> {
    if base.structure() != Structure::TVB {
        return Err(PhiError::WrongStructure {
            expected: Structure::TVB,
            found: base.structure(),
        });
    }
    let mut images: BTreeMap<Generator, Matrix<T>> = base.images().clone();
    for (g, m) in base.images() {
        if g.family == Family::Sigma {
            let tau = phi_combination(m, coeffs).map_err(|e| not_invertible(g, e))?;
            images.insert(Generator::tau(g.index), tau);
        }
    }
    Ok(Representation::new(Structure::STVB, base.n(), images)?)
}

/// Closed form of the extended tau image for the first twisted family with
/// sigma block `[[d, b], [b/x^2, d]]`.
pub fn phi_tau_zeta1<F: Field>(
    b: &F,
    d: &F,
    x: &F,
    coeffs: &PhiCoefficients<F>,
) -> Result<Matrix<F>, PhiError> {
    let ctx = b.ctx();
    let x2 = x.clone() * x;
    let disc = d.clone() * d * &x2 - b.clone() * b;
    if x.is_zero() {
        return Err(PhiError::Domain("x != 0".into()));
    }
    if disc.is_zero() {
        return Err(PhiError::Domain("d^2*x^2-b^2 != 0".into()));
    }
    let PhiCoefficients { t, u, v } = coeffs;
    let neg = -disc.clone();
    let diag = d.clone() * (u.clone() * &x2 / &disc + t) + v;
    let upper = b.clone() * (u.clone() * &x2 / &neg + t);
    let lower = b.clone() * (u.clone() / &neg + t.clone() / &x2);
    let corner = t.clone() + u + v;
    let zero = F::zero(&ctx);
    Ok(Matrix::from_rows_in(
        vec![
            vec![diag.clone(), upper, zero.clone()],
            vec![lower, diag, zero.clone()],
            vec![zero.clone(), zero, corner],
        ],
        ctx,
    ))
}

/// Outcome of matching a local extension against the extension family.
#[derive(Clone, Debug, PartialEq)]
pub enum PhiMatch<F: Field> {
    Unique(PhiCoefficients<F>),
    /// The linear system in `(t, u, v)` is singular but consistent.
    Underdetermined {
        rank: usize,
        augmented_rank: usize,
    },
    /// The linear system in `(t, u, v)` has no solution.
    Inconsistent {
        rank: usize,
        augmented_rank: usize,
    },
}

impl<F: Field> PhiMatch<F> {
    pub fn coefficients(&self) -> Option<&PhiCoefficients<F>> {
        match self {
            PhiMatch::Unique(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_singular(&self) -> bool {
        !matches!(self, PhiMatch::Unique(_))
    }
}

/// The sigma-block parameters `(b, d, x)` and tau-block parameters `(f, g)` of
/// the first local extension; its sigma diagonal `a` plays the role of `d`.
fn eta1_values<F: Field>(params: &FamilyParams<F>) -> Result<[F; 5], PhiError> {
    if params.family != FamilyId::Eta(1) {
        return Err(PhiError::WrongFamily {
            expected: FamilyId::Eta(1),
            found: params.family,
        });
    }
    let get = |k: &str| params.get(k).cloned().expect("validated parameter");
    Ok([get("b"), get("a"), get("x"), get("f"), get("g")])
}

/// Solves for `(t, u, v)` with `tau = t*S + u*S^-1 + v*I` equal to the tau
/// image of the first local extension. Unknowns are read off the three
/// distinct entries of the tau image: the block diagonal, the upper
/// off-diagonal and the corner.
pub fn solve_phi_match<F: Field>(params: &FamilyParams<F>) -> Result<PhiMatch<F>, PhiError> {
    let [b, d, x, f, g] = eta1_values(params)?;
    let ctx = b.ctx();
    let one = F::one(&ctx);
    let zero = F::zero(&ctx);
    let x2 = x.clone() * &x;
    let disc = d.clone() * &d * &x2 - b.clone() * &b;
    // S^-1 = [[d, -b], [-b/x^2, d]] * x^2 / disc.
    let inv_scale = x2 / &disc;
    let a = Matrix::from_rows_in(
        vec![
            vec![d.clone(), d.clone() * &inv_scale, one.clone()],
            vec![b.clone(), -(b.clone() * &inv_scale), zero],
            vec![one.clone(), one.clone(), one.clone()],
        ],
        ctx,
    );
    Ok(match solve_linear(&a, &[f, g, one])? {
        LinearSolution::Unique(s) => {
            let [t, u, v]: [F; 3] = s.try_into().expect("three unknowns");
            PhiMatch::Unique(PhiCoefficients { t, u, v })
        }
        LinearSolution::Singular {
            rank,
            augmented_rank,
        } if rank == augmented_rank => PhiMatch::Underdetermined {
            rank,
            augmented_rank,
        },
        LinearSolution::Singular {
            rank,
            augmented_rank,
        } => PhiMatch::Inconsistent {
            rank,
            augmented_rank,
        },
    })
}

/// The published closed forms for the matching coefficients, defined away
/// from `b^3 - b*(d-1)^2*x^2 = 0`.
pub fn phi_match_closed_form<F: Field>(
    params: &FamilyParams<F>,
) -> Result<PhiCoefficients<F>, PhiError> {
    let [b, d, x, f, g] = eta1_values(params)?;
    let ctx = b.ctx();
    let k = |i: i64| F::from_int(i, &ctx);
    let x2 = x.clone() * &x;
    let b2 = b.clone() * &b;
    let b3 = b2.clone() * &b;
    let dm1 = d.clone() - k(1);
    let den = b3.clone() - b.clone() * &dm1 * &dm1 * &x2;
    if den.is_zero() {
        return Err(PhiError::Domain("b^3-b*(d-1)^2*x^2 != 0".into()));
    }
    let bf1 = b.clone() * (f.clone() - k(1));
    let t = (b2.clone() * &g + x2.clone() * (bf1.clone() - dm1.clone() * &d * &g)) / &den;
    let u = -((b.clone() - d.clone() * &x)
        * (b.clone() + d.clone() * &x)
        * (bf1 - d.clone() * &g + &g))
        / &den;
    let v = (b3 * &f - b2 * &d * &g - b.clone() * &x2 * (d.clone() * (d.clone() * &f - k(2)) + &f)
        + d.clone() * (d.clone() * &d - k(1)) * &g * &x2)
        / &den;
    Ok(PhiCoefficients { t, u, v })
}

/// Adds `tau_bar_i -> tau_i^-1`, turning a representation of the singular
/// twisted virtual braid monoid into one of the group.
pub fn promote_to_group<T: Ring>(rep: &Representation<T>) -> Result<Representation<T>, PhiError> {
    if rep.structure() != Structure::STVB {
        return Err(PhiError::WrongStructure {
            expected: Structure::STVB,
            found: rep.structure(),
        });
    }
    let mut images = rep.images().clone();
    for (g, m) in rep.images() {
        if g.family == Family::Tau {
            let inv = m.inverse().map_err(|e| not_invertible(g, e))?;
            images.insert(Generator::tau_bar(g.index), inv);
        }
    }
    Ok(Representation::new(Structure::STVG, rep.n(), images)?)
}

#[cfg(test)]
mod tests;

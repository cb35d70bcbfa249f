//! Faithfulness witnesses, identity kernels and invariant-subspace structure
//! of local representations.

use serde_json::json;
use thiserror::Error;

use crate::catalog::{
    rep_burau, rep_lkb, symbolic_params, FamilyId, FamilyParams, RepError, Representation,
};
use crate::matrix::{
    common_invariant_line, shares_eigenvector_over_closure, Line, Matrix, MatrixError,
};
use crate::presentation::{Generator, Structure, Word};
use crate::scalar::{Field, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("unsupported representation shape: {0}")]
    Unsupported(String),
}

/// Comparison of the images of two words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub word_a: Word,
    pub word_b: Word,
    pub images_equal: bool,
    /// Generators mapped to the identity.
    pub kernel: Vec<Generator>,
    /// A catalog representation under which the two words have different
    /// images, certifying that they are distinct elements.
    pub separating: Option<String>,
}

impl WitnessReport {
    pub fn certified(&self) -> bool {
        self.separating.is_some()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "word_a": self.word_a.to_strings(),
            "word_b": self.word_b.to_strings(),
            "images_equal": self.images_equal,
            "kernel": self.kernel.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "separating": self.separating,
            "certified": self.certified(),
        })
    }
}

/// Generators whose image is exactly the identity matrix.
pub fn kernel_generators<T: Ring>(rep: &Representation<T>) -> Vec<Generator> {
    rep.images()
        .iter()
        .filter(|(_, m)| m.is_identity())
        .map(|(g, _)| *g)
        .collect()
}

/// Evaluates both words and compares the images exactly.
pub fn equal_image_witness<T: Ring>(
    rep: &Representation<T>,
    a: &Word,
    b: &Word,
) -> Result<WitnessReport, AnalysisError> {
    let images_equal = rep.evaluate(a)? == rep.evaluate(b)?;
    Ok(WitnessReport {
        word_a: a.clone(),
        word_b: b.clone(),
        images_equal,
        kernel: kernel_generators(rep),
        separating: None,
    })
}

/// Searches the catalog, with symbolic parameters, for a representation on
/// `n` strands that separates the two words. Families are tried in catalog
/// order and the first separating one is returned.
pub fn find_separating(n: usize, a: &Word, b: &Word) -> Option<String> {
    fn differs<T: Ring>(rep: &Representation<T>, a: &Word, b: &Word) -> bool {
        matches!((rep.evaluate(a), rep.evaluate(b)), (Ok(x), Ok(y)) if x != y)
    }
    let families: Vec<FamilyId> = if n == 2 {
        FamilyId::zetas().chain(FamilyId::etas()).collect()
    } else {
        FamilyId::zeta_primes().collect()
    };
    for f in families {
        if let Ok(rep) = symbolic_params(f, n).and_then(|p| p.build()) {
            if differs(&rep, a, b) {
                return Some(f.to_string());
            }
        }
    }
    if matches!(rep_burau(n), Ok(rep) if differs(&rep, a, b)) {
        return Some(FamilyId::Burau.to_string());
    }
    if n >= 3 && matches!(rep_lkb(n), Ok(rep) if differs(&rep, a, b)) {
        return Some(FamilyId::Lkb.to_string());
    }
    None
}

/// The designated pair of words whose equal images show `family` is not
/// faithful: a commutator pair for the twisted families, otherwise a
/// generator of the identity kernel against the empty word.
pub fn designated_witness(family: FamilyId) -> (Word, Word) {
    use Generator as G;
    match family {
        FamilyId::Zeta(1) | FamilyId::Eta(1) => (
            Word::of(&[G::sigma(1), G::rho(1)]),
            Word::of(&[G::rho(1), G::sigma(1)]),
        ),
        FamilyId::ZetaPrime(1 | 2) => (
            Word::of(&[G::gamma(1), G::sigma(1), G::gamma(2)]),
            Word::of(&[G::gamma(2), G::sigma(1), G::gamma(1)]),
        ),
        FamilyId::ZetaPrime(5) => (Word::of(&[G::sigma(1)]), Word::empty()),
        _ => (Word::of(&[G::gamma(1)]), Word::empty()),
    }
}

/// Evaluates the designated witness of the family at the given parameters.
pub fn unfaithfulness_audit<F: Field>(
    params: &FamilyParams<F>,
) -> Result<WitnessReport, AnalysisError> {
    let rep = params.build()?;
    let (a, b) = designated_witness(params.family);
    equal_image_witness(&rep, &a, &b)
}

/// Whether a braid restriction with top-left block `[[0, b], [c, 0]]` passes
/// the cited irreducibility criterion `b c != 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct BraidCriterion<F: Field> {
    pub bc: F,
    pub irreducible: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReducibilityReport<F: Field> {
    /// Every image maps the last standard basis vector to a multiple of itself.
    pub preserved_last_axis: bool,
    /// Top-left `n x n` blocks of the images (the composition factor).
    pub block_factors: Vec<(Generator, Matrix<F>)>,
    /// For two strands: a common invariant line of the 2x2 factors with
    /// coordinates in the working field.
    pub common_line: Option<Line<F>>,
    /// For two strands: whether the factors share an eigenvector over the
    /// algebraic closure of the working field.
    pub common_line_over_closure: Option<bool>,
    /// For `n >= 3`: the `b c != 1` criterion on the braid restriction, when
    /// the sigma block is anti-diagonal.
    pub braid_criterion: Option<BraidCriterion<F>>,
}

impl<F: Field> ReducibilityReport<F> {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "preserved_last_axis": self.preserved_last_axis,
            "block_factors": self.block_factors.iter()
                .map(|(g, m)| json!({"generator": g.to_string(), "block": m.to_json()}))
                .collect::<Vec<_>>(),
            "common_line": self.common_line.as_ref().map(|l| l.direction().iter().map(|e| e.to_string()).collect::<Vec<_>>()),
            "common_line_over_closure": self.common_line_over_closure,
            "braid_criterion": self.braid_criterion.as_ref().map(|c| json!({"bc": c.bc.to_string(), "irreducible": c.irreducible})),
        })
    }
}

/// First coordinate (0-based) of the block a generator acts on.
fn block_start(g: &Generator) -> usize {
    g.index - 1
}

/// Whether the image is the identity outside the 2x2 block the generator acts on.
pub(crate) fn is_local_image<T: Ring>(g: &Generator, m: &Matrix<T>) -> bool {
    let s = block_start(g);
    let in_block = |i: usize| i == s || i == s + 1;
    (0..m.dim()).all(|r| {
        (0..m.dim()).all(|c| {
            if in_block(r) && in_block(c) {
                return true;
            }
            let e = m.get(r, c);
            if r == c {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    })
}

/// Splits off the last axis and examines the remaining `n x n` factor.
pub fn reducibility_audit<F: Field>(
    rep: &Representation<F>,
) -> Result<ReducibilityReport<F>, AnalysisError> {
    let n = rep.n();
    let dim = rep.dim();
    if dim != n + 1 {
        return Err(AnalysisError::Unsupported(format!(
            "dimension {dim} is not n+1 for n = {n}"
        )));
    }
    if let Some((g, _)) = rep.images().iter().find(|(g, m)| !is_local_image(g, m)) {
        return Err(AnalysisError::Unsupported(format!(
            "image of {g} is not local"
        )));
    }
    let last = dim - 1;
    let preserved_last_axis = rep
        .images()
        .values()
        .all(|m| (0..last).all(|r| m.get(r, last).is_zero()));
    let block_factors: Vec<(Generator, Matrix<F>)> = rep
        .images()
        .iter()
        .map(|(g, m)| (*g, m.sub_block(0, n)))
        .collect();
    let mut report = ReducibilityReport {
        preserved_last_axis,
        block_factors,
        common_line: None,
        common_line_over_closure: None,
        braid_criterion: None,
    };
    if n == 2 {
        let blocks: Vec<Matrix<F>> = report
            .block_factors
            .iter()
            .map(|(_, m)| m.clone())
            .collect();
        report.common_line = common_invariant_line(&blocks, rep.ctx())?;
        report.common_line_over_closure = Some(shares_eigenvector_over_closure(&blocks)?);
    } else if let Some(s) = rep.image(&Generator::sigma(1)) {
        if s.get(0, 0).is_zero() && s.get(1, 1).is_zero() {
            let bc = s.get(0, 1).clone() * s.get(1, 0);
            let irreducible = !bc.is_one();
            report.braid_criterion = Some(BraidCriterion { bc, irreducible });
        }
    }
    Ok(report)
}

/// Keeps only the sigma images, as a representation of the braid group.
pub fn restriction_to_braid<T: Ring>(
    rep: &Representation<T>,
) -> Result<Representation<T>, AnalysisError> {
    Ok(rep.restrict(Structure::B)?)
}

#[cfg(test)]
mod tests;

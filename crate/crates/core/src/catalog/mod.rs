//! Matrix representations: the classical Burau and Lawrence-Krammer-Bigelow
//! representations and the classified local families, together with word
//! evaluation and relation checking.

mod classical;
mod families;
mod sampling;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::{Matrix, MatrixError, MatrixJson};
use crate::presentation::{
    build_presentation, Family, Generator, Presentation, PresentationError, Relation, Structure,
    Word,
};
use crate::scalar::{RatFunc, Ring, ScalarError};

pub use classical::{rep_burau, rep_lkb, LKB_VARS};
pub use families::{local_representation, FamilyId, FamilyParams, LocalBlocks};
pub use sampling::{sample_params, symbolic_params, ParamSampler};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("no image given for generator {0}")]
    MissingImage(String),
    #[error("image of {generator} has dimension {found}, expected {expected}")]
    WrongDimension {
        generator: String,
        found: usize,
        expected: usize,
    },
    #[error("image of group generator {generator} is not invertible (determinant {det})")]
    NotInvertible { generator: String, det: String },
    #[error("{family}: parameters violate {condition}")]
    Constraint { family: String, condition: String },
    #[error("{0}")]
    InvalidParams(String),
}

/// Generator images of a structure on `n` strands.
#[derive(Clone, Debug)]
pub struct Representation<T: Ring> {
    presentation: Presentation,
    dim: usize,
    ctx: T::Ctx,
    images: BTreeMap<Generator, Matrix<T>>,
    inverses: BTreeMap<Generator, Matrix<T>>,
}

impl<T: Ring> Representation<T> {
    /// Validates the images: one per generator, equal dimensions, and
    /// invertible images for every generator that has an inverse.
    pub fn new(
        structure: Structure,
        n: usize,
        images: BTreeMap<Generator, Matrix<T>>,
    ) -> Result<Self, RepError> {
        let mut rep = Self::unchecked(structure, n, images)?;
        for (g, m) in &rep.images {
            if rep.presentation.monoid_families.contains(&g.family) {
                continue;
            }
            let inv = m.inverse().map_err(|e| match e {
                MatrixError::NotInvertible { det } => RepError::NotInvertible {
                    generator: g.to_string(),
                    det,
                },
                other => other.into(),
            })?;
            rep.inverses.insert(*g, inv);
        }
        Ok(rep)
    }

    /// Like [`Representation::new`] but without the invertibility check; used
    /// for candidate images that may not define a representation at all.
    pub fn unchecked(
        structure: Structure,
        n: usize,
        images: BTreeMap<Generator, Matrix<T>>,
    ) -> Result<Self, RepError> {
        let presentation = build_presentation(structure, n)?;
        let first = presentation
            .generators
            .first()
            .and_then(|g| images.get(g))
            .ok_or_else(|| RepError::MissingImage(presentation.generators[0].to_string()))?;
        let dim = first.dim();
        let ctx = first.ctx().clone();
        for g in &presentation.generators {
            let m = images
                .get(g)
                .ok_or_else(|| RepError::MissingImage(g.to_string()))?;
            if m.dim() != dim {
                return Err(RepError::WrongDimension {
                    generator: g.to_string(),
                    found: m.dim(),
                    expected: dim,
                });
            }
            if *m.ctx() != ctx {
                return Err(ScalarError::RingMismatch {
                    left: T::descriptor(&ctx).to_string(),
                    right: m.ring().to_string(),
                }
                .into());
            }
        }
        if let Some(g) = images.keys().find(|g| !presentation.has_generator(g)) {
            return Err(PresentationError::UnknownGenerator(g.to_string()).into());
        }
        Ok(Representation {
            presentation,
            dim,
            ctx,
            images,
            inverses: BTreeMap::new(),
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn structure(&self) -> Structure {
        self.presentation.structure
    }

    pub fn n(&self) -> usize {
        self.presentation.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
    }

    pub fn image(&self, g: &Generator) -> Option<&Matrix<T>> {
        self.images.get(g)
    }

    pub fn images(&self) -> &BTreeMap<Generator, Matrix<T>> {
        &self.images
    }

    fn inverse_image(&self, g: &Generator) -> Result<Matrix<T>, RepError> {
        if self.presentation.monoid_families.contains(&g.family) {
            return Err(PresentationError::NoInverse(g.to_string()).into());
        }
        if let Some(m) = self.inverses.get(g) {
            return Ok(m.clone());
        }
        let m = &self.images[g];
        m.inverse().map_err(|_| RepError::NotInvertible {
            generator: g.to_string(),
            det: m.det().to_string(),
        })
    }

    /// Ordered product of the letter images; the empty word maps to `I`.
    pub fn evaluate(&self, w: &Word) -> Result<Matrix<T>, RepError> {
        self.presentation.validate_word(w)?;
        let mut acc: Option<Matrix<T>> = None;
        for l in w.letters() {
            let m = if l.inverse {
                self.inverse_image(&l.gen)?
            } else {
                self.images[&l.gen].clone()
            };
            acc = Some(match acc {
                None => m,
                Some(a) => &a * &m,
            });
        }
        Ok(acc.unwrap_or_else(|| Matrix::identity(self.dim, &self.ctx)))
    }

    /// Evaluates both sides of every defining relation and compares exactly.
    pub fn check_relations(&self) -> RelationReport<T> {
        self.check_list(&self.presentation.relations)
    }

    /// Checks the relations of another presentation of the same structure.
    pub fn check_against(
        &self,
        presentation: &Presentation,
    ) -> Result<RelationReport<T>, RepError> {
        if presentation.structure != self.structure() || presentation.n != self.n() {
            return Err(RepError::InvalidParams(format!(
                "presentation of {} on {} strands does not match representation of {} on {} strands",
                presentation.structure,
                presentation.n,
                self.structure(),
                self.n()
            )));
        }
        for r in &presentation.relations {
            self.presentation.validate_word(&r.lhs)?;
            self.presentation.validate_word(&r.rhs)?;
        }
        Ok(self.check_list(&presentation.relations))
    }

    fn check_list(&self, relations: &[Relation]) -> RelationReport<T> {
        let checks = relations
            .par_iter()
            .map(|r| {
                let l = self.evaluate(&r.lhs).expect("relation words are valid");
                let rt = self.evaluate(&r.rhs).expect("relation words are valid");
                let holds = l == rt;
                RelationCheck {
                    tag: r.tag.clone(),
                    relation: format!("{} = {}", r.lhs, r.rhs),
                    holds,
                    difference: (!holds).then(|| l.checked_sub(&rt).unwrap()),
                }
            })
            .collect();
        RelationReport { checks }
    }

    /// Same generators with every image transformed entrywise.
    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U + Copy) -> Representation<U> {
        let images: BTreeMap<_, _> = self.images.iter().map(|(g, m)| (*g, m.map(f))).collect();
        let inverses = self.inverses.iter().map(|(g, m)| (*g, m.map(f))).collect();
        let ctx = images
            .values()
            .next()
            .map(|m: &Matrix<U>| m.ctx().clone())
            .unwrap();
        Representation {
            presentation: self.presentation.clone(),
            dim: self.dim,
            ctx,
            images,
            inverses,
        }
    }

    /// Entrywise fallible transform, re-validated as a representation.
    pub fn try_map<U: Ring, E>(
        &self,
        f: impl Fn(&T) -> Result<U, E> + Copy,
    ) -> Result<Representation<U>, RepError>
    where
        RepError: From<E>,
    {
        let mut images = BTreeMap::new();
        for (g, m) in &self.images {
            images.insert(*g, m.try_map(f)?);
        }
        Representation::new(self.structure(), self.n(), images)
    }

    pub fn lift(&self) -> Representation<RatFunc> {
        self.map(|e| e.lift())
    }

    /// Restricts to a sub-structure whose generators are all present.
    pub fn restrict(&self, structure: Structure) -> Result<Representation<T>, RepError> {
        let families: BTreeSet<Family> = structure.families().into_iter().collect();
        let images = self
            .images
            .iter()
            .filter(|(g, _)| families.contains(&g.family))
            .map(|(g, m)| (*g, m.clone()))
            .collect();
        Representation::new(structure, self.n(), images)
    }

    /// Parses the JSON form; every matrix must be over the ring of `T`.
    pub fn from_json(json: &RepresentationJson) -> Result<Self, RepError> {
        let structure: Structure = json.structure.parse()?;
        let mut images = BTreeMap::new();
        for (g, m) in &json.images {
            images.insert(g.parse::<Generator>()?, Matrix::from_json(m)?);
        }
        Representation::new(structure, json.n, images)
    }

    pub fn to_json(&self) -> RepresentationJson {
        RepresentationJson {
            structure: self.structure().to_string(),
            n: self.n(),
            dim: self.dim,
            ring: T::descriptor(&self.ctx).to_string(),
            images: self
                .images
                .iter()
                .map(|(g, m)| (g.to_string(), m.to_json()))
                .collect(),
        }
    }
}

impl Representation<RatFunc> {
    /// Reads the JSON form over any ring, lifting entries into the fraction field.
    pub fn from_json_lifted(json: &RepresentationJson) -> Result<Self, RepError> {
        let structure: Structure = json.structure.parse()?;
        let mut images = BTreeMap::new();
        for (g, m) in &json.images {
            images.insert(g.parse::<Generator>()?, Matrix::from_json_lifted(m)?);
        }
        Representation::new(structure, json.n, images)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub structure: String,
    pub n: usize,
    pub dim: usize,
    pub ring: String,
    pub images: BTreeMap<String, MatrixJson>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationCheck<T: Ring> {
    pub tag: String,
    pub relation: String,
    pub holds: bool,
    /// `image(lhs) - image(rhs)` when the relation fails.
    pub difference: Option<Matrix<T>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationReport<T: Ring> {
    pub checks: Vec<RelationCheck<T>>,
}

impl<T: Ring> RelationReport<T> {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.holds).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck<T>> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.checks
                .iter()
                .map(|c| {
                    let mut o = serde_json::json!({
                        "tag": c.tag,
                        "relation": c.relation,
                        "status": if c.holds { "pass" } else { "fail" },
                    });
                    if let Some(d) = &c.difference {
                        o["difference"] = serde_json::to_value(d.to_json()).unwrap();
                    }
                    o
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests;

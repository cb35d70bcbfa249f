//! Polynomial systems of the two-strand local ansatz, symbolic verification
//! of the catalog families against them, and classification of concrete
//! solutions by the case analysis of the classification proof.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::json;
use thiserror::Error;

use crate::analysis::is_local_image;
use crate::catalog::{
    symbolic_params, FamilyId, FamilyParams, LocalBlocks, RepError, Representation,
};
use crate::matrix::{Matrix, MatrixError};
use crate::presentation::{Family, Generator, Structure};
use crate::scalar::{int, vars, Field, MultiPoly, RatFunc, Rational, Ring, ScalarError, Vars};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifierError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("no two-strand local ansatz for {0}")]
    UnsupportedStructure(Structure),
    #[error("{family} is not a family of {structure}")]
    FamilyMismatch {
        family: FamilyId,
        structure: Structure,
    },
    #[error("image of {0} does not have the local shape")]
    NotLocal(String),
    #[error("expected dimension 3, got {0}")]
    WrongDimension(usize),
}

/// One polynomial equation `poly = 0` with the relation entry it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct Equation {
    pub poly: MultiPoly,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialSystem {
    pub structure: Structure,
    pub unknowns: Vars,
    pub equations: Vec<Equation>,
}

const TVB_UNKNOWNS: [&str; 12] = ["a", "b", "c", "d", "w", "x", "y", "z", "p", "q", "r", "s"];
const TAU_UNKNOWNS: [&str; 4] = ["f", "g", "h", "k"];

/// Sign-normalized form, so that `p = 0` and `-p = 0` coincide.
fn normalize(p: MultiPoly) -> MultiPoly {
    if p.leading_is_negative() {
        -p
    } else {
        p
    }
}

impl PolynomialSystem {
    fn from_equations(structure: Structure, unknowns: Vars, raw: Vec<Equation>) -> Self {
        let mut seen = Vec::<MultiPoly>::new();
        let mut equations = Vec::new();
        for eq in raw {
            if eq.poly.is_zero() {
                continue;
            }
            if seen.contains(&eq.poly) {
                continue;
            }
            seen.push(eq.poly.clone());
            equations.push(eq);
        }
        PolynomialSystem {
            structure,
            unknowns,
            equations,
        }
    }

    pub fn len(&self) -> usize {
        self.equations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    /// The equations as a set of sign-normalized polynomials.
    pub fn polynomial_set(&self) -> BTreeSet<String> {
        self.equations
            .iter()
            .map(|e| normalize(e.poly.clone()).to_string())
            .collect()
    }

    /// Replaces some unknowns by rational constants and drops them from the
    /// unknowns; equations becoming identically zero are removed.
    pub fn substitute(&self, values: &BTreeMap<String, Rational>) -> PolynomialSystem {
        let names: Vec<&str> = self
            .unknowns
            .iter()
            .map(String::as_str)
            .filter(|v| !values.contains_key(*v))
            .collect();
        let target = vars(&names);
        let point: Vec<MultiPoly> = self
            .unknowns
            .iter()
            .map(|v| match values.get(v) {
                Some(c) => MultiPoly::constant(c.clone(), &target),
                None => MultiPoly::var(&target, v),
            })
            .collect();
        let raw = self
            .equations
            .iter()
            .map(|e| Equation {
                poly: e
                    .poly
                    .eval(&point, &target)
                    .expect("polynomial substitution"),
                provenance: e.provenance.clone(),
            })
            .collect();
        PolynomialSystem::from_equations(self.structure, target, raw)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "structure": self.structure.to_string(),
            "unknowns": self.unknowns.to_vec(),
            "equations": self.equations.iter()
                .map(|e| json!({"polynomial": e.poly.to_string(), "provenance": e.provenance}))
                .collect::<Vec<_>>(),
        })
    }
}

fn ansatz_block(vs: &Vars, names: [&str; 4]) -> Matrix<MultiPoly> {
    let v = |n: &str| MultiPoly::var(vs, n);
    Matrix::from_rows_in(
        vec![
            vec![v(names[0]), v(names[1])],
            vec![v(names[2]), v(names[3])],
        ],
        vs.clone(),
    )
}

/// Entrywise differences of both sides of every defining relation under the
/// generic two-strand local ansatz, with zero and duplicate equations dropped.
pub fn generate_system(structure: Structure) -> Result<PolynomialSystem, ClassifierError> {
    let names: Vec<&str> = match structure {
        Structure::TVB => TVB_UNKNOWNS.to_vec(),
        Structure::STVB => TVB_UNKNOWNS.iter().chain(&TAU_UNKNOWNS).copied().collect(),
        other => return Err(ClassifierError::UnsupportedStructure(other)),
    };
    let vs = vars(&names);
    let embed = |m: &Matrix<MultiPoly>, pos| m.block_embed(pos, 3).expect("ansatz position");
    let gamma = ansatz_block(&vs, ["p", "q", "r", "s"]);
    let mut images = BTreeMap::new();
    images.insert(
        Generator::sigma(1),
        embed(&ansatz_block(&vs, ["a", "b", "c", "d"]), 1),
    );
    images.insert(
        Generator::rho(1),
        embed(&ansatz_block(&vs, ["w", "x", "y", "z"]), 1),
    );
    images.insert(Generator::gamma(1), embed(&gamma, 1));
    images.insert(Generator::gamma(2), embed(&gamma, 2));
    if structure == Structure::STVB {
        images.insert(
            Generator::tau(1),
            embed(&ansatz_block(&vs, ["f", "g", "h", "k"]), 1),
        );
    }
    let rep = Representation::unchecked(structure, 2, images)?;
    let mut raw = Vec::new();
    for rel in &rep.presentation().relations {
        let diff = rep
            .evaluate(&rel.lhs)?
            .checked_sub(&rep.evaluate(&rel.rhs)?)?;
        for r in 0..3 {
            for c in 0..3 {
                raw.push(Equation {
                    poly: diff.get(r, c).clone(),
                    provenance: format!("{} ({},{})", rel.tag, r + 1, c + 1),
                });
            }
        }
    }
    Ok(PolynomialSystem::from_equations(structure, vs, raw))
}

/// Values of unknowns forced by the system alone: an equation in a single
/// unknown that is a pure power (`v^k = 0`) or linear (`c*v + e = 0`) fixes
/// it; fixed values are substituted and the search repeats.
pub fn derive_forced_values(system: &PolynomialSystem) -> BTreeMap<String, Rational> {
    let mut forced = BTreeMap::new();
    let mut current = system.clone();
    loop {
        let mut found = None;
        for eq in &current.equations {
            let used: Vec<usize> = (0..current.unknowns.len())
                .filter(|&i| eq.poly.degree_in(i) > 0)
                .collect();
            let [v] = used[..] else { continue };
            let deg = eq.poly.degree_in(v);
            let value = if eq.poly.is_monomial() {
                Some(int(0))
            } else if deg == 1 {
                let mut lin = int(0);
                let mut constant = int(0);
                for (m, c) in eq.poly.terms() {
                    if m.exps()[v] == 1 {
                        lin = c.clone();
                    } else {
                        constant = c.clone();
                    }
                }
                Some(-constant / lin)
            } else {
                None
            };
            if let Some(value) = value {
                found = Some((current.unknowns[v].clone(), value));
                break;
            }
        }
        let Some((name, value)) = found else { break };
        current = current.substitute(&BTreeMap::from([(name.clone(), value.clone())]));
        forced.insert(name, value);
    }
    forced
}

/// The reduced equations of the classification proof, in the unknowns
/// `a, b, c, d, w, x, y, z, p`.
pub fn classification_equations() -> Vec<MultiPoly> {
    let vs = vars(&["a", "b", "c", "d", "w", "x", "y", "z", "p"]);
    let v = |n: &str| MultiPoly::var(&vs, n);
    let one = MultiPoly::one(&vs);
    let (a, b, c, d) = (v("a"), v("b"), v("c"), v("d"));
    let (w, x, y, z, p) = (v("w"), v("x"), v("y"), v("z"), v("p"));
    let p2 = p.clone() * &p;
    vec![
        w.clone() * &w + x.clone() * &y - &one,
        x.clone() * (w.clone() + &z),
        y.clone() * (w.clone() + &z),
        z.clone() * &z + x.clone() * &y - &one,
        p2.clone() - &one,
        w.clone() * (one.clone() - &p),
        z.clone() * (one.clone() - &p),
        -(a.clone() * &p2)
            + w.clone() * (a.clone() * &w + c.clone() * &x)
            + (b.clone() * &w + d.clone() * &x) * &y,
        -(b.clone() * &p2)
            + x.clone() * (a.clone() * &w + c.clone() * &x)
            + (b.clone() * &w + d.clone() * &x) * &z,
        -(c.clone() * &p2)
            + w.clone() * (a.clone() * &y + c.clone() * &z)
            + y.clone() * (b.clone() * &y + d.clone() * &z),
        -(d.clone() * &p2)
            + x.clone() * (a.clone() * &y + c.clone() * &z)
            + z.clone() * (b.clone() * &y + d.clone() * &z),
    ]
}

/// Sign-normalized string forms, for set comparison with
/// [`PolynomialSystem::polynomial_set`].
pub fn polynomial_set(polys: &[MultiPoly]) -> BTreeSet<String> {
    polys
        .iter()
        .map(|p| normalize(p.clone()).to_string())
        .collect()
}

/// Outcome of substituting candidate blocks into a system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    /// Provenance of every equation that does not vanish identically.
    pub failures: Vec<String>,
}

impl Verification {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Substitutes symbolic 2x2 blocks for the ansatz unknowns and checks that
/// every equation vanishes as a rational function.
pub fn verify_blocks(
    system: &PolynomialSystem,
    blocks: &LocalBlocks<RatFunc>,
) -> Result<Verification, ClassifierError> {
    let mut bindings: BTreeMap<&'static str, RatFunc> = BTreeMap::new();
    let mut bind = |names: [&'static str; 4], m: &Matrix<RatFunc>| {
        for (i, n) in names.into_iter().enumerate() {
            bindings.insert(n, m.get(i / 2, i % 2).clone());
        }
    };
    bind(["a", "b", "c", "d"], &blocks.sigma);
    bind(["w", "x", "y", "z"], &blocks.rho);
    bind(["p", "q", "r", "s"], &blocks.gamma);
    if let Some(t) = &blocks.tau {
        bind(["f", "g", "h", "k"], t);
    }
    let target = blocks.sigma.ctx().clone();
    let lookup = |n: &str| bindings.get(n).cloned();
    let mut failures = Vec::new();
    for eq in &system.equations {
        let value = RatFunc::from_poly(eq.poly.clone()).substitute(&lookup, &target)?;
        if !value.is_zero() {
            failures.push(eq.provenance.clone());
        }
    }
    Ok(Verification { failures })
}

/// Checks a two-strand catalog family against the system symbolically.
pub fn verify_family(
    system: &PolynomialSystem,
    family: FamilyId,
) -> Result<Verification, ClassifierError> {
    if family.structure() != system.structure {
        return Err(ClassifierError::FamilyMismatch {
            family,
            structure: system.structure,
        });
    }
    verify_blocks(system, &symbolic_params(family, 2)?.blocks())
}

/// A catalog family reproducing the input exactly, with recovered parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyMatch<F: Field> {
    pub family: FamilyId,
    pub bindings: BTreeMap<String, F>,
    /// The recovered parameters satisfy the family's domain conditions.
    pub residual: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification<F: Field> {
    /// First match in the order of the proof's case analysis.
    pub first: Option<FamilyMatch<F>>,
    pub all_matches: Vec<FamilyId>,
    /// Tags of defining relations that the input violates.
    pub failing_relations: Vec<String>,
}

impl<F: Field> Classification<F> {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "family": self.first.as_ref().map(|m| m.family.to_string()),
            "bindings": self.first.as_ref().map(|m| m.bindings.iter()
                .map(|(k, v)| (k.clone(), v.to_string()))
                .collect::<BTreeMap<_, _>>()),
            "residual": self.first.as_ref().map(|m| m.residual),
            "all_matches": self.all_matches.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "failing_relations": self.failing_relations,
        })
    }
}

/// Families in the order the case analysis reaches them: `p = -1`, then
/// `w = z = 1`, `w = z = -1`, `w = -z` with `x != 0`, and the `x = 0`
/// branches.
fn case_order(structure: Structure) -> Vec<FamilyId> {
    match structure {
        Structure::TVB => [1, 4, 3, 2, 6, 5, 7, 8]
            .into_iter()
            .map(FamilyId::Zeta)
            .collect(),
        _ => FamilyId::etas().collect(),
    }
}

/// Block and entry from which a family parameter is read off.
fn parameter_source(family: FamilyId, name: &str) -> (Family, usize, usize) {
    let sigma = |r, c| (Family::Sigma, r, c);
    match (family, name) {
        (FamilyId::Zeta(1 | 2) | FamilyId::Eta(1 | 2), "x") => (Family::Rho, 0, 1),
        (FamilyId::Eta(2), "z") => (Family::Rho, 1, 1),
        (FamilyId::Zeta(2), "w") => (Family::Rho, 0, 0),
        (_, "y") => (Family::Rho, 1, 0),
        (FamilyId::Zeta(1), "d") => sigma(0, 0),
        (_, "a") => sigma(0, 0),
        (_, "b") => sigma(0, 1),
        (_, "c") => sigma(1, 0),
        (_, "d") => sigma(1, 1),
        (_, "f") => (Family::Tau, 0, 0),
        (_, "g") => (Family::Tau, 0, 1),
        (_, "h") => (Family::Tau, 1, 0),
        (_, "k") => (Family::Tau, 1, 1),
        _ => unreachable!("{family} has no parameter {name}"),
    }
}

fn try_family<F: Field>(
    family: FamilyId,
    blocks: &BTreeMap<Family, Matrix<F>>,
    gamma2: &Matrix<F>,
    ctx: &F::Ctx,
) -> Option<FamilyMatch<F>> {
    let bindings: BTreeMap<String, F> = family
        .param_names()
        .iter()
        .map(|&name| {
            let (fam, r, c) = parameter_source(family, name);
            (name.to_string(), blocks[&fam].get(r, c).clone())
        })
        .collect();
    let params = FamilyParams::new(family, 2, bindings, ctx.clone()).ok()?;
    let expected = params.blocks();
    let same = expected.sigma == blocks[&Family::Sigma]
        && expected.rho == blocks[&Family::Rho]
        && expected.gamma == blocks[&Family::Gamma]
        && expected.gamma == *gamma2
        && expected.tau.as_ref() == blocks.get(&Family::Tau);
    same.then(|| FamilyMatch {
        family,
        residual: params.conditions().iter().all(|(_, ok)| *ok),
        bindings: params.bindings,
    })
}

/// Matches concrete images of the two-strand local shape against every
/// family of the structure.
pub fn classify_solution<F: Field>(
    rep: &Representation<F>,
) -> Result<Classification<F>, ClassifierError> {
    let structure = rep.structure();
    if !matches!(structure, Structure::TVB | Structure::STVB) || rep.n() != 2 {
        return Err(ClassifierError::UnsupportedStructure(structure));
    }
    if rep.dim() != 3 {
        return Err(ClassifierError::WrongDimension(rep.dim()));
    }
    if let Some((g, _)) = rep.images().iter().find(|(g, m)| !is_local_image(g, m)) {
        return Err(ClassifierError::NotLocal(g.to_string()));
    }
    let mut blocks = BTreeMap::new();
    let mut gamma2 = None;
    for (g, m) in rep.images() {
        let block = m.sub_block(g.index - 1, 2);
        if g.family == Family::Gamma && g.index == 2 {
            gamma2 = Some(block);
        } else {
            blocks.insert(g.family, block);
        }
    }
    let gamma2 = gamma2.expect("presentation has gamma:2");
    let failing_relations = rep
        .check_relations()
        .failures()
        .map(|c| c.tag.clone())
        .collect();
    let matches: Vec<FamilyMatch<F>> = case_order(structure)
        .into_iter()
        .filter_map(|f| try_family(f, &blocks, &gamma2, rep.ctx()))
        .collect();
    Ok(Classification {
        all_matches: matches.iter().map(|m| m.family).collect(),
        first: matches.into_iter().next(),
        failing_relations,
    })
}

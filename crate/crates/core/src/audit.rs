//! One-shot reproduction audit: every published claim checked by the
//! library, with a pass, fail or flagged verdict per claim.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{
    designated_witness, find_separating, reducibility_audit, restriction_to_braid,
    unfaithfulness_audit,
};
use crate::catalog::{symbolic_params, FamilyId, FamilyParams, ParamSampler, RepError};
use crate::classifier::{
    classification_equations, derive_forced_values, generate_system, polynomial_set, verify_family,
};
use crate::phi::{
    phi_extend, phi_match_closed_form, phi_tau_zeta1, promote_to_group, solve_phi_match,
    PhiCoefficients, PhiMatch,
};
use crate::presentation::{Generator, Structure};
use crate::scalar::{int, rat, vars, Field, RatFunc, Rational, Ring};

/// Identifiers of the audited claims, in report order.
pub const ENTRY_IDS: [&str; 11] = [
    "tvb2-catalog",
    "tvb2-unfaithful",
    "tvb2-reducibility",
    "tvbn-catalog",
    "tvbn-unfaithful",
    "tvbn-braid-restriction",
    "stvb2-catalog",
    "stvb2-unfaithful",
    "stvb2-reducibility",
    "phi-extension-matrix",
    "phi-coefficient-match",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Disagreement confined to a documented boundary case of the claim.
    Flagged,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Flagged => "flagged",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditEntry {
    pub id: String,
    pub claim: String,
    pub verdict: Verdict,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditSummary {
    pub seed: u64,
    pub samples: usize,
    pub entries: Vec<AuditEntry>,
}

impl AuditSummary {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.verdict == Verdict::Pass)
    }

    pub fn entry(&self, id: &str) -> Option<&AuditEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditConfig {
    pub seed: u64,
    /// Random parameter samples per family and check.
    pub samples: usize,
    /// Restricts the run to these entry ids.
    pub only: Option<BTreeSet<String>>,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            seed: 1,
            samples: 50,
            only: None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("unknown audit entry: {0}")]
pub struct UnknownEntry(pub String);

type Outcome = Result<(Verdict, Vec<String>), RepError>;

struct Check {
    id: &'static str,
    claim: &'static str,
    run: fn(&AuditConfig) -> Outcome,
}

const CHECKS: [Check; 11] = [
    Check {
        id: "tvb2-catalog",
        claim: "The eight two-strand local families satisfy the twisted virtual braid relations, and the ansatz system reduces to the classification equations",
        run: tvb2_catalog,
    },
    Check {
        id: "tvb2-unfaithful",
        claim: "Every two-strand local family is unfaithful",
        run: |cfg| witness_entry(cfg, FamilyId::zetas().collect(), 2, 2),
    },
    Check {
        id: "tvb2-reducibility",
        claim: "The two-strand families split off the last axis; the remaining factor has a common invariant line exactly as stated",
        run: |cfg| reducibility_entry(cfg, FamilyId::zetas().collect(), 3),
    },
    Check {
        id: "tvbn-catalog",
        claim: "The seven local families on n >= 3 strands satisfy the twisted virtual braid relations",
        run: tvbn_catalog,
    },
    Check {
        id: "tvbn-unfaithful",
        claim: "Every local family on n >= 3 strands is unfaithful",
        run: |cfg| witness_entry(cfg, FamilyId::zeta_primes().collect(), 3, 5),
    },
    Check {
        id: "tvbn-braid-restriction",
        claim: "The braid restrictions of the first four n-strand families are braid representations, irreducible when bc != 1",
        run: tvbn_braid_restriction,
    },
    Check {
        id: "stvb2-catalog",
        claim: "The thirteen two-strand local families satisfy the singular twisted virtual braid relations and extend to the group when tau is invertible",
        run: stvb2_catalog,
    },
    Check {
        id: "stvb2-unfaithful",
        claim: "Every two-strand local family of the singular monoid is unfaithful",
        run: |cfg| witness_entry(cfg, FamilyId::etas().collect(), 2, 8),
    },
    Check {
        id: "stvb2-reducibility",
        claim: "The two-strand singular families split off the last axis; the remaining factor has a common invariant line exactly as stated",
        run: |cfg| reducibility_entry(cfg, FamilyId::etas().collect(), 9),
    },
    Check {
        id: "phi-extension-matrix",
        claim: "The tau image of the extension of the first family has the displayed closed form, and extensions satisfy the monoid relations",
        run: phi_extension_matrix,
    },
    Check {
        id: "phi-coefficient-match",
        claim: "The first singular family agrees with an extension exactly for the displayed coefficients",
        run: phi_coefficient_match,
    },
];

/// Runs the selected entries in parallel and returns them in report order.
pub fn run_audit(config: &AuditConfig) -> Result<AuditSummary, UnknownEntry> {
    if let Some(only) = &config.only {
        if let Some(bad) = only.iter().find(|id| !ENTRY_IDS.contains(&id.as_str())) {
            return Err(UnknownEntry(bad.clone()));
        }
    }
    let entries = CHECKS
        .par_iter()
        .filter(|c| config.only.as_ref().is_none_or(|o| o.contains(c.id)))
        .map(|c| {
            let (verdict, details) = match (c.run)(config) {
                Ok(out) => out,
                Err(e) => (Verdict::Fail, vec![format!("error: {e}")]),
            };
            AuditEntry {
                id: c.id.to_string(),
                claim: c.claim.to_string(),
                verdict,
                details,
            }
        })
        .collect();
    Ok(AuditSummary {
        seed: config.seed,
        samples: config.samples,
        entries,
    })
}

fn sampler(cfg: &AuditConfig, entry: u64, family: FamilyId) -> ParamSampler {
    let tag = family
        .to_string()
        .bytes()
        .fold(entry, |h, b| h.wrapping_mul(131).wrapping_add(b as u64));
    ParamSampler::new(cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ tag)
}

fn draw(
    sampler: &mut ParamSampler,
    family: FamilyId,
    n: usize,
    count: usize,
    fixed: &BTreeMap<String, Rational>,
) -> Result<Vec<FamilyParams<Rational>>, RepError> {
    (0..count)
        .map(|_| sampler.params(family, n, fixed))
        .collect()
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Symbolic and sampled relation checks; returns (all hold, detail line).
fn catalog_line(
    cfg: &AuditConfig,
    entry: u64,
    family: FamilyId,
    n: usize,
) -> Result<(bool, String), RepError> {
    let report = symbolic_params(family, n)?.build()?.check_relations();
    let samples = draw(
        &mut sampler(cfg, entry, family),
        family,
        n,
        cfg.samples,
        &BTreeMap::new(),
    )?;
    let mut passed = 0;
    for p in &samples {
        if p.build()?.check_relations().all_hold() {
            passed += 1;
        }
    }
    let ok = report.all_hold() && passed == samples.len();
    let line = format!(
        "{family} n={n}: symbolic {}/{} relations, samples {passed}/{}",
        report.passed(),
        report.checks.len(),
        samples.len()
    );
    Ok((ok, line))
}

fn tvb2_catalog(cfg: &AuditConfig) -> Outcome {
    let system =
        generate_system(Structure::TVB).map_err(|e| RepError::InvalidParams(e.to_string()))?;
    let mut ok = true;
    let mut details = Vec::new();
    for f in FamilyId::zetas() {
        let (fam_ok, mut line) = catalog_line(cfg, 1, f, 2)?;
        let solves = verify_family(&system, f)
            .map_err(|e| RepError::InvalidParams(e.to_string()))?
            .holds();
        line.push_str(&format!(", solves ansatz system: {}", yes(solves)));
        ok &= fam_ok && solves;
        details.push(line);
    }
    let forced = derive_forced_values(&system);
    let expected_forced: BTreeMap<String, Rational> = [("q", 0), ("r", 0), ("s", 1)]
        .into_iter()
        .map(|(k, v)| (k.to_string(), int(v)))
        .collect();
    let reduced = system.substitute(&expected_forced);
    let same_set = reduced.polynomial_set() == polynomial_set(&classification_equations());
    details.push(format!(
        "ansatz system: {} equations in {} unknowns (stated: 31 in 12)",
        system.len(),
        system.unknowns.len()
    ));
    details.push(format!(
        "forced values: {}; after substitution {} equations, equal to the classification equations up to sign: {}",
        forced.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", "),
        reduced.len(),
        yes(same_set)
    ));
    ok &= forced == expected_forced && same_set && system.unknowns.len() == 12;
    if !ok {
        return Ok((Verdict::Fail, details));
    }
    if system.len() != 31 {
        return Ok((Verdict::Flagged, details));
    }
    Ok((Verdict::Pass, details))
}

fn witness_entry(cfg: &AuditConfig, families: Vec<FamilyId>, n: usize, entry: u64) -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    for f in families {
        let (a, b) = designated_witness(f);
        let symbolic = unfaithfulness_audit(&symbolic_params(f, n)?).map_err(analysis_err)?;
        let samples = draw(
            &mut sampler(cfg, entry, f),
            f,
            n,
            cfg.samples,
            &BTreeMap::new(),
        )?;
        let mut equal = 0;
        for p in &samples {
            if unfaithfulness_audit(p).map_err(analysis_err)?.images_equal {
                equal += 1;
            }
        }
        let separating = find_separating(n, &a, &b);
        ok &= symbolic.images_equal && equal == samples.len() && separating.is_some();
        details.push(format!(
            "{f}: {a} vs {b}: equal images symbolically: {}, on samples {equal}/{}; distinctness certified by: {}",
            yes(symbolic.images_equal),
            samples.len(),
            separating.as_deref().unwrap_or("no catalog representation separates the pair")
        ));
    }
    Ok((verdict(ok), details))
}

fn analysis_err(e: crate::analysis::AnalysisError) -> RepError {
    match e {
        crate::analysis::AnalysisError::Rep(r) => r,
        other => RepError::InvalidParams(other.to_string()),
    }
}

/// The stated verdict on a further invariant line, and whether the sample
/// lies on the documented boundary case of an "if and only if" claim.
fn stated_reducible(p: &FamilyParams<Rational>) -> (bool, bool) {
    let v = |k: &str| p.get(k).expect("parameter").clone();
    match p.family {
        FamilyId::Zeta(1 | 2) | FamilyId::Eta(1..=4) => (false, false),
        FamilyId::Zeta(3 | 4) => {
            let b_zero = v("b").is_zero();
            (b_zero && v("a") != v("d"), b_zero && v("a") == v("d"))
        }
        FamilyId::Eta(5 | 9) => {
            let g_zero = v("g").is_zero();
            (g_zero && v("f") != v("k"), g_zero && v("f") == v("k"))
        }
        _ => (true, false),
    }
}

/// Sample plans: generic draws, then for the conditional families draws on
/// the condition's zero locus and on its boundary.
fn reducibility_samples(
    cfg: &AuditConfig,
    entry: u64,
    f: FamilyId,
) -> Result<Vec<FamilyParams<Rational>>, RepError> {
    let mut s = sampler(cfg, entry, f);
    let mut out = draw(&mut s, f, 2, cfg.samples, &BTreeMap::new())?;
    let (zero, left, right) = match f {
        FamilyId::Zeta(3 | 4) => ("b", "a", "d"),
        FamilyId::Eta(5 | 9) => ("g", "f", "k"),
        _ => return Ok(out),
    };
    let fixed = BTreeMap::from([(zero.to_string(), int(0))]);
    out.extend(draw(&mut s, f, 2, cfg.samples, &fixed)?);
    for _ in 0..(cfg.samples / 5).max(3) {
        let value = s.nonzero_rational();
        let fixed = BTreeMap::from([
            (zero.to_string(), int(0)),
            (left.to_string(), value.clone()),
            (right.to_string(), value),
        ]);
        out.push(s.params(f, 2, &fixed)?);
    }
    Ok(out)
}

fn reducibility_entry(cfg: &AuditConfig, families: Vec<FamilyId>, entry: u64) -> Outcome {
    let mut hard_fail = false;
    let mut edge_fail = false;
    let mut details = Vec::new();
    for f in families {
        let samples = reducibility_samples(cfg, entry, f)?;
        let (mut axis, mut agree_closure, mut agree_rational, mut edge, mut edge_disagree) =
            (0, 0, 0, 0, 0);
        for p in &samples {
            let report = reducibility_audit(&p.build()?).map_err(analysis_err)?;
            let (stated, is_edge) = stated_reducible(p);
            let over_closure = report.common_line_over_closure.expect("two strands");
            let over_rationals = report.common_line.is_some();
            axis += usize::from(report.preserved_last_axis);
            agree_closure += usize::from(over_closure == stated);
            agree_rational += usize::from(over_rationals == stated);
            if is_edge {
                edge += 1;
                if over_closure != stated {
                    edge_disagree += 1;
                }
            } else if over_closure != stated {
                hard_fail = true;
            }
        }
        hard_fail |= axis != samples.len();
        edge_fail |= edge_disagree > 0;
        let n = samples.len();
        let mut line = format!(
            "{f}: last axis preserved {axis}/{n}; stated verdict matches over C {agree_closure}/{n}, over Q {agree_rational}/{n}"
        );
        if edge > 0 {
            line.push_str(&format!(
                "; boundary samples {edge}, disagreeing {edge_disagree}"
            ));
        }
        details.push(line);
    }
    let v = if hard_fail {
        Verdict::Fail
    } else if edge_fail {
        Verdict::Flagged
    } else {
        Verdict::Pass
    };
    Ok((v, details))
}

fn tvbn_catalog(cfg: &AuditConfig) -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    for f in FamilyId::zeta_primes() {
        for n in [3, 4] {
            let (fam_ok, mut line) = catalog_line(cfg, 4, f, n)?;
            ok &= fam_ok;
            if matches!(f, FamilyId::ZetaPrime(1..=4)) {
                let samples = draw(
                    &mut sampler(cfg, 40 + n as u64, f),
                    f,
                    n,
                    cfg.samples,
                    &BTreeMap::new(),
                )?;
                let mut passed = 0;
                for p in &samples {
                    let mut flipped = p.bindings.clone();
                    let s = flipped["s"].clone();
                    flipped.insert("s".into(), -s);
                    if FamilyParams::new(f, n, flipped, ())?
                        .build()?
                        .check_relations()
                        .all_hold()
                    {
                        passed += 1;
                    }
                }
                ok &= passed == samples.len();
                line.push_str(&format!(
                    ", opposite square-root branch {passed}/{}",
                    samples.len()
                ));
            }
            details.push(line);
        }
    }
    Ok((verdict(ok), details))
}

fn tvbn_braid_restriction(cfg: &AuditConfig) -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    for f in (1..=4).map(FamilyId::ZetaPrime) {
        for n in [3, 4] {
            let mut samples = draw(
                &mut sampler(cfg, 6 + n as u64, f),
                f,
                n,
                cfg.samples,
                &BTreeMap::new(),
            )?;
            let boundary =
                BTreeMap::from([("c".to_string(), int(2)), ("s".to_string(), rat(1, 2))]);
            samples.push(FamilyParams::new(f, n, boundary, ())?);
            let (mut passed, mut criterion_irreducible, mut at_boundary) = (0, 0, 0);
            for p in &samples {
                let rep = p.build()?;
                if restriction_to_braid(&rep)
                    .map_err(analysis_err)?
                    .check_relations()
                    .all_hold()
                {
                    passed += 1;
                }
                let crit = reducibility_audit(&rep)
                    .map_err(analysis_err)?
                    .braid_criterion;
                match crit {
                    Some(c) if c.irreducible => criterion_irreducible += 1,
                    Some(_) => at_boundary += 1,
                    None => ok = false,
                }
            }
            ok &= passed == samples.len() && at_boundary > 0;
            details.push(format!(
                "{f} n={n}: braid relations hold {passed}/{}; bc != 1 (irreducible by the cited criterion) {criterion_irreducible}, bc = 1 boundary {at_boundary}",
                samples.len()
            ));
        }
    }
    Ok((verdict(ok), details))
}

fn stvb2_catalog(cfg: &AuditConfig) -> Outcome {
    let system =
        generate_system(Structure::STVB).map_err(|e| RepError::InvalidParams(e.to_string()))?;
    let mut ok = true;
    let mut details = Vec::new();
    for f in FamilyId::etas() {
        let (fam_ok, mut line) = catalog_line(cfg, 7, f, 2)?;
        let solves = verify_family(&system, f)
            .map_err(|e| RepError::InvalidParams(e.to_string()))?
            .holds();
        let mut s = sampler(cfg, 70, f);
        let mut samples = draw(&mut s, f, 2, cfg.samples, &BTreeMap::new())?;
        let zero_tau: BTreeMap<String, Rational> = ["f", "g", "h", "k"]
            .iter()
            .filter(|k| f.param_names().contains(k))
            .map(|k| (k.to_string(), int(0)))
            .collect();
        if let Ok(p) = s.params(f, 2, &zero_tau) {
            samples.push(p);
        }
        let (mut consistent, mut promoted, mut singular) = (0, 0, 0);
        for p in &samples {
            let rep = p.build()?;
            let invertible = !rep
                .image(&Generator::tau(1))
                .expect("tau image")
                .det()
                .is_zero();
            let outcome = promote_to_group(&rep);
            if !invertible {
                singular += 1;
            }
            match outcome {
                Ok(g) if invertible => {
                    if g.check_relations().all_hold() {
                        consistent += 1;
                        promoted += 1;
                    }
                }
                Err(_) if !invertible => consistent += 1,
                _ => {}
            }
        }
        ok &= fam_ok && solves && consistent == samples.len();
        line.push_str(&format!(
            ", solves ansatz system: {}; promotion succeeds exactly for invertible tau {consistent}/{} ({promoted} promoted and verified, {singular} singular)",
            yes(solves),
            samples.len()
        ));
        details.push(line);
    }
    Ok((verdict(ok), details))
}

fn symbolic_zeta1_extension() -> Result<bool, RepError> {
    let vs = vars(&["b", "d", "x", "t", "u", "v"]);
    let base = symbolic_params(FamilyId::Zeta(1), 2)?.build()?;
    let base = base.try_map(|e| {
        e.reembed(&vs)
            .ok_or_else(|| RepError::InvalidParams("reembed".into()))
    })?;
    let var = |n: &str| RatFunc::var(&vs, n);
    let coeffs = PhiCoefficients::new(var("t"), var("u"), var("v"));
    let ext = phi_extend(&base, &coeffs).map_err(phi_err)?;
    let closed = phi_tau_zeta1(&var("b"), &var("d"), &var("x"), &coeffs).map_err(phi_err)?;
    Ok(ext.image(&Generator::tau(1)) == Some(&closed) && ext.check_relations().all_hold())
}

fn phi_err(e: crate::phi::PhiError) -> RepError {
    match e {
        crate::phi::PhiError::Rep(r) => r,
        other => RepError::InvalidParams(other.to_string()),
    }
}

fn phi_extension_matrix(cfg: &AuditConfig) -> Outcome {
    let symbolic = symbolic_zeta1_extension()?;
    let mut details = vec![format!(
        "symbolic zeta1 extension: tau image equals the displayed matrix and all monoid relations hold: {}",
        yes(symbolic)
    )];
    let mut ok = symbolic;
    let bases: Vec<(FamilyId, usize)> = FamilyId::zetas()
        .map(|f| (f, 2))
        .chain(FamilyId::zeta_primes().map(|f| (f, 3)))
        .collect();
    for (f, n) in bases {
        let mut s = sampler(cfg, 10, f);
        let samples = draw(&mut s, f, n, cfg.samples, &BTreeMap::new())?;
        let mut passed = 0;
        for p in &samples {
            let coeffs = PhiCoefficients::new(s.rational(), s.rational(), s.rational());
            if phi_extend(&p.build()?, &coeffs)
                .map_err(phi_err)?
                .check_relations()
                .all_hold()
            {
                passed += 1;
            }
        }
        ok &= passed == samples.len();
        details.push(format!(
            "{f} n={n}: extensions with random coefficients satisfy all relations {passed}/{}",
            samples.len()
        ));
    }
    Ok((verdict(ok), details))
}

fn eta1_at(
    a: Rational,
    b: i64,
    x: i64,
    f: i64,
    g: i64,
) -> Result<FamilyParams<Rational>, RepError> {
    let bindings = BTreeMap::from([
        ("a".to_string(), a),
        ("b".to_string(), int(b)),
        ("x".to_string(), int(x)),
        ("f".to_string(), int(f)),
        ("g".to_string(), int(g)),
    ]);
    FamilyParams::new(FamilyId::Eta(1), 2, bindings, ())
}

fn matches_tau<F: Field>(
    params: &FamilyParams<F>,
    coeffs: &PhiCoefficients<F>,
) -> Result<bool, RepError> {
    let rep = params.build()?;
    let ext = phi_extend(&rep.restrict(Structure::TVB)?, coeffs).map_err(phi_err)?;
    Ok(ext.image(&Generator::tau(1)) == rep.image(&Generator::tau(1)))
}

fn phi_coefficient_match(cfg: &AuditConfig) -> Outcome {
    let mut details = Vec::new();
    let symbolic = symbolic_params(FamilyId::Eta(1), 2)?;
    let solved = solve_phi_match(&symbolic).map_err(phi_err)?;
    let closed = phi_match_closed_form(&symbolic).map_err(phi_err)?;
    let sym_ok = match solved.coefficients() {
        Some(c) => *c == closed && matches_tau(&symbolic, c)?,
        None => false,
    };
    details.push(format!(
        "symbolic: linear solve equals the displayed t, u, v and reproduces the tau image: {}",
        yes(sym_ok)
    ));
    let mut ok = sym_ok;

    let mut s = sampler(cfg, 11, FamilyId::Eta(1));
    let samples = draw(&mut s, FamilyId::Eta(1), 2, cfg.samples, &BTreeMap::new())?;
    let (mut unique_ok, mut unique, mut singular_ok, mut singular) = (0, 0, 0, 0);
    for p in &samples {
        let m = solve_phi_match(p).map_err(phi_err)?;
        match (m.coefficients(), phi_match_closed_form(p)) {
            (Some(c), Ok(cf)) => {
                unique += 1;
                if *c == cf && matches_tau(p, c)? {
                    unique_ok += 1;
                }
            }
            (None, Err(_)) => {
                singular += 1;
                singular_ok += 1;
            }
            _ => singular += 1,
        }
    }
    ok &= unique_ok == unique && singular_ok == singular;
    details.push(format!(
        "samples: {unique_ok}/{unique} nonsingular samples match the closed forms and round-trip; {singular_ok}/{singular} singular samples detected"
    ));

    let mut boundary_ok = true;
    for p in [eta1_at(int(2), 1, 1, 3, 1)?, eta1_at(int(2), 0, 1, 3, 0)?] {
        let m = solve_phi_match(&p).map_err(phi_err)?;
        let detected = m.is_singular() && phi_match_closed_form(&p).is_err();
        boundary_ok &= detected;
        let kind = match m {
            PhiMatch::Unique(_) => "unique".to_string(),
            PhiMatch::Underdetermined {
                rank,
                augmented_rank,
            } => format!("underdetermined (rank {rank}, augmented {augmented_rank})"),
            PhiMatch::Inconsistent {
                rank,
                augmented_rank,
            } => format!("no solution (rank {rank}, augmented {augmented_rank})"),
        };
        details.push(format!(
            "vanishing denominator at a={}, b={}, x={}, f={}, g={}: {kind}",
            p.get("a").unwrap(),
            p.get("b").unwrap(),
            p.get("x").unwrap(),
            p.get("f").unwrap(),
            p.get("g").unwrap()
        ));
    }
    ok &= boundary_ok;
    Ok((verdict(ok), details))
}

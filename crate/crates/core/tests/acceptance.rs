//! Acceptance criteria: one test per criterion, each printing a PASS/FAIL
//! line and asserting its runtime limit.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use braidrep::analysis::{
    designated_witness, reducibility_audit, restriction_to_braid, unfaithfulness_audit,
};
use braidrep::audit::{run_audit, AuditConfig, Verdict};
use braidrep::catalog::{
    rep_burau, rep_lkb, sample_params, symbolic_params, FamilyId, FamilyParams, LocalBlocks,
    ParamSampler, Representation,
};
use braidrep::classifier::{
    classification_equations, classify_solution, generate_system, polynomial_set, verify_blocks,
};
use braidrep::matrix::Matrix;
use braidrep::phi::{
    phi_extend, phi_match_closed_form, phi_tau_zeta1, promote_to_group, solve_phi_match,
    PhiCoefficients,
};
use braidrep::presentation::{Generator, Structure, Word};
use braidrep::scalar::{int, rat, vars, Laurent, Monomial, MultiPoly, RatFunc, Rational, Ring};

const SAMPLES: u64 = 50;

/// Prints the verdict line, then asserts the outcome and the runtime limit.
fn conclude(criterion: &str, ok: bool, detail: &str, started: Instant, limit: Duration) {
    let elapsed = started.elapsed();
    let within = elapsed < limit;
    let verdict = if ok && within { "PASS" } else { "FAIL" };
    println!("{verdict}: {criterion} ({elapsed:.2?}, limit {limit:?}) {detail}");
    assert!(ok, "{criterion}: {detail}");
    assert!(within, "{criterion}: took {elapsed:?}, limit {limit:?}");
}

fn samples(f: FamilyId, n: usize) -> Vec<FamilyParams<Rational>> {
    (0..SAMPLES)
        .map(|s| sample_params(f, n, s).unwrap())
        .collect()
}

fn all_hold_on_samples(f: FamilyId, n: usize) -> bool {
    samples(f, n)
        .iter()
        .all(|p| p.build().unwrap().check_relations().all_hold())
}

#[test]
fn two_strand_twisted_catalog() {
    let start = Instant::now();
    let mut ok = true;
    for f in FamilyId::zetas() {
        let report = symbolic_params(f, 2)
            .unwrap()
            .build()
            .unwrap()
            .check_relations();
        ok &= report.checks.len() == 6 && report.all_hold() && all_hold_on_samples(f, 2);
    }
    conclude(
        "two-strand twisted virtual catalog",
        ok,
        "8 families x 6 relations",
        start,
        Duration::from_secs(10),
    );
}

#[test]
fn many_strand_twisted_catalog() {
    let start = Instant::now();
    let mut ok = true;
    for f in FamilyId::zeta_primes() {
        for n in [3, 4] {
            ok &= symbolic_params(f, n)
                .unwrap()
                .build()
                .unwrap()
                .check_relations()
                .all_hold();
            if matches!(f, FamilyId::ZetaPrime(1..=4)) {
                for p in samples(f, n) {
                    for sign in [1, -1] {
                        let mut b = p.bindings.clone();
                        let s = b["s"].clone() * int(sign);
                        b.insert("s".into(), s);
                        let rep = FamilyParams::new(f, n, b, ()).unwrap().build().unwrap();
                        ok &= rep.check_relations().all_hold();
                    }
                }
            }
        }
    }
    conclude(
        "n-strand twisted virtual catalog",
        ok,
        "7 families, n = 3, 4, both branches",
        start,
        Duration::from_secs(30),
    );
}

#[test]
fn two_strand_singular_catalog() {
    let start = Instant::now();
    let mut ok = true;
    for f in FamilyId::etas() {
        let report = symbolic_params(f, 2)
            .unwrap()
            .build()
            .unwrap()
            .check_relations();
        ok &= report.checks.len() == 8 && report.all_hold();
        let mut ps = samples(f, 2);
        let zero_tau: BTreeMap<String, Rational> = ["f", "g", "h", "k"]
            .iter()
            .filter(|k| f.param_names().contains(k))
            .map(|k| (k.to_string(), int(0)))
            .collect();
        ps.push(ParamSampler::new(99).params(f, 2, &zero_tau).unwrap());
        for p in ps {
            let rep = p.build().unwrap();
            ok &= rep.check_relations().all_hold();
            let invertible = !rep.image(&Generator::tau(1)).unwrap().det().is_zero();
            match promote_to_group(&rep) {
                Ok(g) => {
                    let report = g.check_relations();
                    ok &= invertible && report.all_hold();
                    ok &= report.checks.iter().any(|c| c.tag == "tau-bar-inverse");
                }
                Err(_) => ok &= !invertible,
            }
        }
    }
    conclude(
        "two-strand singular catalog and promotion",
        ok,
        "13 families x 8 relations",
        start,
        Duration::from_secs(20),
    );
}

#[test]
fn classification_system() {
    let start = Instant::now();
    let system = generate_system(Structure::TVB).unwrap();
    let reduced = system.substitute(&BTreeMap::from([
        ("q".to_string(), int(0)),
        ("r".to_string(), int(0)),
        ("s".to_string(), int(1)),
    ]));
    let same = reduced.polynomial_set() == polynomial_set(&classification_equations());
    let ok = system.len() == 31 && system.unknowns.len() == 12 && same;
    let detail = format!(
        "{} equations in {} unknowns, reduced set equal: {same}",
        system.len(),
        system.unknowns.len()
    );
    conclude(
        "classification proof system",
        ok,
        &detail,
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn unfaithfulness_witnesses() {
    let start = Instant::now();
    let mut equal = true;
    let families: Vec<(FamilyId, usize)> = FamilyId::zetas()
        .map(|f| (f, 2))
        .chain(FamilyId::zeta_primes().map(|f| (f, 3)))
        .chain(FamilyId::etas().map(|f| (f, 2)))
        .collect();
    for (f, n) in families {
        equal &= unfaithfulness_audit(&symbolic_params(f, n).unwrap())
            .unwrap()
            .images_equal;
    }
    // The first family's pair must be separated somewhere in the second family.
    let (a, b) = designated_witness(FamilyId::Zeta(1));
    let zeta2 = symbolic_params(FamilyId::Zeta(2), 2)
        .unwrap()
        .build()
        .unwrap();
    let certified = zeta2.evaluate(&a).unwrap() != zeta2.evaluate(&b).unwrap();
    let detail =
        format!("equal images everywhere: {equal}; {a} vs {b} separated by zeta2: {certified}");
    conclude(
        "unfaithfulness witnesses",
        equal && certified,
        &detail,
        start,
        Duration::from_secs(10),
    );
}

#[test]
fn reducibility_verdicts() {
    let start = Instant::now();
    let cfg = AuditConfig {
        only: Some(
            ["tvb2-reducibility", "stvb2-reducibility"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        ),
        ..AuditConfig::default()
    };
    let summary = run_audit(&cfg).unwrap();
    let ok = summary.entries.iter().all(|e| e.verdict != Verdict::Fail);
    let detail = summary
        .entries
        .iter()
        .map(|e| format!("{} {:?}: {}", e.id, e.verdict, e.details.join(" | ")))
        .collect::<Vec<_>>()
        .join("; ");
    conclude(
        "reducibility verdicts",
        ok,
        &detail,
        start,
        Duration::from_secs(20),
    );
}

#[test]
fn braid_restriction_criterion() {
    let start = Instant::now();
    let mut ok = true;
    let mut boundary = 0;
    for f in (1..=4).map(FamilyId::ZetaPrime) {
        for n in [3, 4] {
            let mut ps = samples(f, n);
            let fixed = BTreeMap::from([("c".to_string(), int(2)), ("s".to_string(), rat(1, 2))]);
            ps.push(FamilyParams::new(f, n, fixed, ()).unwrap());
            for p in ps {
                let rep = p.build().unwrap();
                ok &= restriction_to_braid(&rep)
                    .unwrap()
                    .check_relations()
                    .all_hold();
                let crit = reducibility_audit(&rep).unwrap().braid_criterion.unwrap();
                let (c, s) = (&p.bindings["c"], &p.bindings["s"]);
                ok &= crit.bc == s.clone() * s * c * c && crit.irreducible == !crit.bc.is_one();
                boundary += usize::from(crit.bc.is_one());
            }
        }
    }
    ok &= boundary >= 8;
    let detail = format!("bc = 1 boundary exercised {boundary} times");
    conclude(
        "braid restriction criterion",
        ok,
        &detail,
        start,
        Duration::from_secs(10),
    );
}

#[test]
fn classical_representations() {
    let start = Instant::now();
    let mut ok = true;
    for n in 2..=6 {
        let rep = rep_burau(n).unwrap();
        ok &= rep.dim() == n && rep.check_relations().all_hold();
    }
    for n in [3, 4] {
        let rep = rep_lkb(n).unwrap();
        ok &= rep.dim() == n * (n - 1) / 2 && rep.check_relations().all_hold();
    }
    conclude(
        "Burau and Lawrence-Krammer-Bigelow",
        ok,
        "Burau n = 2..6, LKB n = 3, 4",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn extension_matrix_closed_form() {
    let start = Instant::now();
    let vs = vars(&["b", "d", "x", "t", "u", "v"]);
    let base = symbolic_params(FamilyId::Zeta(1), 2)
        .unwrap()
        .build()
        .unwrap();
    let base: Representation<RatFunc> = base.map(|e| e.reembed(&vs).unwrap());
    let var = |n: &str| RatFunc::var(&vs, n);
    let c = PhiCoefficients::new(var("t"), var("u"), var("v"));
    let ext = phi_extend(&base, &c).unwrap();
    let closed = phi_tau_zeta1(&var("b"), &var("d"), &var("x"), &c).unwrap();
    let ok = ext.image(&Generator::tau(1)) == Some(&closed) && ext.check_relations().all_hold();
    conclude(
        "extension tau image",
        ok,
        "symbolic in b, d, x, t, u, v",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn extension_coefficient_match() {
    let start = Instant::now();
    let params = symbolic_params(FamilyId::Eta(1), 2).unwrap();
    let solved = solve_phi_match(&params).unwrap();
    let closed = phi_match_closed_form(&params).unwrap();
    let rep = params.build().unwrap();
    let mut ok = solved.coefficients() == Some(&closed);
    if let Some(c) = solved.coefficients() {
        let ext = phi_extend(&rep.restrict(Structure::TVB).unwrap(), c).unwrap();
        ok &= ext.image(&Generator::tau(1)) == rep.image(&Generator::tau(1));
    }
    let singular: BTreeMap<String, Rational> = [("a", 2), ("b", 1), ("x", 1), ("f", 3), ("g", 1)]
        .iter()
        .map(|(k, v)| (k.to_string(), int(*v)))
        .collect();
    let singular = FamilyParams::new(FamilyId::Eta(1), 2, singular, ()).unwrap();
    ok &= solve_phi_match(&singular).unwrap().is_singular()
        && phi_match_closed_form(&singular).is_err();
    conclude(
        "extension coefficient match",
        ok,
        "symbolic solve, round trip, singular locus",
        start,
        Duration::from_secs(5),
    );
}

fn random_poly(s: &mut ParamSampler, vs: &braidrep::scalar::Vars) -> MultiPoly {
    let mut p = MultiPoly::zero(vs);
    for _ in 0..s.range(0, 4) {
        let exps = (0..vs.len()).map(|_| s.range(0, 2) as u32).collect();
        p = p + MultiPoly::monomial(vs, Monomial::new(exps), s.rational());
    }
    p
}

fn random_matrix(s: &mut ParamSampler, dim: usize) -> Matrix<Rational> {
    Matrix::from_fn(dim, &(), |_, _| s.rational())
}

/// Perturbs one entry of one block; the system verdict must agree with
/// direct relation evaluation of the perturbed images.
fn mutation_trial(s: &mut ParamSampler, trial: u64) -> (bool, bool) {
    let families: Vec<FamilyId> = FamilyId::zetas().chain(FamilyId::etas()).collect();
    let f = families[s.range(0, families.len() as i64 - 1) as usize];
    let p = sample_params(f, 2, 1000 + trial).unwrap();
    let mut blocks = p.blocks();
    let delta = s.nonzero_rational();
    let (r, c) = (s.range(0, 1) as usize, s.range(0, 1) as usize);
    let target = match (s.range(0, 3), blocks.tau.is_some()) {
        (0, _) => &mut blocks.sigma,
        (1, _) => &mut blocks.rho,
        (3, true) => blocks.tau.as_mut().unwrap(),
        _ => &mut blocks.gamma,
    };
    let old = target.get(r, c).clone();
    target.set(r, c, old + delta);
    let structure = f.structure();
    let system = generate_system(structure).unwrap();
    let lifted = LocalBlocks {
        sigma: blocks.sigma.lift(),
        rho: blocks.rho.lift(),
        gamma: blocks.gamma.lift(),
        tau: blocks.tau.as_ref().map(|t| t.lift()),
    };
    let by_system = verify_blocks(&system, &lifted).unwrap().holds();
    let rep = braidrep::catalog::local_representation(structure, 2, &blocks)
        .map(|r| r.check_relations().all_hold());
    // A non-invertible group image is not a representation at all.
    let by_relations = rep.unwrap_or(false);
    let invertible_group_images =
        blocks.sigma.det() != int(0) && blocks.rho.det() != int(0) && blocks.gamma.det() != int(0);
    (
        by_system == by_relations || !invertible_group_images,
        !by_system,
    )
}

#[test]
fn property_suites() {
    let start = Instant::now();
    let mut s = ParamSampler::new(2024);
    let mut failures = Vec::new();

    let vs = vars(&["a", "b", "c"]);
    for _ in 0..100 {
        let (x, y, z) = (
            random_poly(&mut s, &vs),
            random_poly(&mut s, &vs),
            random_poly(&mut s, &vs),
        );
        if (x.clone() + &y) * &z != x.clone() * &z + y.clone() * &z
            || (x.clone() * &y) * &z != x.clone() * (y.clone() * &z)
        {
            failures.push("polynomial ring axioms");
        }
        if !y.is_zero() && !z.is_zero() {
            let f = RatFunc::new(x.clone(), y.clone());
            let sum = y.clone() + &z;
            if !sum.is_zero() {
                let g = RatFunc::new(z.clone(), sum);
                if (f.clone() + &g) - &g != f
                    || (f.clone() * &g) - (g.clone() * &f) != RatFunc::zero(&vs)
                {
                    failures.push("rational function field axioms");
                }
            }
        }
    }
    let lv = vars(&["t"]);
    for _ in 0..100 {
        let e = s.range(-3, 3) as i32;
        let t = Laurent::monomial(&lv, Monomial::new(vec![e]), int(1));
        if t.clone() * t.unit_inverse().unwrap() != Laurent::one(&lv) {
            failures.push("Laurent unit inverse");
        }
    }

    for _ in 0..100 {
        let m = random_matrix(&mut s, 3);
        if let Ok(inv) = m.inverse() {
            if !(&m * &inv).is_identity() || !(&inv * &m).is_identity() {
                failures.push("matrix inverse round trip");
            }
        }
        let (a, b) = (random_matrix(&mut s, 2), random_matrix(&mut s, 2));
        let pos = s.range(1, 3) as usize;
        let lhs = &a.block_embed(pos, 4).unwrap() * &b.block_embed(pos, 4).unwrap();
        if lhs != (&a * &b).block_embed(pos, 4).unwrap() {
            failures.push("block embedding homomorphism");
        }
    }

    let burau = rep_burau(4).unwrap();
    let gens: Vec<Generator> = burau.images().keys().copied().collect();
    for _ in 0..50 {
        let mut word = |len: i64| {
            let letters = (0..s.range(0, len))
                .map(|_| {
                    let g = gens[s.range(0, gens.len() as i64 - 1) as usize];
                    format!("{g}^{}", if s.range(0, 1) == 0 { 1 } else { -1 })
                })
                .collect::<Vec<_>>();
            Word::from_strings(&letters).unwrap()
        };
        let (u, v) = (word(5), word(5));
        if burau.evaluate(&u.concat(&v)).unwrap()
            != &burau.evaluate(&u).unwrap() * &burau.evaluate(&v).unwrap()
        {
            failures.push("evaluate homomorphism");
        }
    }

    for f in FamilyId::zetas().chain(FamilyId::etas()) {
        for p in samples(f, 2) {
            let rep = p.build().unwrap();
            let out = classify_solution(&rep).unwrap();
            let matched = out.first.map(|m| {
                FamilyParams::new(m.family, 2, m.bindings, ())
                    .unwrap()
                    .build()
                    .unwrap()
                    .images()
                    == rep.images()
            });
            if matched != Some(true) || !out.all_matches.contains(&f) {
                failures.push("classifier round trip");
            }
        }
    }

    let mut detected = 0;
    for trial in 0..100 {
        let (agrees, rejected) = mutation_trial(&mut s, trial);
        detected += usize::from(rejected);
        if !agrees {
            failures.push("mutation verdict");
        }
    }

    failures.dedup();
    let detail = format!("failures: {failures:?}; mutants rejected by the system: {detected}/100");
    conclude(
        "property suites",
        failures.is_empty(),
        &detail,
        start,
        Duration::from_secs(60),
    );
}

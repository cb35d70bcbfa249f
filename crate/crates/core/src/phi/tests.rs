use std::collections::BTreeMap;

use super::*;
use crate::catalog::{rep_burau, sample_params, symbolic_params, ParamSampler};
use crate::scalar::{int, rat, vars, RatFunc, Rational};

fn q(n: i64, d: i64) -> Rational {
    rat(n, d)
}

fn eta1(a: i64, b: i64, x: i64, f: i64, g: i64) -> FamilyParams<Rational> {
    let bindings = [("a", a), ("b", b), ("x", x), ("f", f), ("g", g)]
        .into_iter()
        .map(|(k, v)| (k.to_string(), int(v)))
        .collect();
    FamilyParams::new(FamilyId::Eta(1), 2, bindings, ()).unwrap()
}

fn coeffs(t: Rational, u: Rational, v: Rational) -> PhiCoefficients<Rational> {
    PhiCoefficients::new(t, u, v)
}

#[test]
fn symbolic_extension_matches_closed_form() {
    let vs = vars(&["b", "d", "x", "t", "u", "v"]);
    let base = symbolic_params(FamilyId::Zeta(1), 2)
        .unwrap()
        .build()
        .unwrap();
    let base = base
        .try_map(|e| {
            e.reembed(&vs)
                .ok_or(RepError::InvalidParams("reembed".into()))
        })
        .unwrap();
    let var = |n: &str| RatFunc::var(&vs, n);
    let c = PhiCoefficients::new(var("t"), var("u"), var("v"));
    let ext = phi_extend(&base, &c).unwrap();
    let closed = phi_tau_zeta1(&var("b"), &var("d"), &var("x"), &c).unwrap();
    assert_eq!(ext.image(&Generator::tau(1)).unwrap(), &closed);
    assert_eq!(closed.get(2, 2), &(var("t") + var("u") + var("v")));
    assert!(ext.check_relations().all_hold());
}

#[test]
fn identity_and_copy_coefficients() {
    let (b, d, x) = (int(1), int(2), int(1));
    let id = phi_tau_zeta1(&b, &d, &x, &coeffs(int(0), int(0), int(1))).unwrap();
    assert!(id.is_identity());
    let base = FamilyParams::new(
        FamilyId::Zeta(1),
        2,
        [("b", 1), ("d", 2), ("x", 1)]
            .into_iter()
            .map(|(k, v)| (k.to_string(), int(v)))
            .collect(),
        (),
    )
    .unwrap()
    .build()
    .unwrap();
    let copy = phi_extend(&base, &coeffs(int(1), int(0), int(0))).unwrap();
    assert_eq!(
        copy.image(&Generator::tau(1)),
        base.image(&Generator::sigma(1))
    );
    assert!(copy.check_relations().all_hold());
}

#[test]
fn concrete_block_value() {
    let m = phi_tau_zeta1(&int(1), &int(2), &int(1), &coeffs(int(1), int(1), int(0))).unwrap();
    assert_eq!(m.get(0, 0), &q(8, 3));
    assert_eq!(m.get(0, 1), &q(2, 3));
    assert_eq!(m.get(1, 0), &q(2, 3));
    assert_eq!(m.get(1, 1), &q(8, 3));
    assert!(matches!(
        phi_tau_zeta1(&int(2), &int(1), &int(2), &coeffs(int(1), int(1), int(0))),
        Err(PhiError::Domain(_))
    ));
}

#[test]
fn extensions_of_two_strand_families_satisfy_relations() {
    let mut sampler = ParamSampler::new(11);
    for f in FamilyId::zetas() {
        for seed in 0..4 {
            let base = sample_params(f, 2, seed).unwrap().build().unwrap();
            let c = coeffs(sampler.rational(), sampler.rational(), sampler.rational());
            let ext = phi_extend(&base, &c).unwrap();
            assert!(ext.check_relations().all_hold(), "{f} seed {seed}");
        }
    }
}

#[test]
fn extensions_on_three_strands() {
    for f in FamilyId::zeta_primes() {
        let base = sample_params(f, 3, 5).unwrap().build().unwrap();
        let ext = phi_extend(&base, &coeffs(int(2), q(-1, 3), int(5))).unwrap();
        assert!(ext.check_relations().all_hold(), "{f}");
    }
}

#[test]
fn rejects_non_twisted_base() {
    let burau = rep_burau(3).unwrap();
    let one = crate::scalar::Laurent::one(burau.ctx());
    let c = PhiCoefficients::new(one.clone(), one.clone(), one);
    assert!(matches!(
        phi_extend(&burau, &c),
        Err(PhiError::WrongStructure { .. })
    ));
}

#[test]
fn symbolic_match_reproduces_closed_forms() {
    let params = symbolic_params(FamilyId::Eta(1), 2).unwrap();
    let PhiMatch::Unique(solved) = solve_phi_match(&params).unwrap() else {
        panic!("generic system is nonsingular");
    };
    assert_eq!(solved, phi_match_closed_form(&params).unwrap());
    let rep = params.build().unwrap();
    let base = rep.restrict(Structure::TVB).unwrap();
    let ext = phi_extend(&base, &solved).unwrap();
    assert_eq!(ext.image(&Generator::tau(1)), rep.image(&Generator::tau(1)));
}

#[test]
fn copy_of_sigma_matches_degenerate_extension() {
    let p = eta1(3, 1, 1, 3, 1);
    assert_eq!(
        solve_phi_match(&p).unwrap().coefficients(),
        Some(&coeffs(int(1), int(0), int(0)))
    );
}

#[test]
fn vanishing_denominator_is_singular() {
    let p = eta1(2, 1, 1, 3, 1);
    assert!(solve_phi_match(&p).unwrap().is_singular());
    assert!(matches!(
        phi_match_closed_form(&p),
        Err(PhiError::Domain(_))
    ));
}

#[test]
fn promotion() {
    let rep = eta1(2, 1, 1, 3, 1).build().unwrap();
    let group = promote_to_group(&rep).unwrap();
    assert_eq!(group.structure(), Structure::STVG);
    assert!(group.check_relations().all_hold());

    let mut fixed = BTreeMap::new();
    for (k, v) in [("f", 1), ("k", 1), ("g", 0), ("h", 0)] {
        fixed.insert(k.to_string(), int(v));
    }
    let eta5 = ParamSampler::new(2)
        .params(FamilyId::Eta(5), 2, &fixed)
        .unwrap()
        .build()
        .unwrap();
    let g5 = promote_to_group(&eta5).unwrap();
    assert!(g5.image(&Generator::tau_bar(1)).unwrap().is_identity());

    let singular = eta1(2, 1, 1, 0, 0).build().unwrap();
    assert!(matches!(
        promote_to_group(&singular),
        Err(PhiError::NotInvertible { .. })
    ));
}

use std::collections::BTreeMap;

use super::*;
use crate::presentation::Generator as G;
use crate::scalar::{int, rat, vars, Laurent, Rational};

fn params(family: &str, vals: &[(&str, Rational)]) -> Result<FamilyParams<Rational>, RepError> {
    let f: FamilyId = family.parse().unwrap();
    let n = if matches!(f, FamilyId::ZetaPrime(_)) {
        3
    } else {
        2
    };
    FamilyParams::new(
        f,
        n,
        vals.iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
        (),
    )
}

fn q(rows: &[&[Rational]]) -> Matrix<Rational> {
    Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

#[test]
fn every_local_family_satisfies_its_relations_symbolically() {
    for f in FamilyId::zetas().chain(FamilyId::etas()) {
        let rep = symbolic_params(f, 2).unwrap().build().unwrap();
        let report = rep.check_relations();
        assert!(
            report.all_hold(),
            "{f}: {:?}",
            report.failures().map(|c| &c.tag).collect::<Vec<_>>()
        );
    }
    for f in FamilyId::zeta_primes() {
        for n in [3, 4] {
            let rep = symbolic_params(f, n).unwrap().build().unwrap();
            assert!(rep.check_relations().all_hold(), "{f} n={n}");
        }
    }
}

#[test]
fn both_square_root_branches_are_representations() {
    for f in [FamilyId::ZetaPrime(1), FamilyId::ZetaPrime(2)] {
        for s in [int(2), int(-2)] {
            let p = FamilyParams::new(
                f,
                3,
                BTreeMap::from([("c".into(), int(1)), ("s".into(), s)]),
                (),
            )
            .unwrap();
            assert!(p.build().unwrap().check_relations().all_hold());
        }
    }
}

#[test]
fn zeta_prime_one_reparameterized_block() {
    let p = params("zetap1", &[("c", int(1)), ("s", int(2))]).unwrap();
    let b = p.blocks();
    assert_eq!(b.sigma, q(&[&[int(0), int(4)], &[int(1), int(0)]]));
    assert_eq!(b.rho, q(&[&[int(0), int(-2)], &[rat(-1, 2), int(0)]]));
    assert_eq!(p.build().unwrap().check_relations().passed(), 17);
}

#[test]
fn zeta_prime_five_and_seven_images() {
    let rep = params("zetap5", &[("x", int(2))]).unwrap().build().unwrap();
    for i in 1..=2 {
        assert!(rep.image(&G::sigma(i)).unwrap().is_identity());
        assert_eq!(
            rep.image(&G::rho(i)).unwrap().sub_block(i - 1, 2),
            q(&[&[int(0), int(2)], &[rat(1, 2), int(0)]])
        );
    }
    for j in 1..=3 {
        assert_eq!(
            rep.image(&G::gamma(j)).unwrap().sub_block(j - 1, 2),
            q(&[&[int(-1), int(0)], &[int(0), int(1)]])
        );
    }
    let rep = FamilyParams::<Rational>::new(FamilyId::ZetaPrime(7), 5, BTreeMap::new(), ())
        .unwrap()
        .build()
        .unwrap();
    assert_eq!(rep.dim(), 6);
    assert!(rep.images().values().all(|m| m.is_identity()));
}

#[test]
fn zeta_one_sample_and_domain() {
    let rep = params("zeta1", &[("b", int(1)), ("d", int(2)), ("x", int(1))])
        .unwrap()
        .build()
        .unwrap();
    let report = rep.check_relations();
    assert_eq!((report.passed(), report.checks.len()), (6, 6));
    let prod = rep.evaluate(&"sigma:1 rho:1".parse().unwrap()).unwrap();
    assert_eq!(
        prod.sub_block(0, 2),
        q(&[&[int(1), int(2)], &[int(2), int(1)]])
    );
    assert!(prod.get(2, 2) == &int(1));
    assert!(rep.evaluate(&Word::empty()).unwrap().is_identity());

    let err = params("zeta1", &[("b", int(1)), ("d", int(1)), ("x", int(1))]).unwrap_err();
    assert_eq!(
        err,
        RepError::Constraint {
            family: "zeta1".into(),
            condition: "b^2-d^2*x^2 != 0".into()
        }
    );
    assert!(params("zeta1", &[("b", int(1)), ("d", int(1))]).is_err());
}

#[test]
fn zeta_four_identity() {
    let rep = params(
        "zeta4",
        &[("a", int(1)), ("b", int(0)), ("c", int(0)), ("d", int(1))],
    )
    .unwrap()
    .build()
    .unwrap();
    assert!(rep.images().values().all(|m| m.is_identity()));
}

#[test]
fn corrupted_gamma_breaks_a_relation() {
    let rep = params("zeta1", &[("b", int(1)), ("d", int(2)), ("x", int(1))])
        .unwrap()
        .build()
        .unwrap();
    let mut images = rep.images().clone();
    images.insert(G::gamma(1), Matrix::identity(3, &()));
    let bad = Representation::new(Structure::TVB, 2, images).unwrap();
    let failed: Vec<String> = bad
        .check_relations()
        .failures()
        .map(|c| c.relation.clone())
        .collect();
    assert!(failed.contains(&"rho:1^1 gamma:1^1 = gamma:2^1 rho:1^1".to_string()));
}

#[test]
fn eta_examples() {
    let rep = params(
        "eta1",
        &[
            ("a", int(2)),
            ("b", int(1)),
            ("x", int(1)),
            ("f", int(0)),
            ("g", int(0)),
        ],
    )
    .unwrap()
    .build()
    .unwrap();
    assert_eq!(
        rep.image(&G::tau(1)).unwrap(),
        &Matrix::diagonal(vec![int(0), int(0), int(1)], &())
    );
    assert_eq!(rep.check_relations().passed(), 8);

    let rep = params(
        "eta9",
        &[
            ("a", int(1)),
            ("f", int(2)),
            ("g", int(3)),
            ("h", int(5)),
            ("k", int(7)),
        ],
    )
    .unwrap()
    .build()
    .unwrap();
    for g in [G::sigma(1), G::rho(1), G::gamma(1), G::gamma(2)] {
        assert!(rep.image(&g).unwrap().is_identity());
    }
    assert_eq!(
        rep.image(&G::tau(1)).unwrap().sub_block(0, 2),
        q(&[&[int(2), int(3)], &[int(5), int(7)]])
    );

    let err = params(
        "eta3",
        &[
            ("a", int(1)),
            ("b", int(0)),
            ("c", int(1)),
            ("d", int(1)),
            ("f", int(1)),
            ("g", int(1)),
        ],
    )
    .unwrap_err();
    assert!(matches!(err, RepError::Constraint { condition, .. } if condition == "b != 0"));
}

#[test]
fn singular_tau_has_no_inverse() {
    let rep = params(
        "eta5",
        &[
            ("a", int(1)),
            ("f", int(0)),
            ("g", int(0)),
            ("h", int(0)),
            ("k", int(0)),
        ],
    )
    .unwrap()
    .build()
    .unwrap();
    assert!(rep.evaluate(&"tau:1^-1".parse().unwrap()).is_err());
    assert!(rep.image(&G::tau(1)).unwrap().inverse().is_err());
}

#[test]
fn burau_layout_and_relations() {
    let rep = rep_burau(2).unwrap();
    let vs = vars(&["t"]);
    let t = Laurent::var(&vs, "t");
    let one = Laurent::one(&vs);
    assert_eq!(
        rep.image(&G::sigma(1)).unwrap(),
        &Matrix::from_rows(vec![
            vec![one.clone() - &t, t.clone()],
            vec![one.clone(), Laurent::zero(&vs)]
        ])
        .unwrap()
    );
    let rep3 = rep_burau(3).unwrap();
    let s2 = rep3.image(&G::sigma(2)).unwrap();
    assert!(s2.get(0, 0).is_one() && s2.get(0, 1).is_zero() && s2.get(1, 0).is_zero());
    assert_eq!(s2.get(1, 2), &t);
    for n in 2..=6 {
        assert!(rep_burau(n).unwrap().check_relations().all_hold(), "n={n}");
    }
    assert!(rep_burau(1).is_err());
}

#[test]
fn lkb_columns_and_relations() {
    let rep = rep_lkb(3).unwrap();
    assert_eq!(rep.dim(), 3);
    let vs = vars(&LKB_VARS);
    let t = Laurent::var(&vs, "t");
    let qv = Laurent::var(&vs, "q");
    let one = Laurent::one(&vs);
    let s1 = rep.image(&G::sigma(1)).unwrap();
    // basis order: (1,2), (1,3), (2,3)
    assert_eq!(s1.get(0, 0), &(t.clone() * &qv * &qv));
    assert_eq!(s1.get(1, 0), &Laurent::zero(&vs));
    assert_eq!(s1.get(1, 2), &one);
    assert_eq!(s1.get(2, 2), &(one.clone() - &qv));
    assert!(rep.check_relations().all_hold());
    let rep4 = rep_lkb(4).unwrap();
    assert_eq!(rep4.dim(), 6);
    assert!(rep4.check_relations().all_hold());
    let far = rep4.evaluate(&"sigma:1 sigma:3".parse().unwrap()).unwrap();
    assert_eq!(
        far,
        rep4.evaluate(&"sigma:3 sigma:1".parse().unwrap()).unwrap()
    );
    assert!(rep_lkb(2).is_err());
}

#[test]
fn json_round_trip_lifts_entries() {
    let rep = params("zeta1", &[("b", int(1)), ("d", int(2)), ("x", int(3))])
        .unwrap()
        .build()
        .unwrap();
    let json = rep.to_json();
    let text = serde_json::to_string(&json).unwrap();
    let back: RepresentationJson = serde_json::from_str(&text).unwrap();
    let lifted = Representation::from_json_lifted(&back).unwrap();
    assert_eq!(
        lifted.image(&G::rho(1)).unwrap().get(1, 0).as_constant(),
        Some(rat(1, 3))
    );
    assert!(lifted.check_relations().all_hold());
}

#[test]
fn family_names_round_trip() {
    for f in FamilyId::all() {
        assert_eq!(f.to_string().parse::<FamilyId>().unwrap(), f);
    }
    assert!("zeta9".parse::<FamilyId>().is_err());
    assert!("eta0".parse::<FamilyId>().is_err());
}

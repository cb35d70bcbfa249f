use super::*;
use crate::catalog::sample_params;
use crate::presentation::Generator as G;
use crate::scalar::{int, Rational};

#[test]
fn designated_witnesses_have_equal_images() {
    for f in FamilyId::all().into_iter().filter(|f| f.is_local()) {
        let n = if matches!(f, FamilyId::ZetaPrime(_)) {
            3
        } else {
            2
        };
        for seed in 0..5 {
            let params = sample_params(f, n, seed).unwrap();
            let report = unfaithfulness_audit(&params).unwrap();
            assert!(report.images_equal, "{f} seed {seed}");
        }
    }
}

#[test]
fn kernel_lists_identity_generators() {
    let rep = sample_params(FamilyId::Zeta(4), 2, 3)
        .unwrap()
        .build()
        .unwrap();
    let kernel = kernel_generators(&rep);
    assert!(kernel.contains(&G::rho(1)));
    assert!(kernel.contains(&G::gamma(1)));
    assert!(kernel.contains(&G::gamma(2)));
    assert!(!kernel.contains(&G::sigma(1)));
}

#[test]
fn separating_search() {
    let s1 = Word::of(&[G::sigma(1)]);
    let s2 = Word::of(&[G::sigma(2)]);
    assert_eq!(find_separating(3, &s1, &s2).as_deref(), Some("zetap1"));
    let g1 = Word::of(&[G::gamma(1)]);
    assert!(find_separating(2, &g1, &Word::empty()).is_some());
    let braid_a = Word::of(&[G::sigma(1), G::sigma(2), G::sigma(1)]);
    let braid_b = Word::of(&[G::sigma(2), G::sigma(1), G::sigma(2)]);
    assert_eq!(find_separating(3, &braid_a, &braid_b), None);
}

#[test]
fn sigma_rho_commute_in_every_two_strand_family() {
    let a = Word::of(&[G::sigma(1), G::rho(1)]);
    let b = Word::of(&[G::rho(1), G::sigma(1)]);
    assert_eq!(find_separating(2, &a, &b), None);
}

#[test]
fn reducibility_of_zeta1() {
    let rep = sample_params(FamilyId::Zeta(1), 2, 7)
        .unwrap()
        .build()
        .unwrap();
    let report = reducibility_audit(&rep).unwrap();
    assert!(report.preserved_last_axis);
    assert_eq!(report.block_factors.len(), rep.images().len());
    assert!(report.block_factors.iter().all(|(_, m)| m.dim() == 2));
    assert!(report.common_line_over_closure.is_some());
    assert!(report.braid_criterion.is_none());
}

#[test]
fn zeta2_has_common_line() {
    for seed in 0..5 {
        let rep = sample_params(FamilyId::Zeta(2), 2, seed)
            .unwrap()
            .build()
            .unwrap();
        let report = reducibility_audit(&rep).unwrap();
        assert!(report.common_line.is_some());
        assert_eq!(report.common_line_over_closure, Some(true));
    }
}

#[test]
fn braid_criterion_for_three_strands() {
    let mut fixed = std::collections::BTreeMap::new();
    fixed.insert("c".to_string(), int(2));
    fixed.insert("s".to_string(), Rational::new(1.into(), 2.into()));
    let params = crate::catalog::ParamSampler::new(0)
        .params(FamilyId::ZetaPrime(1), 3, &fixed)
        .unwrap();
    let report = reducibility_audit(&params.build().unwrap()).unwrap();
    let crit = report.braid_criterion.unwrap();
    assert_eq!(crit.bc, Rational::new(1.into(), 1.into()));
    assert!(!crit.irreducible);
}

#[test]
fn rejects_non_local_shapes() {
    let burau = rep_burau(3).unwrap().lift();
    assert!(matches!(
        reducibility_audit(&burau),
        Err(AnalysisError::Unsupported(_))
    ));
}

#[test]
fn braid_restriction_keeps_sigma() {
    let rep = sample_params(FamilyId::Eta(1), 2, 1)
        .unwrap()
        .build()
        .unwrap();
    let b = restriction_to_braid(&rep).unwrap();
    assert_eq!(b.images().len(), 1);
    assert_eq!(b.image(&G::sigma(1)), rep.image(&G::sigma(1)));
}

/// A non-local four-dimensional representation of the two-strand twisted
/// virtual braid group in which `sigma_1 rho_1 != rho_1 sigma_1`.
#[test]
fn four_dimensional_representation_separates_sigma_rho_pair() {
    let m = |rows: [[i64; 4]; 4]| {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
        .unwrap()
    };
    let r = m([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]);
    let g1 = m([[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
    let g2 = &(&r * &g1) * &r;
    let s = m([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, -1], [0, 0, 0, 1]]);
    let images = [
        (G::sigma(1), s),
        (G::rho(1), r),
        (G::gamma(1), g1),
        (G::gamma(2), g2),
    ]
    .into_iter()
    .collect();
    let rep: Representation<Rational> = Representation::new(Structure::TVB, 2, images).unwrap();
    assert!(rep.check_relations().all_hold());
    let (a, b) = designated_witness(FamilyId::Zeta(1));
    assert_ne!(rep.evaluate(&a).unwrap(), rep.evaluate(&b).unwrap());
}

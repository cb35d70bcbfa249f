//! Property tests for the algebraic invariants.

use proptest::prelude::*;

use braidrep::catalog::{rep_burau, sample_params, FamilyId, FamilyParams};
use braidrep::classifier::classify_solution;
use braidrep::matrix::Matrix;
use braidrep::presentation::{Generator, Word};
use braidrep::scalar::{rat, vars, Monomial, MultiPoly, RatFunc, Rational, Ring, Vars};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn poly_vars() -> Vars {
    vars(&["a", "b", "c"])
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=2, 3), rational()), 0..4).prop_map(
        |terms| {
            let vs = poly_vars();
            terms.into_iter().fold(MultiPoly::zero(&vs), |acc, (e, c)| {
                acc + MultiPoly::monomial(&vs, Monomial::new(e), c)
            })
        },
    )
}

fn nonzero_poly() -> impl Strategy<Value = MultiPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RatFunc::new(n, d))
}

fn matrix(dim: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(rational(), dim * dim)
        .prop_map(move |v| Matrix::from_fn(dim, &(), |r, c| v[r * dim + c].clone()))
}

fn local_family() -> impl Strategy<Value = FamilyId> {
    prop::sample::select(
        FamilyId::zetas()
            .chain(FamilyId::etas())
            .collect::<Vec<_>>(),
    )
}

fn burau_word() -> impl Strategy<Value = Word> {
    prop::collection::vec((1usize..=3, any::<bool>()), 0..6).prop_map(|letters| {
        let strs: Vec<String> = letters
            .iter()
            .map(|(i, inv)| format!("{}^{}", Generator::sigma(*i), if *inv { -1 } else { 1 }))
            .collect();
        Word::from_strings(&strs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_axioms(x in poly(), y in poly(), z in poly()) {
        prop_assert_eq!((x.clone() + &y) * &z, x.clone() * &z + y.clone() * &z);
        prop_assert_eq!((x.clone() * &y) * &z, x.clone() * (y.clone() * &z));
        prop_assert_eq!(x.clone() * &y, y.clone() * &x);
        prop_assert!((x.clone() - &x).is_zero());
    }

    #[test]
    fn rational_function_field_axioms(f in ratfunc(), g in ratfunc(), h in ratfunc()) {
        prop_assert_eq!((f.clone() + &g) * &h, f.clone() * &h + g.clone() * &h);
        prop_assert_eq!((f.clone() + &g) - &g, f.clone());
        if !f.is_zero() {
            prop_assert!((f.clone() * f.unit_inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn rational_function_congruence(n in poly(), d in nonzero_poly(), k in nonzero_poly()) {
        let vs = poly_vars();
        let f = RatFunc::new(n.clone(), d.clone());
        prop_assert_eq!(f.clone(), RatFunc::new(n * &k, d * &k));
        prop_assert_eq!(f.num().vars(), &vs);
    }

    #[test]
    fn substitution_is_a_homomorphism(x in poly(), y in poly(), a in rational(), b in rational(), c in rational()) {
        let pt = [a, b, c];
        let ev = |p: &MultiPoly| p.eval(&pt, &()).unwrap();
        prop_assert_eq!(ev(&(x.clone() * &y)), ev(&x) * ev(&y));
        prop_assert_eq!(ev(&(x.clone() + &y)), ev(&x) + ev(&y));
    }

    #[test]
    fn matrix_inverse_round_trip(m in matrix(3)) {
        match m.inverse() {
            Ok(inv) => {
                prop_assert!((&m * &inv).is_identity());
                prop_assert!((&inv * &m).is_identity());
            }
            Err(_) => prop_assert!(m.det().is_zero()),
        }
    }

    #[test]
    fn block_embedding_is_a_homomorphism(a in matrix(2), b in matrix(2), pos in 1usize..=3) {
        let lhs = &a.block_embed(pos, 4).unwrap() * &b.block_embed(pos, 4).unwrap();
        prop_assert_eq!(lhs, (&a * &b).block_embed(pos, 4).unwrap());
    }

    #[test]
    fn evaluation_is_a_homomorphism(u in burau_word(), v in burau_word()) {
        let rep = rep_burau(4).unwrap();
        let whole = rep.evaluate(&u.concat(&v)).unwrap();
        prop_assert_eq!(whole, &rep.evaluate(&u).unwrap() * &rep.evaluate(&v).unwrap());
    }

    #[test]
    fn classifier_recovers_family_members(f in local_family(), seed in 0u64..1000) {
        let rep = sample_params(f, 2, seed).unwrap().build().unwrap();
        let out = classify_solution(&rep).unwrap();
        prop_assert!(out.all_matches.contains(&f));
        let first = out.first.unwrap();
        let rebuilt = FamilyParams::new(first.family, 2, first.bindings, ()).unwrap().build().unwrap();
        prop_assert_eq!(rebuilt.images(), rep.images());
    }

    #[test]
    fn perturbed_images_stay_consistent(f in local_family(), seed in 0u64..1000, r in 0usize..2, c in 0usize..2, delta in rational()) {
        prop_assume!(!delta.is_zero());
        let rep = sample_params(f, 2, seed).unwrap().build().unwrap();
        let g = Generator::sigma(1);
        let mut images = rep.images().clone();
        let m = images.get_mut(&g).unwrap();
        let v = m.get(r, c).clone() + &delta;
        m.set(r, c, v);
        // A perturbed image is either rejected or still satisfies every
        // relation; the classifier must then agree with the direct check.
        if let Ok(mutant) = braidrep::catalog::Representation::new(rep.structure(), 2, images) {
            let holds = mutant.check_relations().all_hold();
            let classified = classify_solution(&mutant).unwrap();
            if !holds {
                prop_assert!(classified.first.is_none());
                prop_assert!(!classified.failing_relations.is_empty());
            }
        }
    }
}

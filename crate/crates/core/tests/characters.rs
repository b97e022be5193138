mod common;

use common::sh;
use proptest::prelude::*;
use superwalk_core::characters::{
    character_polynomial, nabla, psi, rela_sides, schur, schur_by_tableaux, schur_formula, schur_weyl_hook, ProbVector,
};
use superwalk_core::combinatorics::{shapes_up_to, weight_of};
use superwalk_core::rational::{int, ratio, Rational};
use superwalk_core::tableau::{enumerate_tableaux, reading};
use superwalk_core::{AlgebraKind, Budget, Error};

fn pv(kind: AlgebraKind, p: &[(i64, i64)]) -> ProbVector {
    ProbVector::new(kind, p.iter().map(|&(a, b)| ratio(a, b)).collect()).unwrap()
}

#[test]
fn product_identity_example() {
    // s^s_(3,1)(x) = s_(2,1)(x) (x_1 + x_2) in two variables
    let x = [ratio(3, 5), ratio(2, 5)];
    let (l, r) = rela_sides(&sh(&[3, 1]), &x, &Budget::default()).unwrap();
    assert_eq!(l, r);
    let s21 = &x[0] * &x[1] * (&x[0] + &x[1]);
    assert_eq!(r, s21 * (&x[0] + &x[1]));
    assert!(rela_sides(&sh(&[3]), &x, &Budget::default()).is_err());
}

#[test]
fn character_polynomials_count_tableaux() {
    let b = Budget::default();
    for kind in [AlgebraKind::empty(3).unwrap(), AlgebraKind::hook(2, 2).unwrap(), AlgebraKind::strict(3).unwrap()] {
        for lambda in shapes_up_to(&kind, 5) {
            let ch = character_polynomial(&kind, &lambda, &b).unwrap();
            let tabs = enumerate_tableaux(&kind, &lambda, &b).unwrap();
            assert_eq!(ch.total_mass() as usize, tabs.len(), "{kind} {lambda}");
            for t in &tabs {
                let w = weight_of(&kind, &reading(t)).unwrap();
                assert!(ch.coefficient(&w) > 0);
            }
        }
    }
}

#[test]
fn hook_product_formula_needs_the_rectangle() {
    let h = AlgebraKind::hook(2, 1).unwrap();
    let x = [ratio(1, 2), ratio(1, 3), ratio(1, 6)];
    assert!(matches!(schur_weyl_hook(&h, &sh(&[1]), &x), Err(Error::FormulaNotApplicable(_))));
    let b = Budget::default();
    for lambda in [sh(&[1, 1]), sh(&[2, 1]), sh(&[3, 2, 1])] {
        assert_eq!(schur_weyl_hook(&h, &lambda, &x).unwrap(), schur_by_tableaux(&h, &lambda, &x, &b).unwrap());
    }
}

#[test]
fn nabla_values() {
    let e2 = pv(AlgebraKind::empty(2).unwrap(), &[(2, 3), (1, 3)]);
    assert_eq!(nabla(&e2).unwrap(), int(2));
    let s2 = pv(AlgebraKind::strict(2).unwrap(), &[(2, 3), (1, 3)]);
    assert_eq!(nabla(&s2).unwrap(), int(3));
    let h11 = pv(AlgebraKind::hook(1, 1).unwrap(), &[(3, 4), (1, 4)]);
    assert_eq!(nabla(&h11).unwrap(), ratio(4, 3));
    let bad = pv(AlgebraKind::empty(2).unwrap(), &[(1, 3), (2, 3)]);
    assert!(matches!(nabla(&bad), Err(Error::ConditionViolated(_))));
    assert_eq!(psi(&sh(&[]), &e2).unwrap(), int(1));
}

#[test]
fn single_box_character_is_one_at_probability_vectors() {
    let p = pv(AlgebraKind::hook(2, 2).unwrap(), &[(2, 5), (1, 5), (3, 10), (1, 10)]);
    assert_eq!(schur(&sh(&[1]), &p).unwrap(), int(1));
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((1i64..40, 1i64..40), 3).prop_map(|v| v.into_iter().map(|(a, b)| ratio(a, b)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn routes_agree_at_random_points(x in point(), size in 0usize..5) {
        let b = Budget::default();
        prop_assume!(x[0] != x[1] && x[1] != x[2] && x[0] != x[2]);
        for kind in [AlgebraKind::empty(3).unwrap(), AlgebraKind::strict(3).unwrap(), AlgebraKind::hook(1, 2).unwrap(), AlgebraKind::hook(2, 1).unwrap()] {
            for lambda in superwalk_core::combinatorics::shapes_of_size(&kind, size) {
                let a = schur_by_tableaux(&kind, &lambda, &x, &b).unwrap();
                let f = schur_formula(&kind, &lambda, &x).unwrap();
                let c = character_polynomial(&kind, &lambda, &b).unwrap().eval(&x).unwrap();
                prop_assert_eq!(&a, &f);
                prop_assert_eq!(&a, &c);
            }
        }
    }
}

mod common;

use common::sh;
use num::BigUint;
use superwalk_core::characters::character_polynomial;
use superwalk_core::combinatorics::{shapes_up_to, weight_of, Weight};
use superwalk_core::multiplicities::{
    decompose_product, eval_decomposition, f_count, f_skew, kostka, lr_count, multiplicity, verify_m_le_k, Decomposer,
};
use superwalk_core::rational::ratio;
use superwalk_core::tableau::{enumerate_standard, enumerate_tableaux, reading};
use superwalk_core::{AlgebraKind, Budget};

#[test]
fn classical_littlewood_richardson_values() {
    let b = Budget::default();
    // s_21 s_21 = s_42 + s_411 + s_33 + 2 s_321 + s_3111 + s_222 + s_2211
    let e6 = AlgebraKind::empty(6).unwrap();
    let d = decompose_product(&e6, &sh(&[2, 1]), &sh(&[2, 1]), &b).unwrap();
    let want = [
        (vec![4, 2], 1),
        (vec![4, 1, 1], 1),
        (vec![3, 3], 1),
        (vec![3, 2, 1], 2),
        (vec![3, 1, 1, 1], 1),
        (vec![2, 2, 2], 1),
        (vec![2, 2, 1, 1], 1),
    ];
    assert_eq!(d.len(), want.len());
    for (l, c) in want {
        assert_eq!(d[&sh(&l)], c);
    }
    // the LR rule for gl(m,n) with a deep barred block is the classical one
    let h = AlgebraKind::hook(6, 1).unwrap();
    assert_eq!(lr_count(&h, &sh(&[3, 2, 1]), &sh(&[2, 1]), &sh(&[2, 1])).unwrap(), 2);
    assert_eq!(lr_count(&h, &sh(&[2, 2, 2]), &sh(&[2, 1]), &sh(&[2, 1])).unwrap(), 1);
    assert_eq!(lr_count(&h, &sh(&[6]), &sh(&[2, 1]), &sh(&[2, 1])).unwrap(), 0);
}

#[test]
fn kostka_counts_tableaux_of_each_weight() {
    let b = Budget::default();
    let kind = AlgebraKind::hook(1, 2).unwrap();
    for lambda in shapes_up_to(&kind, 5) {
        let tabs = enumerate_tableaux(&kind, &lambda, &b).unwrap();
        for t in &tabs {
            let w = weight_of(&kind, &reading(t)).unwrap();
            let n = tabs.iter().filter(|u| weight_of(&kind, &reading(u)).unwrap() == w).count();
            assert_eq!(kostka(&kind, &lambda, &w, &b).unwrap() as usize, n);
        }
    }
    assert_eq!(kostka(&kind, &sh(&[1]), &Weight(vec![-1, 1, 1]), &b).unwrap(), 0);
}

#[test]
fn decompositions_reproduce_products() {
    let b = Budget::default();
    let x = [ratio(1, 2), ratio(1, 3), ratio(1, 7)];
    for kind in [AlgebraKind::empty(3).unwrap(), AlgebraKind::hook(1, 2).unwrap(), AlgebraKind::strict(3).unwrap()] {
        let shapes = shapes_up_to(&kind, 3);
        for k in &shapes {
            for m in &shapes {
                let d = decompose_product(&kind, k, m, &b).unwrap();
                let lhs = character_polynomial(&kind, k, &b).unwrap().eval(&x).unwrap()
                    * character_polynomial(&kind, m, &b).unwrap().eval(&x).unwrap();
                assert_eq!(eval_decomposition(&kind, &d, &x, &b).unwrap(), lhs, "{kind} {k} x {m}");
            }
        }
    }
}

#[test]
fn skew_counts_match_enumeration() {
    let kind = AlgebraKind::strict(3).unwrap();
    let shapes = shapes_up_to(&kind, 6);
    for l in &shapes {
        for m in &shapes {
            let n = enumerate_standard(&kind, l, m).map(|v| v.len()).unwrap_or(0);
            assert_eq!(f_skew(&kind, l, m).unwrap(), BigUint::from(n), "{l}/{m}");
        }
    }
}

#[test]
fn tensor_power_dimension_identity() {
    // N^l = sum over shapes of f_lambda times the number of tableaux
    let b = Budget::default();
    let kind = AlgebraKind::hook(2, 2).unwrap();
    let mut dec = Decomposer::new(kind, b);
    for lambda in shapes_up_to(&kind, 4) {
        let total = dec.character(&lambda).unwrap().total_mass();
        assert!(total > 0);
        assert!(f_count(&kind, &lambda).unwrap() > BigUint::from(0u8));
    }
    assert_eq!(multiplicity(&kind, &sh(&[2]), &sh(&[1]), &sh(&[1]), &b).unwrap(), 1);
    assert!(verify_m_le_k(&kind, &sh(&[2, 1]), &sh(&[1]), &sh(&[1, 1]), &b).unwrap());
}

mod common;

use common::sh;
use proptest::prelude::*;
use superwalk_core::characters::{schur, ProbVector};
use superwalk_core::combinatorics::weight_of;
use superwalk_core::insertion::{insertion_trace, p_tableau, pitman, q_tableau, rsk, rsk_inverse_empty, words_with_recording};
use superwalk_core::rational::{ratio, Rational};
use superwalk_core::tableau::{enumerate_standard, enumerate_tableaux, is_valid_tableau, reading};
use superwalk_core::verify::rsk_bijection;
use superwalk_core::combinatorics::shapes_up_to;
use superwalk_core::{AlgebraKind, Budget, Letter, Shape};

fn kinds() -> Vec<AlgebraKind> {
    vec![AlgebraKind::empty(3).unwrap(), AlgebraKind::hook(1, 2).unwrap(), AlgebraKind::strict(3).unwrap()]
}

fn point(kind: &AlgebraKind) -> ProbVector {
    let raw: Vec<i64> = (0..kind.dim() as i64).map(|c| 2 * (kind.dim() as i64 - c) + 1).collect();
    let total: i64 = raw.iter().sum();
    ProbVector::new(*kind, raw.iter().map(|&v| ratio(v, total)).collect()).unwrap()
}

#[test]
fn word_counts_at_length_four() {
    // 81 words for the empty kind with n = 3
    let r = rsk_bijection(&AlgebraKind::empty(3).unwrap(), 4, &Budget::default()).unwrap();
    assert!(r.passed(), "{:?}", r.failures);
    for kind in kinds() {
        let r = rsk_bijection(&kind, 4, &Budget::default()).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }
}

#[test]
fn recording_classes_sum_to_characters() {
    let b = Budget::default();
    for kind in kinds() {
        let p = point(&kind);
        for lambda in shapes_up_to(&kind, 4) {
            let want = schur(&lambda, &p).unwrap();
            let tabs = enumerate_tableaux(&kind, &lambda, &b).unwrap();
            for q in enumerate_standard(&kind, &lambda, &Shape::empty()).unwrap() {
                let class = words_with_recording(&kind, &q, &b).unwrap();
                let got: Rational = class
                    .iter()
                    .map(|w| w.iter().map(|&x| p.get(x).unwrap().clone()).product::<Rational>())
                    .sum();
                assert_eq!(got, want, "{kind} {lambda}");
                let mut images: Vec<_> = class.iter().map(|w| p_tableau(&kind, w).unwrap()).collect();
                images.sort();
                images.dedup();
                assert_eq!(images.len(), tabs.len(), "{kind} {lambda}");
            }
        }
    }
}

#[test]
fn single_box_recording_class_is_the_alphabet() {
    let b = Budget::default();
    for kind in kinds() {
        let q = &enumerate_standard(&kind, &sh(&[1]), &Shape::empty()).unwrap()[0];
        assert_eq!(words_with_recording(&kind, q, &b).unwrap().concat(), kind.alphabet());
    }
}

fn word_strategy() -> impl Strategy<Value = (AlgebraKind, Vec<Letter>)> {
    let kinds = prop_oneof![
        (1usize..5).prop_map(|n| AlgebraKind::empty(n).unwrap()),
        (1usize..4, 1usize..4).prop_map(|(m, n)| AlgebraKind::hook(m, n).unwrap()),
        (1usize..5).prop_map(|n| AlgebraKind::strict(n).unwrap()),
    ];
    kinds.prop_flat_map(|k| {
        let alpha = k.alphabet();
        (Just(k), prop::collection::vec(prop::sample::select(alpha), 0..14))
    })
}

proptest! {
    #[test]
    fn insertion_invariants((kind, w) in word_strategy()) {
        let trace = insertion_trace(&kind, &w).unwrap();
        for (i, t) in trace.iter().enumerate() {
            prop_assert!(is_valid_tableau(t));
            prop_assert_eq!(t.size(), i + 1);
        }
        let p = p_tableau(&kind, &w).unwrap();
        prop_assert_eq!(weight_of(&kind, &reading(&p)).unwrap(), weight_of(&kind, &w).unwrap());
        let chain = pitman(&kind, &w).unwrap();
        let q = q_tableau(&kind, &w).unwrap();
        prop_assert_eq!(q.chain(), &chain[..]);
        for pair in chain.windows(2) {
            prop_assert_eq!(pair[1].size(), pair[0].size() + 1);
            prop_assert!(pair[1].contains(&pair[0]));
        }
        if matches!(kind, AlgebraKind::Empty { .. }) {
            prop_assert_eq!(rsk_inverse_empty(&rsk(&kind, &w).unwrap()).unwrap(), w);
        }
    }

    #[test]
    fn strict_shape_shifts_empty_shape_in_dimension_two(w in prop::collection::vec(1i32..=2, 1..30)) {
        let w: Vec<Letter> = w.into_iter().map(Letter).collect();
        let e = AlgebraKind::empty(2).unwrap();
        let s = AlgebraKind::strict(2).unwrap();
        let lam = pitman(&e, &w[..w.len() - 1]).unwrap().pop().unwrap_or_default();
        let got = pitman(&s, &w).unwrap().pop().unwrap();
        prop_assert_eq!(got, Shape::new(&[lam.part(0) + 1, lam.part(1)]).unwrap());
    }
}

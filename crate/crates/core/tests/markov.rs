mod common;

use common::sh;
use superwalk_core::characters::ProbVector;
use superwalk_core::combinatorics::{pi_weight, shapes_up_to};
use superwalk_core::markov::{
    kernel_path_law, pi_restricted, pi_shape, pitman_path_law, stay_probability, stay_probability_sequence,
    GreenTable, TransitionKernel,
};
use superwalk_core::multiplicities::f_count;
use superwalk_core::rational::{int, ratio, Rational};
use superwalk_core::{AlgebraKind, Budget, Error, Shape};

fn pv(kind: AlgebraKind, p: &[(i64, i64)]) -> ProbVector {
    ProbVector::new(kind, p.iter().map(|&(a, b)| ratio(a, b)).collect()).unwrap()
}

fn points() -> Vec<ProbVector> {
    vec![
        pv(AlgebraKind::empty(3).unwrap(), &[(1, 2), (1, 3), (1, 6)]),
        pv(AlgebraKind::hook(2, 2).unwrap(), &[(3, 10), (1, 5), (3, 10), (1, 5)]),
        pv(AlgebraKind::hook(1, 2).unwrap(), &[(1, 2), (1, 3), (1, 6)]),
        pv(AlgebraKind::strict(3).unwrap(), &[(1, 2), (1, 3), (1, 6)]),
    ]
}

#[test]
fn shape_kernel_rows_are_stochastic() {
    for p in points() {
        let k = pi_shape(&p);
        for mu in shapes_up_to(p.kind(), 5) {
            let row = k.row(&mu).unwrap();
            assert!(row.iter().all(|(_, q)| *q > int(0)));
            assert_eq!(k.row_sum(&mu).unwrap(), int(1), "{} {mu}", p.kind());
        }
    }
}

#[test]
fn pitman_paths_have_the_kernel_law() {
    let b = Budget::default();
    for p in points() {
        let words = pitman_path_law(&p, 4, &b).unwrap();
        let chain = kernel_path_law(&pi_shape(&p), &Shape::empty(), 4).unwrap();
        assert_eq!(words, chain, "{}", p.kind());
    }
}

#[test]
fn green_function_counts_chains() {
    for p in points() {
        let mut g = GreenTable::new(&p);
        for lambda in shapes_up_to(p.kind(), 6) {
            let w = pi_weight(p.kind(), &lambda).unwrap();
            let want = Rational::from_integer(f_count(p.kind(), &lambda).unwrap().into()) * p.monomial(&w).unwrap();
            assert_eq!(g.green(&Shape::empty(), &lambda).unwrap(), want);
        }
    }
}

#[test]
fn martin_kernel_expansion() {
    let b = Budget::default();
    let p = pv(AlgebraKind::empty(2).unwrap(), &[(2, 3), (1, 3)]);
    let mut g = GreenTable::new(&p);
    for a in 15..=30 {
        let lambda = superwalk_core::simulate::drift_shape(&p, a).unwrap();
        for mu in [sh(&[1]), sh(&[2]), sh(&[1, 1]), sh(&[3, 1])] {
            let k = g.martin_kernel(&mu, &lambda).unwrap();
            assert_eq!(k, g.martin_kernel_expanded(&mu, &lambda, &b).unwrap(), "{mu} {lambda}");
        }
    }
    let mut small = GreenTable::with_limit(&p, 3);
    assert!(matches!(small.green(&Shape::empty(), &sh(&[3, 1])), Err(Error::Budget { .. })));
}

#[test]
fn restricted_walk_leaks_mass() {
    let p = pv(AlgebraKind::empty(2).unwrap(), &[(2, 3), (1, 3)]);
    let k = pi_restricted(&p);
    assert!(!k.is_stochastic());
    assert_eq!(k.row_sum(&sh(&[1, 1])).unwrap(), ratio(2, 3));
    assert_eq!(k.row_sum(&sh(&[2, 1])).unwrap(), int(1));
}

#[test]
fn truncated_stay_probabilities_decrease_to_the_limit() {
    for p in [
        pv(AlgebraKind::empty(2).unwrap(), &[(2, 3), (1, 3)]),
        pv(AlgebraKind::strict(2).unwrap(), &[(3, 4), (1, 4)]),
        pv(AlgebraKind::hook(1, 1).unwrap(), &[(3, 5), (2, 5)]),
    ] {
        let limit = stay_probability(&Shape::empty(), &p).unwrap();
        let seq = stay_probability_sequence(&Shape::empty(), &p, 40).unwrap();
        assert!(seq.windows(2).all(|w| w[0] >= w[1]));
        assert!(seq.iter().all(|s| *s >= limit));
    }
    // the hook kind only needs the first letter to be barred
    let h = pv(AlgebraKind::hook(1, 1).unwrap(), &[(3, 5), (2, 5)]);
    let seq = stay_probability_sequence(&Shape::empty(), &h, 10).unwrap();
    assert!(seq[1..].iter().all(|s| *s == ratio(3, 5)));
}

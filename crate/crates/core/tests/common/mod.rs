//! Worked examples shared by the golden and acceptance tests.
#![allow(dead_code)]

use superwalk_core::combinatorics::parse_word;
use superwalk_core::{AlgebraKind, Shape, Word};

pub fn sh(parts: &[usize]) -> Shape {
    Shape::new(parts).unwrap()
}

pub fn shapes(rows: &[&[usize]]) -> Vec<Shape> {
    rows.iter().map(|r| sh(r)).collect()
}

pub fn word(kind: &AlgebraKind, s: &str) -> Word {
    parse_word(kind, s).unwrap()
}

pub const EX_A_WORD: &str = "232143";
pub const EX_A_P: &[&[i32]] = &[&[1, 2, 2], &[3, 3], &[4]];
pub const EX_A_Q: &[&[usize]] = &[&[1, 3, 4], &[2, 6], &[5]];

/// (m, n) = (2, 3); barred letters are negative.
pub const EX_H_WORD: &str = "-23-2-132-12";
pub const EX_H_TRACE: &[&[&[i32]]] = &[
    &[&[-2]],
    &[&[-2], &[3]],
    &[&[-2, -2], &[3]],
    &[&[-2, -2], &[-1, 3]],
    &[&[-2, -2], &[-1, 3], &[3]],
    &[&[-2, -2], &[-1, 3], &[2, 3]],
    &[&[-2, -2, 3], &[-1, -1], &[2, 3]],
    &[&[-2, -2, 3], &[-1, -1], &[2, 3], &[2]],
];
pub const EX_H_Q: &[&[usize]] = &[&[1, 3, 7], &[2, 4], &[5, 6], &[8]];

/// Uses the letter 5, so the alphabet needs n = 5.
pub const EX_S_WORD: &str = "232145331";
pub const EX_S_TRACE: &[&[&[i32]]] = &[
    &[&[2]],
    &[&[2, 3]],
    &[&[3, 2], &[2]],
    &[&[3, 2, 1], &[2]],
    &[&[3, 2, 1, 4], &[2]],
    &[&[3, 2, 1, 4, 5], &[2]],
    &[&[4, 2, 1, 3, 5], &[2, 3]],
    &[&[4, 3, 1, 3, 5], &[3, 2], &[2]],
    &[&[4, 3, 3, 1, 5], &[3, 2, 1], &[2]],
];

/// Shapes along the prefixes of `EX_S_WORD` for the empty and strict kinds.
pub const EX_S_EMPTY_SHAPES: &[&[usize]] = &[
    &[1],
    &[1, 1],
    &[2, 1],
    &[3, 1],
    &[3, 1, 1],
    &[3, 1, 1, 1],
    &[3, 2, 1, 1],
    &[3, 3, 1, 1],
    &[4, 3, 1, 1],
];
pub const EX_S_STRICT_SHAPES: &[&[usize]] =
    &[&[1], &[2], &[2, 1], &[3, 1], &[4, 1], &[5, 1], &[5, 2], &[5, 2, 1], &[5, 3, 1]];

pub const PITMAN_WORD: &str = "1121231212";
pub const PITMAN_EMPTY: &[&[usize]] = &[
    &[1],
    &[2],
    &[2, 1],
    &[3, 1],
    &[3, 2],
    &[3, 2, 1],
    &[4, 2, 1],
    &[4, 3, 1],
    &[5, 3, 1],
    &[5, 4, 1],
];
pub const PITMAN_STRICT: &[&[usize]] =
    &[&[1], &[2], &[3], &[3, 1], &[4, 1], &[5, 1], &[5, 2], &[5, 3], &[5, 3, 1], &[6, 3, 1]];

/// LR example at m = n = 3.
pub const LR_LAMBDA: &[usize] = &[3, 3, 3, 2, 2, 2];
pub const LR_KAPPA: &[usize] = &[2];
pub const LR_MU: &[usize] = &[3, 3, 2, 2, 2, 1];
pub const LR_READING: &str = "1211322456345";
pub const LR_THETA: &[&[i32]] = &[&[-3, -2, -2], &[-2, -1, -1], &[-1, 1], &[1, 2], &[1, 2], &[2]];

pub fn rows_of(t: &[&[i32]]) -> Vec<Vec<i32>> {
    t.iter().map(|r| r.to_vec()).collect()
}

pub fn rows_usize(t: &[&[usize]]) -> Vec<Vec<usize>> {
    t.iter().map(|r| r.to_vec()).collect()
}

pub const EX_S_Q: &[&[usize]] = &[&[1, 2, 4, 5, 6], &[3, 7, 9], &[8]];

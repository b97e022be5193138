//! Alphabets, words, weights and the three families of diagrams.
//!
//! Letters are stored as signed integers: the unbarred letter `j` is `j`,
//! the barred letter `ī` is `-i`. The integer order then coincides with the
//! alphabet order `m̄ < … < 1̄ < 1 < … < n`.

use std::fmt;
use std::ops::{Add, Sub};

use num::{BigRational, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AlgebraKind {
    Empty { n: usize },
    Hook { m: usize, n: usize },
    Strict { n: usize },
}

impl AlgebraKind {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(invalid("rank n must be positive"));
        }
        Ok(AlgebraKind::Empty { n })
    }

    pub fn hook(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(invalid("ranks m and n must be positive"));
        }
        Ok(AlgebraKind::Hook { m, n })
    }

    pub fn strict(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(invalid("rank n must be positive"));
        }
        Ok(AlgebraKind::Strict { n })
    }

    pub fn n(&self) -> usize {
        match *self {
            AlgebraKind::Empty { n } | AlgebraKind::Strict { n } | AlgebraKind::Hook { n, .. } => n,
        }
    }

    /// Number of barred letters; zero unless the kind is `Hook`.
    pub fn m(&self) -> usize {
        match *self {
            AlgebraKind::Hook { m, .. } => m,
            _ => 0,
        }
    }

    /// Alphabet size N.
    pub fn dim(&self) -> usize {
        self.m() + self.n()
    }

    pub fn name(&self) -> &'static str {
        match self {
            AlgebraKind::Empty { .. } => "empty",
            AlgebraKind::Hook { .. } => "hook",
            AlgebraKind::Strict { .. } => "strict",
        }
    }

    pub fn is_hook(&self) -> bool {
        matches!(self, AlgebraKind::Hook { .. })
    }

    /// The alphabet in increasing order.
    pub fn alphabet(&self) -> Vec<Letter> {
        (0..self.dim()).map(|c| self.letter_at(c)).collect()
    }

    pub fn contains(&self, x: Letter) -> bool {
        self.index_of(x).is_some()
    }

    /// Coordinate index of a letter in the canonical weight order.
    pub fn index_of(&self, x: Letter) -> Option<usize> {
        let (m, n) = (self.m() as i32, self.n() as i32);
        let v = x.0;
        if v >= 1 && v <= n {
            Some((m + v - 1) as usize)
        } else if v <= -1 && v >= -m {
            Some((m + v) as usize)
        } else {
            None
        }
    }

    /// Inverse of [`index_of`](Self::index_of).
    pub fn letter_at(&self, c: usize) -> Letter {
        let m = self.m();
        assert!(c < self.dim(), "coordinate {c} out of range");
        if c < m {
            Letter::barred(m - c)
        } else {
            Letter::unbarred(c - m + 1)
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::Empty { n } => write!(f, "empty(n={n})"),
            AlgebraKind::Hook { m, n } => write!(f, "hook(m={m},n={n})"),
            AlgebraKind::Strict { n } => write!(f, "strict(n={n})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(pub i32);

impl Letter {
    pub fn unbarred(j: usize) -> Letter {
        Letter(j as i32)
    }

    pub fn barred(i: usize) -> Letter {
        Letter(-(i as i32))
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    pub fn value(self) -> i32 {
        self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub type Word = Vec<Letter>;

/// Parses a word such as `232143`, `-23-2-1` or `10,2,-1`.
///
/// The compact form reads one digit per letter with an optional `-` prefix
/// for barred letters; a comma or whitespace anywhere switches to the
/// separated form.
pub fn parse_word(kind: &AlgebraKind, s: &str) -> Result<Word> {
    let s = s.trim();
    let mut out = Vec::new();
    if s.contains(',') || s.contains(char::is_whitespace) {
        for tok in s.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let v: i32 = tok
                .parse()
                .map_err(|_| invalid(format!("bad letter token {tok:?}")))?;
            out.push(Letter(v));
        }
    } else {
        let mut chars = s.chars();
        while let Some(c) = chars.next() {
            let (neg, d) = if c == '-' {
                (true, chars.next().ok_or_else(|| invalid("dangling '-' in word"))?)
            } else {
                (false, c)
            };
            let v = d
                .to_digit(10)
                .ok_or_else(|| invalid(format!("bad character {d:?} in word")))?
                as i32;
            out.push(Letter(if neg { -v } else { v }));
        }
    }
    for &x in &out {
        if !kind.contains(x) {
            return Err(invalid(format!("letter {x} is not in the alphabet of {kind}")));
        }
    }
    Ok(out)
}

pub fn format_word(w: &[Letter]) -> String {
    if w.iter().all(|x| x.0.abs() <= 9) {
        w.iter().map(|x| x.to_string()).collect()
    } else {
        w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Integer vector in the canonical coordinate order (barred `m̄ … 1̄` first).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(dim: usize) -> Weight {
        Weight(vec![0; dim])
    }

    pub fn unit(dim: usize, c: usize) -> Weight {
        let mut v = vec![0; dim];
        v[c] = 1;
        Weight(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "weight dimension mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "weight dimension mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

pub fn weight_of(kind: &AlgebraKind, w: &[Letter]) -> Result<Weight> {
    let mut v = vec![0i64; kind.dim()];
    for &x in w {
        let c = kind
            .index_of(x)
            .ok_or_else(|| invalid(format!("letter {x} is not in the alphabet of {kind}")))?;
        v[c] += 1;
    }
    Ok(Weight(v))
}

/// A partition with trailing zeros stripped. Validity for a particular kind
/// is checked separately with [`is_valid_shape`].
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(parts: &[usize]) -> Result<Shape> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Shape::normalized(parts.to_vec()))
    }

    pub fn empty() -> Shape {
        Shape(Vec::new())
    }

    fn normalized(mut parts: Vec<usize>) -> Shape {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Shape(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts, d(λ).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Shape {
        let w = self.part(0);
        Shape((0..w).map(|j| self.0.iter().filter(|&&r| r > j).count()).collect())
    }

    pub fn contains(&self, other: &Shape) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Adds a box at the end of row `i`, if the result is a partition.
    pub fn with_box_in_row(&self, i: usize) -> Option<Shape> {
        if i > self.len() || (i > 0 && self.part(i - 1) == self.part(i)) {
            return None;
        }
        let mut p = self.0.clone();
        if i == p.len() {
            p.push(1);
        } else {
            p[i] += 1;
        }
        Some(Shape(p))
    }

    /// Removes the last box of row `i`, if the result is a partition.
    pub fn without_box_in_row(&self, i: usize) -> Option<Shape> {
        if i >= self.len() || self.part(i) == self.part(i + 1) {
            return None;
        }
        let mut p = self.0.clone();
        p[i] -= 1;
        Some(Shape::normalized(p))
    }

    /// The row in which `self` and `bigger` differ by a single box.
    pub fn added_row(&self, bigger: &Shape) -> Option<usize> {
        if bigger.size() != self.size() + 1 || !bigger.contains(self) {
            return None;
        }
        (0..bigger.len()).find(|&i| bigger.part(i) != self.part(i))
    }
}

impl TryFrom<Vec<usize>> for Shape {
    type Error = crate::error::Error;
    fn try_from(v: Vec<usize>) -> Result<Shape> {
        Shape::new(&v)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(s: Shape) -> Vec<usize> {
        s.0
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parses `"3,1"`, `"(3,1)"` or `""` into a shape.
pub fn parse_shape(s: &str) -> Result<Shape> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let mut parts = Vec::new();
    for tok in t.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        parts.push(
            tok.parse::<usize>()
                .map_err(|_| invalid(format!("bad part {tok:?} in shape")))?,
        );
    }
    Shape::new(&parts)
}

pub fn is_valid_shape(kind: &AlgebraKind, parts: &[usize]) -> bool {
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return false;
    }
    let nz: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
    match *kind {
        AlgebraKind::Empty { n } => nz.len() <= n,
        AlgebraKind::Strict { n } => nz.len() <= n && nz.windows(2).all(|w| w[0] > w[1]),
        AlgebraKind::Hook { m, n } => nz.iter().skip(m).all(|&p| p <= n),
    }
}

pub(crate) fn check_shape(kind: &AlgebraKind, lambda: &Shape) -> Result<()> {
    if is_valid_shape(kind, lambda.parts()) {
        Ok(())
    } else {
        Err(invalid(format!("{lambda} is not a valid shape for {kind}")))
    }
}

/// (λ^(1), λ^(2)): the first m rows, and the conjugate of the rows below.
pub fn hook_split(kind: &AlgebraKind, lambda: &Shape) -> Result<(Shape, Shape)> {
    let AlgebraKind::Hook { m, .. } = *kind else {
        return Err(invalid("hook_split requires the hook kind"));
    };
    check_shape(kind, lambda)?;
    let top = Shape::normalized(lambda.parts().iter().take(m).copied().collect());
    let rest = Shape::normalized(lambda.parts().iter().skip(m).copied().collect());
    Ok((top, rest.conjugate()))
}

/// Inverse of [`hook_split`]: stacks λ^(1) over the conjugate of λ^(2).
pub fn hook_join(lambda1: &Shape, lambda2: &Shape) -> Shape {
    let mut parts = lambda1.parts().to_vec();
    parts.extend_from_slice(lambda2.conjugate().parts());
    Shape::normalized(parts)
}

/// The dominant weight attached to a shape.
pub fn pi_weight(kind: &AlgebraKind, lambda: &Shape) -> Result<Weight> {
    check_shape(kind, lambda)?;
    let v = match *kind {
        AlgebraKind::Hook { m, n } => {
            let (a, b) = hook_split(kind, lambda)?;
            (0..m)
                .map(|i| a.part(i) as i64)
                .chain((0..n).map(|j| b.part(j) as i64))
                .collect()
        }
        _ => (0..kind.n()).map(|i| lambda.part(i) as i64).collect(),
    };
    Ok(Weight(v))
}

/// Inverse of [`pi_weight`]; fails unless the weight is dominant for the kind.
pub fn shape_from_weight(kind: &AlgebraKind, w: &Weight) -> Result<Shape> {
    if w.len() != kind.dim() {
        return Err(invalid(format!(
            "weight has {} coordinates, {kind} needs {}",
            w.len(),
            kind.dim()
        )));
    }
    let bad = || invalid(format!("weight {:?} is not the weight of a {kind} shape", w.0));
    if !w.is_nonnegative() {
        return Err(bad());
    }
    let c: Vec<usize> = w.0.iter().map(|&x| x as usize).collect();
    let lambda = match *kind {
        AlgebraKind::Hook { m, .. } => {
            let (a, b) = c.split_at(m);
            if a.windows(2).any(|x| x[0] < x[1]) || b.windows(2).any(|x| x[0] < x[1]) {
                return Err(bad());
            }
            let nb = b.iter().filter(|&&x| x > 0).count();
            if nb > a[m - 1] {
                return Err(bad());
            }
            hook_join(&Shape::normalized(a.to_vec()), &Shape::normalized(b.to_vec()))
        }
        _ => {
            if c.windows(2).any(|x| x[0] < x[1]) {
                return Err(bad());
            }
            Shape::normalized(c)
        }
    };
    if !is_valid_shape(kind, lambda.parts()) {
        return Err(bad());
    }
    Ok(lambda)
}

/// Valid shapes obtained by adding one box, ordered by the weight
/// coordinate of the added box.
pub fn successors(kind: &AlgebraKind, lambda: &Shape) -> Vec<Shape> {
    successor_steps(kind, lambda).into_iter().map(|(_, s)| s).collect()
}

/// Like [`successors`], paired with the coordinate index of the added step.
pub fn successor_steps(kind: &AlgebraKind, lambda: &Shape) -> Vec<(usize, Shape)> {
    let Ok(base) = pi_weight(kind, lambda) else {
        return Vec::new();
    };
    (0..kind.dim())
        .filter_map(|c| {
            let w = &base + &Weight::unit(kind.dim(), c);
            shape_from_weight(kind, &w).ok().map(|s| (c, s))
        })
        .collect()
}

/// Valid shapes obtained by removing one box, ordered by coordinate.
pub fn predecessor_steps(kind: &AlgebraKind, lambda: &Shape) -> Vec<(usize, Shape)> {
    let Ok(base) = pi_weight(kind, lambda) else {
        return Vec::new();
    };
    (0..kind.dim())
        .filter_map(|c| {
            if base.0[c] == 0 {
                return None;
            }
            let w = &base - &Weight::unit(kind.dim(), c);
            shape_from_weight(kind, &w).ok().map(|s| (c, s))
        })
        .collect()
}

pub fn predecessors(kind: &AlgebraKind, lambda: &Shape) -> Vec<Shape> {
    predecessor_steps(kind, lambda).into_iter().map(|(_, s)| s).collect()
}

/// All partitions of `k`, in decreasing lexicographic order.
pub fn partitions(k: usize) -> Vec<Shape> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if rem == 0 {
            out.push(Shape(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// Valid shapes of size `k` for the kind, in decreasing lexicographic order.
pub fn shapes_of_size(kind: &AlgebraKind, k: usize) -> Vec<Shape> {
    partitions(k)
        .into_iter()
        .filter(|s| is_valid_shape(kind, s.parts()))
        .collect()
}

/// Valid shapes of size at most `k`, graded by size.
pub fn shapes_up_to(kind: &AlgebraKind, k: usize) -> Vec<Shape> {
    (0..=k).flat_map(|j| shapes_of_size(kind, j)).collect()
}

/// Membership of a rational point in the cone C^◇ or its interior.
pub fn in_semigroup(kind: &AlgebraKind, x: &[BigRational], interior: bool) -> Result<bool> {
    if x.len() != kind.dim() {
        return Err(invalid(format!(
            "point has {} coordinates, {kind} needs {}",
            x.len(),
            kind.dim()
        )));
    }
    let zero = BigRational::zero();
    let chain_ok = |v: &[BigRational]| {
        if interior {
            v.windows(2).all(|w| w[0] > w[1]) && v.last().is_none_or(|l| l.is_positive())
        } else {
            v.windows(2).all(|w| w[0] >= w[1]) && v.iter().all(|c| !c.is_negative())
        }
    };
    let ok = match *kind {
        AlgebraKind::Empty { .. } => chain_ok(x),
        AlgebraKind::Strict { .. } => {
            if interior {
                chain_ok(x)
            } else {
                x.iter().all(|c| !c.is_negative())
                    && x.windows(2).all(|w| w[0] >= w[1] && (w[0] > w[1] || w[0] == zero))
            }
        }
        AlgebraKind::Hook { m, n } => {
            let (a, b) = x.split_at(m);
            if !chain_ok(a) || !chain_ok(b) {
                false
            } else if interior {
                a[m - 1] > BigRational::from_integer((n as i64).into())
            } else {
                // every unbarred coordinate with index i > x_{1̄} must vanish
                b.iter().enumerate().all(|(j, bj)| {
                    let i = BigRational::from_integer(((j + 1) as i64).into());
                    i <= a[m - 1] || bj.is_zero()
                })
            }
        }
    };
    Ok(ok)
}

/// Ordinary or shifted skew diagram λ/μ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Shape,
    pub inner: Shape,
}

impl SkewShape {
    pub fn new(outer: Shape, inner: Shape) -> Result<SkewShape> {
        if !outer.contains(&inner) {
            return Err(invalid(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells `(row, column)`, 0-based, row by row. With `shifted`, row `i`
    /// starts at column `i`.
    pub fn cells(&self, shifted: bool) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.outer.len() {
            let off = if shifted { i } else { 0 };
            for j in self.inner.part(i)..self.outer.part(i) {
                out.push((i, j + off));
            }
        }
        out
    }
}

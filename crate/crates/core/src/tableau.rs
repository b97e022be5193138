//! Semistandard tableaux of the three kinds and standard tableaux as shape chains.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{check_shape, is_valid_shape, successors, AlgebraKind, Letter, Shape, Word};
use crate::error::{invalid, Error, Result};
use crate::Budget;

/// Rows are stored top to bottom, each read left to right. For the strict
/// kind row `i` sits on the shifted diagram, starting at column `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    kind: AlgebraKind,
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn empty(kind: AlgebraKind) -> Tableau {
        Tableau { kind, rows: Vec::new() }
    }

    /// Builds a tableau and checks every kind-specific condition.
    pub fn new(kind: AlgebraKind, rows: Vec<Vec<Letter>>) -> Result<Tableau> {
        let t = Tableau::from_rows_unchecked(kind, rows);
        if !is_valid_tableau(&t) {
            return Err(invalid(format!("rows {:?} do not form a {kind} tableau", t.rows_i32())));
        }
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(kind: AlgebraKind, mut rows: Vec<Vec<Letter>>) -> Tableau {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        Tableau { kind, rows }
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<Letter>> {
        &mut self.rows
    }

    pub fn rows_i32(&self) -> Vec<Vec<i32>> {
        self.rows.iter().map(|r| r.iter().map(|x| x.0).collect()).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Shape {
        let lens: Vec<usize> = self.rows.iter().map(Vec::len).collect();
        Shape::new(&lens).unwrap_or_else(|_| panic!("row lengths {lens:?} are not a partition"))
    }

    /// Column `c` read top to bottom (unshifted columns).
    pub(crate) fn column(&self, c: usize) -> Vec<Letter> {
        self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "{}", rows.join(""))
    }
}

/// Hook word test: `x_1 ≥ … ≥ x_k < x_{k+1} < … < x_l`, nonempty.
pub fn is_hook_word(w: &[Letter]) -> bool {
    if w.is_empty() {
        return false;
    }
    let k = decreasing_prefix_len(w);
    w[k - 1..].windows(2).all(|p| p[0] < p[1])
}

/// Length of the maximal weakly decreasing prefix.
pub(crate) fn decreasing_prefix_len(w: &[Letter]) -> usize {
    if w.is_empty() {
        return 0;
    }
    1 + w.windows(2).take_while(|p| p[0] >= p[1]).count()
}

/// Length of the longest hook subword (not necessarily contiguous).
pub fn longest_hook_subword(w: &[Letter]) -> usize {
    let l = w.len();
    // dec[i]: longest weakly decreasing subword ending at i
    // inc[i]: longest hook subword ending at i with i in the increasing part
    let mut dec = vec![1usize; l];
    let mut inc = vec![0usize; l];
    let mut best = 0;
    for i in 0..l {
        for j in 0..i {
            if w[j] >= w[i] {
                dec[i] = dec[i].max(dec[j] + 1);
            }
            if w[j] < w[i] {
                inc[i] = inc[i].max(dec[j].max(inc[j]) + 1);
            }
        }
        best = best.max(dec[i]).max(inc[i]);
    }
    best
}

pub fn is_valid_tableau(t: &Tableau) -> bool {
    let kind = t.kind;
    let rows = &t.rows;
    if rows.iter().any(|r| r.is_empty()) || rows.iter().flatten().any(|&x| !kind.contains(x)) {
        return false;
    }
    let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
    if !is_valid_shape(&kind, &lens) {
        return false;
    }
    match kind {
        AlgebraKind::Empty { .. } => {
            rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]))
                && (0..lens.first().copied().unwrap_or(0))
                    .all(|c| t.column(c).windows(2).all(|p| p[0] < p[1]))
        }
        AlgebraKind::Hook { .. } => {
            let row_ok = |p: &[Letter]| p[0] < p[1] || (p[0] == p[1] && p[0].is_barred());
            let col_ok = |p: &[Letter]| p[0] < p[1] || (p[0] == p[1] && !p[0].is_barred());
            rows.iter().all(|r| r.windows(2).all(row_ok))
                && (0..lens.first().copied().unwrap_or(0))
                    .all(|c| t.column(c).windows(2).all(col_ok))
        }
        AlgebraKind::Strict { .. } => {
            rows.iter().all(|r| is_hook_word(r))
                && (0..rows.len()).all(|i| {
                    let mut cat = rows.get(i + 1).cloned().unwrap_or_default();
                    cat.extend_from_slice(&rows[i]);
                    longest_hook_subword(&cat) == rows[i].len()
                })
        }
    }
}

/// Reading word: rows right to left, top to bottom (empty and hook kinds);
/// rows left to right, bottom row first (strict kind).
pub fn reading(t: &Tableau) -> Word {
    match t.kind {
        AlgebraKind::Strict { .. } => t.rows.iter().rev().flatten().copied().collect(),
        _ => t.rows.iter().flat_map(|r| r.iter().rev()).copied().collect(),
    }
}

struct NodeCounter<'a> {
    budget: &'a Budget,
    nodes: usize,
}

impl NodeCounter<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Error::Budget {
                what: "enumeration nodes".into(),
                limit: self.budget.max_nodes,
            });
        }
        Ok(())
    }
}

/// All tableaux of shape λ, in a fixed order.
pub fn enumerate_tableaux(kind: &AlgebraKind, lambda: &Shape, budget: &Budget) -> Result<Vec<Tableau>> {
    check_shape(kind, lambda)?;
    budget.check_boxes(lambda.size())?;
    let mut counter = NodeCounter { budget, nodes: 0 };
    let mut out = Vec::new();
    match kind {
        AlgebraKind::Strict { .. } => enumerate_strict(kind, lambda, &mut counter, &mut out)?,
        _ => {
            let cells: Vec<(usize, usize)> = (0..lambda.len())
                .flat_map(|i| (0..lambda.part(i)).map(move |j| (i, j)))
                .collect();
            let mut rows: Vec<Vec<Letter>> = vec![Vec::new(); lambda.len()];
            fill_cells(kind, &cells, 0, &mut rows, &mut counter, &mut out)?;
        }
    }
    Ok(out)
}

fn cell_allows(kind: &AlgebraKind, x: Letter, left: Option<Letter>, above: Option<Letter>) -> bool {
    match kind {
        AlgebraKind::Hook { .. } => {
            left.is_none_or(|l| x > l || (x == l && x.is_barred()))
                && above.is_none_or(|a| x > a || (x == a && !x.is_barred()))
        }
        _ => left.is_none_or(|l| x >= l) && above.is_none_or(|a| x > a),
    }
}

fn fill_cells(
    kind: &AlgebraKind,
    cells: &[(usize, usize)],
    k: usize,
    rows: &mut Vec<Vec<Letter>>,
    counter: &mut NodeCounter,
    out: &mut Vec<Tableau>,
) -> Result<()> {
    counter.tick()?;
    if k == cells.len() {
        out.push(Tableau { kind: *kind, rows: rows.clone() });
        return Ok(());
    }
    let (i, j) = cells[k];
    let left = if j > 0 { Some(rows[i][j - 1]) } else { None };
    let above = if i > 0 { Some(rows[i - 1][j]) } else { None };
    for x in kind.alphabet() {
        if cell_allows(kind, x, left, above) {
            rows[i].push(x);
            fill_cells(kind, cells, k + 1, rows, counter, out)?;
            rows[i].pop();
        }
    }
    Ok(())
}

/// All hook words of length `len` over the alphabet.
pub fn hook_words(kind: &AlgebraKind, len: usize) -> Vec<Word> {
    fn go(alpha: &[Letter], len: usize, rising: bool, cur: &mut Word, out: &mut Vec<Word>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for &y in alpha {
            let next_rising = match cur.last() {
                None => false,
                Some(&l) if !rising && y <= l => false,
                Some(&l) if y > l => true,
                _ => continue,
            };
            cur.push(y);
            go(alpha, len, next_rising, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len > 0 {
        go(&kind.alphabet(), len, false, &mut Vec::new(), &mut out);
    }
    out
}

fn enumerate_strict(
    kind: &AlgebraKind,
    lambda: &Shape,
    counter: &mut NodeCounter,
    out: &mut Vec<Tableau>,
) -> Result<()> {
    let d = lambda.len();
    if d == 0 {
        out.push(Tableau::empty(*kind));
        return Ok(());
    }
    let words: Vec<Vec<Word>> = (0..d).map(|i| hook_words(kind, lambda.part(i))).collect();
    // rows are chosen bottom-up; rows[i] must be maximal in rows[i+1] rows[i]
    fn go(
        kind: &AlgebraKind,
        words: &[Vec<Word>],
        i: usize,
        rows: &mut Vec<Word>,
        counter: &mut NodeCounter,
        out: &mut Vec<Tableau>,
    ) -> Result<()> {
        for w in &words[i] {
            counter.tick()?;
            if let Some(below) = rows.get(i + 1) {
                let mut cat = below.clone();
                cat.extend_from_slice(w);
                if longest_hook_subword(&cat) != w.len() {
                    continue;
                }
            }
            rows[i] = w.clone();
            if i == 0 {
                out.push(Tableau { kind: *kind, rows: rows.clone() });
            } else {
                go(kind, words, i - 1, rows, counter, out)?;
            }
        }
        Ok(())
    }
    let mut rows = vec![Vec::new(); d];
    go(kind, &words, d - 1, &mut rows, counter, out)
}

/// A standard tableau of shape `outer/inner`, stored as the chain of shapes
/// after each added box (the inner shape itself is not repeated).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StandardTableau {
    inner: Shape,
    chain: Vec<Shape>,
}

impl StandardTableau {
    /// Checks that each step adds exactly one box.
    pub fn from_chain(inner: Shape, chain: Vec<Shape>) -> Result<StandardTableau> {
        let mut prev = &inner;
        for s in &chain {
            if prev.added_row(s).is_none() {
                return Err(invalid(format!("{s} does not add one box to {prev}")));
            }
            prev = s;
        }
        Ok(StandardTableau { inner, chain })
    }

    pub fn inner(&self) -> &Shape {
        &self.inner
    }

    pub fn chain(&self) -> &[Shape] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn shape(&self) -> &Shape {
        self.chain.last().unwrap_or(&self.inner)
    }

    /// Row `i` lists the entries of the boxes added in row `i`, left to right.
    pub fn filling(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); self.shape().len()];
        let mut prev = &self.inner;
        for (k, s) in self.chain.iter().enumerate() {
            let r = prev.added_row(s).expect("chain adds one box per step");
            rows[r].push(k + 1);
            prev = s;
        }
        rows
    }

    /// Inverse of [`filling`](Self::filling) for straight shapes: entry `k`
    /// sits in the row where the `k`-th box was added. Every prefix must be
    /// a valid shape for the kind.
    pub fn from_filling(kind: &AlgebraKind, rows: &[Vec<usize>]) -> Result<StandardTableau> {
        let total: usize = rows.iter().map(Vec::len).sum();
        let mut where_row = vec![usize::MAX; total + 1];
        for (i, r) in rows.iter().enumerate() {
            for &e in r {
                if e == 0 || e > total || where_row[e] != usize::MAX {
                    return Err(invalid(format!("filling {rows:?} is not a permutation of 1..{total}")));
                }
                where_row[e] = i;
            }
        }
        let mut cur = Shape::empty();
        let mut chain = Vec::with_capacity(total);
        for (k, &r) in where_row.iter().enumerate().skip(1) {
            let next = cur
                .with_box_in_row(r)
                .filter(|s| is_valid_shape(kind, s.parts()))
                .ok_or_else(|| invalid(format!("entry {k} breaks the shape condition")))?;
            chain.push(next.clone());
            cur = next;
        }
        let st = StandardTableau { inner: Shape::empty(), chain };
        if st.filling() != rows {
            return Err(invalid(format!("rows {rows:?} are not increasing")));
        }
        Ok(st)
    }
}

/// All chains from `inner` to `outer` through valid shapes of the kind.
pub fn enumerate_standard(kind: &AlgebraKind, outer: &Shape, inner: &Shape) -> Result<Vec<StandardTableau>> {
    check_shape(kind, outer)?;
    check_shape(kind, inner)?;
    if !outer.contains(inner) {
        return Ok(Vec::new());
    }
    fn go(kind: &AlgebraKind, outer: &Shape, cur: &Shape, chain: &mut Vec<Shape>, out: &mut Vec<Vec<Shape>>) {
        if cur == outer {
            out.push(chain.clone());
            return;
        }
        for s in successors(kind, cur) {
            if outer.contains(&s) {
                chain.push(s.clone());
                go(kind, outer, &s, chain, out);
                chain.pop();
            }
        }
    }
    let mut chains = Vec::new();
    go(kind, outer, inner, &mut Vec::new(), &mut chains);
    Ok(chains
        .into_iter()
        .map(|chain| StandardTableau { inner: inner.clone(), chain })
        .collect())
}

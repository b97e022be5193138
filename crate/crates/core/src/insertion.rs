//! Column insertion (empty and hook kinds), hook-word row insertion (strict
//! kind), recording tableaux, RSK and the Pitman transform.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{AlgebraKind, Letter, Shape, Word};
use crate::error::{invalid, Error, Result};
use crate::tableau::{decreasing_prefix_len, StandardTableau, Tableau};
use crate::Budget;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RskPair {
    pub p: Tableau,
    pub q: StandardTableau,
}

pub type ShapeSequence = Vec<Shape>;

fn check_letter(kind: &AlgebraKind, x: Letter) -> Result<()> {
    if kind.contains(x) {
        Ok(())
    } else {
        Err(invalid(format!("letter {x} is not in the alphabet of {kind}")))
    }
}

/// Column insertion: position of the entry bumped by `x`, or `None` to append.
fn column_bump(kind: &AlgebraKind, col: &[Letter], x: Letter) -> Option<usize> {
    match kind {
        AlgebraKind::Hook { .. } if !x.is_barred() => col.iter().position(|&t| t > x),
        _ => col.iter().position(|&t| t >= x),
    }
}

fn insert_by_columns(t: &Tableau, x: Letter) -> Tableau {
    let kind = *t.kind();
    let mut out = t.clone();
    let rows = out.rows_mut();
    let mut x = x;
    let mut c = 0;
    loop {
        let col: Vec<Letter> = rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect();
        match column_bump(&kind, &col, x) {
            Some(r) => {
                x = std::mem::replace(&mut rows[r][c], x);
                c += 1;
            }
            None => {
                let r = col.len();
                if r == rows.len() {
                    rows.push(Vec::new());
                }
                debug_assert_eq!(rows[r].len(), c);
                rows[r].push(x);
                return out;
            }
        }
    }
}

/// `x → T` for the empty kind.
pub fn insert_empty(t: &Tableau, x: Letter) -> Result<Tableau> {
    if !matches!(t.kind(), AlgebraKind::Empty { .. }) {
        return Err(invalid("insert_empty needs an empty-kind tableau"));
    }
    check_letter(t.kind(), x)?;
    Ok(insert_by_columns(t, x))
}

/// `x → T` for the hook kind: a barred letter bumps the first entry `≥ x`
/// of a column, an unbarred letter the first entry `> x`.
pub fn insert_hook(t: &Tableau, x: Letter) -> Result<Tableau> {
    if !t.kind().is_hook() {
        return Err(invalid("insert_hook needs a hook-kind tableau"));
    }
    check_letter(t.kind(), x)?;
    Ok(insert_by_columns(t, x))
}

/// `x → T` for the strict kind, row by row on hook words.
pub fn insert_strict(t: &Tableau, x: Letter) -> Result<Tableau> {
    if !matches!(t.kind(), AlgebraKind::Strict { .. }) {
        return Err(invalid("insert_strict needs a strict-kind tableau"));
    }
    check_letter(t.kind(), x)?;
    let mut out = t.clone();
    let rows = out.rows_mut();
    let mut x = x;
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![x]);
            return Ok(out);
        }
        let w = &mut rows[r];
        let k = decreasing_prefix_len(w);
        if k == w.len() || x > *w.last().unwrap() {
            w.push(x);
            return Ok(out);
        }
        let yi = k + w[k..].iter().position(|&t| t >= x).expect("last entry is >= x");
        let y = std::mem::replace(&mut w[yi], x);
        let zi = w[..k].iter().position(|&t| t < y).expect("decreasing part ends below y");
        x = std::mem::replace(&mut w[zi], y);
        r += 1;
    }
}

pub fn insert(t: &Tableau, x: Letter) -> Result<Tableau> {
    match t.kind() {
        AlgebraKind::Empty { .. } => insert_empty(t, x),
        AlgebraKind::Hook { .. } => insert_hook(t, x),
        AlgebraKind::Strict { .. } => insert_strict(t, x),
    }
}

/// Every intermediate tableau `P(w^(1)), …, P(w^(l))`.
pub fn insertion_trace(kind: &AlgebraKind, w: &[Letter]) -> Result<Vec<Tableau>> {
    let mut t = Tableau::empty(*kind);
    let mut out = Vec::with_capacity(w.len());
    for &x in w {
        t = insert(&t, x)?;
        out.push(t.clone());
    }
    Ok(out)
}

pub fn p_tableau(kind: &AlgebraKind, w: &[Letter]) -> Result<Tableau> {
    let mut t = Tableau::empty(*kind);
    for &x in w {
        t = insert(&t, x)?;
    }
    Ok(t)
}

/// The shape of `P` over every nonempty prefix of `w`.
pub fn pitman(kind: &AlgebraKind, w: &[Letter]) -> Result<ShapeSequence> {
    Ok(insertion_trace(kind, w)?.iter().map(Tableau::shape).collect())
}

pub fn q_tableau(kind: &AlgebraKind, w: &[Letter]) -> Result<StandardTableau> {
    StandardTableau::from_chain(Shape::empty(), pitman(kind, w)?)
}

pub fn rsk(kind: &AlgebraKind, w: &[Letter]) -> Result<RskPair> {
    let trace = insertion_trace(kind, w)?;
    let chain = trace.iter().map(Tableau::shape).collect();
    Ok(RskPair {
        p: trace.last().cloned().unwrap_or_else(|| Tableau::empty(*kind)),
        q: StandardTableau::from_chain(Shape::empty(), chain)?,
    })
}

/// All words of length `N^l` over the alphabet, in lexicographic order.
pub fn all_words(kind: &AlgebraKind, len: usize, budget: &Budget) -> Result<Vec<Word>> {
    let alpha = kind.alphabet();
    let total = alpha
        .len()
        .checked_pow(len as u32)
        .filter(|&t| t <= budget.max_nodes)
        .ok_or(Error::Budget { what: "words".into(), limit: budget.max_nodes })?;
    let mut out = Vec::with_capacity(total);
    for code in 0..total {
        let mut c = code;
        let mut w = vec![alpha[0]; len];
        for slot in w.iter_mut().rev() {
            *slot = alpha[c % alpha.len()];
            c /= alpha.len();
        }
        out.push(w);
    }
    Ok(out)
}

/// The words whose recording tableau is `q`, by filtering all words.
pub fn words_with_recording(kind: &AlgebraKind, q: &StandardTableau, budget: &Budget) -> Result<Vec<Word>> {
    if !q.inner().is_empty() {
        return Err(invalid("recording tableaux have straight shape"));
    }
    let mut out = Vec::new();
    for w in all_words(kind, q.len(), budget)? {
        if pitman(kind, &w)? == q.chain() {
            out.push(w);
        }
    }
    Ok(out)
}

/// Inverse of RSK for the empty kind, by reverse column bumping.
pub fn rsk_inverse_empty(pair: &RskPair) -> Result<Word> {
    let kind = *pair.p.kind();
    if !matches!(kind, AlgebraKind::Empty { .. }) {
        return Err(invalid("reverse bumping is only implemented for the empty kind"));
    }
    if pair.p.shape() != *pair.q.shape() || !pair.q.inner().is_empty() {
        return Err(invalid("P and Q have different shapes"));
    }
    let mut rows: Vec<Vec<Letter>> = pair.p.rows().to_vec();
    let chain = pair.q.chain();
    let mut word = vec![Letter(0); chain.len()];
    for k in (0..chain.len()).rev() {
        let prev = if k == 0 { Shape::empty() } else { chain[k - 1].clone() };
        let r = prev.added_row(&chain[k]).expect("recording chain adds one box per step");
        let mut y = rows[r].pop().expect("box present");
        let c = rows[r].len();
        if rows[r].is_empty() {
            rows.truncate(r);
        }
        for cc in (0..c).rev() {
            let height = rows.iter().take_while(|row| row.len() > cc).count();
            let i = (0..height)
                .rev()
                .find(|&i| rows[i][cc] <= y)
                .ok_or_else(|| Error::Consistency("reverse bump found no entry".into()))?;
            y = std::mem::replace(&mut rows[i][cc], y);
        }
        word[k] = y;
    }
    Ok(word)
}

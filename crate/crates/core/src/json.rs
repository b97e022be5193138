//! JSON encodings shared by the library reports and the CLI.
//!
//! Shapes are integer arrays, hook weights are `{barred, unbarred}` objects,
//! tableaux carry barred letters as negative integers and rationals are
//! always `"num/den"` strings.

use serde_json::{json, Value};

use crate::combinatorics::{AlgebraKind, Shape, Weight};
use crate::rational::{format_rational, Rational};
use crate::tableau::{StandardTableau, Tableau};

pub fn kind_json(kind: &AlgebraKind) -> Value {
    match *kind {
        AlgebraKind::Hook { m, n } => json!({"kind": "hook", "m": m, "n": n}),
        _ => json!({"kind": kind.name(), "n": kind.n()}),
    }
}

pub fn shape_json(s: &Shape) -> Value {
    json!(s.parts())
}

pub fn weight_json(kind: &AlgebraKind, w: &Weight) -> Value {
    match *kind {
        AlgebraKind::Hook { m, .. } => {
            let (a, b) = w.coords().split_at(m);
            json!({"barred": a, "unbarred": b})
        }
        _ => json!(w.coords()),
    }
}

pub fn rational_json(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn tableau_json(t: &Tableau) -> Value {
    json!({
        "kind": t.kind().name(),
        "shape": shape_json(&t.shape()),
        "rows": t.rows_i32(),
    })
}

pub fn standard_json(q: &StandardTableau) -> Value {
    json!({
        "shape": shape_json(q.shape()),
        "chain": q.chain().iter().map(shape_json).collect::<Vec<_>>(),
        "rows": q.filling(),
    })
}

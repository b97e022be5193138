//! Exhaustive identity suites. Each suite collects every failed assertion
//! instead of stopping at the first one.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num::{BigUint, One, Zero};
use serde::Serialize;

use crate::characters::{rela_sides, schur, schur_by_tableaux, schur_formula, psi, ProbVector};
use crate::combinatorics::{pi_weight, shapes_of_size, shapes_up_to, successors, AlgebraKind, Shape};
use crate::error::{invalid, Result};
use crate::insertion::{all_words, pitman, rsk, rsk_inverse_empty};
use crate::markov::{
    doob_transform, markov_property_defects, pi_restricted, pi_shape, pitman_path_law, stay_probability,
    TransitionKernel,
};
use crate::multiplicities::{dec_skew_coef_sides, dec_skew_sides, f_count, lr_count, Decomposer};
use crate::rational::{ratio, Rational};
use crate::simulate::drift_shape;
use crate::tableau::{enumerate_tableaux, is_valid_tableau};
use crate::Budget;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    RskBijection,
    CharactersDualRoute,
    MarkovLaw,
    Pieri,
    LrHook,
    DecSkew,
    Dim2,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::RskBijection,
        Suite::CharactersDualRoute,
        Suite::MarkovLaw,
        Suite::Pieri,
        Suite::LrHook,
        Suite::DecSkew,
        Suite::Dim2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RskBijection => "rsk-bijection",
            Suite::CharactersDualRoute => "characters-dual-route",
            Suite::MarkovLaw => "markov-law",
            Suite::Pieri => "pieri",
            Suite::LrHook => "lr-hook",
            Suite::DecSkew => "dec-skew",
            Suite::Dim2 => "dim2",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| invalid(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> SuiteReport {
        SuiteReport { suite: suite.into(), checks: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }
}

/// Optional overrides; `None` selects the default sweep of each suite.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub kind: Option<AlgebraKind>,
    pub length: Option<usize>,
    pub budget: Budget,
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    let b = &opts.budget;
    let mut report = SuiteReport::new(suite.name());
    match suite {
        Suite::RskBijection => {
            let cases: Vec<(AlgebraKind, usize)> = match opts.kind {
                Some(k) => vec![(k, opts.length.unwrap_or(5))],
                None => vec![
                    (AlgebraKind::empty(3)?, opts.length.unwrap_or(6)),
                    (AlgebraKind::hook(2, 2)?, opts.length.unwrap_or(5)),
                    (AlgebraKind::strict(3)?, opts.length.unwrap_or(6)),
                ],
            };
            for (kind, len) in cases {
                for l in 0..=len {
                    report.merge(rsk_bijection(&kind, l, b)?);
                }
            }
        }
        Suite::CharactersDualRoute => {
            let kinds = opts.kind.map_or_else(dual_route_kinds, |k| vec![k]);
            for kind in kinds {
                report.merge(characters_dual_route(&kind, opts.length.unwrap_or(6), b)?);
            }
        }
        Suite::MarkovLaw => {
            let kinds = opts.kind.map_or_else(markov_kinds, |k| vec![k]);
            for kind in kinds {
                let p = &condition_points(&kind)?[0];
                report.merge(markov_law(p, opts.length.unwrap_or(5), 6, b)?);
            }
        }
        Suite::Pieri => {
            let kinds = opts.kind.map_or_else(multiplicity_kinds, |k| vec![k]);
            for kind in kinds {
                report.merge(pieri(&kind, opts.length.unwrap_or(5), b)?);
                report.merge(product_symmetry(&kind, 6, b)?);
            }
        }
        Suite::LrHook => {
            let kind = opts.kind.unwrap_or(AlgebraKind::hook(2, 2)?);
            report.merge(lr_hook(&kind, opts.length.unwrap_or(8), b)?);
            report.merge(lr_example(b)?);
        }
        Suite::DecSkew => {
            let kinds = opts.kind.map_or_else(multiplicity_kinds, |k| vec![k]);
            for kind in kinds {
                report.merge(dec_skew(&kind, opts.length.unwrap_or(6), b)?);
            }
            for kind in dim2_kinds() {
                report.merge(dec_skew_drift(&kind, &[20, 30], 4, b)?);
            }
        }
        Suite::Dim2 => {
            report.merge(dim2_stay(b)?);
            report.merge(pit2(opts.length.unwrap_or(8), b)?);
        }
    }
    Ok(report)
}

fn dual_route_kinds() -> Vec<AlgebraKind> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push(AlgebraKind::Empty { n });
        out.push(AlgebraKind::Strict { n });
        for m in 1..=2 {
            out.push(AlgebraKind::Hook { m, n });
        }
    }
    out
}

fn markov_kinds() -> Vec<AlgebraKind> {
    vec![
        AlgebraKind::Empty { n: 2 },
        AlgebraKind::Empty { n: 3 },
        AlgebraKind::Hook { m: 1, n: 1 },
        AlgebraKind::Hook { m: 2, n: 1 },
        AlgebraKind::Strict { n: 2 },
        AlgebraKind::Strict { n: 3 },
    ]
}

fn multiplicity_kinds() -> Vec<AlgebraKind> {
    vec![AlgebraKind::Empty { n: 3 }, AlgebraKind::Hook { m: 1, n: 2 }, AlgebraKind::Hook { m: 2, n: 2 }, AlgebraKind::Strict { n: 3 }]
}

fn dim2_kinds() -> Vec<AlgebraKind> {
    vec![AlgebraKind::Empty { n: 2 }, AlgebraKind::Hook { m: 1, n: 1 }, AlgebraKind::Strict { n: 2 }]
}

/// Three probability vectors satisfying the ordering condition, with
/// linear, geometric and quadratic profiles inside each block.
pub fn condition_points(kind: &AlgebraKind) -> Result<Vec<ProbVector>> {
    let m = kind.m();
    let mut out: Vec<ProbVector> = Vec::new();
    for t in 0..3u32 {
        let raw: Vec<i64> = (0..kind.dim())
            .map(|c| {
                let (len, pos, scale) = if c < m { (m, c, 2) } else { (kind.dim() - m, c - m, 1) };
                let r = (len - pos) as i64;
                let v = match t {
                    0 => r,
                    1 => 1 << r,
                    _ => r * r + 1,
                };
                v * scale * (t as i64 + 1).pow(if c < m { 1 } else { 0 })
            })
            .collect();
        let total: i64 = raw.iter().sum();
        let p = ProbVector::new(*kind, raw.iter().map(|&v| ratio(v, total)).collect())?;
        if !out.contains(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

/// `w ↦ (P(w), Q(w))` on all words of one length: valid tableaux, equal
/// shapes, no collisions, and as many images as same-shape pairs.
pub fn rsk_bijection(kind: &AlgebraKind, len: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(format!("rsk-bijection {kind} length {len}"));
    let words = all_words(kind, len, budget)?;
    let mut seen = HashSet::with_capacity(words.len());
    let mut collisions = 0usize;
    for w in &words {
        let pair = rsk(kind, w)?;
        let ok = is_valid_tableau(&pair.p) && pair.p.shape() == *pair.q.shape() && pair.p.size() == len;
        report.check(ok, || format!("{kind}: bad pair for word {w:?}"));
        if matches!(kind, AlgebraKind::Empty { .. }) {
            let back = rsk_inverse_empty(&pair)?;
            report.check(back == *w, || format!("{kind}: reverse bumping of {w:?} gave {back:?}"));
        }
        if !seen.insert(pair) {
            collisions += 1;
        }
    }
    report.check(collisions == 0, || format!("{kind} length {len}: {collisions} collisions"));
    let mut pairs = BigUint::zero();
    for lambda in shapes_of_size(kind, len) {
        let t = enumerate_tableaux(kind, &lambda, budget)?.len();
        pairs += f_count(kind, &lambda)? * BigUint::from(t);
    }
    let total = BigUint::from(kind.dim()).pow(len as u32);
    report.check(pairs == total && BigUint::from(seen.len()) == total, || {
        format!("{kind} length {len}: {} images, {pairs} same-shape pairs, {total} words", seen.len())
    });
    Ok(report)
}

/// Tableau sums against the closed forms at every condition point, plus the
/// strict-kind product identity for shapes with `n` parts.
pub fn characters_dual_route(kind: &AlgebraKind, max_size: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(format!("characters-dual-route {kind}"));
    let points = condition_points(kind)?;
    for lambda in shapes_up_to(kind, max_size) {
        for p in &points {
            let a = schur_by_tableaux(kind, &lambda, p.coords(), budget)?;
            let b = schur_formula(kind, &lambda, p.coords())?;
            report.check(a == b, || format!("{kind} {lambda} at {:?}: tableaux {a}, formula {b}", p.coords()));
            if matches!(kind, AlgebraKind::Strict { n } if lambda.len() == *n) {
                let (l, r) = rela_sides(&lambda, p.coords(), budget)?;
                report.check(l == r, || format!("{kind} {lambda}: product identity {l} vs {r}"));
            }
        }
    }
    Ok(report)
}

/// Row sums, Markov property and marginal laws of the shape process,
/// harmonicity of ψ and the Doob transform of the restricted walk.
pub fn markov_law(p: &ProbVector, len: usize, harmonic_size: usize, budget: &Budget) -> Result<SuiteReport> {
    let kind = *p.kind();
    let mut report = SuiteReport::new(format!("markov-law {kind}"));
    let shape_kernel = pi_shape(p);
    for mu in shapes_up_to(&kind, len) {
        let s = shape_kernel.row_sum(&mu)?;
        report.check(s.is_one(), || format!("{kind}: row {mu} of the shape kernel sums to {s}"));
    }
    let law = pitman_path_law(p, len, budget)?;
    let defects = markov_property_defects(&shape_kernel, &law, len)?;
    report.check(defects.is_empty(), || format!("{kind}: Markov property fails after {:?}", defects[0]));
    let mut marginals: Vec<BTreeMap<Shape, Rational>> = vec![BTreeMap::new(); len + 1];
    for (path, q) in &law {
        for (l, s) in path.iter().enumerate() {
            *marginals[l + 1].entry(s.clone()).or_insert_with(Rational::zero) += q;
        }
    }
    for (l, marg) in marginals.iter().enumerate().skip(1) {
        for lambda in shapes_of_size(&kind, l) {
            let got = marg.get(&lambda).cloned().unwrap_or_else(Rational::zero);
            let want = Rational::from_integer(f_count(&kind, &lambda)?.into()) * schur(&lambda, p)?;
            report.check(got == want, || format!("{kind}: P[H_{l} = {lambda}] = {got}, expected {want}"));
        }
    }
    let doob = doob_transform(pi_restricted(p), |s: &Shape| psi(s, p));
    for mu in shapes_up_to(&kind, harmonic_size) {
        match doob.row(&mu) {
            Ok(row) => {
                let direct = shape_kernel.row(&mu)?;
                let same = row.len() == direct.len() && row.iter().all(|(t, q)| shape_kernel.prob(&mu, t).ok().as_ref() == Some(q));
                report.check(same, || format!("{kind}: Doob transform row {mu} differs from the shape kernel"));
            }
            Err(e) => report.check(false, || format!("{kind}: {e}")),
        }
    }
    Ok(report)
}

/// `m^λ_{μ,(1)} = 1` exactly when `μ ⇝ λ`.
pub fn pieri(kind: &AlgebraKind, max_size: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(format!("pieri {kind}"));
    let one = Shape::new(&[1])?;
    let mut dec = Decomposer::new(*kind, *budget);
    for mu in shapes_up_to(kind, max_size) {
        let d = dec.decompose(&mu, &one)?;
        let want: BTreeMap<Shape, u64> = successors(kind, &mu).into_iter().map(|s| (s, 1)).collect();
        report.check(d == want, || format!("{kind}: {mu} x (1) decomposes as {d:?}"));
    }
    Ok(report)
}

/// `m^λ_{κ,μ} = m^λ_{μ,κ}` for `|κ| + |μ| ≤ max_size`.
pub fn product_symmetry(kind: &AlgebraKind, max_size: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(format!("product symmetry {kind}"));
    let mut dec = Decomposer::new(*kind, *budget);
    let shapes = shapes_up_to(kind, max_size);
    for kappa in &shapes {
        for mu in &shapes {
            if kappa >= mu || kappa.size() + mu.size() > max_size {
                continue;
            }
            let a = dec.decompose(kappa, mu)?;
            let b = dec.decompose(mu, kappa)?;
            report.check(a == b, || format!("{kind}: {kappa} x {mu} is not symmetric"));
        }
    }
    Ok(report)
}

/// LR tableau counts against product decompositions, and `m ≤ K`, on all
/// triples with `|λ| ≤ max_size`.
pub fn lr_hook(kind: &AlgebraKind, max_size: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(format!("lr-hook {kind}"));
    let mut dec = Decomposer::new(*kind, *budget);
    let shapes = shapes_up_to(kind, max_size);
    for kappa in &shapes {
        for mu in &shapes {
            let size = kappa.size() + mu.size();
            if size > max_size {
                continue;
            }
            let d = dec.decompose(kappa, mu)?;
            for lambda in shapes_of_size(kind, size) {
                let m = d.get(&lambda).copied().unwrap_or(0);
                let lr = lr_count(kind, &lambda, kappa, mu)? as u64;
                report.check(m == lr, || format!("{kind}: m^{lambda}_({kappa},{mu}) = {m} but {lr} LR tableaux"));
                let gamma = &pi_weight(kind, &lambda)? - &pi_weight(kind, kappa)?;
                let k = dec.character(mu)?.coefficient(&gamma);
                report.check(m <= k, || format!("{kind}: m^{lambda}_({kappa},{mu}) = {m} exceeds K = {k}"));
            }
        }
    }
    Ok(report)
}

/// The worked LR example at `m = n = 3`: `λ = (3,3,3,2,2,2)`, `κ = (2)`,
/// `μ = (3,3,2,2,2,1)`.
pub fn lr_example(budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("lr-hook example");
    let kind = AlgebraKind::hook(3, 3)?;
    let lambda = Shape::new(&[3, 3, 3, 2, 2, 2])?;
    let kappa = Shape::new(&[2])?;
    let mu = Shape::new(&[3, 3, 2, 2, 2, 1])?;
    let lr = lr_count(&kind, &lambda, &kappa, &mu)? as u64;
    let big = Budget { max_boxes: budget.max_boxes.max(lambda.size()), ..*budget };
    let mut dec = Decomposer::new(kind, big);
    let m = dec.multiplicity(&lambda, &kappa, &mu)?;
    report.check(lr == 1 && m == lr, || format!("example triple: {lr} LR tableaux, multiplicity {m}"));
    let gamma = &pi_weight(&kind, &lambda)? - &pi_weight(&kind, &kappa)?;
    let k = dec.character(&mu)?.coefficient(&gamma);
    report.check(m <= k, || format!("example triple: multiplicity {m} exceeds K = {k}"));
    Ok(report)
}

/// `f_{λ/ν} = Σ_μ f_μ m^λ_{μ,ν}` for all `ν ⊆ λ`, `|λ| ≤ max_size`.
pub fn dec_skew(kind: &AlgebraKind, max_size: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(format!("dec-skew {kind}"));
    let shapes = shapes_up_to(kind, max_size);
    for lambda in &shapes {
        for nu in &shapes {
            if !lambda.contains(nu) {
                continue;
            }
            let (l, r) = dec_skew_sides(kind, lambda, nu, budget)?;
            report.check(l == r, || format!("{kind}: f_{lambda}/{nu} = {l}, decomposition gives {r}"));
        }
    }
    Ok(report)
}

/// `f_{λ/μ} = Σ_γ f_{λ−γ} K_{μ,γ}` along the drift shapes `λ^(a)`.
pub fn dec_skew_drift(kind: &AlgebraKind, steps: &[usize], max_mu: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(format!("dec-skew drift {kind}"));
    let p = ProbVector::new(*kind, vec![ratio(2, 3), ratio(1, 3)])?;
    for &a in steps {
        let lambda = drift_shape(&p, a)?;
        for mu in shapes_up_to(kind, max_mu) {
            let (l, r) = dec_skew_coef_sides(kind, &lambda, &mu, budget)?;
            report.check(l == r, || format!("{kind}: f_{lambda}/{mu} = {l}, weight expansion gives {r}"));
        }
    }
    Ok(report)
}

/// Closed forms of the stay probability from the empty shape in dimension 2.
pub fn dim2_stay(_budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("dim2 stay probabilities");
    for (a, b) in [(2, 3), (3, 4), (3, 5)] {
        let p1 = ratio(a, b);
        let p2 = ratio(b - a, b);
        let base = Rational::one() - &p2 / &p1;
        let cases = [
            (AlgebraKind::empty(2)?, base.clone()),
            (AlgebraKind::strict(2)?, &p1 * &base),
            (AlgebraKind::hook(1, 1)?, p1.clone()),
        ];
        for (kind, want) in cases {
            let p = ProbVector::new(kind, vec![p1.clone(), p2.clone()])?;
            let got = stay_probability(&Shape::empty(), &p)?;
            report.check(got == want, || format!("{kind} at ({p1},{p2}): {got}, expected {want}"));
        }
    }
    Ok(report)
}

/// `𝔓^s(w) = (λ_1 + 1, λ_2)` with `λ = 𝔓^∅(w minus its last letter)`, `n = 2`.
pub fn pit2(max_len: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("dim2 Pitman relation");
    let e = AlgebraKind::empty(2)?;
    let s = AlgebraKind::strict(2)?;
    for len in 1..=max_len {
        for w in all_words(&e, len, budget)? {
            let lam = pitman(&e, &w[..len - 1])?.last().cloned().unwrap_or_default();
            let got = pitman(&s, &w)?.pop().expect("nonempty word");
            let want = Shape::new(&[lam.part(0) + 1, lam.part(1)])?;
            report.check(got == want, || format!("word {w:?}: strict shape {got}, expected {want}"));
        }
    }
    Ok(report)
}

//! Exact evaluation of Schur, super-Schur and P-Schur type characters by
//! tableau sums and by Weyl-type formulas; the constants ∇ and the function ψ.

use std::collections::{BTreeMap, HashMap};

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    check_shape, hook_split, pi_weight, AlgebraKind, Letter, Shape, Weight,
};
use crate::error::{invalid, Error, Result};
use crate::rational::{determinant, int, monomial, pow, Rational};
use crate::tableau::{enumerate_tableaux, reading};
use crate::Budget;

/// Positive rational step probabilities in the canonical coordinate order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProbVector {
    kind: AlgebraKind,
    #[serde(serialize_with = "crate::rational::serialize_str_vec")]
    probs: Vec<Rational>,
}

impl ProbVector {
    pub fn new(kind: AlgebraKind, probs: Vec<Rational>) -> Result<ProbVector> {
        if probs.len() != kind.dim() {
            return Err(invalid(format!(
                "{kind} needs {} probabilities, got {}",
                kind.dim(),
                probs.len()
            )));
        }
        if probs.iter().any(|p| !p.is_positive()) {
            return Err(invalid("probabilities must be positive"));
        }
        let total: Rational = probs.iter().sum();
        if !total.is_one() {
            return Err(invalid(format!("probabilities sum to {total}, not 1")));
        }
        Ok(ProbVector { kind, probs })
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    pub fn coords(&self) -> &[Rational] {
        &self.probs
    }

    pub fn get(&self, x: Letter) -> Option<&Rational> {
        self.kind.index_of(x).map(|c| &self.probs[c])
    }

    /// `p_1 > … > p_n > 0`, and `p_{m̄} > … > p_{1̄} > 0` for the hook kind.
    pub fn satisfies_condition(&self) -> bool {
        let (a, b) = self.probs.split_at(self.kind.m());
        a.windows(2).all(|w| w[0] > w[1]) && b.windows(2).all(|w| w[0] > w[1])
    }

    pub(crate) fn require_condition(&self) -> Result<()> {
        if self.satisfies_condition() {
            Ok(())
        } else {
            Err(Error::ConditionViolated(format!(
                "{:?} is not strictly decreasing within each block",
                self.probs.iter().map(|p| p.to_string()).collect::<Vec<_>>()
            )))
        }
    }

    /// `p^μ`.
    pub fn monomial(&self, mu: &Weight) -> Result<Rational> {
        monomial(&self.probs, mu.coords())
    }
}

/// Laurent polynomial with nonnegative integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseCharacter {
    terms: BTreeMap<Weight, u64>,
}

impl SparseCharacter {
    pub fn new() -> SparseCharacter {
        SparseCharacter::default()
    }

    pub fn from_terms(terms: BTreeMap<Weight, u64>) -> SparseCharacter {
        SparseCharacter { terms: terms.into_iter().filter(|(_, c)| *c > 0).collect() }
    }

    pub fn terms(&self) -> &BTreeMap<Weight, u64> {
        &self.terms
    }

    pub fn coefficient(&self, mu: &Weight) -> u64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, mu: Weight, c: u64) {
        if c > 0 {
            *self.terms.entry(mu).or_insert(0) += c;
        }
    }

    pub fn total_mass(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, x: &[Rational]) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (mu, &c) in &self.terms {
            acc += monomial(x, mu.coords())? * int(c as i64);
        }
        Ok(acc)
    }

    pub fn mul(&self, other: &SparseCharacter) -> SparseCharacter {
        let mut out = SparseCharacter::new();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

/// All permutations of `0..n` with their signs.
pub(crate) fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn go(k: usize, perm: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == perm.len() {
            out.push((perm.clone(), sign));
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            go(k + 1, perm, if i == k { sign } else { -sign }, out);
            perm.swap(k, i);
        }
    }
    go(0, &mut perm, 1, &mut out);
    out
}

fn singular(what: &str) -> Error {
    Error::Singular(format!("{what}: coinciding coordinates"))
}

/// `Σ_T x^{wt(T)}` over the enumerated tableaux of shape λ.
pub fn schur_by_tableaux(kind: &AlgebraKind, lambda: &Shape, x: &[Rational], budget: &Budget) -> Result<Rational> {
    check_point(kind, x)?;
    let mut acc = Rational::zero();
    for t in enumerate_tableaux(kind, lambda, budget)? {
        let w = crate::combinatorics::weight_of(kind, &reading(&t))?;
        acc += monomial(x, w.coords())?;
    }
    Ok(acc)
}

fn check_point(kind: &AlgebraKind, x: &[Rational]) -> Result<()> {
    if x.len() != kind.dim() {
        return Err(invalid(format!("point has {} coordinates, {kind} needs {}", x.len(), kind.dim())));
    }
    Ok(())
}

/// Weyl character formula for `gl(n)` with `n = x.len()`.
pub fn schur_weyl_empty(lambda: &Shape, x: &[Rational]) -> Result<Rational> {
    let n = x.len();
    if lambda.len() > n {
        return Err(invalid(format!("{lambda} has more than {n} rows")));
    }
    let mut den = Rational::one();
    for i in 0..n {
        for j in i + 1..n {
            den *= &x[i] - &x[j];
        }
    }
    if den.is_zero() {
        return Err(singular("Weyl formula"));
    }
    let mut num = Rational::zero();
    for (sigma, sign) in signed_permutations(n) {
        let mut term = int(sign);
        for i in 0..n {
            term *= pow(&x[sigma[i]], (lambda.part(i) + n - 1 - i) as i64)?;
        }
        num += term;
    }
    Ok(num / den)
}

/// Weyl-type sum for `q(n)`: the full `S_n` sum of
/// `σ(x^λ ∏_{i ≤ d(λ), i < j} (x_i + x_j)/(x_i − x_j))`, divided by `(n − d(λ))!`.
pub fn schur_weyl_strict(lambda: &Shape, x: &[Rational]) -> Result<Rational> {
    let n = x.len();
    let d = lambda.len();
    if d > n || lambda.parts().windows(2).any(|w| w[0] == w[1]) {
        return Err(invalid(format!("{lambda} is not a strict shape with at most {n} parts")));
    }
    let mut total = Rational::zero();
    for (sigma, _) in signed_permutations(n) {
        let y: Vec<&Rational> = sigma.iter().map(|&s| &x[s]).collect();
        let mut term = Rational::one();
        for i in 0..d {
            term *= pow(y[i], lambda.part(i) as i64)?;
            for j in i + 1..n {
                let diff = y[i] - y[j];
                if diff.is_zero() {
                    return Err(singular("strict Weyl-type formula"));
                }
                term *= (y[i] + y[j]) / diff;
            }
        }
        total += term;
    }
    let fact: u64 = (1..=(n - d) as u64).product();
    Ok(total / int(fact as i64))
}

/// True when λ contains the `m × n` rectangle.
pub fn is_typical_hook(kind: &AlgebraKind, lambda: &Shape) -> bool {
    match *kind {
        AlgebraKind::Hook { m, n } => lambda.part(m - 1) >= n,
        _ => false,
    }
}

/// Product formula for typical hook shapes:
/// `∏_{i,j} (1 + y_j/x_ī) · s_{λ^(1)}(x) · s_{λ^(2)}(y)`,
/// with `x` the barred and `y` the unbarred coordinates.
pub fn schur_weyl_hook(kind: &AlgebraKind, lambda: &Shape, x: &[Rational]) -> Result<Rational> {
    check_point(kind, x)?;
    let (a, b) = hook_split(kind, lambda)?;
    if !is_typical_hook(kind, lambda) {
        return Err(Error::FormulaNotApplicable(format!(
            "{lambda} does not contain the {}x{} rectangle",
            kind.m(),
            kind.n()
        )));
    }
    let (xb, yu) = x.split_at(kind.m());
    let mut prod = Rational::one();
    for xi in xb {
        if xi.is_zero() {
            return Err(Error::Singular("zero barred coordinate".into()));
        }
        for yj in yu {
            prod *= Rational::one() + yj / xi;
        }
    }
    Ok(prod * schur_weyl_empty(&a, xb)? * schur_weyl_empty(&b, yu)?)
}

fn complete_homogeneous(x: &[Rational], kmax: usize) -> Vec<Rational> {
    let mut h = vec![Rational::zero(); kmax + 1];
    h[0] = Rational::one();
    for xi in x {
        for k in 1..=kmax {
            let t = &h[k - 1] * xi;
            h[k] += t;
        }
    }
    h
}

fn elementary(y: &[Rational], kmax: usize) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); kmax + 1];
    e[0] = Rational::one();
    for yj in y {
        for k in (1..=kmax).rev() {
            let t = &e[k - 1] * yj;
            e[k] += t;
        }
    }
    e
}

/// Supersymmetric Jacobi–Trudi determinant `det[h_{λ_i − i + j}(x/y)]`,
/// with `h_k(x/y) = Σ_{a+b=k} h_a(x) e_b(y)`. Valid for every hook shape.
pub fn schur_jacobi_trudi_hook(kind: &AlgebraKind, lambda: &Shape, x: &[Rational]) -> Result<Rational> {
    check_point(kind, x)?;
    check_shape(kind, lambda)?;
    let (xb, yu) = x.split_at(kind.m());
    let l = lambda.len();
    let kmax = lambda.part(0) + l;
    let h = complete_homogeneous(xb, kmax);
    let e = elementary(yu, kmax);
    let hs: Vec<Rational> = (0..=kmax)
        .map(|k| (0..=k).map(|a| &h[a] * &e[k - a]).sum())
        .collect();
    let mat: Vec<Vec<Rational>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let k = lambda.part(i) as i64 - i as i64 + j as i64;
                    if k < 0 {
                        Rational::zero()
                    } else {
                        hs[k as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    Ok(determinant(mat))
}

/// Closed-form evaluation: Weyl (empty), Weyl-type sum (strict), product
/// formula for typical hook shapes and Jacobi–Trudi for the others.
pub fn schur_formula(kind: &AlgebraKind, lambda: &Shape, x: &[Rational]) -> Result<Rational> {
    check_point(kind, x)?;
    check_shape(kind, lambda)?;
    match kind {
        AlgebraKind::Empty { .. } => schur_weyl_empty(lambda, x),
        AlgebraKind::Strict { .. } => schur_weyl_strict(lambda, x),
        AlgebraKind::Hook { .. } if is_typical_hook(kind, lambda) => schur_weyl_hook(kind, lambda, x),
        AlgebraKind::Hook { .. } => schur_jacobi_trudi_hook(kind, lambda, x),
    }
}

/// Both sides of `s^s_λ(x) = s^∅_{λ−ρ}(x) ∏_{i<j} (x_i + x_j)` for a
/// strict λ with exactly `n` parts, `ρ = (n−1, …, 1, 0)`.
pub fn rela_sides(lambda: &Shape, x: &[Rational], budget: &Budget) -> Result<(Rational, Rational)> {
    let n = x.len();
    let kind = AlgebraKind::strict(n)?;
    check_shape(&kind, lambda)?;
    if lambda.len() != n {
        return Err(invalid(format!("{lambda} does not have exactly {n} parts")));
    }
    let reduced: Vec<usize> = (0..n).map(|i| lambda.part(i) - (n - 1 - i)).collect();
    let reduced = Shape::new(&reduced)?;
    let lhs = schur_by_tableaux(&kind, lambda, x, budget)?;
    let mut rhs = schur_by_tableaux(&AlgebraKind::empty(n)?, &reduced, x, budget)?;
    for i in 0..n {
        for j in i + 1..n {
            rhs *= &x[i] + &x[j];
        }
    }
    Ok((lhs, rhs))
}

/// `s_λ(p)` by the closed-form route.
pub fn schur(lambda: &Shape, p: &ProbVector) -> Result<Rational> {
    schur_formula(p.kind(), lambda, p.coords())
}

/// The normalizing constant ∇ of the stay probability.
pub fn nabla(p: &ProbVector) -> Result<Rational> {
    p.require_condition()?;
    let kind = p.kind();
    let (a, b) = p.coords().split_at(kind.m());
    let mut out = Rational::one();
    match kind {
        AlgebraKind::Strict { .. } => {
            for i in 0..b.len() {
                for j in i + 1..b.len() {
                    out *= (&b[i] + &b[j]) / (&b[i] - &b[j]);
                }
            }
        }
        _ => {
            for block in [a, b] {
                for i in 0..block.len() {
                    for j in i + 1..block.len() {
                        out /= Rational::one() - &block[j] / &block[i];
                    }
                }
            }
            for xi in a {
                for yj in b {
                    out *= Rational::one() + yj / xi;
                }
            }
        }
    }
    Ok(out)
}

/// `ψ(λ) = p^{−π(λ)} s_λ(p)`.
pub fn psi(lambda: &Shape, p: &ProbVector) -> Result<Rational> {
    let w = pi_weight(p.kind(), lambda)?;
    let neg = Weight(w.coords().iter().map(|c| -c).collect());
    Ok(p.monomial(&neg)? * schur(lambda, p)?)
}

/// Map `μ ↦ K_{λ,μ}`: the number of tableaux of shape λ and weight μ.
pub fn character_polynomial(kind: &AlgebraKind, lambda: &Shape, budget: &Budget) -> Result<SparseCharacter> {
    check_shape(kind, lambda)?;
    budget.check_boxes(lambda.size())?;
    match kind {
        AlgebraKind::Strict { .. } => {
            let mut ch = SparseCharacter::new();
            for t in enumerate_tableaux(kind, lambda, budget)? {
                ch.add_term(crate::combinatorics::weight_of(kind, &reading(&t))?, 1);
            }
            Ok(ch)
        }
        _ => Ok(strip_character(kind, lambda)),
    }
}

/// Letters `≤ a` of a tableau fill a subdiagram; each new letter adds a
/// horizontal strip (empty kind, barred letters) or a vertical strip
/// (unbarred letters of the hook kind).
fn strip_character(kind: &AlgebraKind, lambda: &Shape) -> SparseCharacter {
    let dim = kind.dim();
    let mut states: HashMap<(Shape, Vec<i64>), u64> = HashMap::new();
    states.insert((Shape::empty(), vec![0; dim]), 1);
    for (c, letter) in kind.alphabet().into_iter().enumerate() {
        let vertical = kind.is_hook() && !letter.is_barred();
        let mut next: HashMap<(Shape, Vec<i64>), u64> = HashMap::new();
        for ((nu, wt), cnt) in states {
            let strips = if vertical { vertical_strips(&nu, lambda) } else { horizontal_strips(&nu, lambda) };
            for nu2 in strips {
                let mut w2 = wt.clone();
                w2[c] = (nu2.size() - nu.size()) as i64;
                *next.entry((nu2, w2)).or_insert(0) += cnt;
            }
        }
        states = next;
    }
    let mut ch = SparseCharacter::new();
    for ((nu, wt), cnt) in states {
        if nu == *lambda {
            ch.add_term(Weight(wt), cnt);
        }
    }
    ch
}

fn horizontal_strips(nu: &Shape, lambda: &Shape) -> Vec<Shape> {
    let l = lambda.len();
    let mut out = Vec::new();
    fn go(i: usize, l: usize, nu: &Shape, lambda: &Shape, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if i == l {
            out.push(Shape::new(cur).expect("interlacing parts are a partition"));
            return;
        }
        let hi = if i == 0 { lambda.part(0) } else { lambda.part(i).min(nu.part(i - 1)) };
        for v in nu.part(i)..=hi {
            cur.push(v);
            go(i + 1, l, nu, lambda, cur, out);
            cur.pop();
        }
    }
    go(0, l, nu, lambda, &mut Vec::new(), &mut out);
    out
}

fn vertical_strips(nu: &Shape, lambda: &Shape) -> Vec<Shape> {
    let l = lambda.len();
    let mut out = Vec::new();
    fn go(i: usize, l: usize, nu: &Shape, lambda: &Shape, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if i == l {
            out.push(Shape::new(cur).expect("checked to be a partition"));
            return;
        }
        for add in 0..=1 {
            let v = nu.part(i) + add;
            if v > lambda.part(i) || (i > 0 && v > cur[i - 1]) {
                continue;
            }
            cur.push(v);
            go(i + 1, l, nu, lambda, cur, out);
            cur.pop();
        }
    }
    go(0, l, nu, lambda, &mut Vec::new(), &mut out);
    out
}

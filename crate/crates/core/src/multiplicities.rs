//! Chain counts f_λ and f_{λ/μ}, Kostka numbers, tensor-product
//! multiplicities, the Littlewood–Richardson rule for `gl(m,n)` and the
//! embedding θ of LR tableaux into hook tableaux.

use std::collections::{BTreeMap, HashMap};

use num::{BigUint, One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::characters::{character_polynomial, SparseCharacter};
use crate::combinatorics::{
    check_shape, pi_weight, predecessors, shape_from_weight, shapes_of_size, AlgebraKind, Letter, Shape,
    SkewShape, Weight,
};
use crate::error::{invalid, Error, Result};
use crate::rational::{int, solve_full_rank, Rational};
use crate::tableau::Tableau;
use crate::Budget;

/// Memoized counts of shape chains between a fixed inner shape and any
/// larger shape.
pub struct ChainCounter {
    kind: AlgebraKind,
    inner: Shape,
    memo: HashMap<Shape, BigUint>,
}

impl ChainCounter {
    pub fn new(kind: AlgebraKind, inner: Shape) -> ChainCounter {
        ChainCounter { kind, inner, memo: HashMap::new() }
    }

    /// Number of chains from the inner shape to λ through valid shapes.
    pub fn count(&mut self, lambda: &Shape) -> BigUint {
        if !lambda.contains(&self.inner) {
            return BigUint::zero();
        }
        if *lambda == self.inner {
            return BigUint::one();
        }
        if let Some(v) = self.memo.get(lambda) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for nu in predecessors(&self.kind, lambda) {
            total += self.count(&nu);
        }
        self.memo.insert(lambda.clone(), total.clone());
        total
    }
}

/// f_λ: the number of standard tableaux (valid shape chains) of shape λ.
pub fn f_count(kind: &AlgebraKind, lambda: &Shape) -> Result<BigUint> {
    f_skew(kind, lambda, &Shape::empty())
}

/// f_{λ/μ}: the number of valid shape chains from μ to λ.
pub fn f_skew(kind: &AlgebraKind, lambda: &Shape, mu: &Shape) -> Result<BigUint> {
    check_shape(kind, lambda)?;
    check_shape(kind, mu)?;
    Ok(ChainCounter::new(*kind, mu.clone()).count(lambda))
}

/// K_{λ,μ}; zero for weights with negative coordinates.
pub fn kostka(kind: &AlgebraKind, lambda: &Shape, mu: &Weight, budget: &Budget) -> Result<u64> {
    if mu.len() != kind.dim() {
        return Err(invalid("weight dimension mismatch"));
    }
    Ok(character_polynomial(kind, lambda, budget)?.coefficient(mu))
}

pub type Decomposition = BTreeMap<Shape, u64>;

/// Product decompositions with cached characters.
pub struct Decomposer {
    kind: AlgebraKind,
    budget: Budget,
    chars: HashMap<Shape, SparseCharacter>,
    products: HashMap<(Shape, Shape), Decomposition>,
}

impl Decomposer {
    pub fn new(kind: AlgebraKind, budget: Budget) -> Decomposer {
        Decomposer { kind, budget, chars: HashMap::new(), products: HashMap::new() }
    }

    pub fn character(&mut self, lambda: &Shape) -> Result<&SparseCharacter> {
        if !self.chars.contains_key(lambda) {
            let ch = character_polynomial(&self.kind, lambda, &self.budget)?;
            self.chars.insert(lambda.clone(), ch);
        }
        Ok(&self.chars[lambda])
    }

    /// m^λ_{κ,μ} for every λ, from the product of the two characters.
    ///
    /// Leading terms are peeled off greedily in lexicographic order of the
    /// canonical coordinates; if a step would leave negative coefficients or
    /// a non-dominant leading weight, the exact linear system is solved instead.
    pub fn decompose(&mut self, kappa: &Shape, mu: &Shape) -> Result<Decomposition> {
        check_shape(&self.kind, kappa)?;
        check_shape(&self.kind, mu)?;
        self.budget.check_boxes(kappa.size() + mu.size())?;
        let key = (kappa.clone(), mu.clone());
        if let Some(d) = self.products.get(&key) {
            return Ok(d.clone());
        }
        let prod = self.character(kappa)?.clone().mul(self.character(mu)?);
        let d = match self.greedy(&prod)? {
            Some(d) => d,
            None => self.linear(&prod, kappa.size() + mu.size())?,
        };
        self.products.insert(key, d.clone());
        Ok(d)
    }

    pub fn multiplicity(&mut self, lambda: &Shape, kappa: &Shape, mu: &Shape) -> Result<u64> {
        check_shape(&self.kind, lambda)?;
        Ok(self.decompose(kappa, mu)?.get(lambda).copied().unwrap_or(0))
    }

    /// Greedy leading-term elimination; `None` when the term order fails.
    pub fn greedy(&mut self, prod: &SparseCharacter) -> Result<Option<Decomposition>> {
        let mut residual: BTreeMap<Weight, i128> =
            prod.terms().iter().map(|(w, &c)| (w.clone(), c as i128)).collect();
        let mut out = Decomposition::new();
        while let Some((lead, &c)) = residual.last_key_value() {
            if c <= 0 {
                return Ok(None);
            }
            let Ok(lambda) = shape_from_weight(&self.kind, lead) else {
                return Ok(None);
            };
            for (w, &k) in self.character(&lambda)?.terms() {
                let e = residual.entry(w.clone()).or_insert(0);
                *e -= c * k as i128;
                if *e < 0 {
                    return Ok(None);
                }
            }
            residual.retain(|_, v| *v != 0);
            out.insert(lambda, c as u64);
        }
        Ok(Some(out))
    }

    /// Solves `Σ_λ m_λ char(λ) = prod` by evaluating at deterministic
    /// rational points until the system has full column rank.
    pub fn linear(&mut self, prod: &SparseCharacter, size: usize) -> Result<Decomposition> {
        let candidates = shapes_of_size(&self.kind, size);
        let mut chars = Vec::with_capacity(candidates.len());
        for s in &candidates {
            chars.push(self.character(s)?.clone());
        }
        let k = candidates.len();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();
        let limit = 4 * k + 20;
        while rows.len() < limit {
            let target = (k + 4).max(rows.len() + 4).min(limit);
            while rows.len() < target {
                let x: Vec<Rational> = (0..self.kind.dim())
                    .map(|_| Rational::new(rng.gen_range(1..60i64).into(), rng.gen_range(1..60i64).into()))
                    .collect();
                rows.push(chars.iter().map(|c| c.eval(&x)).collect::<Result<_>>()?);
                rhs.push(prod.eval(&x)?);
            }
            if let Some(sol) = solve_full_rank(&rows, &rhs) {
                let mut out = Decomposition::new();
                let mut rebuilt = SparseCharacter::new();
                for ((s, ch), v) in candidates.iter().zip(&chars).zip(sol) {
                    if v.is_negative() || !v.is_integer() {
                        return Err(Error::Consistency(format!("multiplicity of {s} solved as {v}")));
                    }
                    let v = v.to_integer().to_u64().expect("small multiplicity");
                    if v > 0 {
                        out.insert(s.clone(), v);
                        for (w, &c) in ch.terms() {
                            rebuilt.add_term(w.clone(), c * v);
                        }
                    }
                }
                if rebuilt != *prod {
                    return Err(Error::Consistency("linear decomposition does not reproduce the product".into()));
                }
                return Ok(out);
            }
        }
        Err(Error::Consistency(format!("no full-rank system after {limit} evaluation points")))
    }
}

pub fn decompose_product(kind: &AlgebraKind, kappa: &Shape, mu: &Shape, budget: &Budget) -> Result<Decomposition> {
    Decomposer::new(*kind, *budget).decompose(kappa, mu)
}

pub fn decompose_greedy(kind: &AlgebraKind, prod: &SparseCharacter, budget: &Budget) -> Result<Option<Decomposition>> {
    Decomposer::new(*kind, *budget).greedy(prod)
}

pub fn decompose_linear(kind: &AlgebraKind, prod: &SparseCharacter, size: usize, budget: &Budget) -> Result<Decomposition> {
    Decomposer::new(*kind, *budget).linear(prod, size)
}

/// m^λ_{κ,μ}.
pub fn multiplicity(kind: &AlgebraKind, lambda: &Shape, kappa: &Shape, mu: &Shape, budget: &Budget) -> Result<u64> {
    Decomposer::new(*kind, *budget).multiplicity(lambda, kappa, mu)
}

/// A filling of the ordinary skew diagram λ/κ by positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LrTableau {
    pub skew: SkewShape,
    /// `filling[i]` lists the entries of row `i` of λ/κ, left to right.
    pub filling: Vec<Vec<usize>>,
}

impl LrTableau {
    /// Rows `1..m` right to left, top to bottom; then the columns of the
    /// part below row `m`, right to left, each top to bottom.
    pub fn reading_word(&self, m: usize) -> Vec<usize> {
        let mut w = Vec::new();
        for row in self.filling.iter().take(m) {
            w.extend(row.iter().rev());
        }
        let inner = &self.skew.inner;
        let width = self.skew.outer.part(m);
        for j in (0..width).rev() {
            for (i, row) in self.filling.iter().enumerate().skip(m) {
                let start = inner.part(i);
                if j >= start && j - start < row.len() {
                    w.push(row[j - start]);
                }
            }
        }
        w
    }

    fn entry(&self, i: usize, j: usize) -> Option<usize> {
        let start = self.skew.inner.part(i);
        if j < start {
            return None;
        }
        self.filling.get(i).and_then(|r| r.get(j - start)).copied()
    }
}

fn is_lattice_with_content(w: &[usize], mu: &Shape) -> bool {
    let mut counts = vec![0usize; mu.len() + 1];
    for &v in w {
        if v == 0 || v > mu.len() {
            return false;
        }
        counts[v - 1] += 1;
        if v > 1 && counts[v - 1] > counts[v - 2] {
            return false;
        }
    }
    (0..mu.len()).all(|i| counts[i] == mu.part(i))
}

fn require_hook(kind: &AlgebraKind) -> Result<(usize, usize)> {
    match *kind {
        AlgebraKind::Hook { m, n } => Ok((m, n)),
        _ => Err(invalid("the LR rule is implemented for the hook kind only")),
    }
}

/// The LR tableaux of shape λ/κ and content μ for `gl(m,n)`.
pub fn lr_enumerate(kind: &AlgebraKind, lambda: &Shape, kappa: &Shape, mu: &Shape) -> Result<Vec<LrTableau>> {
    let (m, _) = require_hook(kind)?;
    for s in [lambda, kappa, mu] {
        check_shape(kind, s)?;
    }
    if !lambda.contains(kappa) || lambda.size() != kappa.size() + mu.size() {
        return Ok(Vec::new());
    }
    let skew = SkewShape::new(lambda.clone(), kappa.clone())?;
    let cells = skew.cells(false);
    let mut t = LrTableau {
        skew,
        filling: (0..lambda.len()).map(|_| Vec::new()).collect(),
    };
    let mut used = vec![0usize; mu.len()];
    let mut out = Vec::new();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        t: &mut LrTableau,
        used: &mut Vec<usize>,
        mu: &Shape,
        m: usize,
        out: &mut Vec<LrTableau>,
    ) {
        if k == cells.len() {
            if is_lattice_with_content(&t.reading_word(m), mu) {
                out.push(t.clone());
            }
            return;
        }
        let (i, j) = cells[k];
        let lo_row = if j > 0 { t.entry(i, j - 1).unwrap_or(1) } else { 1 };
        let lo_col = if i > 0 { t.entry(i - 1, j).map_or(1, |a| a + 1) } else { 1 };
        for v in lo_row.max(lo_col)..=mu.len() {
            if used[v - 1] == mu.part(v - 1) {
                continue;
            }
            used[v - 1] += 1;
            t.filling[i].push(v);
            go(k + 1, cells, t, used, mu, m, out);
            t.filling[i].pop();
            used[v - 1] -= 1;
        }
    }
    go(0, &cells, &mut t, &mut used, mu, m, &mut out);
    Ok(out)
}

pub fn lr_count(kind: &AlgebraKind, lambda: &Shape, kappa: &Shape, mu: &Shape) -> Result<usize> {
    Ok(lr_enumerate(kind, lambda, kappa, mu)?.len())
}

/// θ: row `r ≤ m` of the LR tableau contributes the barred letter of that
/// row to row `i` of the image for each entry `i`; column `j` of the lower
/// part contributes the unbarred letter `j` likewise.
pub fn theta_embed(kind: &AlgebraKind, t: &LrTableau) -> Result<Tableau> {
    let (m, _) = require_hook(kind)?;
    let rows_needed = t.filling.iter().flatten().copied().max().unwrap_or(0);
    let mut rows: Vec<Vec<Letter>> = vec![Vec::new(); rows_needed];
    for (r, row) in t.filling.iter().enumerate().take(m) {
        for &i in row {
            rows[i - 1].push(Letter::barred(m - r));
        }
    }
    let width = t.skew.outer.part(m);
    for j in 0..width {
        for i in m..t.filling.len() {
            if let Some(v) = t.entry(i, j) {
                rows[v - 1].push(Letter::unbarred(j + 1));
            }
        }
    }
    Tableau::new(*kind, rows)
}

/// Checks m^λ_{κ,μ} ≤ K_{μ, π(λ)−π(κ)}; returns both sides.
pub fn m_and_k(kind: &AlgebraKind, lambda: &Shape, kappa: &Shape, mu: &Shape, budget: &Budget) -> Result<(u64, u64)> {
    let m = multiplicity(kind, lambda, kappa, mu, budget)?;
    let gamma = &pi_weight(kind, lambda)? - &pi_weight(kind, kappa)?;
    let k = kostka(kind, mu, &gamma, budget)?;
    Ok((m, k))
}

pub fn verify_m_le_k(kind: &AlgebraKind, lambda: &Shape, kappa: &Shape, mu: &Shape, budget: &Budget) -> Result<bool> {
    let (m, k) = m_and_k(kind, lambda, kappa, mu, budget)?;
    Ok(m <= k)
}

/// Both sides of `f_{λ/ν} = Σ_μ f_μ m^λ_{μ,ν}`.
pub fn dec_skew_sides(kind: &AlgebraKind, lambda: &Shape, nu: &Shape, budget: &Budget) -> Result<(BigUint, BigUint)> {
    check_shape(kind, lambda)?;
    check_shape(kind, nu)?;
    let lhs = f_skew(kind, lambda, nu)?;
    if !lambda.contains(nu) {
        return Ok((lhs, BigUint::zero()));
    }
    let mut dec = Decomposer::new(*kind, *budget);
    let mut rhs = BigUint::zero();
    for mu in shapes_of_size(kind, lambda.size() - nu.size()) {
        let c = dec.multiplicity(lambda, &mu, nu)?;
        if c > 0 {
            rhs += f_count(kind, &mu)? * BigUint::from(c);
        }
    }
    Ok((lhs, rhs))
}

pub fn dec_skew_identity(kind: &AlgebraKind, lambda: &Shape, nu: &Shape, budget: &Budget) -> Result<bool> {
    let (a, b) = dec_skew_sides(kind, lambda, nu, budget)?;
    Ok(a == b)
}

/// Both sides of `f_{λ/μ} = Σ_γ f_{λ−γ} K_{μ,γ}`, where `λ−γ` is the shape
/// of weight `π(λ) − γ` (terms with a non-dominant weight vanish).
pub fn dec_skew_coef_sides(kind: &AlgebraKind, lambda: &Shape, mu: &Shape, budget: &Budget) -> Result<(BigUint, BigUint)> {
    let lhs = f_skew(kind, lambda, mu)?;
    let top = pi_weight(kind, lambda)?;
    let mut counter = ChainCounter::new(*kind, Shape::empty());
    let mut rhs = BigUint::zero();
    for (gamma, &k) in character_polynomial(kind, mu, budget)?.terms() {
        if let Ok(s) = shape_from_weight(kind, &(&top - gamma)) {
            rhs += counter.count(&s) * BigUint::from(k);
        }
    }
    Ok((lhs, rhs))
}

/// Evaluates `Σ_λ m_λ s_λ(x)` for a decomposition.
pub fn eval_decomposition(kind: &AlgebraKind, d: &Decomposition, x: &[Rational], budget: &Budget) -> Result<Rational> {
    let mut acc = Rational::zero();
    for (s, &c) in d {
        acc += character_polynomial(kind, s, budget)?.eval(x)? * int(c as i64);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{shapes_up_to, successors};

    fn sh(p: &[usize]) -> Shape {
        Shape::new(p).unwrap()
    }

    #[test]
    fn chain_counts() {
        let e3 = AlgebraKind::empty(3).unwrap();
        assert_eq!(f_count(&e3, &sh(&[2, 1])).unwrap(), BigUint::from(2u32));
        assert_eq!(f_skew(&e3, &sh(&[2, 1]), &sh(&[2, 1])).unwrap(), BigUint::one());
        assert_eq!(f_skew(&e3, &sh(&[2]), &sh(&[1, 1])).unwrap(), BigUint::zero());
        // hook lengths: f_(3,2,1) = 16
        let e4 = AlgebraKind::empty(4).unwrap();
        assert_eq!(f_count(&e4, &sh(&[3, 2, 1])).unwrap(), BigUint::from(16u32));
        // two-row chains: ballot numbers
        let e2 = AlgebraKind::empty(2).unwrap();
        assert_eq!(f_count(&e2, &sh(&[3, 3])).unwrap(), BigUint::from(5u32));
    }

    #[test]
    fn chain_count_matches_enumeration() {
        let kinds = [AlgebraKind::empty(3).unwrap(), AlgebraKind::strict(3).unwrap(), AlgebraKind::hook(1, 1).unwrap()];
        for kind in &kinds {
            for lambda in shapes_up_to(kind, 7) {
                let chains = crate::tableau::enumerate_standard(kind, &lambda, &Shape::empty()).unwrap();
                assert_eq!(f_count(kind, &lambda).unwrap(), BigUint::from(chains.len()));
            }
        }
    }

    #[test]
    fn pieri_rule() {
        let b = Budget::default();
        let kinds = [AlgebraKind::empty(2).unwrap(), AlgebraKind::strict(3).unwrap(), AlgebraKind::hook(1, 1).unwrap()];
        for kind in &kinds {
            for mu in shapes_up_to(kind, 4) {
                let d = decompose_product(kind, &mu, &sh(&[1]), &b).unwrap();
                let succ = successors(kind, &mu);
                assert_eq!(d.len(), succ.len(), "{kind} {mu}");
                for s in succ {
                    assert_eq!(d.get(&s), Some(&1));
                }
            }
        }
    }

    #[test]
    fn hook_square_of_vector() {
        let h11 = AlgebraKind::hook(1, 1).unwrap();
        let d = decompose_product(&h11, &sh(&[1]), &sh(&[1]), &Budget::default()).unwrap();
        assert_eq!(d, BTreeMap::from([(sh(&[2]), 1), (sh(&[1, 1]), 1)]));
    }

    #[test]
    fn linear_fallback_agrees_with_greedy() {
        let b = Budget::default();
        let kinds = [AlgebraKind::empty(3).unwrap(), AlgebraKind::strict(3).unwrap(), AlgebraKind::hook(2, 1).unwrap()];
        for kind in &kinds {
            for (k, m) in [(sh(&[2, 1]), sh(&[1])), (sh(&[2]), sh(&[1, 1])), (sh(&[1]), sh(&[2]))] {
                if !crate::combinatorics::is_valid_shape(kind, m.parts()) {
                    continue;
                }
                let prod = character_polynomial(kind, &k, &b).unwrap().mul(&character_polynomial(kind, &m, &b).unwrap());
                let g = decompose_greedy(kind, &prod, &b).unwrap().unwrap();
                let l = decompose_linear(kind, &prod, k.size() + m.size(), &b).unwrap();
                assert_eq!(g, l, "{kind} {k} {m}");
            }
        }
    }

    #[test]
    fn greedy_rejects_non_characters() {
        // x1^2 alone is not a sum of gl(2) characters
        let e2 = AlgebraKind::empty(2).unwrap();
        let bogus = SparseCharacter::from_terms(BTreeMap::from([(Weight(vec![2, 0]), 1)]));
        let b = Budget::default();
        assert_eq!(decompose_greedy(&e2, &bogus, &b).unwrap(), None);
        assert!(matches!(decompose_linear(&e2, &bogus, 2, &b), Err(Error::Consistency(_))));
    }

    fn exam_teta() -> (AlgebraKind, Shape, Shape, Shape, LrTableau) {
        let h33 = AlgebraKind::hook(3, 3).unwrap();
        let lambda = sh(&[3, 3, 3, 2, 2, 2]);
        let kappa = sh(&[2]);
        let mu = sh(&[3, 3, 2, 2, 2, 1]);
        let t = LrTableau {
            skew: SkewShape::new(lambda.clone(), kappa.clone()).unwrap(),
            filling: vec![vec![1], vec![1, 1, 2], vec![2, 2, 3], vec![3, 4], vec![4, 5], vec![5, 6]],
        };
        (h33, lambda, kappa, mu, t)
    }

    #[test]
    fn lr_example_member_and_theta() {
        let (h33, lambda, kappa, mu, t) = exam_teta();
        let w: String = t.reading_word(3).iter().map(|v| v.to_string()).collect();
        assert_eq!(w, "1211322456345");
        let all = lr_enumerate(&h33, &lambda, &kappa, &mu).unwrap();
        assert!(all.contains(&t));
        assert_eq!(all.len(), 1);
        let th = theta_embed(&h33, &t).unwrap();
        assert_eq!(
            th.rows_i32(),
            vec![vec![-3, -2, -2], vec![-2, -1, -1], vec![-1, 1], vec![1, 2], vec![1, 2], vec![2]]
        );
        assert_eq!(th.shape(), mu);
    }

    #[test]
    fn lr_trivial_cases() {
        let h22 = AlgebraKind::hook(2, 2).unwrap();
        let lam = sh(&[2, 1]);
        assert_eq!(lr_count(&h22, &lam, &lam, &Shape::empty()).unwrap(), 1);
        let t = &lr_enumerate(&h22, &lam, &lam, &Shape::empty()).unwrap()[0];
        assert_eq!(theta_embed(&h22, t).unwrap().size(), 0);
        assert!(lr_enumerate(&AlgebraKind::empty(2).unwrap(), &lam, &lam, &Shape::empty()).is_err());
    }

    #[test]
    fn dec_skew_small() {
        let b = Budget::default();
        let e2 = AlgebraKind::empty(2).unwrap();
        assert!(dec_skew_identity(&e2, &sh(&[3, 1]), &sh(&[1]), &b).unwrap());
        assert!(dec_skew_identity(&e2, &sh(&[2, 1]), &sh(&[2, 1]), &b).unwrap());
        let (a, c) = dec_skew_coef_sides(&e2, &sh(&[14, 7]), &sh(&[1]), &b).unwrap();
        assert_eq!(a, c);
    }
}

//! Transition kernels of the walk, of its restriction to the shape cone and
//! of the Pitman image; Doob transforms, Green functions, Martin kernels and
//! stay probabilities, all exact.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;

use num::{One, Signed, Zero};

use crate::characters::{character_polynomial, nabla, psi, schur, ProbVector};
use crate::combinatorics::{pi_weight, predecessor_steps, shape_from_weight, successor_steps, Shape, Weight};
use crate::error::{invalid, Error, Result};
use crate::insertion::{all_words, pitman};
use crate::rational::Rational;
use crate::Budget;

pub trait TransitionKernel {
    type State: Clone + Ord + Debug;

    /// Nonzero entries of the row of `s`, in a fixed order.
    fn row(&self, s: &Self::State) -> Result<Vec<(Self::State, Rational)>>;

    /// Whether rows sum to one (otherwise they sum to at most one).
    fn is_stochastic(&self) -> bool;

    fn prob(&self, from: &Self::State, to: &Self::State) -> Result<Rational> {
        Ok(self
            .row(from)?
            .into_iter()
            .find(|(s, _)| s == to)
            .map_or_else(Rational::zero, |(_, q)| q))
    }

    fn row_sum(&self, s: &Self::State) -> Result<Rational> {
        Ok(self.row(s)?.into_iter().map(|(_, q)| q).sum())
    }
}

/// The one-way simple walk on weights: `α → α + e_i` with probability `p_i`.
#[derive(Clone, Debug)]
pub struct WalkKernel {
    p: ProbVector,
}

pub fn pi_walk(p: &ProbVector) -> WalkKernel {
    WalkKernel { p: p.clone() }
}

impl TransitionKernel for WalkKernel {
    type State = Weight;

    fn row(&self, s: &Weight) -> Result<Vec<(Weight, Rational)>> {
        let d = self.p.kind().dim();
        if s.len() != d {
            return Err(invalid("weight dimension mismatch"));
        }
        Ok((0..d).map(|c| (s + &Weight::unit(d, c), self.p.coords()[c].clone())).collect())
    }

    fn is_stochastic(&self) -> bool {
        true
    }
}

/// The walk killed when it leaves the shape cone, seen on shapes.
#[derive(Clone, Debug)]
pub struct RestrictedKernel {
    p: ProbVector,
}

pub fn pi_restricted(p: &ProbVector) -> RestrictedKernel {
    RestrictedKernel { p: p.clone() }
}

impl TransitionKernel for RestrictedKernel {
    type State = Shape;

    fn row(&self, s: &Shape) -> Result<Vec<(Shape, Rational)>> {
        pi_weight(self.p.kind(), s)?;
        Ok(successor_steps(self.p.kind(), s)
            .into_iter()
            .map(|(c, t)| (t, self.p.coords()[c].clone()))
            .collect())
    }

    fn is_stochastic(&self) -> bool {
        false
    }
}

/// The shape process: `μ → λ` with probability `s_λ(p)/s_μ(p)`.
#[derive(Clone, Debug)]
pub struct ShapeKernel {
    p: ProbVector,
}

pub fn pi_shape(p: &ProbVector) -> ShapeKernel {
    ShapeKernel { p: p.clone() }
}

impl TransitionKernel for ShapeKernel {
    type State = Shape;

    fn row(&self, s: &Shape) -> Result<Vec<(Shape, Rational)>> {
        let base = schur(s, &self.p)?;
        if !base.is_positive() {
            return Err(Error::Singular(format!("s_{s}(p) is not positive")));
        }
        successor_steps(self.p.kind(), s)
            .into_iter()
            .map(|(_, t)| {
                let v = schur(&t, &self.p)? / &base;
                Ok((t, v))
            })
            .collect()
    }

    fn is_stochastic(&self) -> bool {
        true
    }
}

/// `Π_h(x,y) = h(y) Π(x,y) / h(x)`, checking harmonicity on every queried row.
pub struct DoobTransform<K, H> {
    inner: K,
    h: H,
}

pub fn doob_transform<K, H>(inner: K, h: H) -> DoobTransform<K, H>
where
    K: TransitionKernel,
    H: Fn(&K::State) -> Result<Rational>,
{
    DoobTransform { inner, h }
}

impl<K, H> TransitionKernel for DoobTransform<K, H>
where
    K: TransitionKernel,
    H: Fn(&K::State) -> Result<Rational>,
{
    type State = K::State;

    fn row(&self, s: &K::State) -> Result<Vec<(K::State, Rational)>> {
        let hx = (self.h)(s)?;
        if !hx.is_positive() {
            return Err(Error::NotHarmonic(format!("{s:?} (h is not positive)")));
        }
        let mut mass = Rational::zero();
        let mut out = Vec::new();
        for (t, q) in self.inner.row(s)? {
            let ht = (self.h)(&t)?;
            mass += &q * &ht;
            out.push((t, q * ht / &hx));
        }
        if mass != hx {
            return Err(Error::NotHarmonic(format!("{s:?}")));
        }
        Ok(out)
    }

    fn is_stochastic(&self) -> bool {
        true
    }
}

/// Memoized Green function `Γ(μ,λ) = (Π^◇)^ℓ(μ,λ)` of the restricted walk.
pub struct GreenTable {
    p: ProbVector,
    max_size: usize,
    memo: HashMap<(Shape, Shape), Rational>,
}

impl GreenTable {
    pub fn new(p: &ProbVector) -> GreenTable {
        GreenTable::with_limit(p, 512)
    }

    /// `max_size` bounds |λ| for any queried target shape.
    pub fn with_limit(p: &ProbVector, max_size: usize) -> GreenTable {
        GreenTable { p: p.clone(), max_size, memo: HashMap::new() }
    }

    pub fn green(&mut self, mu: &Shape, lambda: &Shape) -> Result<Rational> {
        let kind = *self.p.kind();
        pi_weight(&kind, mu)?;
        pi_weight(&kind, lambda)?;
        if lambda.size() > self.max_size {
            return Err(Error::Budget { what: format!("Green function target {lambda}"), limit: self.max_size });
        }
        Ok(self.green_rec(mu, lambda))
    }

    fn green_rec(&mut self, mu: &Shape, lambda: &Shape) -> Rational {
        if lambda == mu {
            return Rational::one();
        }
        if lambda.size() <= mu.size() || !lambda.contains(mu) {
            return Rational::zero();
        }
        let key = (mu.clone(), lambda.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = Rational::zero();
        for (c, nu) in predecessor_steps(self.p.kind(), lambda) {
            if nu.contains(mu) {
                let g = self.green_rec(mu, &nu);
                total += g * &self.p.coords()[c];
            }
        }
        self.memo.insert(key, total.clone());
        total
    }

    /// `K(μ,λ) = Γ(μ,λ)/Γ(∅,λ)`.
    pub fn martin_kernel(&mut self, mu: &Shape, lambda: &Shape) -> Result<Rational> {
        let base = self.green(&Shape::empty(), lambda)?;
        if base.is_zero() {
            return Err(Error::UndefinedKernel(lambda.to_string()));
        }
        Ok(self.green(mu, lambda)? / base)
    }

    /// `p^{−π(μ)} Σ_γ K_{μ,γ} p^γ Γ(∅, λ−γ) / Γ(∅, λ)`.
    pub fn martin_kernel_expanded(&mut self, mu: &Shape, lambda: &Shape, budget: &Budget) -> Result<Rational> {
        let kind = *self.p.kind();
        let base = self.green(&Shape::empty(), lambda)?;
        if base.is_zero() {
            return Err(Error::UndefinedKernel(lambda.to_string()));
        }
        let top = pi_weight(&kind, lambda)?;
        let mut acc = Rational::zero();
        for (gamma, &k) in character_polynomial(&kind, mu, budget)?.terms() {
            if let Ok(s) = shape_from_weight(&kind, &(&top - gamma)) {
                acc += self.p.monomial(gamma)? * self.green(&Shape::empty(), &s)? * Rational::from_integer(k.into());
            }
        }
        let wmu = pi_weight(&kind, mu)?;
        let neg = Weight(wmu.coords().iter().map(|c| -c).collect());
        Ok(self.p.monomial(&neg)? * acc / base)
    }
}

pub fn green(p: &ProbVector, mu: &Shape, lambda: &Shape) -> Result<Rational> {
    GreenTable::new(p).green(mu, lambda)
}

pub fn martin_kernel(p: &ProbVector, mu: &Shape, lambda: &Shape) -> Result<Rational> {
    GreenTable::new(p).martin_kernel(mu, lambda)
}

/// `P_λ[the walk stays in the cone forever] = ψ(λ)/∇`.
pub fn stay_probability(lambda: &Shape, p: &ProbVector) -> Result<Rational> {
    let nab = nabla(p)?;
    Ok(psi(lambda, p)? / nab)
}

/// `P_λ[stay for L steps]` for `L = 0, …, horizon`; weakly decreasing.
pub fn stay_probability_sequence(lambda: &Shape, p: &ProbVector, horizon: usize) -> Result<Vec<Rational>> {
    pi_weight(p.kind(), lambda)?;
    let kernel = pi_restricted(p);
    let mut mass: BTreeMap<Shape, Rational> = BTreeMap::from([(lambda.clone(), Rational::one())]);
    let mut out = vec![Rational::one()];
    for _ in 0..horizon {
        let mut next: BTreeMap<Shape, Rational> = BTreeMap::new();
        for (s, q) in &mass {
            for (t, r) in kernel.row(s)? {
                *next.entry(t).or_insert_with(Rational::zero) += q * r;
            }
        }
        mass = next;
        out.push(mass.values().sum());
    }
    Ok(out)
}

pub fn stay_probability_truncated(lambda: &Shape, p: &ProbVector, horizon: usize) -> Result<Rational> {
    Ok(stay_probability_sequence(lambda, p, horizon)?.pop().expect("sequence is nonempty"))
}

/// Law of the whole Pitman path `(𝔓(w^(1)), …, 𝔓(w^(l)))` under the walk,
/// by summing `p^{wt(w)}` over all words of length `l`.
pub fn pitman_path_law(p: &ProbVector, len: usize, budget: &Budget) -> Result<BTreeMap<Vec<Shape>, Rational>> {
    let kind = *p.kind();
    let mut law = BTreeMap::new();
    for w in all_words(&kind, len, budget)? {
        let q: Rational = w
            .iter()
            .map(|&x| p.get(x).expect("alphabet letter").clone())
            .product();
        *law.entry(pitman(&kind, &w)?).or_insert_with(Rational::zero) += q;
    }
    Ok(law)
}

/// Law of the first `len` steps of a kernel started at `start`.
pub fn kernel_path_law<K: TransitionKernel<State = Shape>>(
    kernel: &K,
    start: &Shape,
    len: usize,
) -> Result<BTreeMap<Vec<Shape>, Rational>> {
    let mut law: BTreeMap<Vec<Shape>, Rational> = BTreeMap::from([(Vec::new(), Rational::one())]);
    for _ in 0..len {
        let mut next = BTreeMap::new();
        for (path, q) in law {
            let last = path.last().unwrap_or(start).clone();
            for (t, r) in kernel.row(&last)? {
                let mut p2 = path.clone();
                p2.push(t);
                next.insert(p2, &q * r);
            }
        }
        law = next;
    }
    Ok(law)
}

/// Histories `(λ^(1), …, λ^(k))` whose conditional next-step law under the
/// word measure differs from the kernel; empty when the shape process is
/// Markov with that kernel up to length `len`.
pub fn markov_property_defects<K: TransitionKernel<State = Shape>>(
    kernel: &K,
    word_law: &BTreeMap<Vec<Shape>, Rational>,
    len: usize,
) -> Result<Vec<Vec<Shape>>> {
    let mut prefix: BTreeMap<Vec<Shape>, Rational> = BTreeMap::new();
    for (path, q) in word_law {
        for k in 0..=len.min(path.len()) {
            *prefix.entry(path[..k].to_vec()).or_insert_with(Rational::zero) += q;
        }
    }
    let mut bad = Vec::new();
    for (hist, q) in &prefix {
        if hist.len() >= len || !q.is_positive() {
            continue;
        }
        let last = hist.last().cloned().unwrap_or_default();
        for (t, r) in kernel.row(&last)? {
            let mut ext = hist.clone();
            ext.push(t);
            let joint = prefix.get(&ext).cloned().unwrap_or_else(Rational::zero);
            if joint / q != r {
                bad.push(hist.clone());
                break;
            }
        }
    }
    Ok(bad)
}

//! Monte Carlo sampling of the walk, the shape process and the conditioned
//! walk, plus exact trend experiments along the drift direction.

use std::collections::{BTreeMap, HashMap};

use num::{BigRational, Integer, One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{nabla, psi, schur, ProbVector};
use crate::combinatorics::{pi_weight, shape_from_weight, successor_steps, AlgebraKind, Letter, Shape, Weight, Word};
use crate::error::{invalid, Error, Result};
use crate::insertion::ShapeSequence;
use crate::markov::{pi_shape, GreenTable, TransitionKernel};
use crate::multiplicities::ChainCounter;
use crate::rational::{int, round_half_up, to_f64, Rational};

/// A reproducible random stream: the same `(seed, stream)` always yields
/// the same sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RngStream {
    pub seed: u64,
    pub stream: u64,
}

impl RngStream {
    pub fn new(seed: u64, stream: u64) -> RngStream {
        RngStream { seed, stream }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.seed);
        r.set_stream(self.stream);
        r
    }
}

/// Exact inverse-CDF sampler over the alphabet.
#[derive(Clone, Debug)]
pub struct LetterSampler {
    letters: Vec<Letter>,
    cumulative: Vec<u64>,
    denom: u64,
}

impl LetterSampler {
    pub fn new(p: &ProbVector) -> Result<LetterSampler> {
        let lcm = p
            .coords()
            .iter()
            .fold(num::BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let denom = lcm
            .to_u64()
            .filter(|&d| d < (1 << 62))
            .ok_or_else(|| invalid("common denominator of p is too large for exact sampling"))?;
        let mut cumulative = Vec::with_capacity(p.coords().len());
        let mut acc = 0u64;
        for q in p.coords() {
            acc += (q * BigRational::from_integer(lcm.clone())).to_integer().to_u64().expect("fits");
            cumulative.push(acc);
        }
        debug_assert_eq!(acc, denom);
        Ok(LetterSampler { letters: p.kind().alphabet(), cumulative, denom })
    }

    /// Coordinate index of the sampled letter.
    pub fn sample_index<R: Rng>(&self, rng: &mut R) -> usize {
        let u = rng.gen_range(0..self.denom);
        self.cumulative.partition_point(|&c| c <= u)
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> Letter {
        self.letters[self.sample_index(rng)]
    }
}

/// i.i.d. letters with law `p`.
pub fn sample_walk<R: Rng>(p: &ProbVector, length: usize, rng: &mut R) -> Result<Word> {
    let s = LetterSampler::new(p)?;
    Ok((0..length).map(|_| s.sample(rng)).collect())
}

/// Samples the shape process directly from its transition kernel. Rows are
/// computed exactly once, then cached as floating-point cumulative sums.
pub struct ShapeChainSampler {
    p: ProbVector,
    cache: HashMap<Shape, Vec<(Shape, f64)>>,
}

impl ShapeChainSampler {
    pub fn new(p: &ProbVector) -> ShapeChainSampler {
        ShapeChainSampler { p: p.clone(), cache: HashMap::new() }
    }

    fn row(&mut self, s: &Shape) -> Result<&Vec<(Shape, f64)>> {
        if !self.cache.contains_key(s) {
            let mut acc = 0.0;
            let row: Vec<(Shape, f64)> = pi_shape(&self.p)
                .row(s)?
                .into_iter()
                .map(|(t, q)| {
                    acc += to_f64(&q);
                    (t, acc)
                })
                .collect();
            self.cache.insert(s.clone(), row);
        }
        Ok(&self.cache[s])
    }

    pub fn sample<R: Rng>(&mut self, length: usize, rng: &mut R) -> Result<ShapeSequence> {
        let mut cur = Shape::empty();
        let mut out = Vec::with_capacity(length);
        for _ in 0..length {
            let u: f64 = rng.gen();
            let row = self.row(&cur)?;
            let total = row.last().map_or(1.0, |r| r.1);
            let next = row
                .iter()
                .find(|(_, c)| u * total < *c)
                .unwrap_or_else(|| row.last().expect("rows are nonempty"))
                .0
                .clone();
            out.push(next.clone());
            cur = next;
        }
        Ok(out)
    }
}

pub fn sample_shape_chain<R: Rng>(p: &ProbVector, length: usize, rng: &mut R) -> Result<ShapeSequence> {
    ShapeChainSampler::new(p).sample(length, rng)
}

/// One walk of `horizon` steps from the empty shape; `None` if it leaves the cone.
fn walk_in_cone<R: Rng>(kind: &AlgebraKind, s: &LetterSampler, horizon: usize, rng: &mut R) -> Option<ShapeSequence> {
    let d = kind.dim();
    let mut w = Weight::zero(d);
    let mut out = Vec::with_capacity(horizon);
    for _ in 0..horizon {
        w.0[s.sample_index(rng)] += 1;
        out.push(shape_from_weight(kind, &w).ok()?);
    }
    Some(out)
}

/// Rejection sampling of the walk conditioned to stay in the cone up to
/// `horizon`; returns the first `length` shapes and the number of attempts.
pub fn sample_conditioned_walk<R: Rng>(
    p: &ProbVector,
    length: usize,
    horizon: usize,
    rng: &mut R,
    max_attempts: usize,
) -> Result<(ShapeSequence, usize)> {
    p.require_condition()?;
    if horizon < length {
        return Err(invalid("horizon must be at least the length"));
    }
    let s = LetterSampler::new(p)?;
    for attempt in 1..=max_attempts {
        if let Some(mut path) = walk_in_cone(p.kind(), &s, horizon, rng) {
            path.truncate(length);
            return Ok((path, attempt));
        }
    }
    Err(Error::SamplingFailure { attempts: max_attempts, accepted: 0 })
}

/// Aggregate of many conditioned walks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionedRun {
    pub accepted: usize,
    pub attempts: usize,
    /// Counts of `μ → λ` among the first `record_len` steps of accepted paths.
    pub transitions: BTreeMap<Shape, BTreeMap<Shape, usize>>,
}

impl ConditionedRun {
    fn merge(&mut self, other: ConditionedRun) {
        self.accepted += other.accepted;
        self.attempts += other.attempts;
        for (mu, row) in other.transitions {
            let mine = self.transitions.entry(mu).or_default();
            for (lam, c) in row {
                *mine.entry(lam).or_insert(0) += c;
            }
        }
    }
}

/// Runs `accepted` conditioned walks split over `streams` fixed random
/// streams; the result does not depend on the number of threads.
pub fn run_conditioned(
    p: &ProbVector,
    horizon: usize,
    record_len: usize,
    accepted: usize,
    seed: u64,
    streams: usize,
    max_attempts: usize,
) -> Result<ConditionedRun> {
    p.require_condition()?;
    let sampler = LetterSampler::new(p)?;
    let kind = *p.kind();
    let streams = streams.max(1);
    let parts: Vec<Result<ConditionedRun>> = (0..streams)
        .into_par_iter()
        .map(|i| {
            let quota = accepted / streams + usize::from(i < accepted % streams);
            let cap = max_attempts / streams + 1;
            let mut rng = RngStream::new(seed, i as u64).rng();
            let mut run = ConditionedRun::default();
            while run.accepted < quota {
                if run.attempts >= cap {
                    return Err(Error::SamplingFailure { attempts: run.attempts, accepted: run.accepted });
                }
                run.attempts += 1;
                if let Some(path) = walk_in_cone(&kind, &sampler, horizon, &mut rng) {
                    run.accepted += 1;
                    let mut prev = Shape::empty();
                    for s in path.into_iter().take(record_len) {
                        *run.transitions.entry(prev).or_default().entry(s.clone()).or_insert(0) += 1;
                        prev = s;
                    }
                }
            }
            Ok(run)
        })
        .collect();
    let mut total = ConditionedRun::default();
    for part in parts {
        total.merge(part?);
    }
    Ok(total)
}

/// One Monte Carlo estimate with its standard error.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub label: String,
    pub estimate: f64,
    pub stderr: f64,
    pub count: usize,
    pub reference: Option<f64>,
}

impl Estimate {
    /// A proportion `hits / count`; the standard error is the sample
    /// standard deviation of the indicator divided by `√count`.
    pub fn proportion(label: impl Into<String>, hits: usize, count: usize, reference: Option<f64>) -> Estimate {
        let n = count as f64;
        let est = if count == 0 { f64::NAN } else { hits as f64 / n };
        let var = if count > 1 { est * (1.0 - est) * n / (n - 1.0) } else { f64::NAN };
        Estimate { label: label.into(), estimate: est, stderr: (var / n).sqrt(), count, reference }
    }

    /// |estimate − reference| in units of the standard error.
    pub fn sigma_distance(&self) -> Option<f64> {
        let r = self.reference?;
        let d = (self.estimate - r).abs();
        Some(if d == 0.0 { 0.0 } else { d / self.stderr })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EstimateReport {
    pub config: BTreeMap<String, String>,
    pub estimates: Vec<Estimate>,
}

fn base_config(p: &ProbVector, seed: u64) -> BTreeMap<String, String> {
    let mut c = BTreeMap::new();
    c.insert("kind".into(), p.kind().to_string());
    c.insert(
        "p".into(),
        p.coords().iter().map(|q| q.to_string()).collect::<Vec<_>>().join(" "),
    );
    c.insert("seed".into(), seed.to_string());
    c
}

/// Conditioned walk: acceptance rate against the exact truncated stay
/// probability, and transitions out of every recorded shape against the
/// shape-process kernel.
pub fn conditioned_report(
    p: &ProbVector,
    horizon: usize,
    record_len: usize,
    accepted: usize,
    seed: u64,
    streams: usize,
) -> Result<EstimateReport> {
    let run = run_conditioned(p, horizon, record_len, accepted, seed, streams, accepted.saturating_mul(1000))?;
    let stay = crate::markov::stay_probability_truncated(&Shape::empty(), p, horizon)?;
    let mut estimates = vec![Estimate::proportion("acceptance_rate", run.accepted, run.attempts, Some(to_f64(&stay)))];
    let kernel = pi_shape(p);
    for (mu, row) in &run.transitions {
        let from: usize = row.values().sum();
        for (lam, exact) in kernel.row(mu)? {
            let hits = row.get(&lam).copied().unwrap_or(0);
            estimates.push(Estimate::proportion(format!("{mu}->{lam}"), hits, from, Some(to_f64(&exact))));
        }
    }
    let mut config = base_config(p, seed);
    config.insert("mode".into(), "conditioned".into());
    config.insert("horizon".into(), horizon.to_string());
    config.insert("accepted".into(), run.accepted.to_string());
    Ok(EstimateReport { config, estimates })
}

/// Shape process sampled directly: law of the shape at step `length`
/// against `f_λ s_λ(p)`.
pub fn shape_law_report(p: &ProbVector, length: usize, samples: usize, seed: u64, streams: usize) -> Result<EstimateReport> {
    let streams = streams.max(1);
    let parts: Vec<Result<BTreeMap<Shape, usize>>> = (0..streams)
        .into_par_iter()
        .map(|i| {
            let quota = samples / streams + usize::from(i < samples % streams);
            let mut rng = RngStream::new(seed, i as u64).rng();
            let mut sampler = ShapeChainSampler::new(p);
            let mut counts = BTreeMap::new();
            for _ in 0..quota {
                let path = sampler.sample(length, &mut rng)?;
                *counts.entry(path.last().cloned().unwrap_or_default()).or_insert(0) += 1;
            }
            Ok(counts)
        })
        .collect();
    let mut counts: BTreeMap<Shape, usize> = BTreeMap::new();
    for part in parts {
        for (s, c) in part? {
            *counts.entry(s).or_insert(0) += c;
        }
    }
    let mut estimates = Vec::new();
    for lam in crate::combinatorics::shapes_of_size(p.kind(), length) {
        let f = crate::multiplicities::f_count(p.kind(), &lam)?;
        let exact = Rational::from_integer(f.into()) * schur(&lam, p)?;
        let hits = counts.get(&lam).copied().unwrap_or(0);
        estimates.push(Estimate::proportion(format!("P[H={lam}]"), hits, samples, Some(to_f64(&exact))));
    }
    let mut config = base_config(p, seed);
    config.insert("mode".into(), "shape".into());
    config.insert("length".into(), length.to_string());
    Ok(EstimateReport { config, estimates })
}

/// Letter frequencies of the walk against `p`.
pub fn walk_report(p: &ProbVector, samples: usize, seed: u64) -> Result<EstimateReport> {
    let mut rng = RngStream::new(seed, 0).rng();
    let s = LetterSampler::new(p)?;
    let mut counts = vec![0usize; p.kind().dim()];
    for _ in 0..samples {
        counts[s.sample_index(&mut rng)] += 1;
    }
    let estimates = counts
        .iter()
        .enumerate()
        .map(|(c, &k)| {
            let x = p.kind().letter_at(c);
            Estimate::proportion(format!("letter {x}"), k, samples, Some(to_f64(&p.coords()[c])))
        })
        .collect();
    let mut config = base_config(p, seed);
    config.insert("mode".into(), "walk".into());
    Ok(EstimateReport { config, estimates })
}

/// The valid shape nearest to a point: round half up, then repair the
/// ordering left to right.
pub fn nearest_shape(kind: &AlgebraKind, x: &[Rational]) -> Result<Shape> {
    if x.len() != kind.dim() {
        return Err(invalid("point dimension mismatch"));
    }
    let mut v: Vec<i64> = x
        .iter()
        .map(|q| round_half_up(q).to_i64().unwrap_or(i64::MAX).max(0))
        .collect();
    let monotone = |v: &mut [i64], strict: bool| {
        for i in 1..v.len() {
            let cap = if strict { v[i - 1] - 1 } else { v[i - 1] };
            v[i] = v[i].min(cap).max(0);
        }
    };
    match *kind {
        AlgebraKind::Empty { .. } => monotone(&mut v, false),
        AlgebraKind::Strict { .. } => monotone(&mut v, true),
        AlgebraKind::Hook { m, .. } => {
            let (a, b) = v.split_at_mut(m);
            monotone(a, false);
            monotone(b, false);
            let lim = a[m - 1];
            for (j, bj) in b.iter_mut().enumerate() {
                if (j as i64) >= lim {
                    *bj = 0;
                }
            }
        }
    }
    shape_from_weight(kind, &Weight(v))
}

/// `λ^(ℓ)`: the shape nearest to `ℓ` times the drift.
pub fn drift_shape(p: &ProbVector, l: usize) -> Result<Shape> {
    let x: Vec<Rational> = p.coords().iter().map(|q| q * int(l as i64)).collect();
    nearest_shape(p.kind(), &x)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrendRow {
    pub step: usize,
    pub shape: Shape,
    /// Exact value, `None` where undefined.
    #[serde(serialize_with = "crate::rational::serialize_str_opt")]
    pub value: Option<Rational>,
    pub deviation: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrendTable {
    pub rows: Vec<TrendRow>,
    #[serde(serialize_with = "crate::rational::serialize_str")]
    pub target: Rational,
}

impl TrendTable {
    /// Largest deviation over steps `ℓ > ⌊3ℓ_max/4⌋`.
    pub fn final_quartile_max_deviation(&self) -> Option<f64> {
        let lmax = self.rows.iter().map(|r| r.step).max()?;
        self.rows
            .iter()
            .filter(|r| r.step > 3 * lmax / 4)
            .filter_map(|r| r.deviation)
            .reduce(f64::max)
    }

    pub fn last_deviation(&self) -> Option<f64> {
        self.rows.last().and_then(|r| r.deviation)
    }
}

fn row_for(step: usize, shape: Shape, value: Option<Rational>, target: &Rational) -> TrendRow {
    let deviation = value.as_ref().map(|v| to_f64(&(v - target).abs()));
    TrendRow { step, shape, value, deviation }
}

/// `Γ(∅, g_ℓ − γ) / Γ(∅, g_ℓ)` along `g_ℓ` nearest to `ℓ` times the drift.
pub fn quotient_llt_experiment(p: &ProbVector, gamma: &Weight, l_max: usize) -> Result<TrendTable> {
    p.require_condition()?;
    let kind = *p.kind();
    if gamma.len() != kind.dim() {
        return Err(invalid("gamma dimension mismatch"));
    }
    let mut g = GreenTable::new(p);
    let target = Rational::one();
    let mut rows = Vec::with_capacity(l_max);
    for l in 1..=l_max {
        let shape = drift_shape(p, l)?;
        let top = pi_weight(&kind, &shape)?;
        let value = match shape_from_weight(&kind, &(&top - gamma)) {
            Ok(lower) => {
                let den = g.green(&Shape::empty(), &shape)?;
                if den.is_zero() {
                    None
                } else {
                    Some(g.green(&Shape::empty(), &lower)? / den)
                }
            }
            Err(_) => None,
        };
        rows.push(row_for(l, shape, value, &target));
    }
    Ok(TrendTable { rows, target })
}

/// `f_{λ^(ℓ)/μ} / f_{λ^(ℓ)}` against its limit `s_μ(p)`.
pub fn asympt_multiplicity_experiment(p: &ProbVector, mu: &Shape, l_max: usize) -> Result<TrendTable> {
    p.require_condition()?;
    let kind = *p.kind();
    let target = schur(mu, p)?;
    let mut full = ChainCounter::new(kind, Shape::empty());
    let mut skew = ChainCounter::new(kind, mu.clone());
    let mut rows = Vec::with_capacity(l_max);
    for l in 1..=l_max {
        let shape = drift_shape(p, l)?;
        let den = full.count(&shape);
        let value = if den.is_zero() {
            None
        } else {
            Some(BigRational::new(skew.count(&shape).into(), den.into()))
        };
        rows.push(row_for(l, shape, value, &target));
    }
    Ok(TrendTable { rows, target })
}

/// `ψ(λ^(a))` against its limit `∇`.
pub fn psi_limit_experiment(p: &ProbVector, a_max: usize) -> Result<TrendTable> {
    let target = nabla(p)?;
    let mut rows = Vec::with_capacity(a_max);
    for a in 1..=a_max {
        let shape = drift_shape(p, a)?;
        let value = Some(psi(&shape, p)?);
        rows.push(row_for(a, shape, value, &target));
    }
    Ok(TrendTable { rows, target })
}

/// Successor shapes of `μ` with their one-step probabilities under the walk
/// conditioned to stay `remaining` more steps; the exact finite-horizon
/// counterpart of the shape-process kernel.
pub fn finite_horizon_transitions(p: &ProbVector, mu: &Shape, remaining: usize) -> Result<Vec<(Shape, Rational)>> {
    if remaining == 0 {
        return Err(invalid("remaining horizon must be positive"));
    }
    let here = crate::markov::stay_probability_truncated(mu, p, remaining)?;
    if !here.is_positive() {
        return Err(Error::Singular(format!("{mu} cannot stay {remaining} steps")));
    }
    successor_steps(p.kind(), mu)
        .into_iter()
        .map(|(c, t)| {
            let stay = crate::markov::stay_probability_truncated(&t, p, remaining - 1)?;
            Ok((t, &p.coords()[c] * stay / &here))
        })
        .collect()
}

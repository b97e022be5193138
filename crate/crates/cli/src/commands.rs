use clap::{Args, ValueEnum};
use serde_json::{json, Map, Value};
use superwalk_core::characters::{nabla, schur_by_tableaux, schur_formula, ProbVector};
use superwalk_core::combinatorics::{parse_shape, parse_word, pi_weight, Weight};
use superwalk_core::insertion::{pitman, rsk};
use superwalk_core::json::{kind_json, rational_json, shape_json, standard_json, tableau_json};
use superwalk_core::markov::{stay_probability, stay_probability_sequence};
use superwalk_core::multiplicities::{eval_decomposition, lr_count, Decomposer};
use superwalk_core::rational::{format_rational, parse_rational_list, to_f64};
use superwalk_core::simulate::{
    asympt_multiplicity_experiment, conditioned_report, psi_limit_experiment, quotient_llt_experiment, shape_law_report,
    walk_report, EstimateReport, TrendTable,
};
use superwalk_core::verify::{condition_points, run_suite, Suite, SuiteOptions};
use superwalk_core::{AlgebraKind, Error, Result, Shape, VERSION};

use crate::output::{csv_text, emit, json_lines, json_text};
use crate::{Cli, Command, Config, Format};

#[derive(Args, Debug)]
pub struct WordArgs {
    /// Letters as digits (`232143`, `-23-2-1`, barred letters negative) or comma separated
    #[arg(allow_hyphen_values = true, default_value = "")]
    pub word: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Tableaux,
    Weyl,
    Both,
}

#[derive(Args, Debug)]
pub struct CharArgs {
    /// Shape such as `3,1` or `(3,1)`
    #[arg(long)]
    pub shape: String,
    #[arg(long, value_enum, default_value = "both")]
    pub route: Route,
}

#[derive(Args, Debug)]
pub struct MultiplicityArgs {
    #[arg(long)]
    pub kappa: String,
    #[arg(long)]
    pub mu: String,
}

#[derive(Args, Debug)]
pub struct ExitProbArgs {
    /// Starting shape; empty by default
    #[arg(long, default_value = "")]
    pub shape: String,
    #[arg(long, default_value_t = 20)]
    pub horizon: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SimulateMode {
    /// Walk conditioned to stay in the cone up to the horizon
    Conditioned,
    /// Shape process sampled from its kernel
    Shape,
    /// Letter frequencies of the free walk
    Walk,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[arg(long, value_enum, default_value = "conditioned")]
    pub mode: SimulateMode,
    /// Accepted paths (conditioned) or samples (shape, walk)
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    /// Recorded steps (conditioned) or path length (shape)
    #[arg(long, default_value_t = 4)]
    pub length: usize,
    /// Conditioning horizon
    #[arg(long, default_value_t = 20)]
    pub horizon: usize,
    /// Number of independent random streams
    #[arg(long, default_value_t = 8)]
    pub streams: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Experiment {
    /// Green function quotient along the drift
    Quotient,
    /// Skew chain count ratio against s_mu(p)
    Asympt,
    /// psi along the drift against nabla
    Psi,
}

#[derive(Args, Debug)]
pub struct LltArgs {
    #[arg(long, value_enum, default_value = "psi")]
    pub experiment: Experiment,
    /// Largest step
    #[arg(long, default_value_t = 30)]
    pub steps: usize,
    /// Weight shift for `quotient`, comma separated; first unit vector by default
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
    /// Inner shape for `asympt`
    #[arg(long, default_value = "1")]
    pub mu: String,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// One of rsk-bijection, characters-dual-route, markov-law, pieri, lr-hook, dec-skew, dim2
    pub suite: String,
    /// Word length or largest size swept by the suite
    #[arg(long)]
    pub length: Option<usize>,
}

pub fn run(cli: &Cli) -> Result<u8> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Rsk(a) => cmd_rsk(cfg, a),
        Command::Pitman(a) => cmd_pitman(cfg, a),
        Command::Char(a) => cmd_char(cfg, a),
        Command::Multiplicity(a) => cmd_multiplicity(cfg, a),
        Command::ExitProb(a) => cmd_exit_prob(cfg, a),
        Command::Simulate(a) => cmd_simulate(cfg, a),
        Command::Llt(a) => cmd_llt(cfg, a),
        Command::Verify(a) => cmd_verify(cfg, a),
    }
}

/// `--p` if given, else the first default point satisfying the ordering condition.
fn prob_vector(cfg: &Config, kind: AlgebraKind) -> Result<ProbVector> {
    match &cfg.p {
        Some(s) => ProbVector::new(kind, parse_rational_list(s)?),
        None => Ok(condition_points(&kind)?.swap_remove(0)),
    }
}

fn p_json(p: &ProbVector) -> Value {
    Value::Array(p.coords().iter().map(rational_json).collect())
}

fn p_text(p: &ProbVector) -> String {
    p.coords().iter().map(format_rational).collect::<Vec<_>>().join(",")
}

fn header(command: &str, kind: &AlgebraKind) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("version".into(), json!(VERSION));
    m.insert("algebra".into(), kind_json(kind));
    m
}

fn shape_arg(s: &str) -> Result<Shape> {
    if s.trim().is_empty() || s.trim() == "()" {
        Ok(Shape::empty())
    } else {
        parse_shape(s)
    }
}

fn done(cfg: &Config, text: String) -> Result<u8> {
    emit(cfg.output.as_deref(), &text)?;
    Ok(0)
}

fn wants_csv(cfg: &Config, default: Format) -> bool {
    cfg.format.unwrap_or(default) == Format::Csv
}

fn cmd_rsk(cfg: &Config, a: &WordArgs) -> Result<u8> {
    let kind = cfg.algebra()?;
    let w = parse_word(&kind, &a.word)?;
    let pair = rsk(&kind, &w)?;
    let mut out = header("rsk", &kind);
    out.insert("word".into(), json!(w.iter().map(|x| x.value()).collect::<Vec<_>>()));
    out.insert("p_tableau".into(), tableau_json(&pair.p));
    out.insert("q_tableau".into(), standard_json(&pair.q));
    done(cfg, json_text(&Value::Object(out)))
}

fn cmd_pitman(cfg: &Config, a: &WordArgs) -> Result<u8> {
    let kind = cfg.algebra()?;
    let w = parse_word(&kind, &a.word)?;
    let shapes = pitman(&kind, &w)?;
    let alg = kind_json(&kind);
    let lines: Vec<Value> = shapes
        .iter()
        .zip(&w)
        .enumerate()
        .map(|(i, (s, x))| {
            json!({
                "version": VERSION,
                "algebra": alg,
                "step": i + 1,
                "letter": x.value(),
                "shape": shape_json(s),
            })
        })
        .collect();
    done(cfg, json_lines(&lines))
}

fn cmd_char(cfg: &Config, a: &CharArgs) -> Result<u8> {
    let kind = cfg.algebra()?;
    let lambda = shape_arg(&a.shape)?;
    let p = prob_vector(cfg, kind)?;
    let b = cfg.budget();
    let x = p.coords();
    let (value, tableaux, formula) = match a.route {
        Route::Tableaux => {
            let v = schur_by_tableaux(&kind, &lambda, x, &b)?;
            (v.clone(), Some(v), None)
        }
        Route::Weyl => {
            let v = schur_formula(&kind, &lambda, x)?;
            (v.clone(), None, Some(v))
        }
        Route::Both => {
            let t = schur_by_tableaux(&kind, &lambda, x, &b)?;
            let f = schur_formula(&kind, &lambda, x)?;
            (t.clone(), Some(t), Some(f))
        }
    };
    let agreement = match (&tableaux, &formula) {
        (Some(t), Some(f)) => Some(t == f),
        _ => None,
    };
    let mut out = header("char", &kind);
    out.insert("shape".into(), shape_json(&lambda));
    out.insert("p".into(), p_json(&p));
    out.insert("route".into(), json!(format!("{:?}", a.route).to_lowercase()));
    out.insert("value".into(), rational_json(&value));
    out.insert("tableaux".into(), tableaux.as_ref().map_or(Value::Null, rational_json));
    out.insert("formula".into(), formula.as_ref().map_or(Value::Null, rational_json));
    out.insert("route_agreement".into(), json!(agreement));
    emit(cfg.output.as_deref(), &json_text(&Value::Object(out)))?;
    Ok(if agreement == Some(false) { 1 } else { 0 })
}

fn cmd_multiplicity(cfg: &Config, a: &MultiplicityArgs) -> Result<u8> {
    let kind = cfg.algebra()?;
    let kappa = shape_arg(&a.kappa)?;
    let mu = shape_arg(&a.mu)?;
    let b = cfg.budget();
    let mut dec = Decomposer::new(kind, b);
    let d = dec.decompose(&kappa, &mu)?;

    let p = condition_points(&kind)?.swap_remove(0);
    let x = p.coords();
    let lhs = eval_decomposition(&kind, &d, x, &b)?;
    let rhs = dec.character(&kappa)?.eval(x)? * dec.character(&mu)?.eval(x)?;
    let evaluation_agreement = lhs == rhs;

    let lr_agreement = if kind.is_hook() {
        let mut ok = true;
        for (lambda, &c) in &d {
            ok &= lr_count(&kind, lambda, &kappa, &mu)? as u64 == c;
        }
        Some(ok)
    } else {
        None
    };

    let mut map = Map::new();
    for (lambda, c) in &d {
        map.insert(lambda.to_string(), json!(c));
    }
    let mut out = header("multiplicity", &kind);
    out.insert("kappa".into(), shape_json(&kappa));
    out.insert("mu".into(), shape_json(&mu));
    out.insert("multiplicities".into(), Value::Object(map));
    out.insert("evaluation_agreement".into(), json!(evaluation_agreement));
    out.insert("lr_agreement".into(), json!(lr_agreement));
    emit(cfg.output.as_deref(), &json_text(&Value::Object(out)))?;
    Ok(if evaluation_agreement && lr_agreement != Some(false) { 0 } else { 1 })
}

fn cmd_exit_prob(cfg: &Config, a: &ExitProbArgs) -> Result<u8> {
    let kind = cfg.algebra()?;
    let lambda = shape_arg(&a.shape)?;
    pi_weight(&kind, &lambda)?;
    let p = prob_vector(cfg, kind)?;
    let closed = stay_probability(&lambda, &p)?;
    let seq = stay_probability_sequence(&lambda, &p, a.horizon)?;
    if wants_csv(cfg, Format::Csv) {
        let cols = ["version", "kind", "p", "shape", "horizon", "truncated", "closed_form", "gap", "gap_float"];
        let rows: Vec<Vec<String>> = seq
            .iter()
            .enumerate()
            .map(|(l, t)| {
                let gap = t - &closed;
                vec![
                    VERSION.to_string(),
                    kind.to_string(),
                    p_text(&p),
                    lambda.to_string(),
                    l.to_string(),
                    format_rational(t),
                    format_rational(&closed),
                    format_rational(&gap),
                    format!("{:e}", to_f64(&gap)),
                ]
            })
            .collect();
        return done(cfg, csv_text(&cols, &rows));
    }
    let last = seq.last().expect("sequence is nonempty");
    let mut out = header("exit-prob", &kind);
    out.insert("shape".into(), shape_json(&lambda));
    out.insert("p".into(), p_json(&p));
    out.insert("closed_form".into(), rational_json(&closed));
    out.insert("truncated".into(), Value::Array(seq.iter().map(rational_json).collect()));
    out.insert("gap".into(), rational_json(&(last - &closed)));
    done(cfg, json_text(&Value::Object(out)))
}

fn cmd_simulate(cfg: &Config, a: &SimulateArgs) -> Result<u8> {
    let kind = cfg.algebra()?;
    let p = prob_vector(cfg, kind)?;
    let mut report = match a.mode {
        SimulateMode::Conditioned => conditioned_report(&p, a.horizon, a.length, a.samples, cfg.seed, a.streams)?,
        SimulateMode::Shape => shape_law_report(&p, a.length, a.samples, cfg.seed, a.streams)?,
        SimulateMode::Walk => walk_report(&p, a.samples, cfg.seed)?,
    };
    report.config.insert("p".into(), p_text(&p));
    if a.mode == SimulateMode::Conditioned {
        report.config.insert("stay_closed_form".into(), format_rational(&stay_probability(&Shape::empty(), &p)?));
    }
    if wants_csv(cfg, Format::Csv) {
        return done(cfg, estimate_csv(&report));
    }
    let mut out = header("simulate", &kind);
    out.insert("config".into(), json!(report.config));
    out.insert(
        "estimates".into(),
        Value::Array(
            report
                .estimates
                .iter()
                .map(|e| {
                    json!({
                        "label": e.label,
                        "estimate": e.estimate,
                        "stderr": e.stderr,
                        "count": e.count,
                        "reference": e.reference,
                        "sigma_distance": e.sigma_distance(),
                    })
                })
                .collect(),
        ),
    );
    done(cfg, json_text(&Value::Object(out)))
}

fn estimate_csv(report: &EstimateReport) -> String {
    let keys: Vec<&str> = report.config.keys().map(String::as_str).collect();
    let mut cols = vec!["version"];
    cols.extend(&keys);
    cols.extend(["label", "count", "estimate", "stderr", "reference", "sigma_distance"]);
    let opt = |v: Option<f64>| v.map_or(String::new(), |x| x.to_string());
    let rows: Vec<Vec<String>> = report
        .estimates
        .iter()
        .map(|e| {
            let mut r = vec![VERSION.to_string()];
            r.extend(report.config.values().cloned());
            r.extend([
                e.label.clone(),
                e.count.to_string(),
                e.estimate.to_string(),
                e.stderr.to_string(),
                opt(e.reference),
                opt(e.sigma_distance()),
            ]);
            r
        })
        .collect();
    csv_text(&cols, &rows)
}

fn cmd_llt(cfg: &Config, a: &LltArgs) -> Result<u8> {
    let kind = cfg.algebra()?;
    let p = prob_vector(cfg, kind)?;
    let (name, table, extra) = match a.experiment {
        Experiment::Quotient => {
            let gamma = match &a.gamma {
                Some(s) => Weight(
                    s.split(',')
                        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::InvalidInput(format!("bad gamma entry {t:?}"))))
                        .collect::<Result<Vec<_>>>()?,
                ),
                None => Weight::unit(kind.dim(), 0),
            };
            let text = gamma.coords().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
            ("quotient", quotient_llt_experiment(&p, &gamma, a.steps)?, ("gamma", text))
        }
        Experiment::Asympt => {
            let mu = shape_arg(&a.mu)?;
            ("asympt", asympt_multiplicity_experiment(&p, &mu, a.steps)?, ("mu", mu.to_string()))
        }
        Experiment::Psi => ("psi", psi_limit_experiment(&p, a.steps)?, ("nabla", format_rational(&nabla(&p)?))),
    };
    if wants_csv(cfg, Format::Csv) {
        return done(cfg, trend_csv(&kind, &p, name, &extra, &table));
    }
    let mut out = header("llt", &kind);
    out.insert("experiment".into(), json!(name));
    out.insert("p".into(), p_json(&p));
    out.insert(extra.0.into(), json!(extra.1));
    out.insert("target".into(), rational_json(&table.target));
    out.insert(
        "rows".into(),
        Value::Array(
            table
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "step": r.step,
                        "shape": shape_json(&r.shape),
                        "value": r.value.as_ref().map_or(Value::Null, rational_json),
                        "deviation": r.deviation,
                    })
                })
                .collect(),
        ),
    );
    done(cfg, json_text(&Value::Object(out)))
}

fn trend_csv(kind: &AlgebraKind, p: &ProbVector, name: &str, extra: &(&str, String), t: &TrendTable) -> String {
    let cols = ["version", "experiment", "kind", "p", extra.0, "step", "shape", "estimate", "reference", "deviation"];
    let rows: Vec<Vec<String>> = t
        .rows
        .iter()
        .map(|r| {
            vec![
                VERSION.to_string(),
                name.to_string(),
                kind.to_string(),
                p_text(p),
                extra.1.clone(),
                r.step.to_string(),
                r.shape.to_string(),
                r.value.as_ref().map_or(String::new(), format_rational),
                format_rational(&t.target),
                r.deviation.map_or(String::new(), |d| d.to_string()),
            ]
        })
        .collect();
    csv_text(&cols, &rows)
}

fn cmd_verify(cfg: &Config, a: &VerifyArgs) -> Result<u8> {
    let suite: Suite = a.suite.parse()?;
    let kind = cfg.explicit_algebra()?;
    let opts = SuiteOptions { kind, length: a.length, budget: cfg.budget() };
    let report = run_suite(suite, &opts)?;
    let mut out = Map::new();
    out.insert("command".into(), json!("verify"));
    out.insert("version".into(), json!(VERSION));
    out.insert("algebra".into(), kind.as_ref().map_or(Value::Null, kind_json));
    out.insert("suite".into(), json!(suite.name()));
    out.insert("length".into(), json!(a.length));
    out.insert("checks".into(), json!(report.checks));
    out.insert("passed".into(), json!(report.passed()));
    out.insert("failures".into(), json!(report.failures));
    emit(cfg.output.as_deref(), &json_text(&Value::Object(out)))?;
    Ok(if report.passed() { 0 } else { 1 })
}

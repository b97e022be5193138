use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_superwalk"));
    c.env_clear();
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn assert_valid(schema: &str, v: &Value) {
    let path = crate_dir().join("schemas").join(format!("{schema}.schema.json"));
    let s: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&s).expect("schema compiles");
    if let Err(errors) = compiled.validate(v) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{schema}: {msgs:?}");
    };
}

const GOLDEN: &[(&str, &[&str])] = &[
    ("rsk.json", &["rsk", "--kind", "empty", "--n", "4", "232143"]),
    ("pitman.jsonl", &["pitman", "--kind", "strict", "--n", "5", "232145331"]),
    ("char.json", &["char", "--n", "3", "--shape", "2,1", "--p", "1/2,1/3,1/6"]),
    ("multiplicity.json", &["multiplicity", "--kind", "hook", "--m", "1", "--n", "1", "--kappa", "2", "--mu", "1"]),
    ("exit-prob.csv", &["exit-prob", "--n", "2", "--p", "2/3,1/3", "--horizon", "10"]),
    ("simulate.csv", &["simulate", "--n", "2", "--p", "2/3,1/3", "--samples", "500", "--seed", "7"]),
    ("llt.csv", &["llt", "--n", "2", "--p", "2/3,1/3", "--experiment", "psi", "--steps", "10"]),
    ("verify.json", &["verify", "dim2"]),
];

/// Set SUPERWALK_UPDATE_GOLDEN=1 to rewrite the files instead of comparing.
#[test]
fn golden_outputs() {
    let update = std::env::var("SUPERWALK_UPDATE_GOLDEN").is_ok_and(|v| v == "1");
    let dir = crate_dir().join("tests").join("golden");
    for (file, args) in GOLDEN {
        let o = run(args);
        assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        let path = dir.join(file);
        if update {
            std::fs::write(&path, &o.stdout).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {file}"));
        assert_eq!(stdout(&o), want, "{args:?} differs from {file}");
    }
}

#[test]
fn json_outputs_match_schemas() {
    assert_valid("rsk", &json(&run(&["rsk", "--kind", "hook", "--m", "2", "--n", "3", "-23-2-132-12"])));
    assert_valid("rsk", &json(&run(&["rsk", ""])));
    for line in stdout(&run(&["pitman", "1121231212"])).lines() {
        assert_valid("pitman", &serde_json::from_str(line).unwrap());
    }
    assert_valid("char", &json(&run(&["char", "--kind", "strict", "--n", "3", "--shape", "3,1", "--route", "weyl"])));
    assert_valid("multiplicity", &json(&run(&["multiplicity", "--kappa", "2,1", "--mu", "1"])));
    assert_valid("exit-prob", &json(&run(&["exit-prob", "--format", "json", "--shape", "1", "--horizon", "4"])));
    assert_valid(
        "simulate",
        &json(&run(&["simulate", "--format", "json", "--mode", "shape", "--samples", "200", "--length", "3"])),
    );
    for e in ["quotient", "asympt", "psi"] {
        assert_valid("llt", &json(&run(&["llt", "--format", "json", "--n", "2", "--experiment", e, "--steps", "5"])));
    }
    assert_valid("verify", &json(&run(&["verify", "pieri", "--n", "2", "--length", "3"])));
}

#[test]
fn rsk_examples() {
    let v = json(&run(&["rsk", "--kind", "empty", "--n", "4", "232143"]));
    assert_eq!(v["p_tableau"]["rows"], serde_json::json!([[1, 2, 2], [3, 3], [4]]));
    assert_eq!(v["q_tableau"]["rows"], serde_json::json!([[1, 3, 4], [2, 6], [5]]));
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));

    let v = json(&run(&["rsk", "--kind", "strict", "--n", "5", "232145331"]));
    assert_eq!(v["p_tableau"]["shape"], serde_json::json!([5, 3, 1]));

    let v = json(&run(&["rsk", ""]));
    assert_eq!(v["p_tableau"]["rows"], serde_json::json!([]));
    assert_eq!(v["q_tableau"]["chain"], serde_json::json!([]));
}

#[test]
fn verify_counts_all_words() {
    let o = run(&["verify", "rsk-bijection", "--n", "3", "--length", "5"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["passed"], true);
    // two checks per word of each length plus two per length
    let words: u64 = (0..=5).map(|l| 3u64.pow(l)).sum();
    assert_eq!(v["checks"], 2 * words + 2 * 6);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code().unwrap();
    assert_eq!(code(&["rsk", "--n", "2", "123"]), 2);
    assert_eq!(code(&["rsk", "--kind", "hook", "12"]), 2);
    assert_eq!(code(&["char", "--n", "2", "--shape", "1", "--p", "1/2,1/3"]), 2);
    assert_eq!(code(&["char", "--n", "2", "--shape", "1", "--p", "1/2,1/2", "--route", "weyl"]), 2);
    assert_eq!(code(&["exit-prob", "--n", "2", "--p", "1/3,2/3"]), 2);
    assert_eq!(code(&["verify", "nonsense"]), 2);
    assert_eq!(code(&["no-such-command"]), 2);
    assert_eq!(code(&["multiplicity", "--kappa", "3,2", "--mu", "3,2", "--budget", "4"]), 3);
    assert_eq!(code(&["simulate", "--n", "2", "--p", "1/2+1/2"]), 2);
    assert_eq!(code(&["rsk", "232143", "--n", "4"]), 0);
}

#[test]
fn help_on_every_command() {
    for cmd in ["rsk", "pitman", "char", "multiplicity", "exit-prob", "simulate", "llt", "verify"] {
        let o = run(&[cmd, "--help"]);
        assert!(o.status.success(), "{cmd}");
        assert!(stdout(&o).contains("Usage"), "{cmd}");
    }
    assert!(run(&["--help"]).status.success());
    assert!(stdout(&run(&["--version"])).contains(env!("CARGO_PKG_VERSION")));
}

#[test]
fn environment_overrides_defaults() {
    let o = bin()
        .args(["rsk", "-13-2"])
        .env("SUPERWALK_KIND", "hook")
        .env("SUPERWALK_M", "2")
        .env("SUPERWALK_N", "3")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(json(&o)["algebra"], serde_json::json!({"kind": "hook", "m": 2, "n": 3}));
}

#[test]
fn seed_determines_simulation() {
    let a = run(&["simulate", "--n", "2", "--samples", "300", "--seed", "11"]);
    let b = run(&["simulate", "--n", "2", "--samples", "300", "--seed", "11"]);
    let c = run(&["simulate", "--n", "2", "--samples", "300", "--seed", "12"]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn output_file_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let o = run(&["char", "--shape", "1", "--output", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(Path::new(&path)).unwrap()).unwrap();
    assert_eq!(v["value"], "1/1");
}

#[test]
fn csv_headers_are_stable() {
    let first = |args: &[&str]| stdout(&run(args)).lines().next().unwrap_or_default().to_string();
    assert_eq!(
        first(&["exit-prob", "--n", "2", "--horizon", "1"]),
        "version,kind,p,shape,horizon,truncated,closed_form,gap,gap_float"
    );
    assert_eq!(
        first(&["simulate", "--mode", "walk", "--samples", "10"]),
        "version,kind,mode,p,seed,label,count,estimate,stderr,reference,sigma_distance"
    );
    assert_eq!(
        first(&["llt", "--n", "2", "--steps", "2", "--experiment", "asympt"]),
        "version,experiment,kind,p,mu,step,shape,estimate,reference,deviation"
    );
}

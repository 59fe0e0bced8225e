use std::path::PathBuf;
use std::process::{Command, Output};

use gradedepth::cli::Report;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_gradedepth"));
    c.env_remove("GRADEDEPTH_SEED");
    c
}

fn instance(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances").join(format!("{name}.json"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn every_subcommand_runs_on_a_file() {
    let path = instance("ex3");
    let path = path.to_str().unwrap();
    for cmd in ["hilbert", "hpoly", "invariants", "superficial", "rr", "depth", "delta", "classify"] {
        let o = run(&[cmd, path, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{cmd}: {}", String::from_utf8_lossy(&o.stderr));
        let r = Report::from_json(&stdout(&o)).unwrap();
        assert_eq!(r.command, cmd);
        assert_eq!(r.instance, "ex3");
        assert_eq!(r.seed, 42);
    }
}

#[test]
fn table_prints_h_polynomial() {
    let o = run(&["hpoly", "ex1"]);
    assert!(stdout(&o).contains("4 + 6z^2 - 4z^3 + z^4"));
}

#[test]
fn json_omits_empty_sections_and_round_trips() {
    let o = run(&["depth", "ex2", "--format", "json"]);
    let text = stdout(&o);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&str> = value.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert!(keys.contains(&"depth") && keys.contains(&"timings"));
    assert!(!keys.contains(&"classification") && !keys.contains(&"verify"));
    let r = Report::from_json(&text).unwrap();
    assert_eq!(r.depth.as_ref().unwrap().depth, 1);
    assert_eq!(serde_json::to_value(&r).unwrap(), value);
}

#[test]
fn seed_sources() {
    let seed_of = |o: Output| Report::from_json(&stdout(&o)).unwrap().seed;
    assert_eq!(seed_of(run(&["depth", "ex4", "--format", "json"])), 42);
    let env = bin().env("GRADEDEPTH_SEED", "9").args(["depth", "ex4", "--format", "json"]).output().unwrap();
    assert_eq!(seed_of(env), 9);
    let flag = bin()
        .env("GRADEDEPTH_SEED", "9")
        .args(["depth", "ex4", "--seed", "5", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(seed_of(flag), 5);
    let bad = bin().env("GRADEDEPTH_SEED", "nine").args(["depth", "ex4"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(3));
}

#[test]
fn exit_codes() {
    let dir = std::env::temp_dir().join(format!("gradedepth-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.join(name);
        std::fs::write(&p, body).unwrap();
        p.to_str().unwrap().to_string()
    };
    let bad_json = write("bad.json", "{ not json");
    let bad_expr = write(
        "expr.json",
        r#"{"label":"e","variables":["x","y"],"f":"x^2","phi":[["x +"]]}"#,
    );
    let not_minimal = write(
        "unit.json",
        r#"{"label":"u","variables":["x","y"],"f":"x^2","phi":[["1"]]}"#,
    );
    let not_killed = write(
        "nk.json",
        r#"{"label":"nk","variables":["x","y"],"f":"x^2","phi":[["y"]]}"#,
    );

    assert_eq!(run(&["depth"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate", "ex1"]).status.code(), Some(2));
    assert_eq!(run(&["depth", &bad_json]).status.code(), Some(2));
    assert_eq!(run(&["depth", &bad_expr]).status.code(), Some(2));
    assert_eq!(run(&["depth", &not_minimal]).status.code(), Some(3));
    assert_eq!(run(&["depth", "ex1", "--cap", "12", "--max-cap", "40"]).status.code(), Some(3));
    assert_eq!(run(&["depth", "ex1", "--window", "9"]).status.code(), Some(3));
    assert_eq!(run(&["depth", &not_killed]).status.code(), Some(3));
    assert_eq!(run(&["depth", "ex1", "--cap", "4", "--max-cap", "5"]).status.code(), Some(4));
    assert_eq!(run(&["depth", "ex1", "--trials", "0"]).status.code(), Some(3));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_reports_mismatch_with_exit_5() {
    let o = run(&["verify", "ex4", "ringA"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    // a cap ceiling of 5 is too small for ex1
    let o = run(&["verify", "ex1", "--cap", "4", "--max-cap", "5"]);
    assert_eq!(o.status.code(), Some(5));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn verify_corpus_passes() {
    let o = run(&["verify", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = Report::from_json(&stdout(&o)).unwrap();
    let rows = r.verify.unwrap();
    assert_eq!(rows.len(), gradedepth::corpus::corpus().len());
    assert!(rows.iter().all(|row| row.ok));
}

#[test]
fn schema_lists_every_instance_field() {
    let schema: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances/instance.schema.json"))
            .unwrap(),
    )
    .unwrap();
    let props = schema["properties"].as_object().unwrap();
    for key in ["label", "p", "variables", "f", "phi", "cap", "seed"] {
        assert!(props.contains_key(key), "{key}");
    }
    for entry in gradedepth::corpus::corpus() {
        let v: serde_json::Value = serde_json::from_str(entry.json).unwrap();
        for key in v.as_object().unwrap().keys() {
            assert!(props.contains_key(key));
        }
    }
}

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symideal")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad JSON ({e}): {}\nstderr: {}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code().expect("exit code"), v)
}

#[test]
fn specht_two_one() {
    let (code, v) = json(&["specht", "--n", "3", "--lambda", "2,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["specht_polynomials"].as_array().unwrap().len(), 2);
    assert_eq!(v["higher_specht_basis"].as_array().unwrap().len(), 4);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["order"], "degrevlex");
    assert!(v["version"].is_string());
}

#[test]
fn specht_trivial_shape_is_constant() {
    let (code, v) = json(&["specht", "--n", "3", "--lambda", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["specht_polynomials"], serde_json::json!(["1"]));
}

#[test]
fn specht_of_displayed_tableau() {
    let (code, v) = json(&["specht", "--n", "9", "--lambda", "4,3,2", "--tableau", "9,3,6,4/2,1,8/5,7"]);
    assert_eq!(code, 0);
    assert_eq!(v["factored"], "(x9-x2)(x9-x5)(x2-x5)(x3-x1)(x3-x7)(x1-x7)(x6-x8)");
    assert_eq!(v["degree"], 7);
}

#[test]
fn bad_partition_is_rejected() {
    let out = run(&["specht", "--lambda", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("weakly decreasing"));
}

#[test]
fn tanisaki_examples() {
    let (code, v) = json(&["tanisaki", "--n", "4", "--lambda", "2,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["colength"], 6);
    assert_eq!(v["permutation_module"], serde_json::json!(["(2,2)"]));

    let (code, v) = json(&["tanisaki", "--n", "5", "--lambda", "3,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["colength"], 20);

    let (code, v) = json(&["tanisaki", "--n", "3", "--lambda", "1,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["colength"], 6);
    assert_eq!(v["equals_power_sum_ideal"], true);
}

#[test]
fn tanisaki_refuses_large_n() {
    let out = run(&["tanisaki", "--lambda", "4,3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table1_verdicts_at_four() {
    let (code, v) = json(&["table1", "--n", "4", "--jobs", "3"]);
    assert_eq!(code, 0);
    let rows = v["rows"].as_array().unwrap();
    let verdict = |row: &str, param: Option<&str>| {
        rows.iter()
            .find(|r| r["row"] == row && param.is_none_or(|p| r["param"] == p))
            .map(|r| r["verdict"].as_str().unwrap().to_string())
            .unwrap()
    };
    assert_eq!(verdict("4(a)", None), "singular");
    assert_eq!(verdict("5", Some("[-1:4]")), "singular");
    assert_eq!(verdict("5", Some("[1:0]")), "smooth");
    assert!(rows.iter().all(|r| r["ok"] == true));
}

#[test]
fn table1_row12_at_three() {
    let (code, v) = json(&["table1", "--n", "3"]);
    assert_eq!(code, 0);
    let row = v["rows"].as_array().unwrap().iter().find(|r| r["row"] == "12").unwrap().clone();
    assert_eq!(row["colength"], 6);
    assert_eq!(row["decomposition"], "S(3) + 2S(2,1) + S(1,1,1)");
    assert_eq!(row["verdict"], "smooth");
}

#[test]
fn table1_is_deterministic_across_jobs() {
    let a = run(&["table1", "--n", "3", "--seed", "11", "--format", "json", "--jobs", "1"]);
    let b = run(&["table1", "--n", "3", "--seed", "11", "--format", "json", "--jobs", "4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn lemmas_pass() {
    for n in ["3", "4", "5"] {
        let (code, v) = json(&["lemmas", "--n", n, "--jobs", "2"]);
        assert_eq!(code, 0, "n = {n}");
        assert_eq!(v["relations"]["f"]["remainder"], "0");
        assert_eq!(v["relations"]["g"]["remainder"], "0");
    }
    let (_, v) = json(&["lemmas", "--n", "3"]);
    assert_eq!(v["checks"]["first inclusion strict at (2,1)"], true);
}

#[test]
fn tangent_of_maximal_ideal() {
    let (code, v) = json(&["tangent", "--n", "3", "--gens", "x1; x2; x3"]);
    assert_eq!(code, 0);
    assert_eq!(v["tangent"]["tangent_dim"], 1);
    assert_eq!(v["tangent"]["wall_time_ms"], 0);
    let (code, v) = json(&["tangent", "--n", "3", "--gens", "x1; x2; x3", "--full", "--expect", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["tangent"]["tangent_dim"], 3);
}

#[test]
fn tangent_expectation_failure_exits_one() {
    let out = run(&["tangent", "--n", "4", "--row", "4(a)", "--expect", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn tangent_rejects_non_symmetric_input() {
    let out = run(&["tangent", "--n", "3", "--gens", "x1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decompose_from_json_file() {
    let dir = std::env::temp_dir().join(format!("symideal-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ideal.json");
    std::fs::write(&path, r#"{"n":3,"generators":["x1+x2+x3","x1^2+x2^2+x3^2","x1^3+x2^3+x3^3"]}"#).unwrap();
    let (code, v) = json(&["decompose", "--ideal", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["colength"], 6);
    assert_eq!(v["decomposition"], "S(3) + 2S(2,1) + S(1,1,1)");
    assert_eq!(v["graded"], serde_json::json!(["S(3)", "S(2,1)", "S(2,1)", "S(1,1,1)"]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn gr_of_orbit_matches_tanisaki() {
    let (code, v) = json(&["gr", "--lambda", "2,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["gr_colength"], 12);
    assert_eq!(v["checks"]["equals Tanisaki ideal"], true);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("symideal-cli-out-{}.json", std::process::id()));
    let out = run(&["specht", "--lambda", "2,1", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "specht");
    std::fs::remove_file(&path).unwrap();
}

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superhecke")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas").join(format!("{}.schema.json", name));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&v).expect("schema compiles")
}

fn check_json(name: &str, args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&full)).unwrap();
    let s = schema(name);
    if let Err(errors) = s.validate(&v) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{} output violates its schema: {:?}", name, msgs);
    }
    v
}

#[test]
fn dim_examples() {
    assert_eq!(stdout(&["dim", "--family", "A", "--m", "1", "--n", "1"]), "144\n");
    assert_eq!(stdout(&["dim", "--family", "CD", "--m", "1", "--n", "2"]), "200\n");
    // C(3) = osp(2|4)
    assert_eq!(stdout(&["dim", "--family", "C", "--n", "3"]), "200\n");
}

#[test]
fn poincare_at_one_is_the_order() {
    assert_eq!(stdout(&["poincare", "--type", "B", "--n", "2", "--q", "1"]), "8\n");
    assert_eq!(stdout(&["poincare", "--type", "S", "--n", "3"]), "q^3 + 2*q^2 + 2*q + 1\n");
}

#[test]
fn dynkin_dot_for_d31() {
    let dot = stdout(&["dynkin", "--family", "CD", "--m", "3", "--n", "1", "--format", "dot"]);
    let orbit = dot.split("}\n").next().unwrap();
    assert_eq!(orbit.matches("[label=\"(").count(), 5);
    assert_eq!(orbit.matches(" -- ").count(), 4);
    assert_eq!(dot.matches("graph ").count(), 6);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify-all", "--family", "B", "--m", "0", "--n", "2", "--format", "json", "--seed", "7"];
    assert_eq!(stdout(&args), stdout(&args));
    let a = stdout(&["structconst", "--family", "B", "--m", "1", "--n", "1"]);
    assert_eq!(a, stdout(&["structconst", "--family", "B", "--m", "1", "--n", "1"]));
}

#[test]
fn bad_arguments_exit_with_two() {
    for args in [
        &["dim", "--family", "X", "--n", "1"][..],
        &["dim", "--family", "B", "--m", "1", "--n", "0"],
        &["structconst", "--family", "A", "--m", "1", "--n", "1", "--scalar", "eval", "--q", "0"],
        &["poincare", "--type", "D", "--n", "0"],
        &["irreps", "--type", "S", "--n", "3", "--q", "-1"],
        &["dim", "--family", "A", "--m", "1", "--n", "1", "--format", "dot"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{:?}", args);
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn size_cap_is_a_verification_failure() {
    let out = run(&["enumerate", "--family", "A", "--m", "1", "--n", "1", "--max-elements", "10"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_all_passes_for_small_families() {
    for (f, m, n) in [("A", "1", "1"), ("B", "1", "1"), ("CD", "1", "1")] {
        let v = check_json("checks", &["verify-all", "--family", f, "--m", m, "--n", n]);
        assert_eq!(v["passed"], true, "{}", v);
    }
}

#[test]
fn json_outputs_match_schemas() {
    let a11 = ["--family", "A", "--m", "1", "--n", "1"];
    let with = |cmd: &[&'static str], rest: &[&'static str]| -> Vec<&'static str> { cmd.iter().chain(rest).copied().collect() };
    let v = check_json("domains", &with(&["domains"], &a11));
    assert_eq!(v["domains"][0]["tau_minus"], serde_json::json!([3, 4, 1, 2]));
    check_json("dynkin", &with(&["dynkin"], &a11));
    check_json("dynkin", &["dynkin", "--family", "CD", "--m", "3", "--n", "1"]);
    let v = check_json("elements", &with(&["enumerate"], &a11));
    assert_eq!(v["count"], 144);
    check_json("dim", &with(&["dim"], &a11));
    check_json("verify", &with(&["verify"], &a11));
    check_json("verify", &["verify", "--family", "B", "--m", "1", "--n", "2", "--scalar", "eval", "--q", "3/2"]);
    check_json("structconst", &["structconst", "--family", "B", "--m", "1", "--n", "1"]);
    check_json("structconst", &["structconst", "--family", "B", "--m", "1", "--n", "1", "--scalar", "eval"]);
    let v = check_json("word", &["word", "--family", "A", "--m", "1", "--n", "1", "--base", "(0,0,1,1)", "--letters", "1,2,1"]);
    assert_eq!(v["reduced_words"].as_array().unwrap().len(), 2);
    check_json("poincare", &["poincare", "--type", "D", "--n", "3"]);
    let v = check_json("irreps", &["irreps", "--type", "B", "--n", "2"]);
    assert_eq!(v["irreps"].as_array().unwrap().len(), 5);
    check_json("reps-build", &["reps", "build", "--family", "B", "--m", "0", "--n", "2"]);
    let v = check_json("reps-verify", &["reps", "verify", "--family", "CD", "--m", "2", "--n", "1"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("superhecke-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d.dot");
    let out = run(&["dynkin", "--family", "B", "--m", "1", "--n", "2", "--format", "dot", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let golden = include_str!("../../core/tests/golden/fig3_b12.dot");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden);
    std::fs::remove_dir_all(&dir).unwrap();
}

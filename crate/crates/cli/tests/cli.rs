use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use blockcheck::io::parse_table;
use serde_json::Value;

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn group(name: &str) -> String {
    corpus().join("groups").join(format!("{name}.json")).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blockcheck"))
        .args(args)
        .env_remove("BLOCKCHECK_CORPUS")
        .output()
        .expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn scratch(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("blockcheck-cli-{tag}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(dir.join("groups")).unwrap();
    dir
}

#[test]
fn table_of_s4() {
    let o = run(&["table", &group("s4")]);
    assert_eq!(o.status.code(), Some(0));
    let t = parse_table(std::str::from_utf8(&o.stdout).unwrap()).unwrap();
    let mut d = t.table.degrees();
    d.sort_unstable();
    assert_eq!(d, vec![1, 1, 2, 3, 3]);
}

#[test]
fn table_of_trivial_group_to_file() {
    let dir = scratch("c1");
    let out = dir.join("c1.table.json");
    let o = run(&["table", &group("c1"), "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let t = parse_table(&fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(t.table.num_classes(), 1);
    assert_eq!(t.table.degrees(), vec![1]);
}

#[test]
fn oversized_group_is_refused() {
    let dir = scratch("big");
    let path = dir.join("s11.json");
    let gens = "[[2,1,3,4,5,6,7,8,9,10,11],[2,3,4,5,6,7,8,9,10,11,1]]";
    fs::write(&path, format!("{{\"format\":\"v1\",\"name\":\"s11\",\"kind\":\"perm\",\"degree\":11,\"generators\":{gens}}}"))
        .unwrap();
    let o = run(&["table", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("2000000"), "{err}");
}

fn blocks(name: &str, p: &str) -> Vec<Value> {
    let o = run(&["blocks", &group(name), "-p", p]);
    assert_eq!(o.status.code(), Some(0));
    json(&o)["decompositions"][0]["blocks"].as_array().unwrap().clone()
}

#[test]
fn blocks_commands() {
    let sl = blocks("sl2_9", "3");
    let zero: Vec<&Value> = sl.iter().filter(|b| b["defect"] == 0).collect();
    assert_eq!(zero.len(), 1);
    assert_eq!(zero[0]["degrees"], serde_json::json!(["9"]));
    assert!(sl.iter().all(|b| b["defect"] == 0 || b["defect"] == 2));

    assert_eq!(blocks("s3", "2").len(), 2);
    let s4 = blocks("s4", "5");
    assert_eq!(s4.len(), 5);
    assert!(s4.iter().all(|b| b["defect"] == 0));
}

#[test]
fn check_commands() {
    let o = run(&["check", "dagger", &group("gl23"), "-p", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let r = json(&o);
    assert_eq!(r["reports"][0]["status"], "fail");
    assert_eq!(r["reports"][0]["violations"][0]["lhs"], "8");

    assert_eq!(run(&["check", "wilde", &group("s5")]).status.code(), Some(0));
    let o = run(&["check", "condition-star", &group("sl2_5")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["reports"][0]["status"], "pass");
    assert_eq!(run(&["check", "a10"]).status.code(), Some(0));
    assert_eq!(run(&["check", "spin-vanishing", &group("2s5")]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["check", "dagger", &group("s3"), "-p", "4"]).status.code(), Some(2));
    assert_eq!(run(&["check", "dagger"]).status.code(), Some(2));
    assert_eq!(run(&["table", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(run(&["sym", "5", "6", "blocks"]).status.code(), Some(2));
}

#[test]
fn default_survey_matches_expectations() {
    let corpus_dir = corpus().join("groups");
    let o = run(&["survey", "-q", "--corpus", corpus_dir.to_str().unwrap()]);
    let err = String::from_utf8_lossy(&o.stderr);
    assert_eq!(o.status.code(), Some(0), "{err}");
    assert!(err.contains("0 deviations"), "{err}");
}

#[test]
fn flipped_expectation_fails_the_survey() {
    let dir = scratch("flip");
    fs::copy(corpus().join("groups/gl23.json"), dir.join("groups/gl23.json")).unwrap();
    let exp = r#"{"format":"v1","entries":[
        {"group":"gl23","check":"wilde","status":"pass"},
        {"group":"gl23","check":"dagger","prime":2,"status":"pass"},
        {"group":"gl23","check":"dagger","prime":3,"status":"pass"}]}"#;
    fs::write(dir.join("expectations.json"), exp).unwrap();
    let groups = dir.join("groups").display().to_string();
    let args = ["survey", "-q", "--corpus", &groups, "--checks", "wilde,dagger"];
    let o = run(&args);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("gl23 dagger p=2: expected PASS, got FAIL"));

    let fixed = exp.replacen("\"prime\":2,\"status\":\"pass\"", "\"prime\":2,\"status\":\"fail\"", 1);
    fs::write(dir.join("expectations.json"), fixed).unwrap();
    assert_eq!(run(&args).status.code(), Some(0));
}

#[test]
fn survey_on_cyclic_group_with_all_primes() {
    let dir = scratch("c12");
    fs::copy(corpus().join("groups/c12.json"), dir.join("groups/c12.json")).unwrap();
    let out = dir.join("report.json");
    let o = run(&[
        "survey",
        "-q",
        "--corpus",
        dir.join("groups").to_str().unwrap(),
        "-p",
        "all",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let r: Value = serde_json::from_str(&fs::read_to_string(out).unwrap()).unwrap();
    let reports = r["reports"].as_array().unwrap();
    assert!(reports.iter().filter(|r| r["group"] == "c12").all(|r| r["status"] != "fail"));
    assert!(reports.iter().any(|r| r["prime"] == 3));
}

#[test]
fn corpus_from_environment() {
    let dir = scratch("env");
    fs::copy(corpus().join("groups/s3.json"), dir.join("groups/s3.json")).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_blockcheck"))
        .args(["survey", "-q", "--checks", "wilde"])
        .env("BLOCKCHECK_CORPUS", dir.join("groups"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["reports"][0]["group"], "s3");
}

#[test]
fn sym_commands() {
    let o = run(&["sym", "30", "7", "dagger-verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["reports"][0]["status"], "pass");

    let o = run(&["sym", "10", "2", "blocks"]);
    let b = json(&o)["blocks"].as_array().unwrap().clone();
    let cores: Vec<&str> = b.iter().map(|x| x["core"].as_str().unwrap()).collect();
    assert_eq!(cores.len(), 3);
    for c in ["()", "(3,2,1)", "(4,3,2,1)"] {
        assert!(cores.contains(&c), "{cores:?}");
    }
    let members: usize = b.iter().map(|x| x["members"].as_array().unwrap().len()).sum();
    assert_eq!(members, 42);

    let o = run(&["sym", "5", "3", "mn-table"]);
    assert_eq!(json(&o)["values"].as_array().unwrap().len(), 7);
}

#[test]
fn spin_degrees_match_the_shipped_cover() {
    let o = run(&["sym", "6", "3", "spin-degrees"]);
    let formula: Vec<(u64, usize)> = json(&o)["double_cover_symmetric"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| (x["degree"].as_str().unwrap().parse().unwrap(), x["multiplicity"].as_u64().unwrap() as usize))
        .collect();
    let t = run(&["table", &group("2s6")]);
    let t = parse_table(std::str::from_utf8(&t.stdout).unwrap()).unwrap().table;
    let mut faithful: Vec<u64> = (0..t.num_classes()).filter(|&c| t.is_faithful(c)).map(|c| t.degree(c)).collect();
    faithful.sort_unstable();
    let expanded: Vec<u64> = formula.iter().flat_map(|&(d, m)| std::iter::repeat_n(d, m)).collect();
    assert_eq!(faithful, expanded);
}

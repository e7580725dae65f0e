use std::fs;
use std::path::{Path, PathBuf};

use blockcheck::checks::{Check, Status};
use blockcheck::io::{report_to_json, Expectation, ExpectationsFile, ReportFile};
use blockcheck::survey::{run_survey, PrimeSelection, SurveyConfig};
use blockcheck::Error;

fn shipped(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

/// A scratch corpus holding copies of some shipped group files.
fn scratch(tag: &str, groups: &[&str]) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("blockcheck-{tag}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(dir.join("groups")).unwrap();
    for g in groups {
        fs::copy(shipped(&format!("groups/{g}.json")), dir.join(format!("groups/{g}.json"))).unwrap();
    }
    dir
}

fn config(dir: &Path) -> SurveyConfig {
    let mut c = SurveyConfig::new(dir.join("groups"));
    c.checks = vec![Check::Wilde, Check::Dagger, Check::BrauerNesbitt];
    c.jobs = Some(2);
    c
}

fn expectations_from(reports: &[blockcheck::checks::CheckReport]) -> ExpectationsFile {
    ExpectationsFile {
        format: "v1".into(),
        entries: reports
            .iter()
            .map(|r| Expectation {
                group: r.group.clone(),
                check: r.check,
                prime: r.prime,
                status: r.status,
                witness: None,
            })
            .collect(),
    }
}

#[test]
fn cyclic_group_passes_vacuously() {
    let dir = scratch("c12", &["c12"]);
    let out = run_survey(&config(&dir), &|_| {}).unwrap();
    assert_eq!(out.reports.len(), 1 + 2 * 2);
    assert!(out.reports.iter().all(|r| r.status == Status::Pass && r.violations.is_empty()));
}

#[test]
fn flipped_expectation_is_a_deviation() {
    let dir = scratch("flip", &["gl23", "s3"]);
    let mut c = config(&dir);
    let first = run_survey(&c, &|_| {}).unwrap();
    let mut exp = expectations_from(&first.reports);
    fs::write(dir.join("expectations.json"), exp.to_json()).unwrap();
    c.expectations = Some(dir.join("expectations.json"));
    assert!(run_survey(&c, &|_| {}).unwrap().ok());

    let e = exp.entries.iter_mut().find(|e| e.group == "gl23" && e.check == Check::Dagger).unwrap();
    assert_eq!(e.status, Status::Fail);
    e.status = Status::Pass;
    fs::write(dir.join("expectations.json"), exp.to_json()).unwrap();
    let out = run_survey(&c, &|_| {}).unwrap();
    assert_eq!(out.deviations.len(), 1);
    assert_eq!(out.deviations[0].group, "gl23");
}

#[test]
fn witness_mismatch_and_missing_groups() {
    let dir = scratch("witness", &["gl23", "s3"]);
    let mut c = config(&dir);
    c.primes = PrimeSelection::List(vec![2]);
    let first = run_survey(&c, &|_| {}).unwrap();
    let mut exp = expectations_from(&first.reports);
    let e = exp.entries.iter_mut().find(|e| e.status == Status::Fail).unwrap();
    e.witness = Some(blockcheck::io::Witness { defect: 2, exponent: 8 });
    fs::write(dir.join("e.json"), exp.to_json()).unwrap();
    c.expectations = Some(dir.join("e.json"));
    assert!(run_survey(&c, &|_| {}).unwrap().ok());

    exp.entries.iter_mut().find(|e| e.witness.is_some()).unwrap().witness =
        Some(blockcheck::io::Witness { defect: 1, exponent: 8 });
    exp.entries.retain(|e| e.group != "s3");
    fs::write(dir.join("e.json"), exp.to_json()).unwrap();
    let out = run_survey(&c, &|_| {}).unwrap();
    // one witness mismatch, three unexpected s3 reports, s3 missing entirely
    assert_eq!(out.deviations.len(), 5, "{:?}", out.deviations);
}

#[test]
fn unknown_group_is_rejected() {
    let dir = scratch("unknown", &["s3"]);
    let mut c = config(&dir);
    let exp = ExpectationsFile {
        format: "v1".into(),
        entries: vec![Expectation {
            group: "nope".into(),
            check: Check::Wilde,
            prime: None,
            status: Status::Pass,
            witness: None,
        }],
    };
    fs::write(dir.join("e.json"), exp.to_json()).unwrap();
    c.expectations = Some(dir.join("e.json"));
    assert!(matches!(run_survey(&c, &|_| {}), Err(Error::Parse(_))));
}

#[test]
fn shipped_expectations_cover_every_group() {
    let exp = ExpectationsFile::load(shipped("expectations.json")).unwrap();
    for entry in fs::read_dir(shipped("groups")).unwrap() {
        let name = entry.unwrap().path().file_stem().unwrap().to_string_lossy().into_owned();
        assert!(exp.entries.iter().any(|e| e.group == name), "{name}");
    }
    let gl = exp.find("gl23", Check::Dagger, Some(2)).unwrap();
    assert_eq!(gl.status, Status::Fail);
    assert_eq!(gl.witness.as_ref().unwrap().exponent, 8);
}

#[test]
fn reports_are_deterministic_and_parse_back() {
    let dir = scratch("det", &["s4", "q8", "a5"]);
    let c = config(&dir);
    let a = report_to_json(&run_survey(&c, &|_| {}).unwrap().reports);
    let mut c1 = c.clone();
    c1.jobs = Some(1);
    let b = report_to_json(&run_survey(&c1, &|_| {}).unwrap().reports);
    assert_eq!(a, b);
    let parsed: ReportFile = serde_json::from_str(&a).unwrap();
    assert_eq!(parsed.summary.len(), parsed.reports.len());
    let empty: ReportFile = serde_json::from_str(&report_to_json(&[])).unwrap();
    assert!(empty.reports.is_empty());
}

#[test]
fn duplicate_expectations_are_rejected() {
    let e = r#"{"format":"v1","entries":[
        {"group":"s3","check":"wilde","status":"pass"},
        {"group":"s3","check":"wilde","status":"fail"}]}"#;
    assert!(matches!(ExpectationsFile::parse(e), Err(Error::Parse(_))));
}

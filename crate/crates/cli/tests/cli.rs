use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn multicirc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multicirc"))
        .args(args)
        .env_remove("ISOREG_JOBS")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn clebsch_is_3_isoregular() {
    let out = multicirc(&["check", "isoreg", "clebsch", "--k", "3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let vals = &v["profile"]["valencies"];
    assert_eq!(vals["3K1"], 1);
    for t in ["K3", "K1,2", "K2+K1"] {
        assert_eq!(vals[t], 0, "{t}");
    }
    assert_eq!(v["graph"], "OhdHKeAOT?ICIKDM@R_I[");
}

#[test]
fn shrikhande_has_k12_witness() {
    let out = multicirc(&["check", "isoreg", "shrikhande-a", "--k", "3"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    let k12 = v["violations"].as_array().unwrap().iter().find(|w| w["iso_type"] == "K1,2").expect("K1,2 violation");
    let mut vals = [k12["first_valency"].as_u64().unwrap(), k12["second_valency"].as_u64().unwrap()];
    vals.sort();
    assert_eq!(vals, [0, 1]);
}

#[test]
fn certify_and_replay() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bicirc.json");
    let out = multicirc(&["certify", "bicirc-odd", "--range", "2..200", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let batch = read_json(&path);
    let certs = batch["certificates"].as_array().unwrap();
    assert_eq!(certs.len(), 199);
    assert!(certs.iter().all(|c| c["verdict"]["verdict"] == "CONTRADICTION"));

    let out = multicirc(&["replay", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["report"]["failures"].as_array().unwrap().len(), 0);

    // flip one recorded fact
    let mut tampered = batch.clone();
    let fact = &mut tampered["certificates"][0]["steps"][0]["facts"][0]["holds"];
    *fact = Value::Bool(!fact.as_bool().unwrap());
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&tampered).unwrap()).unwrap();
    let out = multicirc(&["replay", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(!json(&out)["report"]["failures"].as_array().unwrap().is_empty());
}

#[test]
fn family_c_small_m_closes_by_enumeration() {
    let out = multicirc(&["certify", "family-c", "--range", "3..9"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let certs = v["certificates"].as_array().unwrap();
    assert!(certs.iter().all(|c| c["verdict"]["verdict"] == "CONTRADICTION"));
    let last = certs[0]["steps"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(last["kind"], "GRAPH_MEASUREMENT");
    assert_eq!(last["facts"][0]["check"]["kind"], "bicirculant-srg");
}

#[test]
fn negative_ranges_parse() {
    let out = multicirc(&["certify", "tri1", "--range", "-3..3"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["certificates"].as_array().unwrap().len(), 7);
}

#[test]
fn search_output_is_independent_of_jobs() {
    let run = |jobs: &str| {
        let out = multicirc(&["--jobs", jobs, "search", "bicirc", "--n", "8", "--iso3"]);
        assert_eq!(code(&out), 0);
        out.stdout
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    let text = String::from_utf8(one).unwrap();
    let summary: Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(summary["record"], "summary");
    assert_eq!(summary["stats"]["complement_classes"], 2);

    let env_run = Command::new(env!("CARGO_BIN_EXE_multicirc"))
        .args(["search", "bicirc", "--n", "8", "--iso3"])
        .env("ISOREG_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(env_run.stdout, text.as_bytes());
}

#[test]
fn search_replays() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("petersen.jsonl");
    let out = multicirc(&["search", "bicirc", "--n", "5", "--params", "10,3,0,1", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let out = multicirc(&["replay", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["survivors"], 10);
}

#[test]
fn confirm_odd_run() {
    let out = multicirc(&["search", "bicirc", "--n", "7", "--confirm"]);
    assert_eq!(code(&out), 0);
    let out = multicirc(&["search", "bicirc", "--n", "8", "--confirm"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(code(&multicirc(&["check", "srg", "no-such-graph"])), 2);
    assert_eq!(code(&multicirc(&["check", "srg", "bi:n=8;S=1;Sp=3,-3;T=0"])), 2);
    assert_eq!(code(&multicirc(&["check", "srg", "~~~~"])), 2);
    assert_eq!(code(&multicirc(&["search", "bicirc", "--n", "40"])), 2);
    assert_eq!(code(&multicirc(&["certify", "family-z", "--range", "1..2"])), 2);
    assert_eq!(code(&multicirc(&["check", "tvertex", "petersen", "--t", "7"])), 2);
}

#[test]
fn build_formats() {
    let out = multicirc(&["build", "bi:n=5;S=1,-1;Sp=2,-2;T=0"]);
    assert_eq!(code(&out), 0);
    let g6 = String::from_utf8(out.stdout).unwrap();
    let petersen = multicirc(&["build", "petersen"]);
    assert_eq!(g6, String::from_utf8(petersen.stdout).unwrap());

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p.g6");
    std::fs::write(&file, &g6).unwrap();
    let out = multicirc(&["check", "srg", file.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["params"]["mu"], 1);

    let dot = multicirc(&["build", "c5", "--format", "dot"]);
    assert!(String::from_utf8(dot.stdout).unwrap().starts_with("graph"));
    let adj = multicirc(&["build", "c5", "--format", "json"]);
    assert_eq!(json(&adj)["edges"].as_array().unwrap().len(), 5);
}

#[test]
fn tvertex_and_local3() {
    let out = multicirc(&["check", "tvertex", "petersen", "--t", "4"]);
    assert_eq!(code(&out), 0);
    assert!(json(&out)["graph"].is_string());
    let out = multicirc(&["check", "local3", "t6-complement", "--vertex", "0"]);
    assert_eq!(code(&out), 1);
    let out = multicirc(&["check", "local3", "clebsch"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["vertices"].as_array().unwrap().len(), 16);
}

#[test]
fn params_and_families() {
    let out = multicirc(&["params", "solve", "16", "5", "0", "2"]);
    assert_eq!(code(&out), 0);
    let sols = json(&out)["solutions"].clone();
    assert_eq!(sols.as_array().unwrap().len(), 1);
    assert_eq!((sols[0]["q"].as_u64(), sols[0]["v"].as_u64()), (Some(0), Some(1)));
    assert_eq!(code(&multicirc(&["params", "solve", "6", "5", "4", "0"])), 2);

    let out = multicirc(&["params", "even", "2", "--family", "c"]);
    assert_eq!(json(&out)["r"], 4);

    let out = multicirc(&["families", "bicirc-odd", "--max", "3"]);
    let rows = json(&out);
    assert_eq!(rows[1]["params"]["n"], 26);
    let out = multicirc(&["families", "leung-ma", "--max", "2"]);
    assert_eq!(json(&out).as_array().unwrap().len(), 1 + 4);
    let out = multicirc(&["families", "tri", "--max", "1"]);
    assert_eq!(json(&out).as_array().unwrap().len(), 6);
}

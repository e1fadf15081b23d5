use std::process::{Command, Output};

use serde_json::Value;

fn bott(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bott"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn qf_hyperbolic_plane() {
    let out = bott(&["qf", "1,-1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["rank"], 2);
    assert_eq!(v["disc"], -1);
    assert_eq!(v["hasse_minus"], serde_json::json!([]));
    assert_eq!(v["orientable"], true);
}

#[test]
fn qf_rank_one_and_negative_definite() {
    let v = json(&bott(&["qf", "1"]));
    assert_eq!((v["rank"].clone(), v["orientable"].clone()), (1.into(), false.into()));
    let v = json(&bott(&["qf", "-1,-1"]));
    assert_eq!(v["hasse_minus"], serde_json::json!([2, "inf"]));
    assert_eq!(v["bw"]["hasse_minus"], serde_json::json!([2, "inf"]));
}

#[test]
fn qf_parse_error_exits_2() {
    let out = bott(&["qf", "1,zz"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    assert_eq!(bott(&["qf", "1,0"]).status.code(), Some(2));
    assert_eq!(bott(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn bott_modes() {
    let v = json(&bott(&["bott", "L1", "-k", "3"]));
    assert_eq!(v["class"], "1 + L1 + L1^2");
    let v = json(&bott(&["bott", "L1 - 1", "-k", "2"]));
    assert_eq!(v["class"], "1 + x1/2");
    let v = json(&bott(&["bott", "L1 + L2", "-k", "2", "--mode", "cyclotomic"]));
    assert_eq!(v["class"], "1 + L1 + L2 + L1*L2");
}

#[test]
fn bott_sphere_reports_both_values() {
    let out = bott(&["bott", "--mode", "sphere", "-r", "2", "-k", "3"]);
    let v = json(&out);
    assert_eq!(v["closed_form"], "5/9");
    assert_eq!(v["coefficient"], "2/3");
    assert_eq!(v["matches"], false);
    assert_eq!(out.status.code(), Some(1));
    let out = bott(&["bott", "--mode", "sphere", "-r", "1", "-k", "4"]);
    assert_eq!(json(&out)["matches"], true);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(bott(&["bott", "--mode", "sphere", "-k", "3"]).status.code(), Some(2));
}

#[test]
fn serre_sqrt_of_hyperbolic_plane() {
    let v = json(&bott(&["serre-sqrt", "--lambdas", "2,1", "-k", "3"]));
    assert_eq!(v["value"], "3");
    assert_eq!(v["sign_ambiguous"], false);
    let v = json(&bott(&["serre-sqrt", "L1 + L1^-1", "-k", "3"]));
    assert_eq!(v["value"], "1 + L1 + L1^-1");
    assert_eq!(bott(&["serre-sqrt", "L1 + L2", "-k", "3"]).status.code(), Some(1));
}

#[test]
fn clifford_check_reports_membership() {
    let out = bott(&["clifford-check", "--form", "1,-1", "--element", "e1 + 2*e2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["volume"]["squares_one"], true);
    assert_eq!(v["membership"]["member"], true);
    let v = json(&bott(&["clifford-check", "--form", "1,1,1"]));
    assert!(v["volume"].is_null());
}

#[test]
fn spin_lift_and_adams_module() {
    let out = bott(&["spin-lift", "--form", "1,-1,1,-1", "-k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["norms"], serde_json::json!(["1"]));
    let out = bott(&["adams-module", "-m", "1", "-k", "3", "--opposite"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["rho_k"].clone(), v["expected"].clone()), ("3".into(), 3.into()));
    assert_eq!(v["eigen_dims"].as_array().unwrap().len(), 3);
    let capped = bott(&["adams-module", "-m", "2", "-k", "3", "--max-tensor", "32"]);
    assert_eq!(capped.status.code(), Some(1));
}

#[test]
fn verify_is_deterministic_and_written_to_file() {
    let dir = std::env::temp_dir().join(format!("bott-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    for p in [&a, &b] {
        let out = bott(&["verify", "--suite", "symbols", "--seed", "11", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let v: Value = serde_json::from_slice(&std::fs::read(&a).unwrap()).unwrap();
    assert_eq!(v["suite"], "symbols");
    assert_eq!(v["seed"], 11);
    let ids: Vec<&str> = v["cases"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_spheres_fails_with_report() {
    let out = bott(&["verify", "--suite", "spheres"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["cases"].as_array().unwrap().len(), 24);
    assert!(v["failed"].as_u64().unwrap() > 0);
    assert_eq!(bott(&["verify", "--suite", "bogus"]).status.code(), Some(2));
}

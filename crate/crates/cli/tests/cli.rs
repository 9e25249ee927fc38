use std::process::{Command, Output};

use serde_json::Value;

fn lefschetz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lefschetz"))
        .args(args)
        .env_remove("WLP_NODE_BUDGET")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = lefschetz(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn stdout(args: &[&str]) -> String {
    let out = lefschetz(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn analyze_bad_prime() {
    let r = json(&["analyze", "4", "6", "6", "1", "1", "3"]);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["wlp"]["det_n"], "11");
    assert_eq!(r["wlp"]["bad_primes"], serde_json::json!(["11"]));
    assert_eq!(r["wlp"]["always_fails"], false);
}

#[test]
fn analyze_always_fails() {
    let r = json(&["analyze", "5", "5", "3", "2", "2", "1"]);
    assert_eq!(r["wlp"]["always_fails"], true);
    assert_eq!(r["hilbert"]["h"], serde_json::json!([1, 3, 6, 9, 12, 12, 9, 4, 1]));
    assert_eq!(r["hilbert"]["multiplicity"], 57);
}

#[test]
fn analyze_non_semistable() {
    let r = json(&["analyze", "3", "3", "3", "2", "2", "2"]);
    assert_eq!(r["stats"]["semistable"], false);
    let c = &r["characteristics"][0];
    assert_eq!(c["characteristic"], 0);
    assert_eq!(c["wlp"], true);
    let s = &c["splitting"];
    assert_eq!((s["p"].as_i64(), s["q"].as_i64(), s["r"].as_i64()), (Some(4), Some(5), Some(6)));
    assert!(stdout(&["analyze", "3", "3", "3", "2", "2", "2"]).contains("WLP holds at char 0"));
}

#[test]
fn analyze_per_characteristic() {
    let r = json(&["analyze", "4", "6", "6", "1", "1", "3", "--char", "11", "--char", "0"]);
    let chars = r["characteristics"].as_array().unwrap();
    assert_eq!(chars[0]["characteristic"], 0);
    assert_eq!(chars[0]["wlp"], true);
    assert_eq!(chars[1]["characteristic"], 11);
    assert_eq!(chars[1]["wlp"], false);
    assert_eq!(chars[1]["splitting"]["conditional"], true);
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "analyze", "6", "7", "8", "3", "3", "3"];
    assert_eq!(lefschetz(&args).stdout, lefschetz(&args).stdout);
    let scan = ["scan", "--max-s2", "5", "--det-zero"];
    assert_eq!(lefschetz(&scan).stdout, lefschetz(&scan).stdout);
}

#[test]
fn scan_minimal_level_type_three_det_zero() {
    let r = json(&["scan", "--level", "--type", "3", "--det-zero", "--minimize", "multiplicity"]);
    assert_eq!(r["matches"][0]["params"], serde_json::json!([3, 3, 3, 1, 1, 1]));
    assert_eq!(r["minimum"]["multiplicity"], 19);
    assert_eq!(r["count"], 1);
}

#[test]
fn scan_minimal_nonlevel_type_three_det_one() {
    let r = json(&["scan", "--nonlevel", "--type", "3", "--det-one", "--minimize", "multiplicity"]);
    assert_eq!(r["matches"][0]["params"], serde_json::json!([2, 2, 4, 1, 1, 2]));
    assert_eq!(r["minimum"]["multiplicity"], 14);
    // the other matches are relabelings of the first
    for m in r["matches"].as_array().unwrap() {
        let mut v: Vec<i64> = m["params"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
        v[..3].sort_unstable();
        v[3..].sort_unstable();
        assert_eq!(v, vec![2, 2, 4, 1, 1, 2]);
    }
}

#[test]
fn scan_det_family() {
    let r = json(&["scan", "--det-equals", "3", "--shape", "det-n-family", "--max-s2", "6"]);
    let ms = r["matches"].as_array().unwrap();
    assert!(ms.iter().any(|m| m["params"] == serde_json::json!([3, 3, 5, 0, 1, 3])));
    assert!(ms.iter().all(|m| m["det_n"] == "3"));
}

#[test]
fn scan_without_bound_is_rejected() {
    let out = lefschetz(&["--json", "scan", "--level"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "invalid_input");
}

#[test]
fn tilings_count_and_signed() {
    assert_eq!(stdout(&["tilings", "4", "6", "6", "1", "1", "3", "--count"]).trim(), "11");
    let r = json(&["tilings", "5", "5", "3", "2", "2", "1", "--signed"]);
    assert_eq!(r["signed_total_paths"], "0");
    assert_eq!(r["signed_total_matchings"], "0");
    let buckets = r["buckets"].as_array().unwrap();
    let plus: u64 = buckets.iter().filter(|b| b["sign"] == 1).map(|b| b["count"].as_str().unwrap().parse::<u64>().unwrap()).sum();
    let minus: u64 = buckets.iter().filter(|b| b["sign"] == -1).map(|b| b["count"].as_str().unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(plus, minus);
    assert!(plus > 0);
}

#[test]
fn tilings_list_matches_count() {
    let r = json(&["tilings", "4", "6", "6", "1", "1", "3", "--list"]);
    assert_eq!(r["tilings"].as_array().unwrap().len(), 11);
}

#[test]
fn tilings_render_unit_hexagon() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hex.svg");
    let p = path.to_str().unwrap();
    stdout(&["tilings", "2", "2", "2", "1", "1", "1", "--render", p]);
    let svg = std::fs::read_to_string(&path).unwrap();
    let triangles = svg.matches(r#"class="up""#).count() + svg.matches(r#"class="down""#).count();
    assert_eq!(triangles, 6);
    assert_eq!(svg.matches(r#"class="lozenge""#).count(), 3);
    assert!(svg.starts_with("<svg"));
}

#[test]
fn budget_exceeded_exits_two() {
    let out = lefschetz(&["--json", "tilings", "6", "7", "8", "3", "3", "3", "--count", "--budget", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "budget_exceeded");

    let out = Command::new(env!("CARGO_BIN_EXE_lefschetz"))
        .args(["tilings", "6", "7", "8", "3", "3", "3", "--count"])
        .env("WLP_NODE_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_input_exits_one() {
    for args in [
        &["analyze", "1", "1", "1", "1", "0", "0"][..],
        &["analyze", "1", "2"],
        &["formula", "nope"],
        &["formula", "mac", "1", "1"],
        &["tilings", "3", "3", "3", "2", "2", "2", "--count"],
        &["analyze", "4", "6", "6", "1", "1", "3", "--char", "8"],
    ] {
        assert_eq!(lefschetz(args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn formulas() {
    assert_eq!(stdout(&["formula", "mac", "1", "1", "5"]).trim(), "6");
    assert_eq!(stdout(&["formula", "hyper", "6"]).trim(), "34560");
    assert_eq!(
        stdout(&["formula", "f", "3", "3"]).trim(),
        "(c+1)(c+2)^2(c+3)^3(c+4)^2(c+5)"
    );
    assert!(stdout(&["formula", "symmetry-conjecture", "4", "4", "7", "2", "2", "2"]).starts_with("CONJECTURE"));
    let r = json(&["formula", "closed-det", "2", "2", "3", "1", "1", "0"]);
    assert_eq!(r["case_tag"], "C_ZERO");
    assert_eq!(r["value"], "1");
}

#[test]
fn interpolation_reproduces_quadratic_factor() {
    let r = json(&["formula", "interpolate", "1", "4", "7", "1", "4", "7", "odd", "15"]);
    assert!(r["factored"].as_str().unwrap().contains("(t^2 + 6t - 1)"));
}

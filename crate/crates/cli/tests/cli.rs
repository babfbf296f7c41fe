use std::process::{Command, Output};

use serde_json::Value;

fn g2skein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2skein"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn pq_prints_p2() {
    let o = g2skein(&["pq", "--k", "2", "--which", "P"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "x^2 - 2*x - 2*y\n");
}

#[test]
fn pq_json_and_q2() {
    let o = g2skein(&["pq", "--k", "2", "--which", "Q", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["poly"], "-2*x^3 + 2*x^2 + 4*x*y + y^2 + 2*x");
    assert_eq!(v["bidegree"], serde_json::json!([4, 2]));
}

#[test]
fn pq_output_reparses() {
    let o = g2skein(&["pq", "--k", "5", "--which", "Q"]);
    let printed = stdout(&o);
    let p = g2skein::xyring::XYPoly::parse(&g2skein::qscalar::Integers, printed.trim()).unwrap();
    assert_eq!(p, *g2skein::xyring::q_int(5));
}

#[test]
fn verify_transparency_passes() {
    let o = g2skein(&["verify", "transparency", "--n", "5", "--m", "10"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS"));
}

#[test]
fn verify_failure_exits_one() {
    // P_5 is transparent at m = 10, so the negative control fails
    let o = g2skein(&["verify", "not_transparent", "--k", "5", "--m", "10", "--json"]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["status"], "fail");
    assert!(v[0]["witness"].is_string());
}

#[test]
fn verify_error_exits_two() {
    let o = g2skein(&["verify", "transparency", "--n", "2", "--m", "4"]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("ERROR"));
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["pq", "--k", "2"][..],
        &["pq", "--k", "2", "--which", "R"],
        &["verify", "no_such_check"],
        &["verify", "tilde", "--m", "10"],
        &["verify", "all", "--seed", "3"],
        &["search", "--bound", "10"],
        &["defect", "x^^2"],
        &["fmap", "l1"],
        &["frobnicate"],
    ] {
        let o = g2skein(args);
        assert_eq!(code(&o), 64, "{args:?}");
        let err = String::from_utf8(o.stderr).unwrap();
        assert!(err.contains("Usage"), "{args:?}: {err}");
    }
}

#[test]
fn defect_of_transparent_and_generic() {
    let p5 = stdout(&g2skein(&["pq", "--k", "5", "--which", "P"]));
    let o = g2skein(&["defect", p5.trim(), "--m", "10"]);
    assert!(stdout(&o).contains("= 0 (transparent)"));
    assert_eq!(code(&o), 0);
    let o = g2skein(&["defect", "x", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["transparent"], false);
    assert_eq!(v["field"], "Q(q)");
}

#[test]
fn defect_reports_vanishing_denominators() {
    let o = g2skein(&["defect", "x", "--m", "8"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8(o.stderr).unwrap().contains("denominator vanishes"));
}

#[test]
fn fmap_of_x1_matches_estar() {
    let x1 = "l1 + l2 + l1*l2 + 1 + l1^-1*l2^-1 + l2^-1 + l1^-1";
    let o = g2skein(&["fmap", x1, "--json"]);
    assert_eq!(code(&o), 0);
    let f: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let o = g2skein(&["estar", "--json"]);
    let e: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(f["f_up"], e["x^*"]);
    assert_eq!(f["f_down"], e["x_*"]);
}

#[test]
fn search_at_m10_and_out_file() {
    let dir = std::env::temp_dir().join(format!("g2skein-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("search.json");
    let o = g2skein(&["search", "--m", "10", "--bound", "10,10", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["dim"], 4);
    assert_eq!(v["candidates"], 36);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_output_is_stable() {
    let args = ["verify", "a11_presentation", "--samples", "10", "--seed", "4", "--json"];
    let strip = |o: Output| {
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        v[0]["elapsed_ms"] = Value::from(0);
        v
    };
    assert_eq!(strip(g2skein(&args)), strip(g2skein(&args)));
}

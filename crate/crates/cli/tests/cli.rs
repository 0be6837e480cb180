use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubic-moduli"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("one JSON document")
}

#[test]
fn eval_reports_the_canonical_point() {
    let out = run(&["eval", "--x", "2,3,4,5"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "eval --x 2,3,4,5");
    assert_eq!(v["values"][13], "-24");
    assert_eq!(v["point"].as_array().unwrap().len(), 40);
    assert_eq!(v["point"][0], "6");
}

#[test]
fn eval_matrix_agrees_with_eval() {
    let m = "1,0,0,1,1,1, 0,1,0,1,2,3, 0,0,1,1,4,5";
    let a = json(&run(&["eval-matrix", "--matrix", m]));
    let b = json(&run(&["eval", "--x", "2,3,4,5"]));
    assert_eq!(a["point"].as_array().unwrap().len(), 40);
    assert_eq!(a["point"], b["point"]);
}

#[test]
fn orbit_of_a_split_label() {
    let v = json(&run(&["orbit", "--label", "(123,456)"]));
    assert_eq!(v["size"], 40);
    let mut coords: Vec<u64> = v["coordinates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_u64().unwrap())
        .collect();
    coords.sort_unstable();
    assert_eq!(coords, (1..=40).collect::<Vec<_>>());
}

#[test]
fn membership_of_images_and_unit_vectors() {
    let v = json(&run(&["membership", "--x", "2,3,4,5"]));
    assert_eq!(v["verdict"]["member"], true);
    let e1 = std::iter::once("1")
        .chain(std::iter::repeat_n("0", 39))
        .collect::<Vec<_>>()
        .join(",");
    let v = json(&run(&["membership", "--point", &e1]));
    assert_eq!(v["verdict"]["member"], false);
}

#[test]
fn fiber_over_a_rational_base() {
    let v = json(&run(&["fiber", "--base", "2,-1,-2,-2,-8"]));
    assert_eq!(v["fiber"]["discriminant"], "746496");
    assert_eq!(v["fiber"]["d"], "1");
    assert_eq!(v["fiber"]["points"].as_array().unwrap().len(), 2);
}

#[test]
fn prolong_and_limit() {
    let v = json(&run(&["prolong", "--z", "2,3,5"]));
    let p = v["point"].as_array().unwrap();
    assert!(p[..10].iter().all(|c| c == "0"));
    let a = json(&run(&["limit", "--xi", "1,1,1,1"]));
    let b = json(&run(&["limit", "--xi", "2,3,5,7"]));
    assert_eq!(a["point"], b["point"]);
}

#[test]
fn export_relations() {
    let v = json(&run(&["export-relations"]));
    assert_eq!(v["linear"].as_array().unwrap().len(), 270);
    assert_eq!(v["cubic"].as_array().unwrap().len(), 240);
    assert_eq!(v["pivots"].as_array().unwrap().len(), 10);
    assert_eq!(v["pivot_expressions"].as_object().unwrap().len(), 30);
}

#[test]
fn verify_linear_section() {
    let out = run(&["verify", "linear"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["derived"]["linear_rank"], 30);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn verify_reports_are_deterministic() {
    let args = ["verify", "consistency", "--seed", "9", "--samples", "5"];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("cubic-moduli-{}.json", std::process::id()));
    let out = run(&["eval", "--x", "2,3,4,5", "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "eval --x 2,3,4,5");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn bad_input_exits_with_status_two() {
    for args in [
        &["eval", "--x", "1,2,3"][..],
        &["eval", "--x", "0,3,4,5"],
        &["eval", "--x", "1/0,2,3,4"],
        &["orbit", "--label", "(12,34)"],
        &["fiber", "--base", "1,2,3,5,7"],
        &["prolong", "--z", "1,2,3"],
        &["limit", "--xi", "0,0,0,0"],
        &["verify", "nonsense"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(json(&out)["error"].is_string(), "{args:?}");
    }
}

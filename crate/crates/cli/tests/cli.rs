use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn thuelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thuelab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn status(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn pi_examples() {
    for (desc, want) in [("K4", 4), ("E5", 1), ("lex(S2,P3)", 5), ("k2,3", 3)] {
        let out = thuelab(&["pi", desc, "--verify"]);
        assert_eq!(status(&out), 0, "{desc}");
        let v = json(&out);
        assert_eq!(v["pi"], want, "{desc}");
        assert_eq!(v["verified"], true);
        assert_eq!(
            v["colouring"]["colours"].as_array().unwrap().len(),
            v["n"].as_u64().unwrap() as usize
        );
    }
}

#[test]
fn pi_csv() {
    let out = thuelab(&["pi", "P4", "--format", "csv"]);
    assert_eq!(status(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("graph,graph6,n,pi,colours,verified"));
    assert!(lines.next().unwrap().starts_with("P4,Ch,4,3,"));
}

#[test]
fn pi_errors() {
    assert_eq!(status(&thuelab(&["pi", "Q7"])), 2);
    assert_eq!(status(&thuelab(&["pi", "K0"])), 2);
    assert_eq!(status(&thuelab(&["pi", "g6:!!"])), 2);
    assert_eq!(status(&thuelab(&["pi", "E13"])), 3);
    let forced = thuelab(&["pi", "E13", "--force"]);
    assert_eq!(status(&forced), 0);
    assert_eq!(json(&forced)["pi"], 1);
    assert!(String::from_utf8_lossy(&forced.stderr).contains("warning"));
    assert_eq!(status(&thuelab(&["pi", "file:/nonexistent/graph.txt"])), 4);
}

fn verify_with(desc: &str, content: &str) -> Output {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    fs::write(&path, content).unwrap();
    thuelab(&["verify", desc, path.to_str().unwrap()])
}

#[test]
fn verify_examples() {
    assert_eq!(status(&verify_with("P3", "[1,2,1]")), 0);
    let out = verify_with("P4", "[1,2,1,2]");
    assert_eq!(status(&out), 1);
    let v = json(&out);
    assert_eq!(v["witness"]["path"], serde_json::json!([0, 1, 2, 3]));
    assert_eq!(v["witness"]["half_length"], 2);
    assert_eq!(status(&verify_with("K2", "[1,1]")), 1);
    assert_eq!(
        status(&verify_with("P3", r#"{"graph":"Bg","colours":[1,2,1]}"#)),
        0
    );
}

#[test]
fn verify_shape_errors() {
    assert_eq!(status(&verify_with("P4", "[1,2,1]")), 2);
    assert_eq!(
        status(&verify_with("P3", r#"{"graph":"Bw","colours":[1,2,1]}"#)),
        2
    );
    assert_eq!(status(&verify_with("P3", "not json")), 2);
    assert_eq!(
        status(&thuelab(&["verify", "P3", "/nonexistent/c.json"])),
        4
    );
}

#[test]
fn bounds_examples() {
    for (g, h, want) in [("K3", "K2", 6), ("S2", "K2", 4), ("P4", "E3", 7)] {
        let out = thuelab(&["bounds", g, h, "--exact"]);
        assert_eq!(status(&out), 0, "{g} {h}");
        let v = json(&out);
        assert_eq!(v["lower_conjectured"], want);
        assert_eq!(v["exact"], want);
    }
    let v = json(&thuelab(&["bounds", "K3", "K2"]));
    assert_eq!(v["upper_product"], 6);
    assert_eq!(v["exact"], Value::Null);
    assert_eq!(status(&thuelab(&["bounds", "K4", "E4", "--exact"])), 3);
    assert_eq!(status(&thuelab(&["bounds", "K4", "E4"])), 0);
}

#[test]
fn sweep_trivial_and_deterministic() {
    let out = thuelab(&["sweep", "--max-order", "1"]);
    assert_eq!(status(&out), 0);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "g6_G,g6_H,piG,piH,lower,upper,exact,holds\n@,@,1,1,1,1,1,true\n"
    );

    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let out = thuelab(&["sweep", "--max-order", "9", "-o", p.to_str().unwrap()]);
        assert_eq!(status(&out), 0);
        assert!(out.stdout.is_empty());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let record: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("a.csv.run.json")).unwrap())
            .unwrap();
    assert_eq!(record["result"]["counterexamples"], 0);
    assert!(record["timestamp_utc"].as_str().unwrap().ends_with('Z'));
}

#[test]
fn sweep_resume() {
    let dir = tempfile::tempdir().unwrap();
    let small = dir.path().join("small.json");
    let full = dir.path().join("full.json");
    let fresh = dir.path().join("fresh.json");
    let s = |p: &Path| p.to_str().unwrap().to_string();
    assert_eq!(
        status(&thuelab(&[
            "sweep",
            "--max-order",
            "6",
            "--format",
            "json",
            "-o",
            &s(&small)
        ])),
        0
    );
    assert_eq!(
        status(&thuelab(&[
            "sweep",
            "--max-order",
            "8",
            "--format",
            "json",
            "-o",
            &s(&full),
            "--resume",
            &s(&small)
        ])),
        0
    );
    assert_eq!(
        status(&thuelab(&[
            "sweep",
            "--max-order",
            "8",
            "--format",
            "json",
            "-o",
            &s(&fresh)
        ])),
        0
    );
    assert_eq!(fs::read(&full).unwrap(), fs::read(&fresh).unwrap());
}

#[test]
fn sweep_errors() {
    assert_eq!(status(&thuelab(&["sweep", "--max-order", "13"])), 3);
    assert_eq!(
        status(&thuelab(&[
            "sweep",
            "--max-order",
            "2",
            "-o",
            "/nonexistent/dir/out.csv"
        ])),
        4
    );
}

#[test]
fn thue_words() {
    let out = thuelab(&["thue-word", "0"]);
    assert_eq!(status(&out), 0);
    assert!(out.stdout.is_empty());
    assert_eq!(thuelab(&["thue-word", "1"]).stdout, b"0\n");

    let word = thuelab(&["thue-word", "100"]).stdout;
    assert_eq!(
        String::from_utf8_lossy(&word).split_whitespace().count(),
        100
    );
    let mut child = Command::new(env!("CARGO_BIN_EXE_thuelab"))
        .arg("verify-word")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&word).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(status(&out), 0);
    assert_eq!(json(&out)["nonrepetitive"], true);
}

#[test]
fn verify_word_arguments() {
    let out = thuelab(&["verify-word", "1", "2", "3", "2", "3"]);
    assert_eq!(status(&out), 1);
    assert_eq!(json(&out)["repetition"]["start"], 1);
}

#[test]
fn choosable_and_check() {
    assert_eq!(
        json(&thuelab(&["choosable", "K3", "-k", "2"]))["choosable"],
        false
    );
    assert_eq!(
        json(&thuelab(&["choosable", "S2", "-k", "2"]))["choosable"],
        true
    );
    assert_eq!(status(&thuelab(&["choosable", "K6", "-k", "2"])), 3);
    let v = json(&thuelab(&["check", "K2,3"]));
    assert_eq!(v["pi_exact"], 3);
    assert_eq!(v["equality_observed"], true);
}

#[test]
fn graph_conversion_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.txt");
    let out = thuelab(&["graph", "C5", "--edges"]);
    fs::write(&path, &out.stdout).unwrap();
    let desc = format!("file:{}", path.display());
    assert_eq!(
        thuelab(&["graph", &desc]).stdout,
        thuelab(&["graph", "C5"]).stdout
    );
    assert_eq!(json(&thuelab(&["pi", &desc]))["pi"], 4);
}

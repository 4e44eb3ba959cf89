//! End-to-end checks of the `fml` binary: exit codes, JSON shapes, and the
//! file-based subcommands.

use std::path::Path;
use std::process::{Command, Output};

fn fml(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fml"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn decide_exit_codes() {
    let out = fml(&["decide", "--logic", "fundamental", "p |- ~~p"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let out = fml(&["decide", "--logic", "fundamental", "~~p |- p"]);
    assert_eq!(code(&out), 1);
    // same claim, orthologic: proved
    let out = fml(&["decide", "--logic", "ortho", "~~p |- p"]);
    assert_eq!(code(&out), 0);
    // unknown on a tiny budget with no refuting model
    let out = fml(&[
        "decide",
        "--logic",
        "intuitionistic",
        "~~p |- p",
        "--max-universe",
        "32",
    ]);
    assert_eq!(code(&out), 2);
    // spot check on a proof
    let out = fml(&[
        "decide",
        "--logic",
        "fundamental",
        "p & q |- q",
        "--spot-check",
        "10",
        "--seed",
        "7",
    ]);
    assert_eq!(code(&out), 0);
}

#[test]
fn decide_refuted_json_carries_a_countermodel() {
    let out = fml(&["--json", "decide", "--logic", "fundamental", "~~p |- p"]);
    assert_eq!(code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "refuted");
    let cm = &v["countermodel"];
    assert!(cm["frame"]["states"].as_array().unwrap().len() <= 4);
    assert!(cm["valuation"]["p"].is_array());
    assert!(cm["witness"].is_u64());
}

#[test]
fn prove_emits_replayable_trace() {
    let out = fml(&["--json", "prove", "--logic", "modal", "<>~p |- ~[]p"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let lines: Vec<String> = v["trace"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l.as_str().unwrap().to_string())
        .collect();
    assert!(lines.iter().any(|l| l.starts_with("16:")));
    // refuter convention: found model exits 1, exhaustion exits 2
    let out = fml(&["refute", "--logic", "fundamental", "~~p |- p"]);
    assert_eq!(code(&out), 1);
    let out = fml(&["refute", "--logic", "fundamental", "p |- p"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn axioms_table_matches_recorded_pattern() {
    let out = fml(&["axioms", "--fixture", "negbox_chain3"]);
    assert_eq!(code(&out), 1, "one axiom fails on this fixture");
    let text = stdout(&out);
    assert!(text.contains("DiamondNeg"), "{text}");
    assert!(text.contains("NegBox"));
    assert!(text.contains("¬□a = ¬0 = 1 ≰ 0 = ◇0 = ◇¬a"));
    let out = fml(&["--json", "axioms", "--fixture", "negdiamond_bool4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["holds"], false);
    assert_eq!(v["axioms"].as_array().unwrap().len(), 4);
}

#[test]
fn translate_and_reduce() {
    let out = fml(&["translate", "p | q"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "~(~~~p & ~~~q)");
    // modal input is outside the translation's language
    let out = fml(&["translate", "[]p"]);
    assert_eq!(code(&out), 3);
    let out = fml(&["reduce-classical", "p |- p"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "p & p | ~p & p |- p");
}

#[test]
fn fixtures_verify_passes() {
    let out = fml(&["fixtures", "--verify"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let out = fml(&["fixtures"]);
    assert!(stdout(&out).contains("negdiamond_heyting5"));
}

#[test]
fn frame_files_round_trip_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let frame_path = dir.path().join("frame.json");
    std::fs::write(
        &frame_path,
        r#"{"states":["a","b"],"open":[[0,0],[1,1],[1,0]]}"#,
    )
    .unwrap();
    let p = frame_path.to_str().unwrap();
    let out = fml(&["frame-check", "--frame", p, "--cond", "pseudo_reflexive", "--cond", "pseudo_symmetric"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    // dot export
    let dot_path = dir.path().join("frame.dot");
    let out = fml(&[
        "frame-check",
        "--frame",
        p,
        "--dot",
        dot_path.to_str().unwrap(),
    ]);
    assert!(code(&out) <= 1);
    let dot = std::fs::read_to_string(&dot_path).unwrap();
    assert!(dot.starts_with("digraph frame {"));
    assert!(dot.contains("style=solid"));

    // model-check: valuation {b} is a fixpoint; p |- ~~p holds, ~~p |- p fails
    let out = fml(&["model-check", "--frame", p, "--assign", "p=1", "p |- ~~p"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let out = fml(&["model-check", "--frame", p, "--assign", "p=1", "~~p |- p"]);
    assert_eq!(code(&out), 1, "{}", stdout(&out));
    // non-fixpoint valuations are rejected with a closure hint
    let out = fml(&["model-check", "--frame", p, "--assign", "p=0", "p |- p"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("closure"));
    // missing file is an I/O failure
    let out = fml(&["frame-check", "--frame", "/nonexistent.json"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn represent_cli() {
    let out = fml(&["--json", "represent", "--fixture", "negbox_chain3", "--flavor", "unified"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["isomorphism"], true);
    assert_eq!(v["frame"]["states"].as_array().unwrap().len(), 7);
    let conds: Vec<&str> = v["conditions"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["holds"] == true)
        .map(|c| c["condition"].as_str().unwrap())
        .collect();
    assert!(conds.contains(&"unified"));
    assert!(conds.contains(&"negative"));
    // a lattice file through the pairs flavor
    let dir = tempfile::tempdir().unwrap();
    let lat_path = dir.path().join("two.json");
    std::fs::write(
        &lat_path,
        r#"{"elements":["0","1"],"leq":[[0,1]],"neg":[1,0],"box":[0,1],"dia":[0,1]}"#,
    )
    .unwrap();
    let out = fml(&["represent", "--lattice", lat_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("carrier: 3 state(s)"));
    // rejected preconditions exit 3
    let out = fml(&["represent", "--fixture", "allind_a", "--flavor", "unified"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn json_output_is_deterministic_across_runs() {
    let args = ["--json", "decide", "--logic", "modal", "~[]p |- <>~p"];
    let first = fml(&args);
    let second = fml(&args);
    assert_eq!(code(&first), 1);
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn usage_errors_exit_3() {
    let out = fml(&["decide", "--logic", "nosuch", "p |- p"]);
    assert_eq!(code(&out), 3);
    let out = fml(&["decide", "--logic", "fundamental", "p |-"]);
    assert_eq!(code(&out), 3);
    let out = fml(&["decide", "--logic", "fundamental", "[]p |- p"]);
    assert_eq!(code(&out), 3, "modal formula rejected outside the modal logic");
    let out = fml(&["nosuchcommand"]);
    assert_eq!(code(&out), 3);
    let out = fml(&["--help"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn represented_frame_json_feeds_back_into_model_check() {
    // export the represented frame, then model-check the claim that broke
    // the axiom on the source algebra: the image of a under p refutes
    // ~[]p |- <>~p on the frame
    let dir = tempfile::tempdir().unwrap();
    let out = fml(&["--json", "represent", "--fixture", "negbox_chain3", "--flavor", "unified"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let frame_path = dir.path().join("rep.json");
    std::fs::write(&frame_path, serde_json::to_string(&v["frame"]).unwrap()).unwrap();
    // f(a) = states whose first component is below a: that is (a,0), (a,1),
    // (0,1); find their indices from the state names
    let states: Vec<String> = v["frame"]["states"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().to_string())
        .collect();
    let image: Vec<String> = states
        .iter()
        .enumerate()
        .filter(|(_, name)| name.starts_with("(a,") || name.starts_with("(0,"))
        .map(|(i, _)| i.to_string())
        .collect();
    let assign = format!("p={}", image.join(","));
    let out = fml(&[
        "model-check",
        "--frame",
        frame_path.to_str().unwrap(),
        "--assign",
        &assign,
        "~[]p |- <>~p",
    ]);
    assert_eq!(code(&out), 1, "{}", stdout(&out));
    assert!(Path::new(frame_path.to_str().unwrap()).exists());
}

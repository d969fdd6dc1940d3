use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use exact_oracle::{min_path_decomposition, DEFAULT_NODE_BUDGET};
use graph_core::families;
use serde_json::Value;

const K3: &str = "0 1\n1 2\n0 2\n";
const K5_MINUS: &str = "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n";

fn gallai(args: &[&str], stdin: &str) -> Output {
    gallai_env(args, stdin, &[])
}

fn gallai_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gallai"))
        .args(args)
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).lines().last().unwrap()).unwrap()
}

#[test]
fn triangle_takes_two_paths_under_the_relaxed_budget() {
    let o = gallai(&["decompose", "--json"], K3);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["paths"].as_array().unwrap().len(), 2);
    assert_eq!(v["relaxed_budget"], true);
    assert_eq!(v["meets_bound"], true);
}

#[test]
fn input_errors_exit_with_one() {
    let o = gallai(&["decompose"], "0 1\n2 3\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("graph not connected"));

    let k5 = "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
    let o = gallai(&["decompose"], k5);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not planar"));

    let o = gallai(&["decompose"], "0 x\n");
    assert_eq!(o.status.code(), Some(1));

    let o = gallai_env(&["decompose"], K3, &[("GALLAI_NODE_BUDGET", "lots")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_accepts_a_good_triangle_decomposition() {
    let g = scratch("k3.txt", K3);
    let d = scratch("k3-good.json", r#"{"n":3,"paths":[[1,0,2],[1,2]]}"#);
    let o = gallai(&["verify", g.to_str().unwrap(), d.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("ok: 2 paths"));
}

#[test]
fn verify_rejects_a_cycle() {
    let g = scratch("k3.txt", K3);
    let d = scratch("k3-cycle.json", r#"{"n":3,"paths":[[0,1,2,0]]}"#);
    let o = gallai(&["verify", g.to_str().unwrap(), d.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("color 0 is a cycle"));
}

#[test]
fn verify_rejects_two_colors_on_k5_minus() {
    assert_eq!(min_path_decomposition(&families::k5_minus(), DEFAULT_NODE_BUDGET).unwrap().min_paths, 3);
    let g = scratch("k5m.txt", K5_MINUS);
    // A trail of eight edges plus the last edge: two colors, one not a path.
    let d = scratch("k5m-two.json", r#"{"n":5,"paths":[[3,0,1,2,0,4,1,3,2],[2,4]]}"#);
    let o = gallai(&["verify", g.to_str().unwrap(), d.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(3));
    assert!(!stdout(&o).is_empty());
}

#[test]
fn verify_mismatched_order_is_an_input_error() {
    let g = scratch("k3.txt", K3);
    let d = scratch("k4-claim.json", r#"{"n":4,"paths":[[0,1,2],[0,2]]}"#);
    let o = gallai(&["verify", g.to_str().unwrap(), d.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn decompose_output_verifies_after_relabeling() {
    let g = scratch("icosa.txt", &graph_core::to_edge_list(&families::icosahedron()));
    for seed in ["0", "7"] {
        let o = gallai(&["decompose", "--json", "--seed", seed, g.to_str().unwrap()], "");
        assert_eq!(o.status.code(), Some(0));
        let d = scratch(&format!("icosa-{seed}.json"), &stdout(&o));
        let v = gallai(&["verify", g.to_str().unwrap(), d.to_str().unwrap()], "");
        assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
        assert!(stdout(&v).starts_with("ok: 6 paths"));
    }
}

#[test]
fn human_and_dot_output() {
    let o = gallai(&["decompose"], K5_MINUS);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("3 paths, bound 3 (relaxed): ok\n"));
    let o = gallai(&["decompose", "--dot", "--format", "graph6"], "Bw\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("graph G {"));
}

#[test]
fn census_small_orders() {
    let o = gallai(&["census", "--n", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["count"], 4);
    assert_eq!(v["relaxed"].as_array().unwrap().len(), 1);
    assert_eq!(v["violations"], 0);

    let v = json(&gallai(&["census", "--n", "2"], ""));
    assert_eq!(v["count"], 1);
    assert!(v["relaxed"].as_array().unwrap().is_empty());

    // Every labeled K5 minus an edge: one per missing pair.
    let v = json(&gallai(&["census", "--n", "5"], ""));
    assert_eq!(v["relaxed"].as_array().unwrap().len(), 10);
    assert_eq!(v["relaxed"], v["oracle_above_half"]);

    let o = gallai(&["census", "--n", "8"], "");
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn fuzz_summary_is_reproducible() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-fuzz");
    let args = ["fuzz", "--n-range", "8..12", "--count", "100", "--seed", "1", "--out-dir", dir.to_str().unwrap()];
    let a = gallai(&args, "");
    assert_eq!(a.status.code(), Some(0));
    let v = json(&a);
    assert_eq!(v["count"], 100);
    assert!(v["meets_bound_ratio"].is_number());
    assert!(v["rule_histogram"].is_object());
    let b = gallai(&args, "");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn fuzz_lines_come_before_the_summary() {
    let o = gallai(&["fuzz", "--n-range", "8..10", "--count", "5", "--lines"], "");
    let lines: Vec<&str> = std::str::from_utf8(&o.stdout).unwrap().lines().collect();
    assert_eq!(lines.len(), 6);
    let first: Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(first["instance"], 0);
}

#[test]
fn injected_bug_leaves_a_reproducer() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-inject");
    let _ = std::fs::remove_dir_all(&dir);
    let o = gallai(
        &["fuzz", "--n-range", "8..12", "--count", "10", "--seed", "5", "--inject-bug", "--out-dir", dir.to_str().unwrap()],
        "",
    );
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    let repros = v["reproducers"].as_array().unwrap();
    assert!(!repros.is_empty());
    let file = dir.join(repros[0].as_str().unwrap());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(file).unwrap()).unwrap();
    assert!(r["graph6"].is_string());
    assert!(r["trace"].is_array());
    assert!(!r["reasons"].as_array().unwrap().is_empty());
}

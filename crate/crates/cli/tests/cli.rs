use std::process::{Command, Output};

use serde_json::Value;

fn koszulkt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_koszulkt")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = koszulkt(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn describe_a2_text() {
    let o = koszulkt(&["describe", "A2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("rank: 2"));
    assert!(out.contains("[ 2 -1]"));
    assert!(out.contains("weyl group order: 6"));
    assert!(out.contains("fundamental dimensions: (3, 3)"));
    assert!(out.contains("resolution ranks: [1, 2, 1]"));
}

#[test]
fn describe_g2_json() {
    let v = json(&["describe", "G2", "--format", "json"]);
    assert_eq!(v["type"], "G2");
    assert_eq!(v["weyl_group_order"], 12);
    assert_eq!(v["positive_roots"], 6);
    assert_eq!(v["fundamental_dims"], serde_json::json!([7, 14]));
    assert_eq!(v["cartan_matrix"], serde_json::json!([[2, -1], [-3, 2]]));
}

#[test]
fn unknown_type_is_a_usage_error() {
    for t in ["Z9", "A0", "C2", "D3", "E9", "G3", ""] {
        let o = koszulkt(&["describe", t]);
        assert_eq!(o.status.code(), Some(2), "{t}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn missing_subcommand_is_a_usage_error() {
    assert_eq!(koszulkt(&[]).status.code(), Some(2));
    assert_eq!(koszulkt(&["verify"]).status.code(), Some(2));
}

#[test]
fn verify_passes_on_small_types() {
    for t in ["A1", "A2", "G2", "A1xA1"] {
        let o = koszulkt(&["verify", t, "--max-y-degree", "4"]);
        assert_eq!(o.status.code(), Some(0), "{t}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

#[test]
fn verify_json_reports_every_check() {
    let v = json(&["verify", "A2", "--format", "json"]);
    let checks = v["checks"].as_object().unwrap();
    assert_eq!(checks.len(), 7);
    for (name, c) in checks {
        assert_eq!(c["status"], "pass", "{name}");
    }
}

#[test]
fn verify_skips_the_window_above_rank_two() {
    let v = json(&["verify", "A3", "--format", "json", "--injectivity-degree", "1"]);
    assert_eq!(v["checks"]["window"]["status"], "skipped");
}

#[test]
fn injected_fault_fails_d_squared() {
    let o = koszulkt(&["verify", "A1", "--inject-fault", "d-sign"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("check failed: d_squared"));
    assert!(stdout(&o).contains("d_squared    FAIL"));
}

#[test]
fn ktheory_a2_json() {
    let v = json(&["ktheory", "A2", "--format", "json"]);
    assert_eq!(v["k0_rank"], 2);
    assert_eq!(v["k1_rank"], 2);
    assert_eq!(v["generators_even"], serde_json::json!([[], [1, 2]]));
    assert_eq!(v["generators_odd"], serde_json::json!([[1], [2]]));
    assert_eq!(v["checks"]["d_squared"]["status"], "not_run");
}

#[test]
fn ktheory_ranks() {
    for (t, half) in [("A1", 1), ("A3", 4), ("A1xA1", 2), ("B3", 4), ("E8", 128)] {
        let v = json(&["ktheory", t, "--format", "json"]);
        assert_eq!((v["k0_rank"].as_u64(), v["k1_rank"].as_u64()), (Some(half), Some(half)), "{t}");
    }
}

#[test]
fn ktheory_text() {
    let out = stdout(&koszulkt(&["ktheory", "A2"]));
    assert!(out.contains("K0 rank over R(K): 2  generators: 1, e1^e2"));
    assert!(out.contains("K1 rank over R(K): 2  generators: e1, e2"));
    assert!(out.contains("E1 differentials: all trivial"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [["verify", "B2", "--format", "json"], ["ktheory", "G2", "--format", "text"]] {
        let a = koszulkt(&args);
        let b = koszulkt(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn out_writes_the_report_to_a_file() {
    let dir = std::env::temp_dir().join(format!("koszulkt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a2.json");
    let o = koszulkt(&["ktheory", "A2", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, koszulkt(&["ktheory", "A2", "--format", "json"]).stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn unwritable_out_path_is_an_io_error() {
    let o = koszulkt(&["describe", "A1", "--out", "/nonexistent-dir/x/y.txt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cap_exceeded_exits_three() {
    let o = Command::new(env!("CARGO_BIN_EXE_koszulkt"))
        .args(["verify", "A2"])
        .env(koszulkt::CAP_CELLS_ENV, "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!o.stderr.is_empty());
}

#[test]
fn large_exceptional_verify_hits_a_cap() {
    let o = koszulkt(&["verify", "E8"]);
    assert_eq!(o.status.code(), Some(3));
}

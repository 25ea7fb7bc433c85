use std::path::PathBuf;
use std::process::{Command, Output};

fn schurq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurq"))
        .args(args)
        .env_remove("SCHURQ_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("schurq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn expand_eproduct() {
    let o = schurq(&["expand", "--eproduct", "e2*e2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "s[2,2] + s[2,1,1] + s[1,1,1,1]\n");
}

#[test]
fn expand_other_targets() {
    let o = schurq(&["expand", "--family", "E1"]);
    assert_eq!(stdout(&o), "s[4] + s[3,1]\n");
    let o = schurq(&["expand", "--family", "E1", "--t", "1"]);
    assert_eq!(stdout(&o), "s[4,4] + s[4,3,1] + s[3,3,1,1]\n");
    let o = schurq(&["expand", "--jt", "[2,2]"]);
    assert_eq!(stdout(&o), "-e3*e1 + e2*e2\n");
    let o = schurq(&["expand", "--lhs", "3"]);
    assert_eq!(stdout(&o), "s[4] + s[2,2] + s[1,1,1,1]\n");
}

#[test]
fn verify_identity_passes() {
    let o = schurq(&["verify-identity", "--r-max", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 12);
}

#[test]
fn lemma_filter() {
    let o = schurq(&["verify-lemmas", "--t-max", "0", "--lemma", "3.8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn worker_count_does_not_change_reports() {
    let one = schurq(&["verify-lemmas", "--t-max", "2", "--output", "json", "--workers", "1"]);
    let many = Command::new(env!("CARGO_BIN_EXE_schurq"))
        .args(["verify-lemmas", "--t-max", "2", "--output", "json"])
        .env("SCHURQ_WORKERS", "8")
        .output()
        .unwrap();
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn invalid_configuration_exits_2() {
    assert_eq!(schurq(&["verify-lemmas", "--lemma", "9.9"]).status.code(), Some(2));
    assert_eq!(schurq(&["verify-identity", "--workers", "0"]).status.code(), Some(2));
    assert_eq!(schurq(&["expand", "--eproduct", "e2**"]).status.code(), Some(2));
    assert_eq!(schurq(&["verify-qlc", "--input", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(schurq(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(schurq(&["expand", "--lhs", "2", "--t", "1"]).status.code(), Some(2));
}

#[test]
fn corrupted_array_exits_1() {
    let rows: Vec<Vec<i64>> = (0..=8i64)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    let c = (1..=k).fold(1i64, |acc, i| acc * (n - i + 1) / i);
                    if (n, k) == (3, 1) {
                        -c * c
                    } else {
                        c * c
                    }
                })
                .collect()
        })
        .collect();
    let path = temp_file("corrupted.json", &serde_json_like(&rows));
    let o = schurq(&[
        "verify-transform",
        "--n-max",
        "5",
        "--corpus-n-max",
        "6",
        "--array-file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL preservation/"));
}

#[test]
fn custom_qlc_input() {
    // (1+q)^n is q-log-convex with zero defect; a dip breaks it.
    let good = temp_file("good.json", "[[1], [1, 1], [1, 2, 1], [1, 3, 3, 1]]");
    let o = schurq(&["verify-qlc", "--n-max", "2", "--input", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let bad = temp_file("bad.json", "[[1], [1, 3], [1, 2, 1]]");
    let o = schurq(&["verify-qlc", "--n-max", "1", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn out_file() {
    let dir = std::env::temp_dir().join(format!("schurq-cli-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.txt");
    let o = schurq(&["counterexample", "--m", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let report = std::fs::read_to_string(&path).unwrap();
    assert!(report.starts_with("PASS power-m m=3 n_max=20 coefficient=-12"));
}

fn serde_json_like(rows: &[Vec<i64>]) -> String {
    let rows: Vec<String> = rows
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

//! The command line interface.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use girthgen::fixtures::girth6_order38_snarks;
use girthgen::generate::{cache_file, BASE_CACHE_ENV};
use girthgen::verify;
use girthgen_core::analysis::flower_snark;

fn girthgen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_girthgen"))
        .args(args)
        .env_remove(BASE_CACHE_ENV)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lines(o: &Output) -> BTreeSet<String> {
    stdout(o).lines().map(str::to_owned).collect()
}

#[test]
fn count_only_prints_the_count() {
    let o = girthgen(&["generate", "--order", "12", "--count-only"]);
    assert_eq!(stdout(&o).trim(), "85");
}

#[test]
fn split_parts_partition_the_output() {
    let all = girthgen(&["generate", "--order", "18", "--girth", "5", "--canonical"]);
    let all = lines(&all);
    assert!(!all.is_empty());
    let mut union = BTreeSet::new();
    let mut total = 0;
    for r in 0..3 {
        let part = girthgen(&[
            "generate",
            "--order",
            "18",
            "--girth",
            "5",
            "--canonical",
            "--mod",
            &format!("{r}/3"),
        ]);
        let part = lines(&part);
        total += part.len();
        union.extend(part);
    }
    assert_eq!(total, all.len());
    assert_eq!(union, all);
}

#[test]
fn parallel_jobs_give_the_same_graphs() {
    let one = girthgen(&["generate", "--order", "16", "--girth", "4", "--canonical"]);
    let three = girthgen(&[
        "generate",
        "--order",
        "16",
        "--girth",
        "4",
        "--canonical",
        "--jobs",
        "3",
    ]);
    assert_eq!(lines(&one), lines(&three));
}

#[test]
fn snark_mode_on_ten_vertices() {
    let o = girthgen(&[
        "generate",
        "--order",
        "10",
        "--girth",
        "5",
        "--snarks",
        "--format",
        "adjacency",
    ]);
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn bad_requests_exit_with_two() {
    for args in [
        &[
            "generate",
            "--order",
            "20",
            "--girth",
            "5",
            "--algorithm",
            "h",
        ][..],
        &["generate", "--order", "20", "--girth", "8"],
        &["generate", "--order", "12", "--mod", "3/2"],
        &["generate", "--order", "12", "--mod", "x"],
        &["verify", "no-such-suite"],
    ] {
        let o = girthgen(args);
        assert_eq!(
            o.status.code(),
            Some(2),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
}

#[test]
fn analyze_reports_petersen_properties() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_girthgen"))
        .arg("analyze")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"IheA@GUAo\n")
        .unwrap();
    let out = stdout(&child.wait_with_output().unwrap());
    for field in [
        "order=10",
        "girth=5",
        "chromatic_index=4",
        "snark=yes",
        "oddness=2",
        "hypohamiltonian=yes",
        "strong=no",
        "dominating_cycle=yes",
        "total_chromatic_number=4",
        "petersen_colouring=yes",
    ] {
        assert!(
            out.split_whitespace().any(|w| w == field),
            "{field} missing from {out}"
        );
    }
}

#[test]
fn base_levels_are_cached() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_girthgen"))
            .args(["generate", "--order", "16", "--girth", "5", "--canonical"])
            .env(BASE_CACHE_ENV, dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert!(cache_file(dir.path(), 12, 4).exists());
    let second = run();
    assert_eq!(lines(&first), lines(&second));
    assert_eq!(
        lines(&first),
        lines(&girthgen(&[
            "generate",
            "--order",
            "16",
            "--girth",
            "5",
            "--canonical"
        ]))
    );
}

#[test]
fn verify_prints_one_line_per_check() {
    let o = girthgen(&["verify", "base"]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 5);
    assert!(out.lines().all(|l| l.starts_with("[base] PASS")), "{out}");
}

#[test]
fn a_corrupted_fixture_is_named() {
    let mut graphs = girth6_order38_snarks();
    graphs[4] = flower_snark(5);
    let checks = verify::appendix(&graphs);
    let order = checks
        .iter()
        .find(|c| c.name.ends_with("order 38"))
        .unwrap();
    assert!(!order.pass);
    assert_eq!(order.actual, "failing #5");
    assert!(checks
        .iter()
        .filter(|c| !c.pass)
        .all(|c| c.actual.contains("#5")
            || c.name.contains("hypohamiltonian")
            || c.name.contains("dot products")));
}

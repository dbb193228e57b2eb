use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};
use std::time::{Duration, Instant};

use circlenum_core::report::{AnalysisReport, CheckStatus};
use circlenum_core::{parse_pd, pretzel, PretzelSpec};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_circlenum"))
        .args(args)
        .env_remove("CIRCLENUM_K11N151")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn report(args: &[&str], stdin: Option<&str>) -> AnalysisReport {
    let o = run(args, stdin);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("circlenum-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn analyze_trefoil() {
    let r = report(&["analyze", "trefoil", "--json"], None);
    assert_eq!((r.n, r.k, r.circle_number), (3, Some(0), 5));
    assert_eq!(r.bracket.as_ref().unwrap().span, 12);
    assert_eq!(r.turaev_genus, Some(0));
    assert!(!r.checks.any_failed());
    assert_eq!(r.checks.theorem_rk, CheckStatus::Pass);
}

#[test]
fn analyze_example_pretzel() {
    let pd = stdout(&run(&["pretzel", "4,-3,3"], None));
    let r = report(&["analyze", "--json"], Some(&pd));
    assert_eq!((r.n, r.k, r.r, r.s), (10, Some(3), Some(8), Some(2)));
    assert_eq!(r.is_dealternator_connected, Some(false));
    let mut ext = [r.s_a, r.s_b];
    ext.sort_unstable();
    assert_eq!(ext, [4, 6]);
    assert_eq!(r.bracket.as_ref().unwrap().span, 28);
    assert_eq!(r.bounds.as_ref().unwrap().generic.value, 36);
    assert_eq!(r.turaev_genus, Some(1));
    assert_eq!(
        r.per_region.unwrap().iter().filter(|c| c.s_i == 2).count(),
        1
    );
}

#[test]
fn analyze_free_loop_from_stdin() {
    let r = report(&["analyze", "-", "--json"], Some("loops=1\n"));
    assert_eq!(r.n, 0);
    assert_eq!(r.k, None);
    assert_eq!(r.r, None);
    let terms: Vec<(i64, i64)> = r.bracket.unwrap().bracket.terms().collect();
    assert_eq!(terms, [(0, 1)]);
    assert_eq!(r.checks.theorem_rs, CheckStatus::NotApplicable);
}

#[test]
fn analyze_text_output() {
    let o = run(&["analyze", "hopf"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("circle number  4"), "{text}");
    assert!(text.contains("theorem_rk         pass"));
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let a = run(&["analyze", "P(4,-3,3)", "--json"], None);
    let b = run(&["analyze", "P(4,-3,3)", "--json"], None);
    assert_eq!(a.stdout, b.stdout);
    let r: AnalysisReport = serde_json::from_slice(&a.stdout).unwrap();
    let again = serde_json::to_string_pretty(&r).unwrap();
    assert_eq!(again.trim_end(), stdout(&a).trim_end());
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["analyze", "-"], Some("X[1,2,3]")).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["analyze", "-"], Some("X[1,2,3,4]")).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["analyze", "no-such-thing"], None).status.code(),
        Some(1)
    );
    let capped = run(&["analyze", "trefoil", "--state-cap", "2"], None);
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap"));
    let r = report(
        &[
            "analyze",
            "trefoil",
            "--state-cap",
            "2",
            "--no-bracket",
            "--json",
        ],
        None,
    );
    assert!(r.bracket.is_none());
    assert_eq!(r.circle_number, 5);
    assert_eq!(run(&["pretzel", "3"], None).status.code(), Some(1));
}

#[test]
fn pretzel_matches_library() {
    let o = run(&["pretzel", "-2,3,3"], None);
    assert_eq!(o.status.code(), Some(0));
    let d = parse_pd(&stdout(&o)).unwrap();
    assert_eq!(
        d,
        pretzel(&PretzelSpec::new(vec![-2, 3, 3]).unwrap()).unwrap()
    );
}

#[test]
fn catalog_listing() {
    let text = stdout(&run(&["catalog"], None));
    for name in [
        "unknot-loop",
        "curl",
        "hopf",
        "trefoil",
        "figure-eight",
        "P(3,3,3)",
        "P(4,-3,3)",
        "switched-trefoil",
    ] {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name}");
    }
    let hopf = stdout(&run(&["catalog", "--name", "hopf"], None));
    assert_eq!(parse_pd(&hopf).unwrap().crossing_count(), 2);
    assert_eq!(
        run(&["catalog", "--name", "nope"], None).status.code(),
        Some(1)
    );
}

#[test]
fn catalog_loads_optional_slot() {
    let dir = scratch_dir("slot");
    let file = dir.join("diagram.pd");
    std::fs::write(&file, "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_circlenum"))
        .args(["catalog"])
        .env("CIRCLENUM_K11N151", &file)
        .output()
        .unwrap();
    assert!(stdout(&o).lines().any(|l| l.starts_with("k11n151")));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn verify_small_family_is_fast() {
    let start = Instant::now();
    let o = run(&["verify", "--max-crossings", "4"], None);
    let elapsed = start.elapsed();
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all properties pass"));
    assert!(elapsed < Duration::from_secs(1), "{elapsed:?}");
}

#[test]
fn verify_corpus_dir() {
    let dir = scratch_dir("corpus");
    std::fs::write(
        dir.join("five-one.pd"),
        "# 5_1\nX[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]\n",
    )
    .unwrap();
    let o = run(
        &[
            "verify",
            "--corpus",
            dir.to_str().unwrap(),
            "--max-crossings",
            "3",
            "--json",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    std::fs::write(dir.join("broken.pd"), "X[1,2,3,4]").unwrap();
    let o = run(
        &[
            "verify",
            "--corpus",
            dir.to_str().unwrap(),
            "--max-crossings",
            "3",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("broken.pd"));
    let _ = std::fs::remove_dir_all(&dir);
}

//! End-to-end checks of the command line interface: output formats,
//! round-trips, and exit codes.

use monodromy::bmf::{build_bmf, BMFactorization};
use monodromy::hurwitz::{verify_script, Factorization, MoveScript};
use monodromy::layout::SurfaceParams;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_monodromy"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn monodromy")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn report_contains_key_values() {
    let out = run(&["report", "3", "3", "3", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for needle in ["k=216", "chi=34", "K2=128", "nu=72", "genus_R=241"] {
        assert!(text.contains(needle), "missing {needle} in:\n{text}");
    }
}

#[test]
fn invalid_params_exit_code() {
    let out = run(&["report", "2", "3", "3", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn factorization_round_trips_through_cli() {
    let out = run(&["factorization", "3", "3", "4", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed = BMFactorization::parse(&stdout(&out)).unwrap();
    let direct = build_bmf(SurfaceParams::new(3, 3, 4, 3).unwrap()).unwrap();
    assert_eq!(parsed, direct);
}

#[test]
fn compare_verdict_line() {
    let out = run(&["compare", "3", "4", "5", "4", "4", "4", "4", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "Distinguished (32,96) vs (64,64)\n");

    let out = run(&["compare", "3", "4", "5", "4", "5", "4", "3", "4"]);
    assert!(stdout(&out).starts_with("NotDistinguished"));
}

#[test]
fn orbit_search_finds_and_reports() {
    let dir = std::env::temp_dir().join(format!("monodromy-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f1_path = dir.join("f1.txt");
    let f2_path = dir.join("f2.txt");

    std::fs::write(&f1_path, "strands 4\ns1\ns2\n").unwrap();
    std::fs::write(&f2_path, "strands 4\ns1 s2 s1^-1\ns1\n").unwrap();
    let out = run(&[
        "orbit-search",
        f1_path.to_str().unwrap(),
        f2_path.to_str().unwrap(),
        "4",
        "10000",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let script = MoveScript::parse(4, &stdout(&out)).unwrap();
    let start = Factorization::new(
        4,
        vec![
            monodromy::BraidWord::parse(4, "s1").unwrap(),
            monodromy::BraidWord::parse(4, "s2").unwrap(),
        ],
    )
    .unwrap();
    let end = Factorization::new(
        4,
        vec![
            monodromy::BraidWord::parse(4, "s1 s2 s1^-1").unwrap(),
            monodromy::BraidWord::parse(4, "s1").unwrap(),
        ],
    )
    .unwrap();
    assert!(verify_script(&start, &script, &end).unwrap());

    // products differ: decisive NONE, exit 1
    std::fs::write(&f2_path, "strands 4\ns2\ns1\n").unwrap();
    let out = run(&[
        "orbit-search",
        f1_path.to_str().unwrap(),
        f2_path.to_str().unwrap(),
        "3",
        "10000",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("NONE"));

    // depth bound 0 cannot explore anything: exit 3
    std::fs::write(&f2_path, "strands 4\ns1 s2 s1^-1\ns1\n").unwrap();
    let out = run(&[
        "orbit-search",
        f1_path.to_str().unwrap(),
        f2_path.to_str().unwrap(),
        "0",
        "10000",
    ]);
    assert_eq!(out.status.code(), Some(3));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn lift_check_output() {
    let out = run(&["lift-check", "s[1,1]", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("liftability_class=1"));
    assert!(text.contains("triple_cover_case=ii"));
    assert!(text.contains("power_liftable=true"));

    let out = run(&["lift-check", "u[1,2]", "2", "--b", "4", "--d", "3"]);
    let text = stdout(&out);
    assert!(text.contains("liftability_class=3"));
    assert!(text.contains("power_liftable=false"));
    assert!(text.contains("triple_cover_case=i"));

    let out = run(&["lift-check", "p9", "2"]);
    assert_eq!(out.status.code(), Some(2), "p9 is out of range for b=3");
}

#[test]
fn letter_budget_env_is_a_resource_error() {
    let out = bin()
        .args(["lift-check", "s[1,1]", "1"])
        .env("MONODROMY_LETTER_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_paper_passes_and_is_seedable() {
    let out = run(&["verify-paper", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 14);
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
}

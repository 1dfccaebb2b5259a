use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtcat")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn poly_carlitz() {
    assert_eq!(stdout(&["poly", "carlitz", "4"]), "q^6+q^5+2*q^4+3*q^3+3*q^2+3*q+1\n");
    assert_eq!(stdout(&["poly", "narayana", "2", "--to", "3", "--format", "tsv"]), "2\tt+1\n3\tt^2+3*t+1\n");
}

#[test]
fn ballot_rows() {
    assert_eq!(stdout(&["seq", "ballot", "5"]), "1\n1 1\n1 2 2\n1 3 5 5\n1 4 9 14 14\n");
}

#[test]
fn bfile_offsets() {
    assert_eq!(stdout(&["seq", "catalan", "4", "--format", "bfile"]), "0 1\n1 1\n2 2\n3 5\n");
    assert_eq!(stdout(&["seq", "catalan", "2", "--format", "bfile", "--offset", "1"]), "1 1\n2 1\n");
}

#[test]
fn dist_and_cf_agree() {
    let d = stdout(&["dist", "av:132@n=4", "t^des,q^2-31"]);
    let cf = stdout(&["cf", "qt-catalan", "4", "--format", "tsv"]);
    let last = cf.lines().last().unwrap().split('\t').nth(1).unwrap().to_string();
    assert_eq!(d.trim(), last);
}

#[test]
fn gamma_from_file() {
    let path = std::env::temp_dir().join(format!("qtcat-cli-gamma-{}.txt", std::process::id()));
    std::fs::write(&path, "t^3+6*t^2+6*t+1\n").unwrap();
    let arg = format!("@{}", path.display());
    let out = stdout(&["gamma", &arg]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(out, "gamma_0: 1\ngamma_1: 3\n");
}

#[test]
fn gamma_without_expansion_exits_one() {
    let out = run(&["gamma", "t^2+2*t", "--span", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    for args in [&["poly", "nope", "1"][..], &["seq", "zz", "3"], &["verify", "nosuch"], &["poly", "carlitz", "2", "--format", "bfile"]] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn orbit_representative() {
    assert_eq!(stdout(&["orbit", "4213", "zero", "--representative"]), "2413\n");
}

#[test]
fn verify_small_range_passes_and_repeats() {
    let args = ["verify", "ten,mansour,conjecture", "--n-max", "6", "--workers", "2"];
    let a = stdout(&args);
    assert!(a.ends_with("3 passed, 0 failed\n"), "{a}");
    assert_eq!(a, stdout(&args));
}

#[test]
fn verify_json_to_file() {
    let path = std::env::temp_dir().join(format!("qtcat-cli-verify-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    stdout(&["verify", "mansour", "--n-max", "5", "--format", "json", "--out", p]);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v[0]["suite"], "mansour");
    assert_eq!(v[0]["status"], "pass");
}

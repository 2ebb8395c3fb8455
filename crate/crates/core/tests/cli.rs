use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn jacquet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacquet")).args(args).env_remove("JACQUET_CONFIG").output().expect("spawn jacquet")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn config_file(name: &str, body: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("jacquet-cli-{}-{name}.conf", std::process::id()));
    fs::write(&path, body).unwrap();
    path
}

const TWO_LINES: &str = "[line rho]\nsize = 1\ns = 1\n\n[line sigma]\nsize = 2\ns = 1/2\n";

#[test]
fn decide_matches_golden() {
    let o = jacquet(&["decide", "rho,0,0", "rho,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("decide_adjacent.txt"));
}

#[test]
fn cuspidal_jacquet_matches_golden() {
    let o = jacquet(&["jacquet", "--level", "cuspidal", "d(rho,0,1) x c(rho:1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("jacquet_cuspidal.txt"));
}

#[test]
fn verify_all_matches_golden() {
    let o = jacquet(&["verify", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("verify_all.txt"));
}

#[test]
fn output_is_deterministic() {
    let args = ["mstar", "d(rho,0,1) x d(rho,1,2) + 2*z(rho:0)"];
    assert_eq!(jacquet(&args).stdout, jacquet(&args).stdout);
}

#[test]
fn errors_go_to_stderr_with_exit_two() {
    for args in [
        &["mstar", "d(rho,0,1/2)"][..],
        &["mstar", "d(nope,0,1)"],
        &["decide", "rho,0,0", "rho"],
        &["filter", "--kind", "left", "d(rho,0,1)"],
        &["casselman"],
        &["bogus"],
    ] {
        let o = jacquet(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn syntax_errors_report_a_column() {
    let o = jacquet(&["mstar", "d(rho,0,1) x q(rho:1)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column"));
}

#[test]
fn config_flag_overrides_environment() {
    let two = config_file("two", TWO_LINES);
    let broken = config_file("broken", "[line rho]\nsize = 0\ns = 1\n");

    let o = Command::new(env!("CARGO_BIN_EXE_jacquet"))
        .args(["jacquet", "c(rho:1) x c(sigma:0)"])
        .env("JACQUET_CONFIG", &two)
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "1 (rho:1,sigma:0)\n1 (sigma:0,rho:1)\n");

    let o = Command::new(env!("CARGO_BIN_EXE_jacquet"))
        .args(["mstar", "c(sigma:0)"])
        .env("JACQUET_CONFIG", &broken)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));

    let o = Command::new(env!("CARGO_BIN_EXE_jacquet"))
        .args(["--config", two.to_str().unwrap(), "mstar", "c(sigma:0)"])
        .env("JACQUET_CONFIG", &broken)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 1 (x) d(sigma,0,0)\n1 d(sigma,0,0) (x) 1\n");

    fs::remove_file(two).unwrap();
    fs::remove_file(broken).unwrap();
}

#[test]
fn casselman_reports_raw_and_weighted_sums() {
    let two = config_file("weights", TWO_LINES);
    let o = jacquet(&["--config", two.to_str().unwrap(), "casselman", "sigma:1,sigma:0"]);
    let text = stdout(&o);
    assert!(text.contains("raw sum: 1\n"), "{text}");
    assert!(text.contains("weighted sum: 1\n"), "{text}");
    assert!(text.contains("square_integrable: false\n"), "{text}");
    assert!(text.contains("essentially: true\n"), "{text}");
    fs::remove_file(two).unwrap();
}

#[test]
fn structure_commands() {
    let o = jacquet(&["classify-si", "rho:-1/2,rho:1/2"]);
    assert_eq!(stdout(&o), "square-integrable: d(rho,-1/2,1/2)\n");
    let o = jacquet(&["classify-si", "rho:0,rho:1"]);
    assert_eq!(stdout(&o), "none (essentially square-integrable only: d(rho,0,1))\n");
    let o = jacquet(&["classify-si", "rho:0,rho:2"]);
    assert_eq!(stdout(&o), "none\n");
    let o = jacquet(&["tempered", "rho,0,0; rho,-1,1"]);
    assert_eq!(stdout(&o), "irreducible: d(rho,-1,1) x d(rho,0,0)\n");
    let o = jacquet(&["decide", "rho,0,0", "rho,2,2"]);
    assert_eq!(stdout(&o), "irreducible: d(rho,0,0) x d(rho,2,2)\n");
}

#[test]
fn filter_kinds() {
    let o = jacquet(&["filter", "--kind", "bottom", "d(rho,0,2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 d(rho,1,2) (x) d(rho,0,0)\n");
    let o = jacquet(&["filter", "--kind", "left", "--label", "d(rho,1,1)", "d(rho,0,1) x d(rho,1,1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.contains("d(rho,1,1) (x)")));
}

#[test]
fn enumerate_small_window() {
    let o = jacquet(&["enumerate", "--window", "range=0..1,step=1,points=1,factors=1"]);
    assert_eq!(stdout(&o), "1\nd(rho,0,0)\nd(rho,1,1)\n");
}

use std::path::Path;
use std::process::{Command, Output};

fn negcat(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_negcat"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .expect("negcat runs")
}

fn report(out: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(out.join("report.json")).unwrap()).unwrap()
}

#[test]
fn usage_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["no-such-command"],
        vec!["closure", "--sms", "0,2"],
        vec!["closure", "--prime", "4"],
        vec!["indecs", "--ambient", "derived"],
        vec!["closure", "--ambient", "derived", "--sms", "3,2"],
    ] {
        let o = negcat(&args, dir.path());
        assert_eq!(o.status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn failed_verification_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    // (0,3) and (0,7) share an endpoint, so they are not Hom-orthogonal.
    let o = negcat(&["sms-check", "--sms", "0,3", "0,7"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(report(dir.path())["passed"], false);
}

#[test]
fn help_exits_with_zero() {
    let o = Command::new(env!("CARGO_BIN_EXE_negcat"))
        .arg("--help")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("snake-suite"));
}

#[test]
fn reports_are_byte_identical_for_a_fixed_seed() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let args = [
        "snake-suite",
        "--count",
        "30",
        "--seed",
        "7",
        "--ambient",
        "derived",
    ];
    assert!(negcat(&args, a.path()).status.success());
    assert!(negcat(&args, b.path()).status.success());
    let read = |d: &Path| std::fs::read(d.join("report.json")).unwrap();
    assert_eq!(read(a.path()), read(b.path()));
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(&cfg, "ambient = \"derived\"\nseed = 5\nbound = 3\n").unwrap();
    let o = negcat(
        &["e-check", "--config", cfg.to_str().unwrap(), "--seed", "9"],
        dir.path(),
    );
    assert!(o.status.success());
    let r = report(dir.path());
    assert_eq!(r["inputs"]["ambient"], "derived");
    assert_eq!(r["inputs"]["seed"], 9);
    assert_eq!(r["inputs"]["bound"], 3);
    assert_eq!(r["inputs"]["n"], 3);
}

#[test]
fn unknown_config_keys_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.toml");
    std::fs::write(&cfg, "colour = \"red\"\n").unwrap();
    let o = negcat(&["closure", "--config", cfg.to_str().unwrap()], dir.path());
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn draw_writes_three_svgs() {
    let dir = tempfile::tempdir().unwrap();
    assert!(negcat(&["draw"], dir.path()).status.success());
    for f in ["polygon.svg", "abelian.svg", "ar.svg"] {
        let body = std::fs::read_to_string(dir.path().join(f)).unwrap();
        assert!(
            body.starts_with("<svg") && body.trim_end().ends_with("</svg>"),
            "{f}"
        );
    }
}

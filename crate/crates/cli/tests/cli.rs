use std::io::Write;
use std::process::{Command, Output, Stdio};

fn kbideal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kbideal")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("kbideal-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn odd_ideal_of_krebes_tangle() {
    let o = kbideal(&["ideal", "krebes_A", "--parity", "odd"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("<9, 4 + A^4>\nNON-TRIVIAL\n"), "{out}");
    let o = kbideal(&["ideal", "tangle_D", "--parity", "odd"]);
    assert!(stdout(&o).starts_with("<1>\nTRIVIAL\n"));
}

#[test]
fn closure_then_determinant() {
    let o = kbideal(&["closure", "tangle_D", "--winding", "1", "--curls", "2"]);
    assert!(o.status.success());
    let path = temp_file("fig6.link", &stdout(&o));
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&kbideal(&["det", p])), "1\n");
    assert_eq!(stdout(&kbideal(&["bracket", p])), "-A^-2 - A^2\nreduced: 1\n");
    assert_eq!(stdout(&kbideal(&["det", "fig6_complement"])), "1\n");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn reads_standard_input() {
    let text = stdout(&kbideal(&["closure", "krebes_A", "--winding", "1"]));
    let mut child = Command::new(env!("CARGO_BIN_EXE_kbideal"))
        .args(["det", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    let path = temp_file("a1.link", &text);
    assert_eq!(stdout(&o), stdout(&kbideal(&["det", path.to_str().unwrap()])));
    assert_eq!(stdout(&o), "3\n");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn coefficients_and_reduction() {
    let out = stdout(&kbideal(&["coeffs", "tangle_D"]));
    assert!(out.contains("c(2,3) = A^2"), "{out}");
    let out = stdout(&kbideal(&["reduce", "tangle_D"]));
    assert!(out.contains("  (long,1): A^-8 - A^-4 + 1\n") && out.ends_with("odd part:\n  0\n"), "{out}");
}

#[test]
fn json_mirror() {
    let o = kbideal(&["--json", "ideal", "tangle_H", "--parity", "odd"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["generators"], serde_json::json!(["5", "1 + A^4"]));
    assert_eq!(v["trivial"], false);
    assert_eq!(v["contraction"], "5");
    let o = kbideal(&["--json", "det", "fig6_complement"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["determinant"], "1");
}

#[test]
fn errors_name_their_source() {
    let path = temp_file("bad.link", "X 1 2 3 4\nX 1 2\n");
    let o = kbideal(&["bracket", path.to_str().unwrap()]);
    assert!(!o.status.success());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.starts_with("error (DiagramError): line 2:"), "{err}");
    std::fs::remove_file(path).unwrap();
    let o = kbideal(&["det", "tangle_D"]);
    assert!(String::from_utf8(o.stderr).unwrap().starts_with("error (usage)"));
    let o = kbideal(&["coeffs", "tangle_H", "--max-i", "1"]);
    assert!(String::from_utf8(o.stderr).unwrap().starts_with("error (PairingError)"));
}

#[test]
fn frontier_bound_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_kbideal"))
        .args(["bracket", "fig6_complement"])
        .env("KBIDEAL_MAX_FRONTIER", "1")
        .output()
        .unwrap();
    assert!(!o.status.success());
    assert!(String::from_utf8(o.stderr).unwrap().starts_with("error (DiagramError)"));
}

#[test]
fn output_is_byte_stable() {
    let a = kbideal(&["verify", "--check", "2", "--check", "3"]);
    let b = kbideal(&["verify", "--check", "2", "--check", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).ends_with("2/2 checks pass\n"));
}

#[test]
fn verify_reports_known_issue() {
    let o = kbideal(&["verify", "--check", "8"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("KNOWN 8:"));
    assert!(!kbideal(&["verify", "--check", "12"]).status.success());
}

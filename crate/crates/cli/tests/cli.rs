use std::path::PathBuf;
use std::process::{Command, Output};

fn configs() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nichols")).args(args).output().expect("spawn nichols")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn cartan_of_example_braiding() {
    let cfg = configs().join("example-a2.toml");
    let o = run(&["--config", cfg.to_str().unwrap(), "cartan"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "[[2,-1],[-1,2]]");
}

#[test]
fn verify_a2_1a_summary() {
    let o = run(&["verify", "A2-1a"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("A2-1a: 5/5 checks passed, dim 8·|Γ|"), "{}", stdout(&o));
}

#[test]
fn verify_with_finite_realization() {
    let r = configs().join("a2-1a-z2z2.toml");
    let o = run(&["verify", "A2-1a", "--mode", "nichols", "--realization", r.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("dim 8·4 = 32"), "{}", stdout(&o));
    let o = run(&["verify", "A2-4a", "--mode", "nichols", "--realization", "standard"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("dim 24·144 = 3456"), "{}", stdout(&o));
}

#[test]
fn open_case_warns() {
    let o = run(&["verify", "R89-4b"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("UNKNOWN counterterm: redh12"), "{out}");
    assert!(out.contains("PBW basis check skipped"), "{out}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&["verify", "NOPE"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["expand-superletter", "x2 x1"])), 2);
    assert_eq!(code(&run(&["coproduct", "x1 +"])), 2);
}

#[test]
fn skew_defect_exit_codes() {
    assert_eq!(code(&run(&["skew-defect", "x1", "--group", "g1"])), 0);
    let o = run(&["skew-defect", "[x1 x2]", "--group", "g1 g2"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("x1 g2 (x) x2"), "{}", stdout(&o));
}

#[test]
fn json_is_deterministic() {
    for args in [
        &["--format", "json", "--seed", "11", "roundtrip", "--trials", "50"][..],
        &["--format", "json", "verify", "B2-4a"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout);
        let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
        assert_eq!(v["schema"], "nichols-report/1");
        assert_eq!(v["ok"], true);
    }
}

#[test]
fn reduce_modulo_case() {
    let o = run(&["reduce", "x2^3 + [x1 x2]^2 + x1", "--case", "A2-1a"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next().unwrap().trim(), "x1");
}

#[test]
fn family_configs_load() {
    for (file, id, cartan) in [
        ("a1xa1.toml", "A1A1", "[[2,0],[0,2]]"),
        ("a2.toml", "A2-4a", "[[2,-1],[-1,2]]"),
        ("b2.toml", "B2-4a", "[[2,-2],[-1,2]]"),
        ("row8.toml", "R8-1a", "[[2,-2],[-2,2]]"),
        ("row9.toml", "R89-5a", "[[2,-3],[-1,2]]"),
    ] {
        let path = configs().join(file);
        let p = path.to_str().unwrap();
        let o = run(&["--config", p, "cartan"]);
        assert_eq!(stdout(&o).trim(), cartan, "{file}");
        let o = run(&["verify", id, "--mode", "nichols", "--realization", p]);
        assert_eq!(code(&o), 0, "{file}: {}", stdout(&o));
        assert!(stdout(&o).contains("·144 = "), "{file}");
    }
}

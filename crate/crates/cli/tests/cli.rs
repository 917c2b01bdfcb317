use std::process::Command;

fn qiso(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_qiso")).args(args).output().expect("binary runs")
}

#[test]
fn passing_suite_exits_zero() {
    let out = qiso(&["--suite", "qiso-atheta"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("11 checks: 11 passed, 0 failed"));
}

#[test]
fn flipped_doubling_fails_with_repro() {
    let out = qiso(&["--suite", "qiso-atheta", "--jtilde", "plus-minus", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "qiso-report/1");
    let failed: Vec<_> = v["records"].as_array().unwrap().iter().filter(|r| r["verdict"] == "fail").collect();
    assert_eq!(failed.len(), 4);
    assert!(failed.iter().all(|r| r["repro"].as_str().unwrap().contains("--jtilde plus-minus")));
}

#[test]
fn invalid_parameters_exit_two() {
    for args in [
        vec!["--suite", "podles-numeric", "--mu", "1.5"],
        vec!["--suite", "podles-numeric", "--c", "-1"],
        vec!["--suite", "qiso-cp", "--nmax", "1"],
        vec!["--suite", "irreps", "--lmax", "7/2"],
    ] {
        let out = qiso(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn t_and_c_agree() {
    let a = qiso(&["--suite", "podles-numeric", "--nmax", "24", "--c", "0.3"]);
    let t = 2.0 / (1.0 + (1.0f64 + 1.2).sqrt());
    let b = qiso(&["--suite", "podles-numeric", "--nmax", "24", "--t", &t.to_string()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
}

//! Acceptance criteria 1–13. Prints one line per criterion and exits nonzero if any fails.

use qiso_cli::{run, JTilde, Params, Record, Report, Residual, SuiteConfig, SuiteId};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

struct Outcome {
    passed: bool,
    detail: String,
}

fn suite(cfg: SuiteConfig) -> (Report, Duration) {
    let start = Instant::now();
    let params = Params::resolve(&cfg).expect("valid parameters");
    let r = run(&params).expect("suite runs");
    (r, start.elapsed())
}

fn cfg(id: SuiteId) -> SuiteConfig {
    SuiteConfig::new(id)
}

fn failures(r: &Report) -> Vec<String> {
    r.records.iter().filter(|x| !x.passed).map(|x| x.id.clone()).collect()
}

fn in_group<'a>(r: &'a Report, prefix: &str) -> Vec<&'a Record> {
    r.records.iter().filter(|x| x.id.starts_with(prefix)).collect()
}

fn numeric(r: &Record) -> f64 {
    match r.residual {
        Residual::Numeric { value, .. } => value,
        Residual::Exact(_) => f64::NAN,
    }
}

fn all_pass(r: &Report, t: Duration, budget: Option<Duration>, extra: &[(bool, String)]) -> Outcome {
    let bad = failures(r);
    let mut passed = bad.is_empty();
    let mut parts = vec![format!("{}/{} checks", r.summary().passed, r.summary().total)];
    if !bad.is_empty() {
        parts.push(format!("failing: {}", bad.join(", ")));
    }
    for (ok, msg) in extra {
        passed &= ok;
        parts.push(msg.clone());
    }
    match budget {
        Some(b) => {
            passed &= t < b;
            parts.push(format!("{:.1}s (budget {}s)", t.as_secs_f64(), b.as_secs()));
        }
        None => parts.push(format!("{:.1}s", t.as_secs_f64())),
    }
    Outcome { passed, detail: parts.join("; ") }
}

fn c1(su2: &(Report, Duration)) -> Outcome {
    let (r, t) = su2;
    let status = r.engine.iter().find(|e| e.name == "SUmu2").map(|e| e.status.clone()).unwrap_or_default();
    all_pass(
        r,
        *t,
        Some(Duration::from_secs(30)),
        &[
            (status == "confluent", format!("completion {status}")),
            (in_group(r, "su2-core/relations/").len() == 5, "5 defining relations".into()),
            (in_group(r, "su2-core/random/").len() == 2, "500 associativity and star samples".into()),
        ],
    )
}

fn c2() -> Outcome {
    let (r, t) = suite(cfg(SuiteId::HopfAxioms));
    let kappa = in_group(&r, "hopf-axioms/umu2-antipode/").len();
    all_pass(&r, t, Some(Duration::from_secs(60)), &[(kappa == 8, format!("{kappa} antipode table checks"))])
}

fn c3() -> Outcome {
    let (r, t) = suite(cfg(SuiteId::Haar));
    let exact = in_group(&r, "haar/exact/").len();
    let inv = in_group(&r, "haar/invariance/").len();
    all_pass(&r, t, None, &[(exact == 7, format!("h((γ*γ)^k) for k ≤ 6: {exact}")), (inv == 2, "bilateral invariance".into())])
}

fn c4() -> Outcome {
    let mut c = cfg(SuiteId::Irreps);
    c.lmax = Some(3);
    let (r, t) = suite(c);
    let fixtures = in_group(&r, "irreps/fixtures/").len();
    let schur = in_group(&r, "irreps/schur/").len();
    all_pass(
        &r,
        t,
        Some(Duration::from_secs(300)),
        &[(fixtures == 2, "T^1/2 and T^1 fixtures".into()), (schur == 6, format!("{schur} Schur checks for l ≤ 3/2"))],
    )
}

fn c5() -> Outcome {
    let (r, t) = suite(cfg(SuiteId::Somu3));
    let rels = in_group(&r, "somu3/embedding/somu3:").len();
    let action = in_group(&r, "somu3/action/").len();
    all_pass(
        &r,
        t,
        None,
        &[(rels >= 18, format!("{rels} listed relations vanish")), (action == 3, "action-matrix identity for i = −1, 0, 1".into())],
    )
}

fn c6() -> Outcome {
    let (r, t) = suite(cfg(SuiteId::PodlesSymbolic));
    let n = |p: &str| in_group(&r, p).len();
    let counts = (n("podles-symbolic/chi/"), n("podles-symbolic/ab/"), n("podles-symbolic/x-c/"), n("podles-symbolic/haar/h(x"));
    all_pass(&r, t, None, &[(counts == (4, 4, 4, 6), format!("χ/AB/X_c/Haar record counts {counts:?}"))])
}

fn c7() -> Outcome {
    let (r, t) = suite(cfg(SuiteId::PodlesNumeric));
    let ha = r.records.iter().find(|x| x.id.contains("h(A) = 1/(1+μ²)")).map(numeric).unwrap_or(f64::NAN);
    let routes = r.records.iter().filter(|x| x.id.ends_with("three routes")).count();
    all_pass(
        &r,
        t,
        Some(Duration::from_secs(10)),
        &[(ha < 1e-10, format!("|h(A) − 0.8| = {ha:.1e}")), (routes == 3, "three-route agreement for x₋₁, x₀, x₁".into())],
    )
}

fn c8() -> Outcome {
    let (r, t) = suite(cfg(SuiteId::Umu2Action));
    let subst = r.records.iter().filter(|x| x.id.starts_with("umu2-action/action/action")).count();
    let psi = in_group(&r, "umu2-action/action/Ψ(").len();
    all_pass(
        &r,
        t,
        Some(Duration::from_secs(120)),
        &[(subst == 17, format!("{subst} substituted relations")), (psi == 5, format!("{psi} SU_μ(2) relations under Ψ"))],
    )
}

fn c9() -> Outcome {
    let (torus, t1) = suite(cfg(SuiteId::RieffelTorus));
    let (blocks, t2) = suite(cfg(SuiteId::QisoAtheta));
    let mut other = cfg(SuiteId::QisoAtheta);
    other.jtilde = JTilde::PlusMinus;
    let (flipped, _) = suite(other);
    let flipped_bad = in_group(&flipped, "qiso-atheta/blocks/").iter().filter(|x| !x.passed).count();
    let o1 = all_pass(&torus, t1, None, &[]);
    let o2 = all_pass(&blocks, t2, None, &[(flipped_bad == 4, format!("J ⊕ (−J) flips the {flipped_bad} nontrivial blocks"))]);
    Outcome { passed: o1.passed && o2.passed, detail: format!("torus: {}; blocks: {}", o1.detail, o2.detail) }
}

fn c10() -> Outcome {
    let mut c = cfg(SuiteId::QisoCp);
    c.nmax = Some(40);
    c.theta = Some(1.0 / 3.0);
    let (r, t) = suite(c);
    let closed = in_group(&r, "qiso-cp/closed-form/").len();
    let witness = r.records.iter().find(|x| x.id.contains("lower bound")).map(|x| match &x.residual {
        Residual::Exact(s) => s.clone(),
        _ => String::new(),
    });
    all_pass(&r, t, None, &[(closed >= 12, format!("{closed} closed-form checks")), (witness.is_some(), witness.unwrap_or_default())])
}

fn c11(su2: &(Report, Duration)) -> Outcome {
    let rec = su2.0.records.iter().find(|x| x.id.starts_with("su2-core/oracle/oracle: π(x) = π(nf x)"));
    match rec {
        Some(x) => Outcome { passed: x.passed, detail: format!("max interior distance {:.2e} over 200 polynomials (tol 1e-10)", numeric(x)) },
        None => Outcome { passed: false, detail: "oracle record missing".into() },
    }
}

fn c12() -> Outcome {
    let (r, t) = suite(cfg(SuiteId::WangAf));
    let q = (1..=4).all(|n| !in_group(&r, &format!("wang-af/qperm{n}/")).is_empty());
    let af = ["(2)", "(2,1)", "(3,2)"].iter().all(|b| !in_group(&r, &format!("wang-af/af{b}/")).is_empty());
    all_pass(&r, t, None, &[(q, "magic unitaries n ≤ 4".into()), (af, "AF branchings (2), (2,1), (3,2)".into())])
}

fn c13() -> Outcome {
    let dir = std::env::temp_dir().join(format!("qiso-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut details = Vec::new();
    let mut passed = true;
    for (suite, extra) in [("qiso-atheta", vec![]), ("podles-numeric", vec!["--nmax", "32"]), ("qiso-cp", vec!["--nmax", "16"])] {
        let mut outs = Vec::new();
        for k in 0..2 {
            let path = dir.join(format!("{suite}-{k}.json"));
            let status = Command::new(env!("CARGO_BIN_EXE_qiso"))
                .args(["--suite", suite, "--format", "json", "--out"])
                .arg(&path)
                .args(&extra)
                .status()
                .expect("binary runs");
            passed &= status.success();
            outs.push(std::fs::read(&path).unwrap_or_default());
        }
        let same = !outs[0].is_empty() && outs[0] == outs[1];
        passed &= same;
        details.push(format!("{suite}: {} bytes {}", outs[0].len(), if same { "identical" } else { "DIFFER" }));
    }
    let _ = std::fs::remove_dir_all(&dir);
    Outcome { passed, detail: details.join("; ") }
}

fn main() -> ExitCode {
    let su2 = suite(cfg(SuiteId::Su2Core));
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("SU_μ(2) engine", Box::new(|| c1(&su2))),
        ("Hopf axioms", Box::new(c2)),
        ("Haar state", Box::new(c3)),
        ("corepresentation tower", Box::new(c4)),
        ("SO_μ(3)", Box::new(c5)),
        ("Podles symbolic", Box::new(c6)),
        ("Podles numerics", Box::new(c7)),
        ("U_μ(2) action", Box::new(c8)),
        ("Rieffel deformation", Box::new(c9)),
        ("CP quantum isometries", Box::new(c10)),
        ("oracle coherence", Box::new(|| c11(&su2))),
        ("Wang/AF", Box::new(c12)),
        ("determinism", Box::new(c13)),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        failed += (!o.passed) as usize;
        println!("criterion {:>2} {} {}: {}", i + 1, if o.passed { "PASS" } else { "FAIL" }, name, o.detail);
    }
    println!("acceptance: {} of 13 criteria passed", 13 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

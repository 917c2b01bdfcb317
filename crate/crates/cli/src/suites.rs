use crate::config::{Params, SuiteId};
use crate::report::{EngineEntry, Record, Report, Residual};
use qiso_core::freewords::vrep::{closed_form_suite, evaluation_homomorphism, multiplicativity, no_action_witness, VRep};
use qiso_core::hopf::{haar_invariance_check, haar_su2, Axiom, AxiomVerdict};
use qiso_core::ncalg::{random_poly, NCPoly, Presentation, Status};
use qiso_core::qgroups::af::check_af_level;
use qiso_core::qgroups::irreps::{check_schur, check_tower, diagonal_similarity, displayed_t1, irrep_tower, spin_label};
use qiso_core::qgroups::podles::{
    a_b_from_x, ab_relations, c_param, chi_relations, haar_norm_closed_form, haar_norms, haar_orthogonality,
    involution_laws, x_c_implied_c, x_c_kernel, x_vector,
};
use qiso_core::qgroups::somu3::{check_somu3_action_matrix, check_somu3_embedding, somu3, somu3_images, z1_corep, SOMU3_BOUND};
use qiso_core::qgroups::su2::{su2, su2_hopf, su2_relations, t_half};
use qiso_core::qgroups::umu2::{check_umu2_action, kappa_table, u_matrix, umu2, umu2_hopf};
use qiso_core::qgroups::wang::{check_magic_unitary, qperm_cstar};
use qiso_core::qgroups::Check;
use qiso_core::repnum::cp::CPTriple;
use qiso_core::repnum::haar::{haar_closed_form_suite, spectral_basics};
use qiso_core::repnum::oracle::Su2Oracle;
use qiso_core::repnum::{NumCheck, RepError, TOL_IDENTITY};
use qiso_core::rieffel::algebra::{nc_torus_presentation, standard_k, theta_sphere_presentation, DeformedAlgebra};
use qiso_core::rieffel::blocks::{gamma_label, qiso_atheta_block_table};
use qiso_core::rieffel::{phase_by_integral, phase_value, weight, DeformMatrix, RieffelError};
use qiso_core::scalar::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub const SEED: u64 = 0x51_5f_c0_de;
pub const RANDOM_TRIPLES: usize = 500;
pub const ORACLE_POLYS: usize = 200;
/// Oracle coherence tolerance.
pub const TOL_ORACLE: f64 = 1e-10;
pub const MAGIC_N: usize = 4;
pub const AF_BRANCHINGS: [&[usize]; 3] = [&[2], &[2, 1], &[3, 2]];

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Rieffel(#[from] RieffelError),
    #[error("{0}")]
    Engine(String),
}

struct Ctx {
    suite: SuiteId,
    tol: Option<f64>,
    records: Vec<Record>,
    engine: Vec<EngineEntry>,
}

impl Ctx {
    fn id(&self, group: &str, name: &str) -> String {
        format!("{}/{}/{}", self.suite, group, name)
    }

    fn exact(&mut self, group: &str, name: &str, label: &str, passed: bool, residual: impl Into<String>) {
        let residual = residual.into();
        self.records.push(Record {
            id: self.id(group, name),
            label: label.into(),
            params: vec![],
            passed,
            residual: Residual::Exact(if passed && residual.is_empty() { "0".into() } else { residual }),
            repro: None,
        });
    }

    fn zero(&mut self, group: &str, name: &str, label: &str, residual: &NCPoly) {
        self.exact(group, name, label, residual.is_zero(), residual.to_string());
    }

    fn check(&mut self, group: &str, c: &Check) {
        self.exact(group, &c.label, &c.label, c.passed, c.detail.clone());
    }

    fn num(&mut self, group: &str, c: &NumCheck) {
        let tol = self.tol.unwrap_or(c.tol);
        self.records.push(Record {
            id: self.id(group, &c.id),
            label: c.id.clone(),
            params: c.params.clone(),
            passed: c.residual.is_finite() && c.residual < tol,
            residual: Residual::Numeric { value: c.residual, tol },
            repro: None,
        });
    }

    fn engine(&mut self, p: &Presentation) {
        self.engine.push(EngineEntry { name: p.name.clone(), status: p.status().to_string(), rules: p.rules().len() });
    }
}

pub fn run(params: &Params) -> Result<Report, RunError> {
    let mut cx = Ctx { suite: params.suite, tol: params.tol, records: Vec::new(), engine: Vec::new() };
    match params.suite {
        SuiteId::Su2Core => su2_core(&mut cx, params)?,
        SuiteId::HopfAxioms => hopf_axioms(&mut cx, params),
        SuiteId::Haar => haar(&mut cx, params)?,
        SuiteId::PodlesSymbolic => podles_symbolic(&mut cx),
        SuiteId::PodlesNumeric => podles_numeric(&mut cx, params)?,
        SuiteId::Somu3 => somu3_suite(&mut cx)?,
        SuiteId::Umu2Action => umu2_action(&mut cx),
        SuiteId::Irreps => irreps(&mut cx, params)?,
        SuiteId::RieffelTorus => rieffel_torus(&mut cx, params)?,
        SuiteId::QisoAtheta => qiso_atheta(&mut cx, params)?,
        SuiteId::QisoCp => qiso_cp(&mut cx, params)?,
        SuiteId::WangAf => wang_af(&mut cx)?,
    }
    let report = Report {
        suite: params.suite.to_string(),
        params: params.relevant().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        engine: cx.engine,
        records: cx.records,
    };
    Ok(report.finalize(&params.command_line()))
}

fn su2_core(cx: &mut Ctx, p: &Params) -> Result<(), RunError> {
    let s = su2();
    cx.engine(s);
    cx.exact(
        "completion",
        "status",
        "SU_μ(2) completion at bound 8 is confluent",
        s.status() == Status::Confluent,
        format!("{} ({} rules, bound {})", s.status(), s.rules().len(), s.bound()),
    );
    for (l, r) in su2_relations() {
        cx.zero("relations", &l, &format!("defining relation {l} reduces to 0"), &s.normal_form(&r));
    }
    let a = s.alphabet().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut assoc_bad, mut star_bad) = (Vec::new(), Vec::new());
    for i in 0..RANDOM_TRIPLES {
        let x = random_poly(&a, p.degree, 3, &mut rng);
        let y = random_poly(&a, p.degree, 3, &mut rng);
        let z = random_poly(&a, p.degree, 3, &mut rng);
        if s.mul(&s.mul(&x, &y), &z) != s.mul(&x, &s.mul(&y, &z)) {
            assoc_bad.push(i);
        }
        if s.normal_form(&s.mul(&x, &y).star()) != s.mul(&y.star(), &x.star()) {
            star_bad.push(i);
        }
    }
    let fmt_bad = |v: &Vec<usize>| if v.is_empty() { "0".to_string() } else { format!("failing samples {v:?}") };
    cx.exact(
        "random",
        "associativity",
        &format!("(xy)z = x(yz) in normal form for {RANDOM_TRIPLES} seeded triples of degree ≤ {}", p.degree),
        assoc_bad.is_empty(),
        fmt_bad(&assoc_bad),
    );
    cx.exact(
        "random",
        "star",
        &format!("(xy)* = y*x* in normal form for {RANDOM_TRIPLES} seeded pairs of degree ≤ {}", p.degree),
        star_bad.is_empty(),
        fmt_bad(&star_bad),
    );
    let depth = p.degree.max(1);
    let oracle = Su2Oracle::new(p.mu, 8 + 2 * depth, 2 + depth as i64)?;
    for c in oracle.relation_checks(&su2_relations()).map_err(|e| RunError::Engine(e.to_string()))? {
        cx.num("oracle", &c);
    }
    let mut worst = 0.0f64;
    for _ in 0..ORACLE_POLYS {
        let x = random_poly(&a, p.degree, 4, &mut rng);
        let d = oracle.distance(&x, &s.normal_form(&x)).map_err(|e| RunError::Engine(e.to_string()))?;
        worst = worst.max(d);
    }
    cx.num(
        "oracle",
        &NumCheck::new(
            format!("oracle: π(x) = π(nf x) for {ORACLE_POLYS} seeded polynomials"),
            &[("mu", p.mu), ("degree", p.degree as f64)],
            worst,
            TOL_ORACLE,
        ),
    );
    Ok(())
}

fn axiom_records(cx: &mut Ctx, group: &str, what: &str, verdicts: &[AxiomVerdict]) {
    let axioms = [
        Axiom::Coassociativity,
        Axiom::LeftCounit,
        Axiom::RightCounit,
        Axiom::LeftAntipode,
        Axiom::RightAntipode,
        Axiom::StarCoproduct,
        Axiom::StarAntipode,
    ];
    for ax in axioms {
        let vs: Vec<&AxiomVerdict> = verdicts.iter().filter(|v| v.axiom == ax).collect();
        let bad: Vec<String> = vs.iter().filter(|v| !v.passed).map(|v| format!("{}: {}", v.label, v.residual)).collect();
        cx.exact(
            group,
            &ax.to_string(),
            &format!("{ax} on {} {what}", vs.len()),
            bad.is_empty(),
            if bad.is_empty() { "0".into() } else { bad.join("; ") },
        );
    }
}

fn hopf_axioms(cx: &mut Ctx, p: &Params) {
    let s = su2();
    cx.engine(s);
    let sample: Vec<(String, NCPoly)> = s
        .basis_words(p.degree)
        .into_iter()
        .map(|w| (s.alphabet().render_word(&w), NCPoly::word(s.alphabet(), w)))
        .collect();
    axiom_records(cx, "su2", &format!("SU_μ(2) basis monomials of degree ≤ {}", p.degree), &su2_hopf().axiom_suite(&sample));

    let h = umu2_hopf();
    let u = h.presentation();
    cx.engine(u);
    let gens: Vec<(String, NCPoly)> = u.alphabet().names().iter().map(|g| (g.clone(), u.gen(g))).collect();
    axiom_records(cx, "umu2", "U_μ(2) generators", &h.axiom_suite(&gens));
    let m = u_matrix();
    for (g, k) in kappa_table() {
        let (i, j) = ((g.as_bytes()[1] - b'1') as usize, (g.as_bytes()[2] - b'1') as usize);
        let via_hopf = &h.antipode(&u.gen(g)) - &k;
        cx.zero("umu2-antipode", &format!("κ({g})"), &format!("antipode of {g} equals the tabulated value"), &u.normal_form(&via_hopf));
        let transpose = &k - &m[j][i].star();
        cx.zero("umu2-antipode", &format!("κ({g}) = u{}{}*", j + 1, i + 1), "tabulated antipode is the starred transpose", &u.normal_form(&transpose));
    }
}

fn haar(cx: &mut Ctx, p: &Params) -> Result<(), RunError> {
    let s = su2();
    cx.engine(s);
    let gg = s.word(&["γ*", "γ"]);
    let oracle = Su2Oracle::new(p.mu, 80, 14)?;
    for k in 0..=6u32 {
        let x = s.pow(&gg, k);
        let mu2 = Scalar::mu_pow(2);
        let want = (&(&Scalar::one() - &mu2) / &(&Scalar::one() - &Scalar::mu_pow(2 * k as i32 + 2))).expect("μ ≠ 1");
        let got = haar_su2(&x);
        let name = format!("h((γ*γ)^{k})");
        cx.exact("exact", &name, "Haar value equals (1 − μ²)/(1 − μ^{2k+2})", got == want, (&got - &want).to_string());
        let num = oracle.haar(&x)?;
        let w = 0.0f64.max((1.0 - p.mu.powi(2)) / (1.0 - p.mu.powi(2 * k as i32 + 2)));
        cx.num("oracle", &NumCheck::new(format!("oracle {name}"), &[("mu", p.mu)], (num - w).abs(), TOL_IDENTITY));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x4a);
    let asg = qiso_core::scalar::Assignment::with_mu(p.mu);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let x = random_poly(s.alphabet(), p.degree.min(4), 4, &mut rng);
        let exact = haar_su2(&x).eval_complex(&asg).map_err(|e| RunError::Engine(e.to_string()))?;
        worst = worst.max((oracle.haar(&x)? - exact.re).abs()).max(exact.im.abs());
    }
    cx.num("oracle", &NumCheck::new("oracle h(x) = exact h(x) on 50 seeded polynomials", &[("mu", p.mu)], worst, TOL_IDENTITY));
    let inv = haar_invariance_check(su2_hopf(), p.degree);
    let bad_l: Vec<String> = inv.iter().filter(|v| !v.left_residual.is_zero()).map(|v| v.word.clone()).collect();
    let bad_r: Vec<String> = inv.iter().filter(|v| !v.right_residual.is_zero()).map(|v| v.word.clone()).collect();
    let n = inv.len();
    cx.exact("invariance", "left", &format!("(h⊗id)Δx = h(x)1 on {n} basis monomials"), bad_l.is_empty(), bad_l.join(", "));
    cx.exact("invariance", "right", &format!("(id⊗h)Δx = h(x)1 on {n} basis monomials"), bad_r.is_empty(), bad_r.join(", "));
    Ok(())
}

fn podles_symbolic(cx: &mut Ctx) {
    cx.engine(su2());
    let x = x_vector();
    for v in chi_relations(&x) {
        cx.zero("chi", &v.label, "χ relation vanishes on the x-vector", &v.residual);
    }
    let (a, b) = a_b_from_x(&x);
    for v in ab_relations(&a, &b, &c_param()) {
        cx.zero("ab", &v.label, "A, B relation of the Podles sphere with c = (1 − t)/t²", &v.residual);
    }
    for v in x_c_kernel(&x) {
        cx.zero("x-c", &v.label, "x-vector lies in the kernel of X_c", &v.residual);
    }
    let implied = x_c_implied_c(&x);
    cx.exact(
        "x-c",
        "implied c",
        "c recovered from the kernel condition equals (1 − t)/t²",
        implied.as_ref() == Some(&c_param()),
        implied.map_or("none".into(), |c| c.to_string()),
    );
    for v in involution_laws(&x) {
        cx.zero("involution", &v.label, "involution law of the x-vector", &v.residual);
    }
    for (l, v) in haar_orthogonality(&x) {
        cx.exact("haar", &l, "Haar orthogonality of the x-vector", v.is_zero(), v.to_string());
    }
    let cf = haar_norm_closed_form();
    for (i, v) in haar_norms(&x).iter().enumerate() {
        let d = v - &cf;
        cx.exact("haar", &format!("h(x{}*x{})", i as i32 - 1, i as i32 - 1), "Haar norm equals the closed form", d.is_zero(), d.to_string());
    }
}

fn podles_numeric(cx: &mut Ctx, p: &Params) -> Result<(), RunError> {
    let t = CPTriple::new(p.mu, p.c, p.nmax)?;
    for c in t.relation_residuals() {
        cx.num("cp", &c);
    }
    for c in t.structure_checks() {
        cx.num("cp", &c);
    }
    for c in spectral_basics(p.mu, p.c)? {
        cx.num("haar", &c);
    }
    for c in haar_closed_form_suite(p.mu, p.c)? {
        cx.num("haar", &c);
    }
    Ok(())
}

fn somu3_suite(cx: &mut Ctx) -> Result<(), RunError> {
    cx.engine(su2());
    cx.engine(&somu3(SOMU3_BOUND));
    let rep = check_somu3_embedding(&somu3_images()).map_err(|e| RunError::Engine(e.to_string()))?;
    for v in &rep.verdicts {
        cx.zero("embedding", &v.label, "SO_μ(3) relation vanishes under the embedding into SU_μ(2)", &v.residual);
    }
    cx.exact("embedding", "count", "number of relations checked", true, format!("{} relations", rep.verdicts.len()));
    for e in check_somu3_action_matrix() {
        cx.exact(
            "action",
            &format!("Δ(x{})", e.index),
            "Δ(x_i) = Σ_j x_j ⊗ Z₁[j][i]",
            e.residual.is_zero(),
            e.residual.to_string(),
        );
    }
    for c in z1_corep().invariants(su2_hopf()) {
        cx.check("z1", &c);
    }
    Ok(())
}

fn umu2_action(cx: &mut Ctx) {
    cx.engine(su2());
    cx.engine(umu2());
    for c in check_umu2_action() {
        cx.check("action", &c);
    }
}

fn irreps(cx: &mut Ctx, p: &Params) -> Result<(), RunError> {
    cx.engine(su2());
    let tower = irrep_tower(p.twice_lmax).map_err(|e| RunError::Engine(e.to_string()))?;
    for c in check_tower(&tower) {
        cx.check("tower", &c);
    }
    for c in check_schur(&tower).map_err(|e| RunError::Engine(e.to_string()))? {
        cx.check("schur", &c);
    }
    if tower.len() > 1 {
        let ok = tower[1].entries == t_half();
        cx.exact("fixtures", "T^1/2", "T^{1/2} = [[α, −μγ*], [γ, α*]]", ok, if ok { "0" } else { "differs" });
    }
    if tower.len() > 2 {
        let mut shown = displayed_t1();
        shown.reverse();
        for r in shown.iter_mut() {
            r.reverse();
        }
        let d = diagonal_similarity(&tower[2].entries, &shown);
        let detail = match &d {
            Some(v) => format!("D = diag({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")),
            None => "no diagonal similarity".into(),
        };
        cx.exact("fixtures", "T^1", &format!("T^{} equals the displayed matrix with indices reversed, up to D⁻¹·D", spin_label(2)), d.is_some(), detail);
    }
    Ok(())
}

fn deformed_records(cx: &mut Ctx, group: &str, d: &DeformedAlgebra, max_len: usize) -> Result<(), RunError> {
    cx.engine(&d.deformed);
    for c in d.cited_checks() {
        cx.check(group, &c);
    }
    let c = d.hom_consistency(max_len)?;
    cx.check(group, &c);
    let c = d.inversion(max_len)?;
    cx.check(group, &c);
    Ok(())
}

fn rieffel_torus(cx: &mut Ctx, p: &Params) -> Result<(), RunError> {
    let len = p.degree.min(qiso_core::rieffel::algebra::DEFORM_BOUND);
    deformed_records(cx, "torus2", &nc_torus_presentation(&standard_k(2))?, len)?;
    deformed_records(cx, "torus3", &nc_torus_presentation(&[vec![0, 1, -2], vec![-1, 0, 1], vec![2, -1, 0]])?, len.min(3))?;
    deformed_records(cx, "sphere3", &theta_sphere_presentation(&standard_k(2), false)?, len.min(3))?;
    deformed_records(cx, "sphere4", &theta_sphere_presentation(&standard_k(2), true)?, len.min(2))?;
    let j = DeformMatrix::torus2();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x7e);
    let mut worst = 0.0f64;
    for _ in 0..64 {
        let a: Vec<i64> = (0..2).map(|_| rng.gen_range(-4..=4)).collect();
        let b: Vec<i64> = (0..2).map(|_| rng.gen_range(-4..=4)).collect();
        let (pa, pb) = (weight(&a), weight(&b));
        let rule = phase_value(j.phase(&pa, &pb)?, p.theta);
        let integral = phase_by_integral(&j, &pa, &pb, p.theta).ok_or_else(|| RunError::Engine("non-integral weight".into()))?;
        worst = worst.max((rule - integral).norm());
    }
    cx.num(
        "oracle",
        &NumCheck::new("phase rule e(−p·Jq) = lattice-sum integral on 64 seeded weight pairs", &[("theta", p.theta)], worst, TOL_IDENTITY),
    );
    Ok(())
}

fn qiso_atheta(cx: &mut Ctx, p: &Params) -> Result<(), RunError> {
    let table = qiso_atheta_block_table(p.jtilde.doubling())?;
    for e in &table.entries {
        cx.exact(
            "blocks",
            &gamma_label(e.gamma),
            "A×B = e(mθ)·B×A with m as tabulated; unitary generators",
            e.passed(),
            format!("m = {} (expected {}), A×B = {}·AB, B×A = {}·BA, {}", e.m, e.expected, e.ab_phase, e.ba_phase, e.class()),
        );
    }
    for c in &table.checks {
        cx.check("structure", c);
    }
    let (comm, nc) = table.decomposition();
    cx.exact(
        "structure",
        "decomposition",
        "C(T²)⁴ ⊕ A_{2θ}⁴",
        (comm, nc) == (4, 4),
        format!("{comm} commutative, {nc} of type A_{{2θ}}"),
    );
    Ok(())
}

fn qiso_cp(cx: &mut Ctx, p: &Params) -> Result<(), RunError> {
    let t = CPTriple::new(p.mu, p.c, p.nmax)?;
    let rep = VRep::new(p.nmax);
    for c in t.structure_checks() {
        cx.num("cp", &c);
    }
    for c in closed_form_suite(&rep, &t)? {
        cx.num("closed-form", &c);
    }
    cx.num("closed-form", &multiplicativity(&rep, &t, &[0, 1, p.nmax / 2, p.nmax - 1])?);
    for (name, x) in [("A", &t.a), ("B", &t.b), ("τ", &t.tau)] {
        for ys in [1, -1] {
            let r = evaluation_homomorphism(&rep, x, p.theta, ys)?;
            let id = format!("φ(α({name})) = φ(Ũ)({name}⊗1)φ(Ũ)*, y ↦ {ys}");
            cx.num("character", &NumCheck::new(id, &[("theta", p.theta), ("nmax", p.nmax as f64)], r, TOL_IDENTITY));
        }
    }
    let w = no_action_witness(p.theta, p.nmax)?;
    for c in w.checks() {
        cx.num("no-action", &c);
    }
    cx.exact(
        "no-action",
        "lower bound",
        "commutator columns bounded below by |1 − e(θ)|",
        true,
        format!("min ‖[α_φ(τ)P₊, τ₁]eₙ‖ = {:.10} over {} columns, |1 − e(θ)| = {:.10}", w.min_norm(), w.column_norms.len(), w.expected),
    );
    Ok(())
}

fn wang_af(cx: &mut Ctx) -> Result<(), RunError> {
    for n in 1..=MAGIC_N {
        cx.engine(&qperm_cstar(n).presentation);
        for c in check_magic_unitary(n) {
            cx.check(&format!("qperm{n}"), &c);
        }
    }
    for b in AF_BRANCHINGS {
        let name = b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        for c in check_af_level(b).map_err(|e| RunError::Engine(e.to_string()))? {
            cx.check(&format!("af({name})"), &c);
        }
    }
    Ok(())
}

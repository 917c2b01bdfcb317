//! U_μ(2) with the quantum determinant D and its inverse as generators.

use crate::hopf::{matrix_coproduct, HopfData, TensorPoly};
use crate::ncalg::{complete, Alphabet, CompletionOptions, NCPoly, Presentation};
use crate::scalar::Scalar;
use super::su2::{su2, su2_relations};
use super::Check;
use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

pub const U: [[&str; 2]; 2] = [["u11", "u12"], ["u21", "u22"]];
pub const U_STAR: [[&str; 2]; 2] = [["u11*", "u12*"], ["u21*", "u22*"]];

pub fn umu2_alphabet() -> Arc<Alphabet> {
    static A: OnceLock<Arc<Alphabet>> = OnceLock::new();
    A.get_or_init(|| {
        Alphabet::new(&[
            ("D", "Dinv", 1),
            ("Dinv", "D", 1),
            ("u11", "u11*", 1),
            ("u12", "u12*", 1),
            ("u21", "u21*", 1),
            ("u22", "u22*", 1),
            ("u11*", "u11", 3),
            ("u12*", "u12", 3),
            ("u21*", "u21", 3),
            ("u22*", "u22", 3),
        ])
        .unwrap()
    })
    .clone()
}

pub fn umu2_relations() -> Vec<(String, NCPoly)> {
    let a = umu2_alphabet();
    let w = |n: &[&str]| NCPoly::monomial(&a, n);
    let g = |n: &str| NCPoly::gen(&a, n);
    let one = NCPoly::one(&a);
    let mu = Scalar::mu();
    let mu_inv = Scalar::mu_pow(-1);
    let mut rels: Vec<(String, NCPoly)> = vec![
        ("def1".into(), &w(&["u11", "u12"]) - &w(&["u12", "u11"]).scale(&mu)),
        ("def2".into(), &w(&["u11", "u21"]) - &w(&["u21", "u11"]).scale(&mu)),
        ("def3".into(), &w(&["u12", "u22"]) - &w(&["u22", "u12"]).scale(&mu)),
        ("def4".into(), &w(&["u21", "u22"]) - &w(&["u22", "u21"]).scale(&mu)),
        ("def5".into(), &w(&["u12", "u21"]) - &w(&["u21", "u12"])),
        (
            "def6".into(),
            &(&w(&["u11", "u22"]) - &w(&["u22", "u11"])) - &w(&["u12", "u21"]).scale(&(&mu - &mu_inv)),
        ),
        ("qdet".into(), &g("D") - &(&w(&["u11", "u22"]) - &w(&["u12", "u21"]).scale(&mu))),
        ("Dinv-right".into(), &w(&["D", "Dinv"]) - &one),
        ("Dinv-left".into(), &w(&["Dinv", "D"]) - &one),
    ];
    for i in 0..2 {
        for j in 0..2 {
            let mut uus = NCPoly::zero(&a);
            let mut usu = NCPoly::zero(&a);
            for k in 0..2 {
                uus = &uus + &w(&[U[i][k], U_STAR[j][k]]);
                usu = &usu + &w(&[U_STAR[k][i], U[k][j]]);
            }
            if i == j {
                uus = &uus - &one;
                usu = &usu - &one;
            }
            rels.push((format!("uu*{}{}", i + 1, j + 1), uus));
            rels.push((format!("u*u{}{}", i + 1, j + 1), usu));
        }
    }
    for x in U.iter().flatten().chain(U_STAR.iter().flatten()) {
        rels.push((format!("D-central-{}", x), &w(&["D", x]) - &w(&[x, "D"])));
        rels.push((format!("Dinv-central-{}", x), &w(&["Dinv", x]) - &w(&[x, "Dinv"])));
    }
    rels
}

pub fn umu2_uncompleted() -> Presentation {
    Presentation::new("Umu2", &umu2_alphabet(), umu2_relations()).star_closed()
}

pub fn umu2() -> &'static Presentation {
    static P: OnceLock<Presentation> = OnceLock::new();
    P.get_or_init(|| complete(&umu2_uncompleted(), CompletionOptions::bound(6)).expect("U_μ(2) completes"))
}

pub fn u_matrix() -> Vec<Vec<NCPoly>> {
    let p = umu2();
    (0..2).map(|i| (0..2).map(|j| p.gen(U[i][j])).collect()).collect()
}

/// Antipode on the u_ij as given by the adjugate of u over D:
/// κ(u11) = u22D⁻¹, κ(u12) = −μ⁻¹u12D⁻¹, κ(u21) = −μu21D⁻¹, κ(u22) = u11D⁻¹.
pub fn kappa_table() -> Vec<(&'static str, NCPoly)> {
    let p = umu2();
    let dinv = p.gen("Dinv");
    vec![
        ("u11", p.mul(&p.gen("u22"), &dinv)),
        ("u12", p.mul(&p.gen("u12"), &dinv).scale(&-&Scalar::mu_pow(-1))),
        ("u21", p.mul(&p.gen("u21"), &dinv).scale(&-&Scalar::mu())),
        ("u22", p.mul(&p.gen("u11"), &dinv)),
    ]
}

pub fn umu2_hopf() -> &'static HopfData {
    static H: OnceLock<HopfData> = OnceLock::new();
    H.get_or_init(|| {
        let p = umu2();
        let u = u_matrix();
        let du = matrix_coproduct(&u);
        let mut delta = BTreeMap::new();
        let mut eps = BTreeMap::new();
        let mut kappa = BTreeMap::new();
        for i in 0..2 {
            for j in 0..2 {
                delta.insert(U[i][j].to_string(), du[i][j].clone());
                delta.insert(U_STAR[i][j].to_string(), du[i][j].star());
                let e = Scalar::from_int((i == j) as i64);
                eps.insert(U[i][j].to_string(), e.clone());
                eps.insert(U_STAR[i][j].to_string(), e);
            }
        }
        for g in ["D", "Dinv"] {
            let x = p.gen(g);
            delta.insert(g.to_string(), TensorPoly::pure(&[&x, &x]));
            eps.insert(g.to_string(), Scalar::one());
        }
        for (g, k) in kappa_table() {
            kappa.insert(g.to_string(), k);
        }
        // κ(u_ij*) = κ²(u_ji)
        let mu2 = Scalar::mu_pow(2);
        kappa.insert("u11*".into(), p.gen("u11"));
        kappa.insert("u22*".into(), p.gen("u22"));
        kappa.insert("u12*".into(), p.gen("u21").scale(&mu2));
        kappa.insert("u21*".into(), p.gen("u12").scale(&Scalar::mu_pow(-2)));
        kappa.insert("D".into(), p.gen("Dinv"));
        kappa.insert("Dinv".into(), p.gen("D"));
        HopfData::new(p.clone(), delta, eps, kappa).expect("complete generator data")
    })
}

/// The relations for an SU_μ(2) coaction with coefficient matrix (A, B; C, D),
/// instantiated at A, B, C, D = u11, μu21, μ⁻¹u12, u22.
pub fn action_relations() -> Vec<(String, NCPoly)> {
    let p = umu2();
    let mu = Scalar::mu();
    let m = |k| Scalar::mu_pow(k);
    let a = p.gen("u11");
    let b = p.gen("u21").scale(&mu);
    let c = p.gen("u12").scale(&m(-1));
    let d = p.gen("u22");
    let (as_, bs, cs, ds) = (a.star(), b.star(), c.star(), d.star());
    let x = |l: &NCPoly, r: &NCPoly| p.mul(l, r);
    let one = p.one();
    let rels = vec![
        &(&x(&as_, &a) + &x(&c, &cs)) - &one,
        &(&x(&as_, &a) + &x(&c, &cs).scale(&m(2))) - &(&x(&bs, &b) + &x(&d, &ds)),
        &x(&as_, &b) + &x(&d, &cs).scale(&mu),
        &x(&bs, &a) + &x(&c, &ds).scale(&mu),
        &(&x(&a, &as_) + &x(&c, &cs).scale(&m(2))) - &one,
        &(&x(&b, &bs) + &x(&d, &ds).scale(&m(2))) - &p.constant(m(2)),
        &x(&b, &as_) + &x(&d, &cs).scale(&m(2)),
        &x(&cs, &c) - &x(&c, &cs),
        &x(&cs, &c).scale(&(&Scalar::one() - &m(2))) - &(&x(&ds, &d) - &x(&d, &ds)),
        &x(&cs, &d) - &x(&d, &cs).scale(&mu),
        &(&(&x(&a, &cs).scale(&-&m(2)) + &x(&b, &ds)) - &x(&ds, &b).scale(&mu)) + &x(&cs, &a).scale(&mu),
        &x(&a, &cs) - &x(&cs, &a).scale(&mu),
        &x(&b, &cs) - &x(&cs, &b),
        &x(&a, &ds) - &x(&ds, &a),
        &x(&a, &c) - &x(&c, &a).scale(&mu),
        &x(&b, &d) - &x(&d, &b).scale(&mu),
        &(&x(&a, &d) - &x(&c, &b).scale(&mu)) - &(&x(&d, &a) - &x(&b, &c).scale(&m(-1))),
    ];
    rels.into_iter().enumerate().map(|(i, r)| (format!("action{}", i + 1), r)).collect()
}

/// Ψ(α) = α ⊗ u11 + γ* ⊗ μu21, Ψ(γ*) = α ⊗ μ⁻¹u12 + γ* ⊗ u22, extended as a *-map.
pub fn psi_images() -> Vec<TensorPoly> {
    let s = su2();
    let p = umu2();
    let mu = Scalar::mu();
    let psi_alpha =
        &TensorPoly::pure(&[&s.gen("α"), &p.gen("u11")]) + &TensorPoly::pure(&[&s.gen("γ*"), &p.gen("u21").scale(&mu)]);
    let psi_gs = &TensorPoly::pure(&[&s.gen("α"), &p.gen("u12").scale(&Scalar::mu_pow(-1))])
        + &TensorPoly::pure(&[&s.gen("γ*"), &p.gen("u22")]);
    s.alphabet()
        .names()
        .iter()
        .map(|n| match n.as_str() {
            "α" => psi_alpha.clone(),
            "α*" => psi_alpha.star(),
            "γ*" => psi_gs.clone(),
            "γ" => psi_gs.star(),
            _ => unreachable!("SU_μ(2) has four generators"),
        })
        .collect()
}

/// The action relations, Ψ on the SU_μ(2) relations, and the antipode table.
pub fn check_umu2_action() -> Vec<Check> {
    let p = umu2();
    let mut out: Vec<Check> = action_relations()
        .into_iter()
        .map(|(l, r)| {
            let nf = p.normal_form(&r);
            Check::zero(l, &nf, nf.is_zero())
        })
        .collect();
    let s = su2();
    let images = psi_images();
    for (l, r) in su2_relations() {
        let v = TensorPoly::substitute(&r, &images, &[s, p]);
        out.push(Check::zero(format!("Ψ({l})"), &v, v.is_zero()));
    }
    for (g, k) in kappa_table() {
        let (i, j) = (g.as_bytes()[1] - b'1', g.as_bytes()[2] - b'1');
        let r = p.normal_form(&(&k - &p.gen(U[j as usize][i as usize]).star()));
        out.push(Check::zero(format!("κ({g}) = {}", U_STAR[j as usize][i as usize]), &r, r.is_zero()));
    }
    let h = umu2_hopf();
    for g in U.iter().flatten() {
        let x = p.gen(g);
        let r = p.normal_form(&(&h.antipode(&h.antipode(&x.star()).star()) - &x));
        out.push(Check::zero(format!("κ(κ({g}*)*) = {g}"), &r, r.is_zero()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::Status;

    #[test]
    fn completion_is_confluent() {
        let p = umu2();
        assert_eq!(p.status(), Status::Confluent, "{:?}", p.diagnostics());
    }

    #[test]
    fn determinant_both_orders() {
        let p = umu2();
        let d = p.gen("D");
        let lhs = &p.word(&["u22", "u11"]) - &p.word(&["u12", "u21"]).scale(&Scalar::mu_pow(-1));
        assert!(p.reduces_to_zero(&(&lhs - &d)));
    }

    #[test]
    fn starred_generators_via_determinant() {
        let p = umu2();
        let dinv = p.gen("Dinv");
        let cases = [
            ("u11*", p.mul(&p.gen("u22"), &dinv)),
            ("u22*", p.mul(&p.gen("u11"), &dinv)),
            ("u12*", p.mul(&p.gen("u21"), &dinv).scale(&-&Scalar::mu())),
            ("u21*", p.mul(&p.gen("u12"), &dinv).scale(&-&Scalar::mu_pow(-1))),
        ];
        for (g, v) in cases {
            assert!(p.reduces_to_zero(&(&p.gen(g) - &v)), "{}", g);
        }
    }

    #[test]
    fn kappa_table_is_transpose_star() {
        let p = umu2();
        for (g, k) in kappa_table() {
            let (i, j) = (g.as_bytes()[1] - b'1', g.as_bytes()[2] - b'1');
            let target = p.gen(U[j as usize][i as usize]).star();
            assert!(p.reduces_to_zero(&(&k - &target)), "{}", g);
        }
    }

    #[test]
    fn action_check_passes() {
        let report = check_umu2_action();
        assert_eq!(report.len(), 17 + 5 + 4 + 4);
        for c in report {
            assert!(c.passed, "{c}");
        }
    }

    #[test]
    fn first_action_relation_fixture() {
        let p = umu2();
        let r = &(&p.word(&["u11*", "u11"]) + &p.word(&["u12", "u12*"]).scale(&Scalar::mu_pow(-2))) - &p.one();
        assert!(p.reduces_to_zero(&r));
    }

    #[test]
    fn psi_of_wrong_relation_fails() {
        // γγ* − μ²γ*γ is not a relation
        let s = su2();
        let bad = &s.word(&["γ", "γ*"]) - &s.word(&["γ*", "γ"]).scale(&Scalar::mu_pow(2));
        assert!(!s.reduces_to_zero(&bad));
        let v = TensorPoly::substitute(&bad, &psi_images(), &[s, umu2()]);
        assert!(!v.is_zero());
    }

    #[test]
    fn hopf_axioms_on_generators() {
        let h = umu2_hopf();
        let p = h.presentation();
        let sample: Vec<_> = p.alphabet().names().iter().map(|n| (n.clone(), p.gen(n))).collect();
        for v in h.axiom_suite(&sample) {
            assert!(v.passed, "{} {}: {}", v.label, v.axiom, v.residual);
        }
    }
}

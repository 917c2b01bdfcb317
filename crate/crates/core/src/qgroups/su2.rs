//! SU_μ(2): generators α, γ with the five defining relations.

use crate::hopf::{matrix_coproduct, HopfData};
use crate::ncalg::{complete, Alphabet, CompletionOptions, NCPoly, Presentation};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

/// Letter order α < α* < γ* < γ with weights (2, 2, 1, 1).
pub fn su2_alphabet() -> Arc<Alphabet> {
    static A: OnceLock<Arc<Alphabet>> = OnceLock::new();
    A.get_or_init(|| {
        Alphabet::new(&[("α", "α*", 2), ("α*", "α", 2), ("γ*", "γ", 1), ("γ", "γ*", 1)]).unwrap()
    })
    .clone()
}

/// The five defining relations (each required to vanish).
pub fn su2_relations() -> Vec<(String, NCPoly)> {
    let a = su2_alphabet();
    let w = |n: &[&str]| NCPoly::monomial(&a, n);
    let one = NCPoly::one(&a);
    let mu = Scalar::mu();
    let mu2 = Scalar::mu_pow(2);
    vec![
        ("su2def1".into(), &(&w(&["α*", "α"]) + &w(&["γ*", "γ"])) - &one),
        ("su2def2".into(), &(&w(&["α", "α*"]) + &w(&["γ*", "γ"]).scale(&mu2)) - &one),
        ("su2def3".into(), &w(&["γ", "γ*"]) - &w(&["γ*", "γ"])),
        ("su2def4".into(), &w(&["γ", "α"]).scale(&mu) - &w(&["α", "γ"])),
        ("su2def5".into(), &w(&["γ*", "α"]).scale(&mu) - &w(&["α", "γ*"])),
    ]
}

pub fn su2_uncompleted() -> Presentation {
    Presentation::new("SUmu2", &su2_alphabet(), su2_relations()).star_closed()
}

/// Completed SU_μ(2) at bound 8, built once per process.
pub fn su2() -> &'static Presentation {
    static P: OnceLock<Presentation> = OnceLock::new();
    P.get_or_init(|| complete(&su2_uncompleted(), CompletionOptions::bound(8)).expect("SU_μ(2) completes"))
}

/// Fundamental corepresentation t^{1/2} = [[α, −μγ*], [γ, α*]].
pub fn t_half() -> Vec<Vec<NCPoly>> {
    let p = su2();
    vec![
        vec![p.gen("α"), p.gen("γ*").scale(&-&Scalar::mu())],
        vec![p.gen("γ"), p.gen("α*")],
    ]
}

/// Δ, ε, κ read off from t^{1/2}: Δ(t_ij) = Σ t_ik ⊗ t_kj, ε(t_ij) = δ_ij, κ(t_ij) = t_ji*.
pub fn su2_hopf() -> &'static HopfData {
    static H: OnceLock<HopfData> = OnceLock::new();
    H.get_or_init(|| {
        let p = su2();
        let t = t_half();
        let dt = matrix_coproduct(&t);
        let mu_inv = Scalar::mu_pow(-1);
        let mut delta = BTreeMap::new();
        delta.insert("α".to_string(), dt[0][0].clone());
        delta.insert("γ".to_string(), dt[1][0].clone());
        delta.insert("α*".to_string(), dt[1][1].clone());
        delta.insert("γ*".to_string(), dt[0][1].scale(&-&mu_inv));
        let eps: BTreeMap<String, Scalar> = [("α", 1), ("α*", 1), ("γ", 0), ("γ*", 0)]
            .into_iter()
            .map(|(g, e)| (g.to_string(), Scalar::from_int(e)))
            .collect();
        let mut kappa = BTreeMap::new();
        kappa.insert("α".to_string(), t[0][0].star());
        kappa.insert("α*".to_string(), t[1][1].star());
        kappa.insert("γ".to_string(), t[0][1].star());
        kappa.insert("γ*".to_string(), t[1][0].star().scale(&-&mu_inv));
        HopfData::new(p.clone(), delta, eps, kappa).expect("complete generator data")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::Status;

    #[test]
    fn completes_to_seven_rules() {
        let p = su2();
        for r in p.rules() {
            eprintln!("{} -> {}", p.alphabet().render_word(&r.lhs), r.rhs);
        }
        assert_eq!(p.status(), Status::Confluent);
        assert_eq!(p.rules().len(), 7);
    }

    #[test]
    fn gamma_alpha_rule() {
        let p = su2();
        let nf = p.normal_form(&p.word(&["γ", "α"]));
        assert_eq!(nf, p.word(&["α", "γ"]).scale(&Scalar::mu_pow(-1)));
    }
}

//! SO_μ(3) on generators M, N, G, C, L and its embedding into SU_μ(2).

use super::corep::CorepMatrix;
use super::podles::x_vector;
use super::su2::{su2, su2_hopf};
use crate::hopf::{matrix_coproduct, HopfData, TensorPoly};
use crate::ncalg::{complete, hom_check, Alphabet, CompletionOptions, HomCheckError, HomReport, NCPoly, Presentation};
use crate::scalar::{rad_u, Scalar};
use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

pub fn somu3_alphabet() -> Arc<Alphabet> {
    static A: OnceLock<Arc<Alphabet>> = OnceLock::new();
    A.get_or_init(|| {
        Alphabet::new(&[
            ("N", "N*", 2),
            ("N*", "N", 2),
            ("G", "G*", 2),
            ("G*", "G", 2),
            ("M", "M*", 2),
            ("M*", "M", 2),
            ("C", "C*", 2),
            ("C*", "C", 2),
            ("L", "L*", 2),
            ("L*", "L", 2),
        ])
        .unwrap()
    })
    .clone()
}

/// The defining relations, each required to vanish.
pub fn somu3_relations() -> Vec<(String, NCPoly)> {
    let a = somu3_alphabet();
    let w = |n: &[&str]| NCPoly::monomial(&a, n);
    let one = NCPoly::one(&a);
    let n = w(&["N"]);
    let nn = w(&["N", "N"]);
    let m = |k: i32| Scalar::mu_pow(k);
    let lin = |c1: i32, c2: i32| &n.scale(&m(c1)) - &nn.scale(&m(c2));
    let rels: Vec<(&str, NCPoly)> = vec![
        // L*L = (1 − N)(1 − μ⁻²N)
        ("L*L", &w(&["L*", "L"]) - &(&(&one - &n.scale(&(&Scalar::one() + &m(-2)))) + &nn.scale(&m(-2)))),
        // LL* = (1 − μ²N)(1 − μ⁴N)
        ("LL*", &w(&["L", "L*"]) - &(&(&one - &n.scale(&(&m(2) + &m(4)))) + &nn.scale(&m(6)))),
        ("G*G", &w(&["G*", "G"]) - &nn),
        ("GG*", &w(&["G", "G*"]) - &nn),
        ("M*M", &w(&["M*", "M"]) - &(&n - &nn)),
        ("MM*", &w(&["M", "M*"]) - &lin(2, 4)),
        ("C*C", &w(&["C*", "C"]) - &(&n - &nn)),
        ("CC*", &w(&["C", "C*"]) - &lin(2, 4)),
        ("LN", &w(&["L", "N"]) - &w(&["N", "L"]).scale(&m(4))),
        ("GN", &w(&["G", "N"]) - &w(&["N", "G"])),
        ("MN", &w(&["M", "N"]) - &w(&["N", "M"]).scale(&m(2))),
        ("CN", &w(&["C", "N"]) - &w(&["N", "C"]).scale(&m(2))),
        ("LG", &w(&["L", "G"]) - &w(&["G", "L"]).scale(&m(4))),
        ("LM", &w(&["L", "M"]) - &w(&["M", "L"]).scale(&m(2))),
        ("MG", &w(&["M", "G"]) - &w(&["G", "M"]).scale(&m(2))),
        ("CM", &w(&["C", "M"]) - &w(&["M", "C"])),
        ("LG*", &w(&["L", "G*"]) - &w(&["G*", "L"]).scale(&m(4))),
        ("M²", &w(&["M", "M"]) - &w(&["L", "G"]).scale(&m(-1))),
        // M*L = μ⁻¹(1 − N)C
        ("M*L", &w(&["M*", "L"]) - &(&w(&["C"]) - &w(&["N", "C"])).scale(&m(-1))),
        ("N*", &w(&["N*"]) - &n),
    ];
    rels.into_iter().map(|(l, p)| (format!("somu3:{l}"), p)).collect()
}

/// SO_μ(3) with its relations star-closed and completed at the given bound.
pub fn somu3(bound: usize) -> Presentation {
    let p = Presentation::new("SOmu3", &somu3_alphabet(), somu3_relations()).star_closed();
    complete(&p, CompletionOptions::bound(bound)).expect("SO_μ(3) relations orient")
}

/// N ↦ γ*γ, M ↦ αγ, C ↦ αγ*, G ↦ γ², L ↦ α² (and the starred images).
pub fn somu3_images() -> BTreeMap<String, NCPoly> {
    let p = su2();
    let base = [
        ("N", p.word(&["γ*", "γ"])),
        ("M", p.word(&["α", "γ"])),
        ("C", p.word(&["α", "γ*"])),
        ("G", p.word(&["γ", "γ"])),
        ("L", p.word(&["α", "α"])),
    ];
    let mut out = BTreeMap::new();
    for (g, x) in base {
        out.insert(format!("{g}*"), p.normal_form(&x.star()));
        out.insert(g.to_string(), p.normal_form(&x));
    }
    out
}

/// Substitute the embedding into every relation of SO_μ(3) and reduce in SU_μ(2).
pub fn check_somu3_embedding(images: &BTreeMap<String, NCPoly>) -> Result<HomReport, HomCheckError> {
    let src = Presentation::new("SOmu3", &somu3_alphabet(), somu3_relations());
    hom_check(&src, su2(), images)
}

/// (1 + μ⁻²)^{1/2} = u/μ with u = (1 + μ²)^{1/2}.
pub fn sqrt_one_plus_mu_inv2() -> Scalar {
    &rad_u() * &Scalar::mu_pow(-1)
}

/// Z₁ in the symbols M, N, G, C, L.
pub fn z1_symbolic() -> Vec<Vec<NCPoly>> {
    let a = somu3_alphabet();
    let g = |n: &str| NCPoly::gen(&a, n);
    let r = sqrt_one_plus_mu_inv2();
    let mu = Scalar::mu();
    let one = NCPoly::one(&a);
    let mid = &one - &g("N").scale(&(&mu * &(&mu + &Scalar::mu_pow(-1))));
    vec![
        vec![g("L"), g("C").scale(&-&(&mu * &r)), g("G*").scale(&Scalar::mu_pow(2))],
        vec![g("M").scale(&r), mid, g("M*").scale(&-&(&mu * &r))],
        vec![g("G"), g("C*").scale(&r), g("L*")],
    ]
}

/// Z₁ pulled back into SU_μ(2) through the embedding.
pub fn z1_in_su2() -> Vec<Vec<NCPoly>> {
    let p = su2();
    let imgs = somu3_images();
    let a = somu3_alphabet();
    let by_index: Vec<NCPoly> = a.names().iter().map(|n| imgs[n].clone()).collect();
    z1_symbolic()
        .iter()
        .map(|row| row.iter().map(|e| p.substitute(e, &by_index)).collect())
        .collect()
}

/// Z₁ pulled back into SU_μ(2), as a corepresentation matrix.
pub fn z1_corep() -> CorepMatrix {
    CorepMatrix::new("Z1", Some(2), z1_in_su2())
}

pub const SOMU3_BOUND: usize = 4;

/// Each generator as a + b·Z₁[i][j]: (name, i, j, a, b).
fn z1_coordinates() -> Vec<(&'static str, usize, usize, Scalar, Scalar)> {
    let r = sqrt_one_plus_mu_inv2();
    let mu = Scalar::mu();
    let z = Scalar::zero;
    let inv = |x: Scalar| x.inv().expect("nonzero");
    let n = inv(&Scalar::one() + &Scalar::mu_pow(2));
    vec![
        ("L", 0, 0, z(), Scalar::one()),
        ("C", 0, 1, z(), inv(-&(&mu * &r))),
        ("G*", 0, 2, z(), Scalar::mu_pow(-2)),
        ("M", 1, 0, z(), inv(r.clone())),
        ("N", 1, 1, n.clone(), -&n),
        ("M*", 1, 2, z(), inv(-&(&mu * &r))),
        ("G", 2, 0, z(), Scalar::one()),
        ("C*", 2, 1, z(), inv(r.clone())),
        ("L*", 2, 2, z(), Scalar::one()),
    ]
}

/// Δ(Z_ij) = Σ_k Z_ik ⊗ Z_kj, ε(Z_ij) = δ_ij, κ(Z_ij) = Z_ji*, read back onto the generators
/// (N* through N* = N).
pub fn somu3_hopf(p: Presentation) -> HopfData {
    let z = z1_symbolic();
    let dz = matrix_coproduct(&z);
    let alphas = [p.alphabet().clone(), p.alphabet().clone()];
    let mut delta = BTreeMap::new();
    let mut eps = BTreeMap::new();
    let mut kappa = BTreeMap::new();
    let mut coords = z1_coordinates();
    let n = coords.iter().find(|c| c.0 == "N").unwrap().clone();
    coords.push(("N*", n.1, n.2, n.3, n.4));
    for (g, i, j, a, b) in coords {
        let d = &TensorPoly::one(&alphas).scale(&a) + &dz[i][j].scale(&b);
        delta.insert(g.to_string(), d);
        eps.insert(g.to_string(), &a + &(&b * &Scalar::from_int((i == j) as i64)));
        kappa.insert(g.to_string(), &p.constant(a.clone()) + &z[j][i].star().scale(&b));
    }
    HopfData::new(p, delta, eps, kappa).expect("data for every generator")
}

#[derive(Clone, Debug)]
pub struct ActionEntry {
    pub index: i32,
    pub residual: TensorPoly,
}

/// Δ(x_i) − Σ_j x_j ⊗ Z₁[j][i] for i = −1, 0, 1.
pub fn check_somu3_action_matrix() -> Vec<ActionEntry> {
    let p = su2();
    let h = su2_hopf();
    let x = x_vector();
    let z = z1_in_su2();
    (0..3)
        .map(|i| {
            let mut rhs = TensorPoly::zero(&[p.alphabet().clone(), p.alphabet().clone()]);
            for j in 0..3 {
                rhs = &rhs + &TensorPoly::pure(&[&x[j], &z[j][i]]);
            }
            let res = &h.delta(&x[i]) - &rhs.normalize(&[p, p]);
            ActionEntry { index: i as i32 - 1, residual: res }
        })
        .collect()
}

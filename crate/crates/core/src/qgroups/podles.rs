//! The Podles sphere inside SU_μ(2): the x-vector, the χ and A,B presentations,
//! the involution and the kernel description through X_c.

use super::su2::su2;
use crate::hopf::haar_su2;
use crate::hopf::uq::{uq, uq_act, Side};
use crate::ncalg::{complete, Alphabet, CompletionOptions, NCPoly, Presentation};
use crate::scalar::{rad_rho, rad_u, Radical, Scalar};
use std::sync::{Arc, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PodlesError {
    #[error("X_c needs c > 0; got c = 0")]
    DegenerateC,
    #[error("supplied square root does not square to c")]
    BadSqrt,
}

fn s(k: i32) -> Scalar {
    Scalar::mu_pow(k)
}

fn one_plus_mu2() -> Scalar {
    &Scalar::one() + &s(2)
}

/// c = (1 − t)/t².
pub fn c_param() -> Scalar {
    (&(&Scalar::one() - &Scalar::t()) / &Scalar::t().pow(2)).unwrap()
}

/// c^{1/2} = (1 − t)^{1/2}/t = μ(1 + μ²)⁻¹ρ⁻¹.
pub fn sqrt_c_param() -> Scalar {
    (&s(1) / &(&one_plus_mu2() * &rad_rho())).unwrap()
}

/// The t ∈ (0, 1] with c = (1 − t)/t², for c ≥ 0.
pub fn t_from_c(c: f64) -> f64 {
    if c == 0.0 {
        1.0
    } else {
        2.0 / (1.0 + (1.0 + 4.0 * c).sqrt())
    }
}

/// β = t² + μ⁻²(μ² + 1)²(1 − t).
pub fn beta_param() -> Scalar {
    let t = Scalar::t();
    &t.pow(2) + &(&(&s(-2) * &one_plus_mu2().pow(2)) * &(&Scalar::one() - &t))
}

/// The SU_μ(2) realization of χ_{μ,ρ,1+ρ²} for a given value of ρ:
/// x₋₁ = (μα² + ρ(1+μ²)αγ − μ²γ²)/(μ(1+μ²)^{1/2}), x₀ = −μγ*α + ρ(1 − (1+μ²)γ*γ) − γα*,
/// x₁ = (μ²γ*² − ρμ(1+μ²)α*γ* − μα*²)/(1+μ²)^{1/2}.
pub fn x_vector_with(rho: &Scalar) -> [NCPoly; 3] {
    let p = su2();
    let w = |n: &[&str]| p.word(n);
    let u = rad_u();
    let mu = s(1);
    let q = one_plus_mu2();
    let inv = |x: Scalar| x.inv().expect("invertible");
    let xm1 = (&(&w(&["α", "α"]).scale(&mu) + &w(&["α", "γ"]).scale(&(rho * &q))) - &w(&["γ", "γ"]).scale(&s(2)))
        .scale(&inv(&mu * &u));
    let x0 = &(&w(&["γ*", "α"]).scale(&-&mu) + &(&p.one() - &w(&["γ*", "γ"]).scale(&q)).scale(rho))
        - &w(&["γ", "α*"]);
    let x1 = (&(&w(&["γ*", "γ*"]).scale(&s(2)) - &w(&["α*", "γ*"]).scale(&(&(rho * &mu) * &q)))
        - &w(&["α*", "α*"]).scale(&mu))
        .scale(&inv(u));
    [p.normal_form(&xm1), p.normal_form(&x0), p.normal_form(&x1)]
}

/// Generators of S²_{μ,c} with c = t⁻¹ − t: the realization above at
/// ρ² = μ²t²/((μ² + 1)²(1 − t)), rescaled by t/ρ so that α′ = t.
pub fn x_vector() -> [NCPoly; 3] {
    let rho = rad_rho();
    let k = &Scalar::t() * &rho.inv().expect("ρ is invertible");
    x_vector_with(&rho).map(|x| x.scale(&k))
}

#[derive(Clone, Debug)]
pub struct PodlesVerdict {
    pub label: String,
    pub residual: NCPoly,
}

impl PodlesVerdict {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }

    /// Coefficient parts of the residual that are even and odd in ρ.
    pub fn rho_parts(&self) -> (NCPoly, NCPoly) {
        let rho = Radical::lookup("ρ").expect("ρ registered");
        let even = self.residual.map_coeffs(|c| c.split_radical(rho).0);
        let odd = self.residual.map_coeffs(|c| c.split_radical(rho).1);
        (even, odd)
    }
}

fn verdict(label: &str, r: NCPoly) -> PodlesVerdict {
    PodlesVerdict { label: label.into(), residual: su2().normal_form(&r) }
}

/// The four χ_{q,α′,β} relations with q = μ, α′ = t.
pub fn chi_relations(x: &[NCPoly; 3]) -> Vec<PodlesVerdict> {
    let p = su2();
    let m = |a: &NCPoly, b: &NCPoly| p.mul(a, b);
    let (xm, x0, xp) = (&x[0], &x[1], &x[2]);
    let t = Scalar::t();
    let one_m_q2 = &Scalar::one() - &s(2);
    let at = &one_m_q2 * &t;
    vec![
        verdict(
            "chi1",
            &(&(&m(x0, x0) - &m(xp, xm).scale(&s(1))) - &m(xm, xp).scale(&s(-1))) - &p.constant(beta_param()),
        ),
        verdict(
            "chi2",
            &(&(&m(x0, x0).scale(&one_m_q2) + &m(xm, xp).scale(&s(1))) - &m(xp, xm).scale(&s(1)))
                - &x0.scale(&at),
        ),
        verdict("chi3", &(&m(xm, x0) - &m(x0, xm).scale(&s(2))) - &xm.scale(&at)),
        verdict("chi4", &(&m(x0, xp) - &m(xp, x0).scale(&s(2))) - &xp.scale(&at)),
    ]
}

/// x*₀ = x₀, x*₋₁ = −μ⁻¹x₁, x*₁ = −μx₋₁.
pub fn involution_laws(x: &[NCPoly; 3]) -> Vec<PodlesVerdict> {
    vec![
        verdict("x0*", &x[1].star() - &x[1]),
        verdict("x-1*", &x[0].star() + &x[2].scale(&s(-1))),
        verdict("x1*", &x[2].star() + &x[0].scale(&s(1))),
    ]
}

/// A = (1 − t⁻¹x₀)/(1 + μ²), B = μ(1 + μ²)^{−1/2}t⁻¹x₋₁.
pub fn a_b_from_x(x: &[NCPoly; 3]) -> (NCPoly, NCPoly) {
    let p = su2();
    let tinv = Scalar::t().pow(-1);
    let a = (&p.one() - &x[1].scale(&tinv)).scale(&one_plus_mu2().inv().unwrap());
    let b = x[0].scale(&(&(&s(1) * &rad_u().inv().unwrap()) * &tinv));
    (p.normal_form(&a), p.normal_form(&b))
}

/// A* = A, AB = μ⁻²BA, B*B = A − A² + c, BB* = μ²A − μ⁴A² + c.
pub fn ab_relations(a: &NCPoly, b: &NCPoly, c: &Scalar) -> Vec<PodlesVerdict> {
    let p = su2();
    let m = |x: &NCPoly, y: &NCPoly| p.mul(x, y);
    let bs = b.star();
    let a2 = m(a, a);
    let cc = p.constant(c.clone());
    vec![
        verdict("A*=A", &a.star() - a),
        verdict("AB", &m(a, b) - &m(b, a).scale(&s(-2))),
        verdict("B*B", &m(&bs, b) - &(&(a - &a2) + &cc)),
        verdict("BB*", &m(b, &bs) - &(&(&a.scale(&s(2)) - &a2.scale(&s(4))) + &cc)),
    ]
}

/// c^{1/2}·X_c = μ^{1/2}(μ⁻¹ − μ)⁻¹(1 − K²) + c^{1/2}(EK + μFK).
pub fn x_c_scaled(c: &Scalar, sqrt_c: &Scalar) -> Result<NCPoly, PodlesError> {
    if c.is_zero() {
        return Err(PodlesError::DegenerateC);
    }
    if &(sqrt_c * sqrt_c) != c {
        return Err(PodlesError::BadSqrt);
    }
    let u = uq();
    let lam = (&Scalar::s() / &(&s(-1) - &s(1))).unwrap();
    let k2 = u.word(&["K", "K"]);
    let part = &u.word(&["E", "K"]) + &u.word(&["F", "K"]).scale(&s(1));
    Ok(u.normal_form(&(&(&u.one() - &k2).scale(&lam) + &part.scale(sqrt_c))))
}

/// x ◁ (c^{1/2}X_c) for each x.
pub fn x_c_kernel(x: &[NCPoly; 3]) -> Vec<PodlesVerdict> {
    let xc = x_c_scaled(&c_param(), &sqrt_c_param()).expect("c is nonzero");
    ["x-1", "x0", "x1"]
        .iter()
        .zip(x.iter())
        .map(|(l, xi)| verdict(&format!("{l}◁X_c"), uq_act(Side::Right, &xc, xi)))
        .collect()
}

/// The value of c for which x ◁ X_c = 0 holds for every x in the x-vector,
/// solved from x ◁ (1 − K²) and x ◁ (EK + μFK); None if no single c works.
pub fn x_c_implied_c(x: &[NCPoly; 3]) -> Option<Scalar> {
    let u = uq();
    let p_op = &u.one() - &u.word(&["K", "K"]);
    let q_op = &u.word(&["E", "K"]) + &u.word(&["F", "K"]).scale(&s(1));
    let mut lam: Option<Scalar> = None;
    for xi in x {
        let pv = uq_act(Side::Right, &p_op, xi);
        let qv = uq_act(Side::Right, &q_op, xi);
        if pv.is_zero() {
            if qv.is_zero() {
                continue;
            }
            return None;
        }
        let (w, pc) = pv.lead()?;
        let l = (&-&qv.coeff(w) / pc).ok()?;
        if !(&qv + &pv.scale(&l)).is_zero() {
            return None;
        }
        match &lam {
            Some(prev) if prev != &l => return None,
            _ => lam = Some(l),
        }
    }
    // λ = μ^{1/2}(μ⁻¹ − μ)⁻¹c^{−1/2}  ⇒  c = μ(μ⁻¹ − μ)⁻²λ⁻²
    let lam = lam?;
    let k = (&Scalar::one() / &(&s(-1) - &s(1))).unwrap();
    Some(&(&s(1) * &k.pow(2)) * &lam.pow(-2))
}

/// h(x*₋₁x₀), h(x*₀x₁), h(x*₁x₋₁).
pub fn haar_orthogonality(x: &[NCPoly; 3]) -> Vec<(String, Scalar)> {
    let p = su2();
    [(0, 1, "h(x-1*x0)"), (1, 2, "h(x0*x1)"), (2, 0, "h(x1*x-1)")]
        .iter()
        .map(|&(i, j, l)| (l.to_string(), haar_su2(&p.mul(&x[i].star(), &x[j]))))
        .collect()
}

/// h(x*ᵢxᵢ) symbolically, for i = −1, 0, 1.
pub fn haar_norms(x: &[NCPoly; 3]) -> [Scalar; 3] {
    let p = su2();
    [0, 1, 2].map(|i| haar_su2(&p.mul(&x[i].star(), &x[i])))
}

/// h(x*ᵢxᵢ) = t²(μ² + c(1 + μ²)²)/(1 + μ² + μ⁴).
pub fn haar_norm_closed_form() -> Scalar {
    haar_norm_closed_form_at(&Scalar::t(), &c_param())
}

pub fn haar_norm_closed_form_at(t: &Scalar, c: &Scalar) -> Scalar {
    let q2 = one_plus_mu2().pow(2);
    let num = &t.pow(2) * &(&s(2) + &(c * &q2));
    (&num / &(&(&Scalar::one() + &s(2)) + &s(4))).unwrap()
}

pub fn haar_norm_closed_form_f64(mu: f64, c: f64) -> f64 {
    let t = t_from_c(c);
    let m2 = mu * mu;
    t * t * (m2 + c * (1.0 + m2).powi(2)) / (1.0 + m2 + m2 * m2)
}

pub fn podles_ab_alphabet() -> Arc<Alphabet> {
    static A: OnceLock<Arc<Alphabet>> = OnceLock::new();
    A.get_or_init(|| Alphabet::new(&[("A", "A", 1), ("B", "B*", 1), ("B*", "B", 1)]).unwrap()).clone()
}

/// Abstract Podles presentation on A, B with c = (1 − t)/t².
pub fn podles_ab(bound: usize) -> Presentation {
    let a = podles_ab_alphabet();
    let w = |n: &[&str]| NCPoly::monomial(&a, n);
    let ga = w(&["A"]);
    let aa = w(&["A", "A"]);
    let c = NCPoly::constant(&a, c_param());
    let rels = vec![
        ("AB".to_string(), &w(&["A", "B"]) - &w(&["B", "A"]).scale(&s(-2))),
        ("B*B".to_string(), &w(&["B*", "B"]) - &(&(&ga - &aa) + &c)),
        ("BB*".to_string(), &w(&["B", "B*"]) - &(&(&ga.scale(&s(2)) - &aa.scale(&s(4))) + &c)),
    ];
    let p = Presentation::new("PodlesAB", &a, rels).star_closed();
    complete(&p, CompletionOptions::bound(bound)).expect("Podles relations orient")
}

pub fn podles_chi_alphabet() -> Arc<Alphabet> {
    static A: OnceLock<Arc<Alphabet>> = OnceLock::new();
    A.get_or_init(|| Alphabet::new(&[("x0", "x0", 1), ("x-1", "x1", 1), ("x1", "x-1", 1)]).unwrap()).clone()
}

/// χ_{μ,t,β} on x₋₁, x₀, x₁. The star pairing x₋₁ ↔ x₁ is declared on the
/// alphabet; the scalar factors of the involution live in the relations.
pub fn podles_chi(bound: usize) -> Presentation {
    let a = podles_chi_alphabet();
    let w = |n: &[&str]| NCPoly::monomial(&a, n);
    let one = NCPoly::one(&a);
    let t = Scalar::t();
    let one_m_q2 = &Scalar::one() - &s(2);
    let at = &one_m_q2 * &t;
    let rels = vec![
        (
            "chi1".to_string(),
            &(&(&w(&["x0", "x0"]) - &w(&["x1", "x-1"]).scale(&s(1))) - &w(&["x-1", "x1"]).scale(&s(-1)))
                - &one.scale(&beta_param()),
        ),
        (
            "chi2".to_string(),
            &(&(&w(&["x0", "x0"]).scale(&one_m_q2) + &w(&["x-1", "x1"]).scale(&s(1)))
                - &w(&["x1", "x-1"]).scale(&s(1)))
                - &w(&["x0"]).scale(&at),
        ),
        ("chi3".to_string(), &(&w(&["x-1", "x0"]) - &w(&["x0", "x-1"]).scale(&s(2))) - &w(&["x-1"]).scale(&at)),
        ("chi4".to_string(), &(&w(&["x0", "x1"]) - &w(&["x1", "x0"]).scale(&s(2))) - &w(&["x1"]).scale(&at)),
    ];
    let p = Presentation::new("PodlesChi", &a, rels);
    complete(&p, CompletionOptions::bound(bound)).expect("χ relations orient")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_holds() {
        for v in involution_laws(&x_vector()) {
            assert!(v.passed(), "{}: {}", v.label, v.residual);
        }
    }

    #[test]
    fn unscaled_realization_has_alpha_rho() {
        // χ_{μ,ρ,1+ρ²}: the literal formula before rescaling
        let x = x_vector_with(&rad_rho());
        let p = su2();
        let rho = rad_rho();
        let r = &(&p.mul(&x[0], &x[1]) - &p.mul(&x[1], &x[0]).scale(&Scalar::mu_pow(2)))
            - &x[0].scale(&(&(&Scalar::one() - &Scalar::mu_pow(2)) * &rho));
        assert!(p.reduces_to_zero(&r));
    }

    #[test]
    fn degenerate_rho() {
        let p = su2();
        let x = x_vector_with(&Scalar::zero());
        let want = p.normal_form(&(&p.word(&["γ*", "α"]).scale(&-Scalar::mu()) - &p.word(&["γ", "α*"])));
        assert_eq!(x[1], want);
    }

    #[test]
    fn chi_relations_vanish() {
        for v in chi_relations(&x_vector()) {
            let (e, o) = v.rho_parts();
            assert!(e.is_zero() && o.is_zero(), "{}: {}", v.label, v.residual);
        }
    }

    #[test]
    fn ab_relations_vanish() {
        let (a, b) = a_b_from_x(&x_vector());
        for v in ab_relations(&a, &b, &c_param()) {
            assert!(v.passed(), "{}: {}", v.label, v.residual);
        }
    }

    #[test]
    fn orthogonality() {
        for (l, v) in haar_orthogonality(&x_vector()) {
            assert!(v.is_zero(), "{l} = {v}");
        }
    }

    #[test]
    fn norms_match_closed_form() {
        let cf = haar_norm_closed_form();
        for (i, v) in haar_norms(&x_vector()).iter().enumerate() {
            assert_eq!(v, &cf, "x_{}", i as i32 - 1);
        }
    }

    #[test]
    fn x_c_zero_c_is_an_error() {
        assert_eq!(x_c_scaled(&Scalar::zero(), &Scalar::zero()), Err(PodlesError::DegenerateC));
    }

    #[test]
    fn x_c_kernel_vanishes() {
        let x = x_vector();
        for v in x_c_kernel(&x) {
            assert!(v.passed(), "{}: {}", v.label, v.residual);
        }
        assert_eq!(x_c_implied_c(&x), Some(c_param()));
    }

    #[test]
    fn t_inv_minus_t_is_not_the_sphere_parameter() {
        let (a, b) = a_b_from_x(&x_vector());
        let wrong = &Scalar::t().pow(-1) - &Scalar::t();
        let v = ab_relations(&a, &b, &wrong);
        assert!(!v[2].passed() && !v[3].passed());
    }

    #[test]
    fn sqrt_c_squares() {
        assert_eq!(sqrt_c_param().pow(2), c_param());
        assert!((t_from_c(0.3) - 0.8054).abs() < 1e-4);
        let t = t_from_c(0.3);
        assert!(((1.0 - t) / (t * t) - 0.3).abs() < 1e-12);
    }
}

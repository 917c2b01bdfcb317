//! The Podles Haar state through the spectral sums
//! h(f(A)) = γ₊Σ f(λ₊μ^{2n})μ^{2n} + γ₋Σ f(λ₋μ^{2n})μ^{2n}.

use super::cp::lambdas;
use super::{NumCheck, RepError, TOL_HAAR, TOL_ROUTE};
use crate::qgroups::podles::{haar_norm_closed_form_f64, haar_norms, haar_orthogonality, t_from_c, x_vector};
use crate::scalar::{Assignment, Scalar};
use std::sync::OnceLock;

pub const TAIL_TARGET: f64 = 1e-14;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralSum {
    pub value: f64,
    pub tail_bound: f64,
    pub terms: usize,
}

/// γ₊ = (1 − μ²)λ₊/(λ₊ − λ₋), γ₋ = (1 − μ²)λ₋/(λ₋ − λ₊).
pub fn gammas(mu: f64, c: f64) -> (f64, f64) {
    let (lp, lm) = lambdas(c);
    let k = 1.0 - mu * mu;
    (k * lp / (lp - lm), k * lm / (lm - lp))
}

fn poly_at(f: &[f64], x: f64) -> f64 {
    f.iter().rev().fold(0.0, |acc, a| acc * x + a)
}

/// h(f(A)) for f = Σ f[k] x^k, truncated after `terms` terms of each series.
pub fn haar_spectral(f: &[f64], mu: f64, c: f64, terms: usize) -> Result<SpectralSum, RepError> {
    if !(mu > 0.0 && mu < 1.0) || c < 0.0 {
        return Err(RepError::Domain(format!("μ = {mu}, c = {c}")));
    }
    let (lp, lm) = lambdas(c);
    let (gp, gm) = gammas(mu, c);
    let r = lp.abs().max(lm.abs());
    let sup: f64 = f.iter().enumerate().map(|(k, a)| a.abs() * r.powi(k as i32)).sum();
    let q = mu * mu;
    let tail_bound = (gp.abs() + gm.abs()) * sup * q.powi(terms as i32) / (1.0 - q);
    if tail_bound > TAIL_TARGET {
        return Err(RepError::Tail { bound: tail_bound, want: TAIL_TARGET, terms });
    }
    // summed from the small end for accuracy
    let mut value = 0.0;
    for n in (0..terms).rev() {
        let w = q.powi(n as i32);
        value += gp * poly_at(f, lp * w) * w + gm * poly_at(f, lm * w) * w;
    }
    Ok(SpectralSum { value, tail_bound, terms })
}

/// Enough terms to meet the tail target.
pub fn haar_spectral_auto(f: &[f64], mu: f64, c: f64) -> Result<SpectralSum, RepError> {
    let mut terms = 16;
    loop {
        match haar_spectral(f, mu, c, terms) {
            Err(RepError::Tail { .. }) if terms < 1 << 16 => terms *= 2,
            r => return r,
        }
    }
}

/// h(A) = 1/(1 + μ²).
pub fn h_a_closed(mu: f64) -> f64 {
    1.0 / (1.0 + mu * mu)
}

/// h(A²) = (1 − μ²)(λ₊³ − λ₋³)/((λ₊ − λ₋)(1 − μ⁶)).
pub fn h_a2_closed(mu: f64, c: f64) -> f64 {
    let (lp, lm) = lambdas(c);
    (1.0 - mu * mu) * (lp.powi(3) - lm.powi(3)) / ((lp - lm) * (1.0 - mu.powi(6)))
}

/// x*ᵢxᵢ as polynomials in A, from B*B = A − A² + c and BB* = μ²A − μ⁴A² + c.
pub fn x_norm_polys(mu: f64, c: f64) -> [Vec<f64>; 3] {
    let t = t_from_c(c);
    let (m2, t2) = (mu * mu, t * t);
    let q = 1.0 + m2;
    let k = t2 * q / m2;
    [
        vec![k * c, k, -k],
        vec![t2, -2.0 * t2 * q, t2 * q * q],
        vec![t2 * q * c, t2 * q * m2, -t2 * q * m2 * m2],
    ]
}

struct Symbolic {
    norms: [Scalar; 3],
    orth: Vec<(String, Scalar)>,
}

fn symbolic() -> &'static Symbolic {
    static S: OnceLock<Symbolic> = OnceLock::new();
    S.get_or_init(|| {
        let x = x_vector();
        Symbolic { norms: haar_norms(&x), orth: haar_orthogonality(&x) }
    })
}

pub fn spectral_basics(mu: f64, c: f64) -> Result<Vec<NumCheck>, RepError> {
    let p = [("mu", mu), ("c", c)];
    let one = haar_spectral_auto(&[1.0], mu, c)?;
    let a = haar_spectral_auto(&[0.0, 1.0], mu, c)?;
    let a2 = haar_spectral_auto(&[0.0, 0.0, 1.0], mu, c)?;
    Ok(vec![
        NumCheck::new("haar: h(1) = 1", &p, (one.value - 1.0).abs(), 1e-12),
        NumCheck::new("haar: h(A) = 1/(1+μ²)", &p, (a.value - h_a_closed(mu)).abs(), TOL_HAAR),
        NumCheck::new("haar: h(A²) closed form", &p, (a2.value - h_a2_closed(mu, c)).abs(), TOL_HAAR),
    ])
}

/// h(x*ᵢxᵢ) by the closed form, by spectral sums, and by the exact SU_μ(2) Haar state;
/// plus the exact orthogonality of the x-vector.
pub fn haar_closed_form_suite(mu: f64, c: f64) -> Result<Vec<NumCheck>, RepError> {
    let t = t_from_c(c);
    let p = [("mu", mu), ("c", c), ("t", t)];
    let closed = haar_norm_closed_form_f64(mu, c);
    let sym = symbolic();
    let asg = Assignment::with_mu(mu).set("t", t);
    let mut out = Vec::new();
    for (i, (f, label)) in x_norm_polys(mu, c).iter().zip(["x-1", "x0", "x1"]).enumerate() {
        let spectral = haar_spectral_auto(f, mu, c)?.value;
        let exact = sym.norms[i].eval_complex(&asg).map_err(|e| RepError::Domain(e.to_string()))?;
        let worst = (closed - spectral).abs().max((closed - exact.re).abs()).max((spectral - exact.re).abs()).max(exact.im.abs());
        out.push(NumCheck::new(format!("haar: h({label}*{label}) three routes"), &p, worst, TOL_ROUTE));
    }
    for (label, v) in &sym.orth {
        out.push(NumCheck::new(format!("haar: {label} = 0 exactly"), &p, if v.is_zero() { 0.0 } else { f64::INFINITY }, TOL_ROUTE));
    }
    Ok(out)
}

/// At t = 1 (c = 0) the norm is μ²(1 − μ²)/(1 − μ⁶).
pub fn boundary_value(mu: f64) -> f64 {
    mu * mu * (1.0 - mu * mu) / (1.0 - mu.powi(6))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_and_moments() {
        for (mu, c) in [(0.5, 0.3), (0.2, 1.0), (0.9, 0.05)] {
            for ch in spectral_basics(mu, c).unwrap() {
                assert!(ch.passed(), "{ch}");
            }
        }
    }

    #[test]
    fn tail_error() {
        assert!(matches!(haar_spectral(&[1.0], 0.9, 0.3, 10), Err(RepError::Tail { .. })));
    }

    #[test]
    fn three_routes() {
        for ch in haar_closed_form_suite(0.5, 0.3).unwrap() {
            assert!(ch.passed(), "{ch}");
        }
    }

    #[test]
    fn boundary_c_zero() {
        let mu = 0.5;
        assert!((haar_norm_closed_form_f64(mu, 0.0) - boundary_value(mu)).abs() < 1e-15);
    }
}

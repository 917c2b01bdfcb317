//! An operator model of SU_μ(2) on ℓ²(N) ⊗ ℓ²(Z):
//! α(e_n ⊗ f_k) = (1 − μ^{2n})^{1/2} e_{n−1} ⊗ f_k, γ(e_n ⊗ f_k) = μⁿ e_n ⊗ f_{k+1}.

use super::{vec_norm, NumCheck, RepError, SparseOp, SparseVec, TOL_IDENTITY};
use crate::ncalg::NCPoly;
use crate::scalar::{Assignment, ScalarError};
use num_complex::Complex64;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct Su2Oracle {
    pub mu: f64,
    pub nmax: usize,
    pub kmax: i64,
    /// α, α*, γ*, γ in alphabet order.
    pub ops: [SparseOp; 4],
}

impl Su2Oracle {
    pub fn new(mu: f64, nmax: usize, kmax: i64) -> Result<Self, RepError> {
        if !(mu > 0.0 && mu < 1.0) {
            return Err(RepError::Domain(format!("μ = {mu} not in (0, 1)")));
        }
        let width = (2 * kmax + 1) as usize;
        let dim = (nmax + 1) * width;
        let labels = Arc::new((0..dim).map(|i| format!("e{}f{}", i / width, (i % width) as i64 - kmax)).collect::<Vec<_>>());
        let interior = Arc::new(vec![true; dim]);
        let mut alpha = SparseOp::zero(&labels, &interior);
        let mut gamma = alpha.clone();
        let at = |n: usize, k: i64| n * width + (k + kmax) as usize;
        for n in 0..=nmax {
            for k in -kmax..=kmax {
                if n >= 1 {
                    alpha.set_re(at(n - 1, k), at(n, k), (1.0 - mu.powi(2 * n as i32)).sqrt());
                }
                if k < kmax {
                    gamma.set_re(at(n, k + 1), at(n, k), mu.powi(n as i32));
                }
            }
        }
        let ops = [alpha.clone(), alpha.adjoint(), gamma.adjoint(), gamma];
        Ok(Su2Oracle { mu, nmax, kmax, ops })
    }

    pub fn index(&self, n: usize, k: i64) -> usize {
        n * (2 * self.kmax + 1) as usize + (k + self.kmax) as usize
    }

    /// Basis vectors from which any word of length ≤ depth stays inside the truncation.
    pub fn interior(&self, depth: usize) -> Vec<usize> {
        let d = depth as i64;
        let mut out = Vec::new();
        for n in 0..=self.nmax.saturating_sub(depth) {
            for k in (-self.kmax + d)..=(self.kmax - d) {
                out.push(self.index(n, k));
            }
        }
        out
    }

    /// p applied to a basis vector, word letters acting right to left.
    pub fn apply(&self, p: &NCPoly, j: usize) -> Result<SparseVec, ScalarError> {
        let asg = Assignment::with_mu(self.mu);
        let mut out = SparseVec::new();
        let e: SparseVec = [(j, Complex64::new(1.0, 0.0))].into_iter().collect();
        for (w, c) in p.terms() {
            let cv = c.eval_complex(&asg)?;
            let mut v = e.clone();
            for &g in w.0.iter().rev() {
                v = self.ops[g as usize].apply(&v);
            }
            for (i, x) in v {
                *out.entry(i).or_default() += cv * x;
            }
        }
        Ok(out)
    }

    /// max over interior basis vectors of ‖(p − q)e_j‖, interior taken for the longer word.
    pub fn distance(&self, p: &NCPoly, q: &NCPoly) -> Result<f64, ScalarError> {
        let depth = p.degree().max(q.degree());
        let mut worst: f64 = 0.0;
        for j in self.interior(depth) {
            let mut a = self.apply(p, j)?;
            for (i, x) in self.apply(q, j)? {
                *a.entry(i).or_default() -= x;
            }
            worst = worst.max(vec_norm(&a));
        }
        Ok(worst)
    }

    /// The five defining relations on the interior.
    pub fn relation_checks(&self, rels: &[(String, NCPoly)]) -> Result<Vec<NumCheck>, ScalarError> {
        let p = [("mu", self.mu), ("nmax", self.nmax as f64), ("kmax", self.kmax as f64)];
        rels.iter()
            .map(|(l, r)| {
                let zero = NCPoly::zero(r.alphabet());
                Ok(NumCheck::new(format!("oracle: {l}"), &p, self.distance(r, &zero)?, TOL_IDENTITY))
            })
            .collect()
    }

    /// (1 − μ²) Σₙ μ^{2n} ⟨eₙ⊗f₀, p(eₙ⊗f₀)⟩ over n ≤ N_max − deg p.
    pub fn haar(&self, p: &NCPoly) -> Result<f64, RepError> {
        let depth = p.degree();
        if depth as i64 > self.kmax || depth > self.nmax {
            return Err(RepError::Domain(format!("degree {depth} exceeds the truncation")));
        }
        let mu2 = self.mu * self.mu;
        let mut acc = 0.0;
        for n in 0..=(self.nmax - depth) {
            let j = self.index(n, 0);
            let v = self.apply(p, j).map_err(|e| RepError::Domain(e.to_string()))?;
            acc += mu2.powi(n as i32) * v.get(&j).map_or(0.0, |z| z.re);
        }
        Ok((1.0 - mu2) * acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qgroups::su2::{su2, su2_alphabet, su2_relations};

    #[test]
    fn relations_hold() {
        let o = Su2Oracle::new(0.5, 12, 6).unwrap();
        for c in o.relation_checks(&su2_relations()).unwrap() {
            assert!(c.passed(), "{c}");
        }
    }

    #[test]
    fn normal_form_agrees() {
        let o = Su2Oracle::new(0.5, 12, 6).unwrap();
        let a = su2_alphabet();
        let p = NCPoly::monomial(&a, &["γ", "α"]);
        let nf = su2().normal_form(&p);
        assert_ne!(nf, p);
        assert!(o.distance(&p, &nf).unwrap() < 1e-12);
        let q = NCPoly::monomial(&a, &["α", "α*", "γ", "α*"]);
        assert!(o.distance(&q, &su2().normal_form(&q)).unwrap() < 1e-12);
    }

    #[test]
    fn identity_is_identity() {
        let o = Su2Oracle::new(0.3, 5, 2).unwrap();
        let one = NCPoly::one(&su2_alphabet());
        for j in o.interior(0) {
            let v = o.apply(&one, j).unwrap();
            assert_eq!(v.len(), 1);
            assert_eq!(v[&j], Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn haar_of_gamma_star_gamma_powers() {
        let o = Su2Oracle::new(0.5, 80, 12).unwrap();
        let p = su2();
        let x = p.word(&["γ*", "γ"]);
        for k in 0..=6 {
            let want = (1.0 - 0.25) / (1.0 - 0.25f64.powi(k + 1));
            assert!((o.haar(&p.pow(&x, k as u32)).unwrap() - want).abs() < 1e-12);
        }
        assert!(o.haar(&p.word(&["α", "γ"])).unwrap().abs() < 1e-14);
    }

    #[test]
    fn detects_a_wrong_identity() {
        let o = Su2Oracle::new(0.5, 10, 4).unwrap();
        let a = su2_alphabet();
        let wrong = &NCPoly::monomial(&a, &["γ", "α"]) - &NCPoly::monomial(&a, &["α", "γ"]);
        assert!(o.distance(&wrong, &NCPoly::zero(&a)).unwrap() > 1e-3);
    }
}

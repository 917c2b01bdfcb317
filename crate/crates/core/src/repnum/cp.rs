//! The representation π = π₊ ⊕ π₋ of S²_{μ,c} on ℓ²(N) ⊕ ℓ²(N) with D = [[0, N], [N, 0]].

use super::{NumCheck, RepError, SparseOp, TOL_IDENTITY};
use nalgebra::SymmetricEigen;
use std::sync::Arc;

pub const MIN_NMAX: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// The Chakraborty–Pal spectral triple truncated at N_max.
#[derive(Clone, Debug)]
pub struct CPTriple {
    pub mu: f64,
    pub c: f64,
    pub nmax: usize,
    pub lambda_plus: f64,
    pub lambda_minus: f64,
    pub a: SparseOp,
    pub b: SparseOp,
    pub b_star: SparseOp,
    pub d: SparseOp,
    pub abs_d: SparseOp,
    pub tau: SparseOp,
}

/// Basis index of e_n in the ± copy.
pub fn idx(n: usize, s: Sign) -> usize {
    2 * n + (s == Sign::Minus) as usize
}

pub fn lambdas(c: f64) -> (f64, f64) {
    let r = (c + 0.25).sqrt();
    (0.5 + r, 0.5 - r)
}

/// c_±(n) = λ_±μ^{2n} − (λ_±μ^{2n})² + c.
pub fn c_pm(mu: f64, c: f64, n: usize, s: Sign) -> f64 {
    let (lp, lm) = lambdas(c);
    let l = if s == Sign::Plus { lp } else { lm };
    let x = l * mu.powi(2 * n as i32);
    let v = x - x * x + c;
    // c_±(0) vanishes identically
    if n == 0 {
        0.0
    } else {
        v
    }
}

/// c₊(n) − c₋(n) = (λ₊ − λ₋)μ^{2n}(1 − μ^{2n}) for n ≥ 1, using λ₊ + λ₋ = 1.
pub fn c_gap(mu: f64, c: f64, n: usize) -> f64 {
    let (lp, lm) = lambdas(c);
    let m = mu.powi(2 * n as i32);
    (lp - lm) * m * (1.0 - m)
}

impl CPTriple {
    pub fn new(mu: f64, c: f64, nmax: usize) -> Result<Self, RepError> {
        if !(mu > 0.0 && mu < 1.0) {
            return Err(RepError::Domain(format!("μ = {mu} not in (0, 1)")));
        }
        if !(c > 0.0) {
            return Err(RepError::Domain(format!("c = {c} not positive")));
        }
        if nmax < MIN_NMAX {
            return Err(RepError::Domain(format!("N_max = {nmax} below {MIN_NMAX}")));
        }
        let labels: Vec<String> = (0..=nmax).flat_map(|n| [format!("e{n}+"), format!("e{n}-")]).collect();
        let interior: Vec<bool> = (0..=nmax).flat_map(|n| {
            let i = (1..nmax).contains(&n);
            [i, i]
        })
        .collect();
        let (labels, interior) = (Arc::new(labels), Arc::new(interior));
        let (lp, lm) = lambdas(c);
        let mut a = SparseOp::zero(&labels, &interior);
        let mut b = a.clone();
        let mut d = a.clone();
        let mut abs_d = a.clone();
        let mut tau = a.clone();
        for n in 0..=nmax {
            for (s, l) in [(Sign::Plus, lp), (Sign::Minus, lm)] {
                a.set_re(idx(n, s), idx(n, s), l * mu.powi(2 * n as i32));
                if n >= 1 {
                    b.set_re(idx(n - 1, s), idx(n, s), c_pm(mu, c, n, s).sqrt());
                    tau.set_re(idx(n - 1, s), idx(n, s), 1.0);
                }
                abs_d.set_re(idx(n, s), idx(n, s), n as f64);
            }
            d.set_re(idx(n, Sign::Minus), idx(n, Sign::Plus), n as f64);
            d.set_re(idx(n, Sign::Plus), idx(n, Sign::Minus), n as f64);
        }
        let b_star = b.adjoint();
        Ok(CPTriple { mu, c, nmax, lambda_plus: lp, lambda_minus: lm, a, b, b_star, d, abs_d, tau })
    }

    fn params(&self) -> Vec<(&'static str, f64)> {
        vec![("mu", self.mu), ("c", self.c), ("nmax", self.nmax as f64)]
    }

    pub fn identity(&self) -> SparseOp {
        self.a.one_like()
    }

    /// Projection onto e_n in the ± copy.
    pub fn proj(&self, n: usize, s: Sign) -> SparseOp {
        let mut p = self.a.like();
        p.set_re(idx(n, s), idx(n, s), 1.0);
        p
    }

    /// P̃_n = P_n + Q_n.
    pub fn proj_tilde(&self, n: usize) -> SparseOp {
        self.proj(n, Sign::Plus).add(&self.proj(n, Sign::Minus)).unwrap()
    }

    /// Projection onto the + copy.
    pub fn proj_plus(&self) -> SparseOp {
        let mut p = self.a.like();
        for n in 0..=self.nmax {
            p.set_re(idx(n, Sign::Plus), idx(n, Sign::Plus), 1.0);
        }
        p
    }

    fn check(&self, id: &str, op: SparseOp) -> NumCheck {
        NumCheck::new(id, &self.params(), op.interior_residual(), TOL_IDENTITY)
    }

    /// The Podles relations on interior indices.
    pub fn relation_residuals(&self) -> Vec<NumCheck> {
        let (a, b, bs) = (&self.a, &self.b, &self.b_star);
        let one = self.identity();
        let a2 = a.mul(a).unwrap();
        let (mu, c) = (self.mu, self.c);
        let ab = a.mul(b).unwrap().sub(&b.mul(a).unwrap().scale(mu.powi(-2))).unwrap();
        let bsb = bs.mul(b).unwrap().sub(&a.sub(&a2).unwrap().add(&one.scale(c)).unwrap()).unwrap();
        let bbs = b.mul(bs).unwrap().sub(&a.scale(mu * mu).sub(&a2.scale(mu.powi(4))).unwrap().add(&one.scale(c)).unwrap()).unwrap();
        let sa = a.sub(&a.adjoint()).unwrap();
        vec![
            self.check("cp: AB − μ⁻²BA", ab),
            self.check("cp: B*B − A + A² − c", bsb),
            self.check("cp: BB* − μ²A + μ⁴A² − c", bbs),
            self.check("cp: A − A*", sa),
        ]
    }

    /// The top shell is where truncation bites: BB* fails there, which is why it is masked.
    pub fn boundary_residual(&self) -> f64 {
        let one = self.identity();
        let a2 = self.a.mul(&self.a).unwrap();
        let (mu, c) = (self.mu, self.c);
        let r = self.b.mul(&self.b_star).unwrap().sub(&self.a.scale(mu * mu).sub(&a2.scale(mu.powi(4))).unwrap().add(&one.scale(c)).unwrap()).unwrap();
        let top = idx(self.nmax, Sign::Plus);
        super::vec_norm(&r.column(top))
    }

    /// |B| from the spectral decomposition of B*B.
    pub fn abs_b_spectral(&self) -> SparseOp {
        let m = self.b_star.mul(&self.b).unwrap().to_dense_re();
        let e = SymmetricEigen::new(m);
        let sq = e.eigenvalues.map(|x| x.max(0.0).sqrt());
        let r = &e.eigenvectors * nalgebra::DMatrix::from_diagonal(&sq) * e.eigenvectors.transpose();
        SparseOp::from_dense_re(&self.a, &r, 1e-15)
    }

    pub fn abs_b_direct(&self) -> SparseOp {
        let mut o = self.a.like();
        for n in 0..=self.nmax {
            for s in [Sign::Plus, Sign::Minus] {
                o.set_re(idx(n, s), idx(n, s), c_pm(self.mu, self.c, n, s).sqrt());
            }
        }
        o
    }

    /// Spectral projection of D onto eigenvalue `ev`, from an eigendecomposition.
    pub fn d_eigenprojection(&self, ev: f64) -> (SparseOp, usize) {
        let e = SymmetricEigen::new(self.d.to_dense_re());
        let n = self.d.dim();
        let mut p = nalgebra::DMatrix::zeros(n, n);
        let mut mult = 0;
        for k in 0..n {
            if (e.eigenvalues[k] - ev).abs() < 1e-9 {
                let v = e.eigenvectors.column(k);
                p += &v * v.transpose();
                mult += 1;
            }
        }
        (SparseOp::from_dense_re(&self.a, &p, 1e-12), mult)
    }

    /// B = τ|B|, |B| = diag c_±(n)^{1/2} against the spectral route, c₊(n) ≠ c₋(n) for n ≥ 1,
    /// the eigenprojections of D, and commutation of D, |D| with P̃_n.
    pub fn structure_checks(&self) -> Vec<NumCheck> {
        let p = self.params();
        let mut out = Vec::new();
        let abs_b = self.abs_b_direct();
        let polar = self.b.sub(&self.tau.mul(&abs_b).unwrap()).unwrap();
        out.push(self.check("cp: B − τ|B|", polar));
        let spec = self.abs_b_spectral().sub(&abs_b).unwrap();
        out.push(NumCheck::new("cp: |B| spectral vs diag c_±(n)^{1/2}", &p, spec.full_residual(), 1e-10));
        let (lp, lm) = (self.lambda_plus, self.lambda_minus);
        let mut log_gap = f64::INFINITY;
        let mut gap_route: f64 = 0.0;
        for n in 1..=self.nmax {
            let log_m = 2.0 * n as f64 * self.mu.ln();
            log_gap = log_gap.min((lp - lm).ln() + log_m + (-log_m.exp()).ln_1p());
            let factored = c_gap(self.mu, self.c, n);
            if factored > 1e-6 {
                let direct = c_pm(self.mu, self.c, n, Sign::Plus) - c_pm(self.mu, self.c, n, Sign::Minus);
                gap_route = gap_route.max(((direct - factored) / factored).abs());
            }
        }
        out.push(NumCheck::new(
            format!("cp: min_n ln(c₊(n) − c₋(n)) = {log_gap:.3} is finite"),
            &p,
            if log_gap.is_finite() { 0.0 } else { 1.0 },
            0.5,
        ));
        out.push(NumCheck::new("cp: c₊(n) − c₋(n) = (λ₊ − λ₋)μ^{2n}(1 − μ^{2n}), relative", &p, gap_route, 1e-9));
        out.push(NumCheck::new(
            "cp: c₊(0) = c₋(0) = 0",
            &p,
            exact_c0(self.mu, self.c).abs(),
            TOL_IDENTITY,
        ));
        let mut proj_res: f64 = 0.0;
        let mut comm_res: f64 = 0.0;
        let mut mult_res: f64 = 0.0;
        for n in 1..self.nmax {
            let direct = self.proj_tilde(n);
            let (pp, mp) = self.d_eigenprojection(n as f64);
            let (pm, mm) = self.d_eigenprojection(-(n as f64));
            mult_res = mult_res.max((mp as f64 - 1.0).abs()).max((mm as f64 - 1.0).abs());
            proj_res = proj_res.max(pp.add(&pm).unwrap().sub(&direct).unwrap().full_residual());
            for x in [&self.d, &self.abs_d] {
                let c = x.mul(&direct).unwrap().sub(&direct.mul(x).unwrap()).unwrap();
                comm_res = comm_res.max(c.full_residual());
            }
            // P_n from the sign of A on the eigenspace
            let pn = self.proj(n, Sign::Plus);
            let from_a = direct.mul(&positive_part_projection(&self.a)).unwrap();
            proj_res = proj_res.max(from_a.sub(&pn).unwrap().full_residual());
        }
        out.push(NumCheck::new("cp: P̃_n from eigenprojections of D, P_n via sign(A)", &p, proj_res, 1e-10));
        out.push(NumCheck::new("cp: dim ker(D ∓ n) = 1 for interior n", &p, mult_res, 0.5));
        out.push(NumCheck::new("cp: [D, P̃_n] = [|D|, P̃_n] = 0", &p, comm_res, TOL_IDENTITY));
        out
    }
}

/// λ − λ² + c at λ = λ_±, which is c_±(0) before truncation to 0.
fn exact_c0(_mu: f64, c: f64) -> f64 {
    let (lp, lm) = lambdas(c);
    (lp - lp * lp + c).abs().max((lm - lm * lm + c).abs())
}

/// Spectral projection of a self-adjoint operator onto (0, ∞).
pub fn positive_part_projection(x: &SparseOp) -> SparseOp {
    let e = SymmetricEigen::new(x.to_dense_re());
    let n = x.dim();
    let mut p = nalgebra::DMatrix::zeros(n, n);
    for k in 0..n {
        if e.eigenvalues[k] > 0.0 {
            let v = e.eigenvectors.column(k);
            p += &v * v.transpose();
        }
    }
    SparseOp::from_dense_re(x, &p, 1e-12)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repnum::SparseVec;
    use num_complex::Complex64;

    fn t() -> CPTriple {
        CPTriple::new(0.5, 0.3, 64).unwrap()
    }

    fn e(i: usize) -> SparseVec {
        [(i, Complex64::new(1.0, 0.0))].into_iter().collect()
    }

    #[test]
    fn lambda_identities() {
        let (lp, lm) = lambdas(0.3);
        assert!((lp + lm - 1.0).abs() < 1e-15);
        assert!((lp * lm + 0.3).abs() < 1e-15);
        for n in 1..20 {
            assert!(c_pm(0.5, 0.3, n, Sign::Plus) > 0.0);
            assert!(c_pm(0.5, 0.3, n, Sign::Minus) > 0.0);
            assert!(c_pm(0.5, 0.3, n, Sign::Plus) != c_pm(0.5, 0.3, n, Sign::Minus));
        }
    }

    #[test]
    fn ground_state() {
        let t = t();
        let ae0 = t.a.apply(&e(idx(0, Sign::Plus)));
        assert!((ae0[&idx(0, Sign::Plus)].re - t.lambda_plus).abs() < 1e-15);
        assert!(t.b.apply(&e(idx(0, Sign::Plus))).is_empty());
        assert!(t.b.apply(&e(idx(0, Sign::Minus))).is_empty());
    }

    #[test]
    fn dirac_eigenvectors() {
        let t = t();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        for n in [1usize, 5, 30] {
            let plus: SparseVec = [(idx(n, Sign::Plus), Complex64::new(s, 0.0)), (idx(n, Sign::Minus), Complex64::new(s, 0.0))].into_iter().collect();
            let dv = t.d.apply(&plus);
            for (k, v) in &plus {
                assert!((dv[k] - v * n as f64).norm() < 1e-14);
            }
            let minus: SparseVec = [(idx(n, Sign::Plus), Complex64::new(s, 0.0)), (idx(n, Sign::Minus), Complex64::new(-s, 0.0))].into_iter().collect();
            let dv = t.d.apply(&minus);
            for (k, v) in &minus {
                assert!((dv[k] + v * n as f64).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn relations_on_interior() {
        let t = t();
        for c in t.relation_residuals() {
            assert!(c.passed(), "{c}");
        }
        assert!(t.boundary_residual() > 1e-3);
    }

    #[test]
    fn structure() {
        let t = CPTriple::new(0.5, 0.3, 24).unwrap();
        for c in t.structure_checks() {
            assert!(c.passed(), "{c}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(CPTriple::new(1.0, 0.3, 10).is_err());
        assert!(CPTriple::new(0.5, 0.0, 10).is_err());
        assert!(CPTriple::new(0.5, 0.3, 3).is_err());
    }
}

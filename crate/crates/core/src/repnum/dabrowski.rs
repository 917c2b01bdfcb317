//! Dabrowski spectral data on ℳ_{−1/2} ⊕ ℳ_{1/2}: D(v^l_{m,±½}) = (c₁l + c₂)v^l_{m,∓½},
//! R = diag μ^{−2m}, R₀ = diag μ^{−2m∓1}.

use super::{RepError, SparseOp};
use std::sync::Arc;

/// Index (l, m, N) stored doubled: (2l, 2m, 2N).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Lmn {
    pub l2: i32,
    pub m2: i32,
    pub n2: i32,
}

impl Lmn {
    pub fn l(&self) -> f64 {
        self.l2 as f64 / 2.0
    }

    pub fn m(&self) -> f64 {
        self.m2 as f64 / 2.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weighting {
    One,
    R,
    R0,
}

#[derive(Clone, Debug)]
pub struct DabrowskiSpec {
    pub lmax2: i32,
    pub c1: f64,
    pub c2: f64,
    pub mu: f64,
    pub index: Vec<Lmn>,
    pub d: SparseOp,
    pub r: SparseOp,
    pub r0: SparseOp,
}

impl DabrowskiSpec {
    /// l runs over ½, 3/2, … up to l_max (given doubled).
    pub fn new(lmax2: i32, c1: f64, c2: f64, mu: f64) -> Result<Self, RepError> {
        if lmax2 < 1 || lmax2 % 2 == 0 {
            return Err(RepError::Domain(format!("l_max = {}/2 must be a half-odd integer ≥ ½", lmax2)));
        }
        if c1 == 0.0 {
            return Err(RepError::Domain("c₁ = 0".into()));
        }
        if !(mu > 0.0 && mu < 1.0) {
            return Err(RepError::Domain(format!("μ = {mu} not in (0, 1)")));
        }
        let mut index = Vec::new();
        for l2 in (1..=lmax2).step_by(2) {
            for m2 in (-l2..=l2).step_by(2) {
                for n2 in [1, -1] {
                    index.push(Lmn { l2, m2, n2 });
                }
            }
        }
        let labels = Arc::new(index.iter().map(|k| format!("v({}/2,{}/2,{}/2)", k.l2, k.m2, k.n2)).collect::<Vec<_>>());
        let interior = Arc::new(vec![true; index.len()]);
        let mut d = SparseOp::zero(&labels, &interior);
        let mut r = d.clone();
        let mut r0 = d.clone();
        for (i, k) in index.iter().enumerate() {
            let partner = i ^ 1;
            d.set_re(partner, i, c1 * k.l() + c2);
            r.set_re(i, i, mu.powi(-k.m2));
            r0.set_re(i, i, mu.powi(-k.m2 - k.n2));
        }
        Ok(DabrowskiSpec { lmax2, c1, c2, mu, index, d, r, r0 })
    }

    pub fn eigenvalue(&self, l2: i32) -> f64 {
        self.c1 * l2 as f64 / 2.0 + self.c2
    }

    fn weight(&self, w: Weighting, k: &Lmn) -> f64 {
        match w {
            Weighting::One => 1.0,
            Weighting::R => self.mu.powi(-k.m2),
            Weighting::R0 => self.mu.powi(-k.m2 - k.n2),
        }
    }

    /// Σ weight·e^{−t(c₁l + c₂)²} over the index set.
    pub fn weighted_trace(&self, w: Weighting, t: f64) -> f64 {
        self.index.iter().map(|k| self.weight(w, k) * (-t * self.eigenvalue(k.l2).powi(2)).exp()).sum()
    }

    /// Per-l contributions to the trace, in increasing l.
    pub fn trace_blocks(&self, w: Weighting, t: f64) -> Vec<(i32, f64)> {
        let mut out: Vec<(i32, f64)> = Vec::new();
        for k in &self.index {
            let v = self.weight(w, k) * (-t * self.eigenvalue(k.l2).powi(2)).exp();
            match out.last_mut() {
                Some((l2, s)) if *l2 == k.l2 => *s += v,
                _ => out.push((k.l2, v)),
            }
        }
        out
    }
}

/// Block value of Tr(R e^{−tD²}) at l: e^{−t(c₁l+c₂)²}·2·Σ_{m=−l}^{l} μ^{−2m}, as a geometric sum.
pub fn r_block_closed(l2: i32, c1: f64, c2: f64, mu: f64, t: f64) -> f64 {
    let lam = c1 * l2 as f64 / 2.0 + c2;
    let q = mu * mu;
    // Σ_m μ^{−2m} = μ^{−2l}(1 − μ^{2(2l+1)})/(1 − μ²)
    let geo = mu.powi(-l2) * (1.0 - q.powi(l2 + 1)) / (1.0 - q);
    (-t * lam * lam).exp() * 2.0 * geo
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repnum::SparseVec;
    use num_complex::Complex64;

    #[test]
    fn dirac_blocks() {
        let s = DabrowskiSpec::new(7, 1.5, 0.25, 0.5).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        for i in (0..s.index.len()).step_by(2) {
            let ev = s.eigenvalue(s.index[i].l2);
            let v: SparseVec = [(i, Complex64::new(h, 0.0)), (i + 1, Complex64::new(h, 0.0))].into_iter().collect();
            let dv = s.d.apply(&v);
            for (k, x) in &v {
                assert!((dv[k] - x * ev).norm() < 1e-14);
            }
            let w: SparseVec = [(i, Complex64::new(h, 0.0)), (i + 1, Complex64::new(-h, 0.0))].into_iter().collect();
            let dw = s.d.apply(&w);
            for (k, x) in &w {
                assert!((dw[k] + x * ev).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn trace_decreasing_in_t() {
        let s = DabrowskiSpec::new(21, 1.0, 0.5, 0.6).unwrap();
        let mut prev = f64::INFINITY;
        for k in 1..10 {
            let v = s.weighted_trace(Weighting::One, 0.1 * k as f64);
            assert!(v.is_finite() && v < prev);
            prev = v;
        }
    }

    #[test]
    fn r_blocks_match_geometric_sum() {
        let (c1, c2, mu, t) = (1.0, 0.5, 0.6, 0.3);
        let s = DabrowskiSpec::new(15, c1, c2, mu).unwrap();
        for (l2, v) in s.trace_blocks(Weighting::R, t) {
            let want = r_block_closed(l2, c1, c2, mu, t);
            assert!((v - want).abs() < 1e-12 * want.max(1.0), "l={l2}/2: {v} vs {want}");
        }
    }

    #[test]
    fn r0_weights() {
        let s = DabrowskiSpec::new(3, 1.0, 0.0, 0.5).unwrap();
        for (i, k) in s.index.iter().enumerate() {
            let want = 0.5f64.powi(-k.m2 - k.n2);
            assert_eq!(s.r0.get(i, i).re, want);
        }
    }

    #[test]
    fn monotone_in_lmax() {
        let mut prev = 0.0;
        for lmax2 in (1..30).step_by(2) {
            let v = DabrowskiSpec::new(lmax2, 1.0, 0.5, 0.6).unwrap().weighted_trace(Weighting::R0, 0.5);
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(DabrowskiSpec::new(2, 1.0, 0.0, 0.5).is_err());
        assert!(DabrowskiSpec::new(1, 0.0, 0.0, 0.5).is_err());
    }
}

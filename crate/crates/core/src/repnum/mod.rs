//! Truncated Hilbert-space representations: the Chakraborty–Pal triple on the Podles
//! sphere, Dabrowski spectral data, spectral Haar sums, and an operator model of SU_μ(2).

pub mod cp;
pub mod dabrowski;
pub mod haar;
pub mod oracle;

use nalgebra::DMatrix;
use num_complex::Complex64;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Identity residuals in double precision.
pub const TOL_IDENTITY: f64 = 1e-12;
/// Agreement between routes that involve truncated series.
pub const TOL_ROUTE: f64 = 1e-9;
/// Spectral Haar values against closed forms.
pub const TOL_HAAR: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RepError {
    #[error("parameter out of range: {0}")]
    Domain(String),
    #[error("operator sizes differ ({0} vs {1})")]
    Size(usize, usize),
    #[error("series tail bound {bound:e} exceeds {want:e} after {terms} terms")]
    Tail { bound: f64, want: f64, terms: usize },
}

/// One numeric check: id, parameters, worst residual and tolerance.
#[derive(Clone, Debug, PartialEq)]
pub struct NumCheck {
    pub id: String,
    pub params: Vec<(String, f64)>,
    pub residual: f64,
    pub tol: f64,
}

impl NumCheck {
    pub fn new(id: impl Into<String>, params: &[(&str, f64)], residual: f64, tol: f64) -> Self {
        NumCheck { id: id.into(), params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(), residual, tol }
    }

    pub fn passed(&self) -> bool {
        self.residual.is_finite() && self.residual < self.tol
    }
}

impl fmt::Display for NumCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(
            f,
            "{} {} [{}]: residual {:.3e} (tol {:.0e})",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            ps.join(", "),
            self.residual,
            self.tol
        )
    }
}

/// Sparse vector over a labelled basis.
pub type SparseVec = BTreeMap<usize, Complex64>;

pub fn vec_norm(v: &SparseVec) -> f64 {
    v.values().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Sparse operator on a truncated labelled basis. `interior` marks the indices whose
/// images under the building operators stay inside the truncation.
#[derive(Clone, Debug)]
pub struct SparseOp {
    labels: Arc<Vec<String>>,
    interior: Arc<Vec<bool>>,
    entries: BTreeMap<(usize, usize), Complex64>,
}

impl SparseOp {
    pub fn zero(labels: &Arc<Vec<String>>, interior: &Arc<Vec<bool>>) -> Self {
        assert_eq!(labels.len(), interior.len());
        SparseOp { labels: labels.clone(), interior: interior.clone(), entries: BTreeMap::new() }
    }

    pub fn identity(labels: &Arc<Vec<String>>, interior: &Arc<Vec<bool>>) -> Self {
        let mut o = SparseOp::zero(labels, interior);
        for i in 0..labels.len() {
            o.set(i, i, Complex64::new(1.0, 0.0));
        }
        o
    }

    pub fn like(&self) -> Self {
        SparseOp::zero(&self.labels, &self.interior)
    }

    pub fn one_like(&self) -> Self {
        SparseOp::identity(&self.labels, &self.interior)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn is_interior(&self, i: usize) -> bool {
        self.interior[i]
    }

    pub fn interior_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim()).filter(|&i| self.interior[i])
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        assert!(v.re.is_finite() && v.im.is_finite(), "non-finite operator entry");
        if v == Complex64::new(0.0, 0.0) {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn set_re(&mut self, i: usize, j: usize, v: f64) {
        self.set(i, j, Complex64::new(v, 0.0));
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries.get(&(i, j)).copied().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Complex64)> {
        self.entries.iter()
    }

    pub fn adjoint(&self) -> SparseOp {
        let mut o = self.like();
        for (&(i, j), v) in &self.entries {
            o.set(j, i, v.conj());
        }
        o
    }

    fn check(&self, o: &SparseOp) -> Result<(), RepError> {
        if self.dim() != o.dim() {
            return Err(RepError::Size(self.dim(), o.dim()));
        }
        Ok(())
    }

    pub fn mul(&self, o: &SparseOp) -> Result<SparseOp, RepError> {
        self.check(o)?;
        let mut rows: BTreeMap<usize, Vec<(usize, Complex64)>> = BTreeMap::new();
        for (&(k, j), v) in &o.entries {
            rows.entry(k).or_default().push((j, *v));
        }
        let mut acc: BTreeMap<(usize, usize), Complex64> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            if let Some(r) = rows.get(&k) {
                for &(j, b) in r {
                    *acc.entry((i, j)).or_default() += a * b;
                }
            }
        }
        let mut out = self.like();
        for ((i, j), v) in acc {
            out.set(i, j, v);
        }
        Ok(out)
    }

    pub fn lin(&self, a: f64, o: &SparseOp, b: f64) -> Result<SparseOp, RepError> {
        self.check(o)?;
        let mut out = self.like();
        let keys: std::collections::BTreeSet<_> = self.entries.keys().chain(o.entries.keys()).copied().collect();
        for (i, j) in keys {
            out.set(i, j, self.get(i, j) * a + o.get(i, j) * b);
        }
        Ok(out)
    }

    pub fn add(&self, o: &SparseOp) -> Result<SparseOp, RepError> {
        self.lin(1.0, o, 1.0)
    }

    pub fn sub(&self, o: &SparseOp) -> Result<SparseOp, RepError> {
        self.lin(1.0, o, -1.0)
    }

    pub fn scale(&self, c: f64) -> SparseOp {
        let mut out = self.like();
        for (&(i, j), v) in &self.entries {
            out.set(i, j, v * c);
        }
        out
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&(i, j), a) in &self.entries {
            if let Some(b) = v.get(&j) {
                *out.entry(i).or_default() += a * b;
            }
        }
        out.retain(|_, c| *c != Complex64::new(0.0, 0.0));
        out
    }

    pub fn column(&self, j: usize) -> SparseVec {
        self.entries.range((0, 0)..).filter(|((_, c), _)| *c == j).map(|(&(i, _), v)| (i, *v)).collect()
    }

    /// max over interior j of ‖X e_j‖.
    pub fn interior_residual(&self) -> f64 {
        let mut cols: BTreeMap<usize, f64> = BTreeMap::new();
        for (&(_, j), v) in &self.entries {
            if self.interior[j] {
                *cols.entry(j).or_default() += v.norm_sqr();
            }
        }
        cols.values().fold(0.0f64, |m, s| m.max(s.sqrt()))
    }

    /// max over all j of ‖X e_j‖.
    pub fn full_residual(&self) -> f64 {
        let mut cols: BTreeMap<usize, f64> = BTreeMap::new();
        for (&(_, j), v) in &self.entries {
            *cols.entry(j).or_default() += v.norm_sqr();
        }
        cols.values().fold(0.0f64, |m, s| m.max(s.sqrt()))
    }

    /// Real part as a dense matrix (the operators built here are real).
    pub fn to_dense_re(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.dim(), self.dim());
        for (&(i, j), v) in &self.entries {
            m[(i, j)] = v.re;
        }
        m
    }

    pub fn from_dense_re(like: &SparseOp, m: &DMatrix<f64>, cutoff: f64) -> SparseOp {
        let mut o = like.like();
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                if m[(i, j)].abs() > cutoff {
                    o.set_re(i, j, m[(i, j)]);
                }
            }
        }
        o
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis(n: usize) -> (Arc<Vec<String>>, Arc<Vec<bool>>) {
        (Arc::new((0..n).map(|i| format!("e{i}")).collect()), Arc::new(vec![true; n]))
    }

    #[test]
    fn adjoint_and_product() {
        let (l, m) = basis(3);
        let mut a = SparseOp::zero(&l, &m);
        a.set(0, 1, Complex64::new(1.0, 2.0));
        a.set_re(1, 2, 3.0);
        let ad = a.adjoint();
        assert_eq!(ad.get(1, 0), Complex64::new(1.0, -2.0));
        let p = a.mul(&a).unwrap();
        assert_eq!(p.get(0, 2), Complex64::new(3.0, 6.0));
        assert_eq!(p.entries().count(), 1);
        let v: SparseVec = [(2, Complex64::new(1.0, 0.0))].into_iter().collect();
        assert_eq!(p.apply(&v).get(&0), Some(&Complex64::new(3.0, 6.0)));
        assert!((a.interior_residual() - 3.0).abs() < 1e-15);
    }

    #[test]
    fn size_mismatch() {
        let (l, m) = basis(2);
        let (l3, m3) = basis(3);
        assert_eq!(SparseOp::zero(&l, &m).mul(&SparseOp::zero(&l3, &m3)).unwrap_err(), RepError::Size(2, 3));
    }
}

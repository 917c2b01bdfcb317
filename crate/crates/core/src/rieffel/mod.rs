//! Rieffel deformation on characters: a homogeneous pair of weights p, q picks up the phase
//! x ×_J y = e(−p·Jq)·xy.

pub mod algebra;
pub mod blocks;

use crate::scalar::{PhaseExp, Scalar};
use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};
use std::f64::consts::PI;
use thiserror::Error;

pub type Weight = Vec<Rational64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RieffelError {
    #[error("deformation matrix is not skew-symmetric")]
    NotSkew,
    #[error("weight has length {got}, expected {expected}")]
    WeightLength { got: usize, expected: usize },
    #[error("element is not homogeneous")]
    NonHomogeneous,
    #[error("phase {0}·θ is not a multiple of θ/2")]
    PhaseNotHalfIntegral(Rational64),
}

/// Which skew matrix acts on R^{2n} = R^n ⊕ R^n when deforming a quantum group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Doubling {
    /// J̃ = J ⊕ (−J)
    JMinusJ,
    /// J̃ = (−J) ⊕ J
    #[default]
    MinusJJ,
}

impl std::str::FromStr for Doubling {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "J-J" | "j-minus-j" => Ok(Doubling::JMinusJ),
            "-JJ" | "minus-j-j" => Ok(Doubling::MinusJJ),
            _ => Err(format!("unknown doubling `{s}` (use minus-j-j or j-minus-j)")),
        }
    }
}

impl std::fmt::Display for Doubling {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Doubling::JMinusJ => "j-minus-j",
            Doubling::MinusJJ => "minus-j-j",
        })
    }
}

/// Skew-symmetric J = θ·R with R rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformMatrix {
    r: Vec<Vec<Rational64>>,
}

impl DeformMatrix {
    pub fn new(r: Vec<Vec<Rational64>>) -> Result<Self, RieffelError> {
        let n = r.len();
        for (i, row) in r.iter().enumerate() {
            if row.len() != n {
                return Err(RieffelError::NotSkew);
            }
            for (j, x) in row.iter().enumerate() {
                if *x != -r[j][i] {
                    return Err(RieffelError::NotSkew);
                }
            }
        }
        Ok(DeformMatrix { r })
    }

    pub fn zero(n: usize) -> Self {
        DeformMatrix { r: vec![vec![Rational64::zero(); n]; n] }
    }

    /// J = −Θ/2 for Θ = θ·K, the choice giving U_iU_j = e(θ_ij)U_jU_i.
    pub fn torus(k: &[Vec<i64>]) -> Result<Self, RieffelError> {
        DeformMatrix::new(k.iter().map(|row| row.iter().map(|&x| Rational64::new(-x, 2)).collect()).collect())
    }

    /// J = θ/2·[[0, −1], [1, 0]].
    pub fn torus2() -> Self {
        DeformMatrix::torus(&[vec![0, 1], vec![-1, 0]]).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.r.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational64 {
        self.r[i][j]
    }

    pub fn neg(&self) -> Self {
        DeformMatrix { r: self.r.iter().map(|row| row.iter().map(|x| -x).collect()).collect() }
    }

    pub fn direct_sum(&self, o: &DeformMatrix) -> Self {
        let (n, m) = (self.dim(), o.dim());
        let mut r = vec![vec![Rational64::zero(); n + m]; n + m];
        for i in 0..n {
            r[i][..n].copy_from_slice(&self.r[i]);
        }
        for i in 0..m {
            r[n + i][n..].copy_from_slice(&o.r[i]);
        }
        DeformMatrix { r }
    }

    pub fn doubled(&self, d: Doubling) -> Self {
        match d {
            Doubling::JMinusJ => self.direct_sum(&self.neg()),
            Doubling::MinusJJ => self.neg().direct_sum(self),
        }
    }

    /// φ_J(p, q) = −p·Jq in units of θ.
    pub fn phi(&self, p: &[Rational64], q: &[Rational64]) -> Result<Rational64, RieffelError> {
        let n = self.dim();
        for w in [p, q] {
            if w.len() != n {
                return Err(RieffelError::WeightLength { got: w.len(), expected: n });
            }
        }
        let mut acc = Rational64::zero();
        for i in 0..n {
            for j in 0..n {
                acc -= p[i] * self.r[i][j] * q[j];
            }
        }
        Ok(acc)
    }

    /// e(φ_J(p, q)) as an exact phase.
    pub fn phase(&self, p: &[Rational64], q: &[Rational64]) -> Result<PhaseExp, RieffelError> {
        to_phase(self.phi(p, q)?)
    }
}

/// k·θ as e(kθ), provided 2k is an integer.
pub fn to_phase(k: Rational64) -> Result<PhaseExp, RieffelError> {
    let h = k * 2;
    if !h.is_integer() {
        return Err(RieffelError::PhaseNotHalfIntegral(k));
    }
    Ok(PhaseExp(h.to_integer() as i32))
}

pub fn weight(xs: &[i64]) -> Weight {
    xs.iter().map(|&x| Rational64::from_integer(x)).collect()
}

pub fn add_weights(a: &[Rational64], b: &[Rational64]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn neg_weight(a: &[Rational64]) -> Weight {
    a.iter().map(|x| -x).collect()
}

/// A generator of the undeformed algebra, homogeneous for the torus action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedGen {
    pub label: String,
    pub left: Weight,
    /// Empty for a space deformation.
    pub right: Weight,
    pub block: Option<[u8; 3]>,
}

impl GradedGen {
    pub fn space(label: &str, w: Weight) -> Self {
        GradedGen { label: label.into(), left: w, right: Vec::new(), block: None }
    }

    pub fn weight(&self) -> Weight {
        let mut w = self.left.clone();
        w.extend(self.right.iter().cloned());
        w
    }

    /// The star: both weights negated, same block.
    pub fn star(&self, label: &str) -> Self {
        GradedGen { label: label.into(), left: neg_weight(&self.left), right: neg_weight(&self.right), block: self.block }
    }
}

/// c·(commutative product of the listed generators), with its total weight and block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMono {
    pub coeff: Scalar,
    pub gens: Vec<usize>,
    pub weight: Weight,
    pub block: Option<[u8; 3]>,
}

impl GradedMono {
    pub fn unit(n: usize) -> Self {
        GradedMono { coeff: Scalar::one(), gens: Vec::new(), weight: vec![Rational64::zero(); n], block: None }
    }

    pub fn gen(g: &[GradedGen], i: usize) -> Self {
        GradedMono { coeff: Scalar::one(), gens: vec![i], weight: g[i].weight(), block: g[i].block }
    }

    /// Undeformed product; distinct blocks multiply to zero.
    pub fn mul(&self, o: &GradedMono) -> GradedMono {
        let block = match (self.block, o.block) {
            (Some(a), Some(b)) if a != b => return GradedMono { coeff: Scalar::zero(), ..self.clone() },
            (a, b) => a.or(b),
        };
        let mut gens = self.gens.clone();
        gens.extend(&o.gens);
        gens.sort_unstable();
        GradedMono { coeff: &self.coeff * &o.coeff, gens, weight: add_weights(&self.weight, &o.weight), block }
    }

    pub fn star(&self) -> GradedMono {
        GradedMono { coeff: self.coeff.star(), gens: self.gens.clone(), weight: neg_weight(&self.weight), block: self.block }
    }
}

/// x ×_J y = e(φ_J(p_x, p_y))·xy.
pub fn deformed_product(x: &GradedMono, y: &GradedMono, j: &DeformMatrix) -> Result<GradedMono, RieffelError> {
    let ph = j.phase(&x.weight, &y.weight)?;
    let mut m = x.mul(y);
    m.coeff = &m.coeff * &Scalar::phase(ph);
    Ok(m)
}

/// Common weight of a sum of monomials.
pub fn homogeneous_weight(terms: &[GradedMono]) -> Result<Option<Weight>, RieffelError> {
    let mut it = terms.iter().filter(|m| !m.coeff.is_zero());
    let Some(first) = it.next() else { return Ok(None) };
    if it.any(|m| m.weight != first.weight) {
        return Err(RieffelError::NonHomogeneous);
    }
    Ok(Some(first.weight.clone()))
}

/// Deformed product of two homogeneous sums of monomials.
pub fn deformed_product_sum(
    x: &[GradedMono],
    y: &[GradedMono],
    j: &DeformMatrix,
) -> Result<Vec<GradedMono>, RieffelError> {
    homogeneous_weight(x)?;
    homogeneous_weight(y)?;
    let mut out = Vec::new();
    for a in x {
        for b in y {
            out.push(deformed_product(a, b, j)?);
        }
    }
    Ok(out)
}

/// ∫∫ e(a·u) e(q·v) e(u·v) du dv evaluated coordinatewise by the lattice sum
/// Σ_{k ∈ Z} e(a k) ∫_{S¹} e(q v) e(k v) dv over |k| ≤ `range`, with the circle integral
/// taken as an N-point Riemann sum (exact for frequencies below N).
pub fn oscillatory_character_integral(a: &[f64], q: &[i64], range: i64) -> Complex64 {
    let n_pts = (4 * range + 8) as usize;
    let circle = |m: i64| -> Complex64 {
        let mut s = Complex64::zero();
        for t in 0..n_pts {
            s += Complex64::from_polar(1.0, 2.0 * PI * (m as f64) * (t as f64) / n_pts as f64);
        }
        s / n_pts as f64
    };
    let mut total = Complex64::new(1.0, 0.0);
    for (ai, &qi) in a.iter().zip(q) {
        let mut s = Complex64::zero();
        for k in -range..=range {
            s += Complex64::from_polar(1.0, 2.0 * PI * ai * k as f64) * circle(qi + k);
        }
        total *= s;
    }
    total
}

/// The phase of x ×_J y by the lattice-sum route, at a numeric θ.
/// The second weight must be integral (the periodic factor).
pub fn phase_by_integral(j: &DeformMatrix, p: &[Rational64], q: &[Rational64], theta: f64) -> Option<Complex64> {
    let n = j.dim();
    let qi: Option<Vec<i64>> = q.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect();
    let qi = qi?;
    // α_{Ju}(x) = e(p·Ju) x = e((Jᵀp)·u) x
    let a: Vec<f64> = (0..n)
        .map(|k| (0..n).map(|i| p[i].to_f64().unwrap() * j.entry(i, k).to_f64().unwrap() * theta).sum())
        .collect();
    let range = qi.iter().map(|x| x.abs()).max().unwrap_or(0) + 2;
    Some(oscillatory_character_integral(&a, &qi, range))
}

pub fn phase_value(p: PhaseExp, theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, PI * p.0 as f64 * theta)
}

/// |k| for a rational exponent, used in reports.
pub fn abs_rational(k: Rational64) -> Rational64 {
    k.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn torus_relation_from_phase() {
        let j = DeformMatrix::torus2();
        let g = [GradedGen::space("U", weight(&[1, 0])), GradedGen::space("V", weight(&[0, 1]))];
        let u = GradedMono::gen(&g, 0);
        let v = GradedMono::gen(&g, 1);
        let uv = deformed_product(&u, &v, &j).unwrap();
        let vu = deformed_product(&v, &u, &j).unwrap();
        assert_eq!(uv.gens, vu.gens);
        assert_eq!(uv.coeff, &Scalar::phase(PhaseExp::theta(1)) * &vu.coeff);
    }

    #[test]
    fn zero_matrix_is_undeformed() {
        let j = DeformMatrix::zero(2);
        let g = [GradedGen::space("U", weight(&[1, 0])), GradedGen::space("V", weight(&[0, 1]))];
        let p = deformed_product(&GradedMono::gen(&g, 0), &GradedMono::gen(&g, 1), &j).unwrap();
        assert!(p.coeff.is_one());
    }

    #[test]
    fn corollary_value() {
        // ∫∫ e(θz₁) e(z₂) e(z₁z₂) = e(−θ)
        let theta = 0.3;
        let v = oscillatory_character_integral(&[theta], &[1], 4);
        let want = Complex64::from_polar(1.0, -2.0 * PI * theta);
        assert!((v - want).norm() < 1e-12, "{v} vs {want}");
    }

    #[test]
    fn skew_check() {
        assert_eq!(DeformMatrix::new(vec![vec![r(0), r(1)], vec![r(1), r(0)]]), Err(RieffelError::NotSkew));
        assert!(DeformMatrix::new(vec![vec![r(1)]]).is_err());
    }

    #[test]
    fn doubling_layout() {
        let j = DeformMatrix::torus2();
        let d = j.doubled(Doubling::MinusJJ);
        assert_eq!(d.entry(0, 1), Rational64::new(1, 2));
        assert_eq!(d.entry(2, 3), Rational64::new(-1, 2));
        let e = j.doubled(Doubling::JMinusJ);
        assert_eq!(e.entry(0, 1), Rational64::new(-1, 2));
        assert_eq!(e.entry(3, 2), Rational64::new(-1, 2));
    }

    #[test]
    fn third_theta_is_not_representable() {
        let j = DeformMatrix::new(vec![vec![r(0), Rational64::new(1, 3)], vec![Rational64::new(-1, 3), r(0)]]).unwrap();
        assert!(matches!(j.phase(&weight(&[1, 0]), &weight(&[0, 1])), Err(RieffelError::PhaseNotHalfIntegral(_))));
    }

    #[test]
    fn non_homogeneous_sum_rejected() {
        let g = [GradedGen::space("U", weight(&[1, 0])), GradedGen::space("V", weight(&[0, 1]))];
        let x = vec![GradedMono::gen(&g, 0), GradedMono::gen(&g, 1)];
        let y = vec![GradedMono::gen(&g, 0)];
        assert_eq!(deformed_product_sum(&x, &y, &DeformMatrix::torus2()), Err(RieffelError::NonHomogeneous));
    }

    fn small_weight(n: usize) -> impl Strategy<Value = Weight> {
        proptest::collection::vec(-3i64..=3, n).prop_map(|v| weight(&v))
    }

    fn skew4() -> impl Strategy<Value = DeformMatrix> {
        proptest::collection::vec(-2i64..=2, 6).prop_map(|k| {
            let mut m = vec![vec![0i64; 4]; 4];
            let mut it = k.into_iter();
            for i in 0..4 {
                for j in i + 1..4 {
                    let x = it.next().unwrap();
                    m[i][j] = x;
                    m[j][i] = -x;
                }
            }
            DeformMatrix::torus(&m).unwrap()
        })
    }

    proptest! {
        #[test]
        fn phase_is_bilinear(j in skew4(), a in small_weight(4), b in small_weight(4), c in small_weight(4)) {
            let lhs = j.phi(&add_weights(&a, &b), &c).unwrap();
            prop_assert_eq!(lhs, j.phi(&a, &c).unwrap() + j.phi(&b, &c).unwrap());
            let rhs = j.phi(&a, &add_weights(&b, &c)).unwrap();
            prop_assert_eq!(rhs, j.phi(&a, &b).unwrap() + j.phi(&a, &c).unwrap());
        }

        #[test]
        fn product_is_associative(j in skew4(), a in small_weight(4), b in small_weight(4), c in small_weight(4)) {
            let g = [GradedGen::space("a", a), GradedGen::space("b", b), GradedGen::space("c", c)];
            let (x, y, z) = (GradedMono::gen(&g, 0), GradedMono::gen(&g, 1), GradedMono::gen(&g, 2));
            let l = deformed_product(&deformed_product(&x, &y, &j).unwrap(), &z, &j).unwrap();
            let r = deformed_product(&x, &deformed_product(&y, &z, &j).unwrap(), &j).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn star_reverses(j in skew4(), a in small_weight(4), b in small_weight(4)) {
            let g = [GradedGen::space("a", a), GradedGen::space("b", b)];
            let (x, y) = (GradedMono::gen(&g, 0), GradedMono::gen(&g, 1));
            let lhs = deformed_product(&x, &y, &j).unwrap().star();
            let rhs = deformed_product(&y.star(), &x.star(), &j).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inverse_deformation_undoes(j in skew4(), a in small_weight(4), b in small_weight(4)) {
            let g = [GradedGen::space("a", a), GradedGen::space("b", b)];
            let (x, y) = (GradedMono::gen(&g, 0), GradedMono::gen(&g, 1));
            let once = deformed_product(&x, &y, &j).unwrap();
            let back = deformed_product(&x, &y, &j.neg()).unwrap();
            prop_assert!((&once.coeff * &back.coeff).is_one());
        }

        #[test]
        fn bilinear_rule_matches_lattice_sum(j in skew4(), a in small_weight(4), b in small_weight(4), th in 0.01f64..0.99) {
            let exact = phase_value(j.phase(&a, &b).unwrap(), th);
            let brute = phase_by_integral(&j, &a, &b, th).unwrap();
            prop_assert!((exact - brute).norm() < 1e-9, "{} vs {}", exact, brute);
        }
    }
}

//! Presentations of Rieffel deformations of commutative algebras with a torus action:
//! the noncommutative tori and the θ-spheres.

use super::{add_weights, to_phase, weight, DeformMatrix, GradedGen, RieffelError, Weight};
use crate::ncalg::{complete, Alphabet, CompletionOptions, NCPoly, Presentation, Word};
use crate::qgroups::Check;
use crate::scalar::{PhaseExp, Scalar};
use num_rational::Rational64;
use num_traits::Zero;
use std::sync::Arc;

pub const DEFORM_BOUND: usize = 4;

/// A commutative algebra with homogeneous generators, its Rieffel deformation, and both presentations.
///
/// A word w₁…w_k in the deformed presentation stands for the deformed product
/// w₁ ×_J ⋯ ×_J w_k = e(Σ_{a<b} φ_J(p_a, p_b))·w₁⋯w_k.
#[derive(Clone, Debug)]
pub struct DeformedAlgebra {
    pub gens: Vec<GradedGen>,
    pub j: DeformMatrix,
    pub deformed: Presentation,
    pub undeformed: Presentation,
    /// Relations stated directly in the deformed algebra, checked against `deformed`.
    pub cited: Vec<(String, NCPoly)>,
}

fn word_phase(gens: &[GradedGen], j: &DeformMatrix, w: &Word) -> Result<Rational64, RieffelError> {
    let mut acc = Rational64::zero();
    let mut seen: Weight = vec![Rational64::zero(); j.dim()];
    for &g in w.0.iter() {
        let p = gens[g as usize].weight();
        acc += j.phi(&seen, &p)?;
        seen = add_weights(&seen, &p);
    }
    Ok(acc)
}

/// x_a x_b − e(2φ(p_a, p_b)) x_b x_a for a < b, then each classical relation rewritten
/// through the word phases.
fn relations_for(
    a: &Arc<Alphabet>,
    gens: &[GradedGen],
    j: &DeformMatrix,
    classical: &[(String, NCPoly)],
) -> Result<Vec<(String, NCPoly)>, RieffelError> {
    let mut rels = Vec::new();
    for x in 0..gens.len() {
        for y in x + 1..gens.len() {
            let ph = to_phase(j.phi(&gens[x].weight(), &gens[y].weight())? * 2)?;
            if !ph.is_integral() {
                return Err(RieffelError::PhaseNotHalfIntegral(Rational64::new(ph.0 as i64, 2)));
            }
            let xy = NCPoly::word(a, Word::from_slice(&[x as u16, y as u16]));
            let yx = NCPoly::word(a, Word::from_slice(&[y as u16, x as u16]));
            let label = format!("{}{}", gens[x].label, gens[y].label);
            rels.push((label, &xy - &yx.scale(&Scalar::phase(ph))));
        }
    }
    for (label, r) in classical {
        let mut p = NCPoly::zero(a);
        for (w, c) in r.terms() {
            let ph = to_phase(-word_phase(gens, j, w)?)?;
            p.add_term(w.clone(), c * &Scalar::phase(ph));
        }
        rels.push((label.clone(), p));
    }
    Ok(rels)
}

impl DeformedAlgebra {
    pub fn new(
        name: &str,
        a: &Arc<Alphabet>,
        gens: Vec<GradedGen>,
        classical: Vec<(String, NCPoly)>,
        j: DeformMatrix,
        cited: Vec<(String, NCPoly)>,
    ) -> Result<Self, RieffelError> {
        assert_eq!(a.len(), gens.len(), "one graded generator per letter");
        let zero = DeformMatrix::zero(j.dim());
        let build = |label: &str, m: &DeformMatrix| -> Result<Presentation, RieffelError> {
            let p = Presentation::new(label, a, relations_for(a, &gens, m, &classical)?);
            Ok(complete(&p, CompletionOptions::bound(DEFORM_BOUND)).expect("phase-commutation rules orient"))
        };
        let deformed = build(name, &j)?;
        let undeformed = build(&format!("{name} (undeformed)"), &zero)?;
        Ok(DeformedAlgebra { gens, j, deformed, undeformed, cited })
    }

    pub fn word_weight(&self, w: &Word) -> Weight {
        w.0.iter().fold(vec![Rational64::zero(); self.j.dim()], |acc, &g| add_weights(&acc, &self.gens[g as usize].weight()))
    }

    /// The undeformed function represented by a deformed polynomial.
    pub fn classical(&self, p: &NCPoly) -> Result<NCPoly, RieffelError> {
        let ua = self.undeformed.alphabet();
        let mut out = NCPoly::zero(ua);
        for (w, c) in p.terms() {
            let ph = to_phase(word_phase(&self.gens, &self.j, w)?)?;
            out.add_term(w.clone(), c * &Scalar::phase(ph));
        }
        Ok(self.undeformed.normal_form(&out))
    }

    /// a ×_K b on homogeneous classical polynomials of the given weights, as a classical polynomial.
    fn classical_twisted(&self, a: &NCPoly, pa: &Weight, b: &NCPoly, pb: &Weight, k: &DeformMatrix) -> Result<NCPoly, RieffelError> {
        let prod = self.undeformed.mul(a, b);
        Ok(prod.scale(&Scalar::phase(k.phase(pa, pb)?)))
    }

    /// For normal words u, v up to `max_len`: the classical image of the rewritten product u·v
    /// equals classical(u) ×_J classical(v).
    pub fn hom_consistency(&self, max_len: usize) -> Result<Check, RieffelError> {
        let words = self.deformed.basis_words(max_len);
        let a = self.deformed.alphabet();
        let mut bad = Vec::new();
        for u in &words {
            for v in &words {
                let lhs = self.classical(&self.deformed.normal_form(&NCPoly::word(a, u.concat(v))))?;
                let cu = self.classical(&NCPoly::word(a, u.clone()))?;
                let cv = self.classical(&NCPoly::word(a, v.clone()))?;
                let rhs = self.classical_twisted(&cu, &self.word_weight(u), &cv, &self.word_weight(v), &self.j)?;
                if lhs != rhs {
                    bad.push(format!("{}·{}", a.render_word(u), a.render_word(v)));
                }
            }
        }
        Ok(pair_check(format!("rewrite vs twisted product, {} word pairs", words.len().pow(2)), bad))
    }

    /// Deforming the deformed product by −J gives back the classical product on monomials.
    pub fn inversion(&self, max_len: usize) -> Result<Check, RieffelError> {
        let words = self.deformed.basis_words(max_len);
        let a = self.deformed.alphabet();
        let back = self.j.neg();
        let mut bad = Vec::new();
        for u in &words {
            for v in &words {
                let (pu, pv) = (self.word_weight(u), self.word_weight(v));
                let twisted = self.deformed.normal_form(&NCPoly::word(a, u.concat(v))).scale(&Scalar::phase(back.phase(&pu, &pv)?));
                let lhs = self.classical(&twisted)?;
                let cu = self.classical(&NCPoly::word(a, u.clone()))?;
                let cv = self.classical(&NCPoly::word(a, v.clone()))?;
                if lhs != self.undeformed.mul(&cu, &cv) {
                    bad.push(format!("{}·{}", a.render_word(u), a.render_word(v)));
                }
            }
        }
        Ok(pair_check(format!("×_J then ×_(−J) is undeformed, {} word pairs", words.len().pow(2)), bad))
    }

    /// Each cited relation reduces to zero in the generated presentation.
    pub fn cited_checks(&self) -> Vec<Check> {
        self.cited
            .iter()
            .map(|(l, r)| {
                let nf = self.deformed.normal_form(r);
                Check::zero(l.clone(), &nf, nf.is_zero())
            })
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        let a = self.deformed.alphabet();
        (0..a.len()).all(|x| {
            (0..a.len()).all(|y| {
                let xy = NCPoly::word(a, Word::from_slice(&[x as u16, y as u16]));
                let yx = NCPoly::word(a, Word::from_slice(&[y as u16, x as u16]));
                self.deformed.reduces_to_zero(&(&xy - &yx))
            })
        })
    }
}

fn pair_check(label: String, bad: Vec<String>) -> Check {
    let passed = bad.is_empty();
    let detail = if passed { "all agree".into() } else { format!("differ on {}", bad.join(", ")) };
    Check { label, passed, detail }
}

/// e(θ_ij) for θ = θ·K.
fn lambda(k: &[Vec<i64>], i: usize, j: usize) -> Scalar {
    Scalar::phase(PhaseExp::theta(k[i][j] as i32))
}

fn unit_vec(n: usize, i: usize, s: i64) -> Weight {
    let mut v = vec![0; n];
    v[i] = s;
    weight(&v)
}

/// C(T^n) deformed by J = −Θ/2, Θ = θ·K: unitaries U_i with U_iU_j = e(θ_ij)U_jU_i.
pub fn nc_torus_presentation(k: &[Vec<i64>]) -> Result<DeformedAlgebra, RieffelError> {
    let n = k.len();
    let j = DeformMatrix::torus(k)?;
    let names: Vec<(String, String)> = (1..=n).map(|i| (format!("U{i}"), format!("U{i}*"))).collect();
    let mut spec: Vec<(&str, &str, u32)> = Vec::new();
    let mut gens = Vec::new();
    for (i, (u, us)) in names.iter().enumerate() {
        spec.push((u, us, 1));
        spec.push((us, u, 1));
        gens.push(GradedGen::space(u, unit_vec(n, i, 1)));
        gens.push(GradedGen::space(us, unit_vec(n, i, -1)));
    }
    let a = Alphabet::new(&spec).expect("distinct names");
    let one = NCPoly::one(&a);
    let mut classical = Vec::new();
    for (u, us) in &names {
        classical.push((format!("{u}{us}"), &NCPoly::monomial(&a, &[u, us]) - &one));
        classical.push((format!("{us}{u}"), &NCPoly::monomial(&a, &[us, u]) - &one));
    }
    let mut cited = Vec::new();
    for i in 0..n {
        for jj in i + 1..n {
            let (ui, uj) = (&names[i].0, &names[jj].0);
            let r = &NCPoly::monomial(&a, &[ui, uj]) - &NCPoly::monomial(&a, &[uj, ui]).scale(&lambda(k, i, jj));
            cited.push((format!("{ui}{uj} = e(θ_{}{})·{uj}{ui}", i + 1, jj + 1), r));
        }
    }
    DeformedAlgebra::new(&format!("A_θ(T^{n})"), &a, gens, classical, j, cited)
}

/// K with θ_ij = θ above the diagonal.
pub fn standard_k(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| (j > i) as i64 - (j < i) as i64).collect()).collect()
}

/// S^{2n−1}_θ (or S^{2n}_θ when `even`) with λ^{μν} = e(θ_μν), θ_μν = θ·K_μν.
pub fn theta_sphere_presentation(k: &[Vec<i64>], even: bool) -> Result<DeformedAlgebra, RieffelError> {
    let n = k.len();
    let j = DeformMatrix::torus(k)?;
    let names: Vec<(String, String)> = (1..=n).map(|i| (format!("z{i}"), format!("z{i}*"))).collect();
    let mut spec: Vec<(&str, &str, u32)> = Vec::new();
    let mut gens = Vec::new();
    for (i, (z, zb)) in names.iter().enumerate() {
        spec.push((z, zb, 1));
        spec.push((zb, z, 1));
        gens.push(GradedGen::space(z, unit_vec(n, i, 1)));
        gens.push(GradedGen::space(zb, unit_vec(n, i, -1)));
    }
    if even {
        spec.push(("x", "x", 1));
        gens.push(GradedGen::space("x", vec![Rational64::zero(); n]));
    }
    let a = Alphabet::new(&spec).expect("distinct names");
    let mut sum = -&NCPoly::one(&a);
    for (z, zb) in &names {
        sum = &sum + &NCPoly::monomial(&a, &[z, zb]);
    }
    if even {
        sum = &sum + &NCPoly::monomial(&a, &["x", "x"]);
    }
    let classical = vec![("sphere".to_string(), sum.clone())];
    let mut cited = Vec::new();
    let m = |xs: &[&str]| NCPoly::monomial(&a, xs);
    for mu in 0..n {
        for nu in 0..n {
            let (zm, zbm) = (&names[mu].0, &names[mu].1);
            let (zn, zbn) = (&names[nu].0, &names[nu].1);
            if mu < nu {
                cited.push((format!("{zm}{zn} = λ^{}{}·{zn}{zm}", mu + 1, nu + 1), &m(&[zm, zn]) - &m(&[zn, zm]).scale(&lambda(k, mu, nu))));
                cited.push((format!("{zbm}{zbn} = λ^{}{}·{zbn}{zbm}", mu + 1, nu + 1), &m(&[zbm, zbn]) - &m(&[zbn, zbm]).scale(&lambda(k, mu, nu))));
            }
            cited.push((format!("{zbm}{zn} = λ^{}{}·{zn}{zbm}", nu + 1, mu + 1), &m(&[zbm, zn]) - &m(&[zn, zbm]).scale(&lambda(k, nu, mu))));
        }
        if even {
            let zm = &names[mu].0;
            cited.push((format!("x{zm} = {zm}x"), &m(&["x", zm]) - &m(&[zm, "x"])));
        }
    }
    cited.push(("Σ z z* (+ x²) = 1".into(), sum));
    let dim = if even { 2 * n } else { 2 * n - 1 };
    DeformedAlgebra::new(&format!("S^{dim}_θ"), &a, gens, classical, j, cited)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_two_relation() {
        let t = nc_torus_presentation(&standard_k(2)).unwrap();
        for c in t.cited_checks() {
            assert!(c.passed, "{c}");
        }
        assert!(!t.is_commutative());
        assert!(t.deformed.status().to_string() == "confluent", "{}", t.deformed.status());
    }

    #[test]
    fn zero_theta_is_commutative() {
        let t = nc_torus_presentation(&[vec![0, 0], vec![0, 0]]).unwrap();
        assert!(t.is_commutative());
    }

    #[test]
    fn torus_square_of_u1u2() {
        let t = nc_torus_presentation(&standard_k(2)).unwrap();
        let a = t.deformed.alphabet().clone();
        let w = NCPoly::monomial(&a, &["U1", "U2"]);
        // (U₁U₂)(U₁U₂) = e(−θ)·U₁²U₂²
        let lhs = t.deformed.mul(&w, &w);
        let rhs = t.deformed.normal_form(&NCPoly::monomial(&a, &["U1", "U1", "U2", "U2"]).scale(&Scalar::phase(PhaseExp::theta(-1))));
        assert_eq!(lhs, rhs);
        let c = t.hom_consistency(2).unwrap();
        assert!(c.passed, "{c}");
    }

    #[test]
    fn torus_three() {
        let t = nc_torus_presentation(&[vec![0, 1, -2], vec![-1, 0, 1], vec![2, -1, 0]]).unwrap();
        for c in t.cited_checks() {
            assert!(c.passed, "{c}");
        }
        assert!(t.hom_consistency(2).unwrap().passed);
        assert!(t.inversion(2).unwrap().passed);
    }

    #[test]
    fn circle_is_commutative() {
        let s = theta_sphere_presentation(&[vec![0]], false).unwrap();
        assert!(s.is_commutative());
        for c in s.cited_checks() {
            assert!(c.passed, "{c}");
        }
    }

    #[test]
    fn three_sphere() {
        let s = theta_sphere_presentation(&standard_k(2), false).unwrap();
        for c in s.cited_checks() {
            assert!(c.passed, "{c}");
        }
        assert!(!s.is_commutative());
        assert!(s.hom_consistency(2).unwrap().passed);
        assert!(s.inversion(2).unwrap().passed);
    }

    #[test]
    fn four_sphere() {
        let s = theta_sphere_presentation(&standard_k(2), true).unwrap();
        for c in s.cited_checks() {
            assert!(c.passed, "{c}");
        }
        assert!(s.hom_consistency(2).unwrap().passed);
    }

    #[test]
    fn wrong_lambda_is_rejected() {
        let s = theta_sphere_presentation(&standard_k(2), false).unwrap();
        let a = s.deformed.alphabet().clone();
        let bad = &NCPoly::monomial(&a, &["z1", "z2"]) - &NCPoly::monomial(&a, &["z2", "z1"]).scale(&Scalar::phase(PhaseExp::theta(-1)));
        assert!(!s.deformed.reduces_to_zero(&bad));
    }
}

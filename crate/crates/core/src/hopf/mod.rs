//! Coproduct, counit and antipode on presented algebras; Haar state on SU_μ(2);
//! the dual pairing with U_μ(su(2)).

mod haar;
mod tensor;
pub mod uq;

pub use haar::{haar_invariance_check, haar_su2, haar_su2_word, InvarianceVerdict, LinearFunctional};
pub use tensor::TensorPoly;

use crate::ncalg::{Gen, NCPoly, Presentation, Word};
use crate::scalar::Scalar;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HopfError {
    #[error("no {0} given for generator `{1}`")]
    Missing(&'static str, String),
}

/// Generator-level Δ, ε, κ on a presentation, extended (anti)multiplicatively.
#[derive(Debug)]
pub struct HopfData {
    pres: Presentation,
    delta: Vec<TensorPoly>,
    eps: Vec<Scalar>,
    kappa: Vec<NCPoly>,
    memo: RwLock<HashMap<Word, TensorPoly>>,
}

impl HopfData {
    pub fn new(
        pres: Presentation,
        delta: BTreeMap<String, TensorPoly>,
        eps: BTreeMap<String, Scalar>,
        kappa: BTreeMap<String, NCPoly>,
    ) -> Result<Self, HopfError> {
        let a = pres.alphabet().clone();
        let mut d = Vec::new();
        let mut e = Vec::new();
        let mut k = Vec::new();
        for name in a.names() {
            let dt = delta.get(name).ok_or_else(|| HopfError::Missing("coproduct", name.clone()))?;
            d.push(dt.normalize(&[&pres, &pres]));
            e.push(eps.get(name).cloned().ok_or_else(|| HopfError::Missing("counit", name.clone()))?);
            let kp = kappa.get(name).ok_or_else(|| HopfError::Missing("antipode", name.clone()))?;
            k.push(pres.normal_form(kp));
        }
        Ok(HopfData { pres, delta: d, eps: e, kappa: k, memo: RwLock::new(HashMap::new()) })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    fn delta_word(&self, w: &Word) -> TensorPoly {
        if let Some(t) = self.memo.read().unwrap().get(w) {
            return t.clone();
        }
        let a = self.pres.alphabet();
        let out = match w.len() {
            0 => TensorPoly::one(&[a.clone(), a.clone()]),
            1 => self.delta[w.0[0] as usize].clone(),
            n => {
                let head = self.delta_word(&w.slice(0, n - 1));
                head.mul(&self.delta[w.0[n - 1] as usize], &[&self.pres, &self.pres])
            }
        };
        self.memo.write().unwrap().insert(w.clone(), out.clone());
        out
    }

    /// Δ(x), both legs in normal form.
    pub fn delta(&self, x: &NCPoly) -> TensorPoly {
        let a = self.pres.alphabet();
        let mut t = TensorPoly::zero(&[a.clone(), a.clone()]);
        for (w, c) in x.terms() {
            t.add_scaled(&self.delta_word(w), c);
        }
        t
    }

    pub fn delta_of_word(&self, w: &Word) -> TensorPoly {
        self.delta_word(w)
    }

    pub fn counit_word(&self, w: &Word) -> Scalar {
        let mut c = Scalar::one();
        for &g in w.0.iter() {
            c = &c * &self.eps[g as usize];
            if c.is_zero() {
                break;
            }
        }
        c
    }

    pub fn counit(&self, x: &NCPoly) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, c) in x.terms() {
            acc = &acc + &(c * &self.counit_word(w));
        }
        acc
    }

    pub fn antipode_word(&self, w: &Word) -> NCPoly {
        let mut acc = self.pres.one();
        for &g in w.0.iter().rev() {
            acc = self.pres.mul(&acc, &self.kappa[g as usize]);
        }
        acc
    }

    pub fn antipode(&self, x: &NCPoly) -> NCPoly {
        let mut acc = self.pres.zero();
        for (w, c) in x.terms() {
            acc.add_scaled(&self.antipode_word(w), c);
        }
        acc
    }

    pub fn generator_delta(&self, g: Gen) -> &TensorPoly {
        &self.delta[g as usize]
    }

    /// Run the Hopf axioms on each labelled sample element.
    pub fn axiom_suite(&self, sample: &[(String, NCPoly)]) -> Vec<AxiomVerdict> {
        let p = &self.pres;
        let mut out = Vec::new();
        for (label, x) in sample {
            let x = p.normal_form(x);
            let dx = self.delta(&x);
            let push = |out: &mut Vec<AxiomVerdict>, axiom, residual: String, passed| {
                out.push(AxiomVerdict { label: label.clone(), axiom, passed, residual });
            };

            let l = dx.map_leg(0, |w| self.delta_word(w));
            let r = dx.map_leg(1, |w| self.delta_word(w));
            let res = &l - &r;
            push(&mut out, Axiom::Coassociativity, res.to_string(), res.is_zero());

            let l = dx.apply_functional(0, |w| self.counit_word(w)).to_poly();
            let res = &p.normal_form(&l) - &x;
            push(&mut out, Axiom::LeftCounit, res.to_string(), res.is_zero());
            let r = dx.apply_functional(1, |w| self.counit_word(w)).to_poly();
            let res = &p.normal_form(&r) - &x;
            push(&mut out, Axiom::RightCounit, res.to_string(), res.is_zero());

            let ex = p.constant(self.counit(&x));
            let l = dx.apply_map(0, |w| self.antipode_word(w)).contract(0, p).to_poly();
            let res = &l - &ex;
            push(&mut out, Axiom::LeftAntipode, res.to_string(), res.is_zero());
            let r = dx.apply_map(1, |w| self.antipode_word(w)).contract(0, p).to_poly();
            let res = &r - &ex;
            push(&mut out, Axiom::RightAntipode, res.to_string(), res.is_zero());

            let res = &self.delta(&x.star()) - &dx.star().normalize(&[p, p]);
            push(&mut out, Axiom::StarCoproduct, res.to_string(), res.is_zero());

            let k = self.antipode(&p.normal_form(&self.antipode(&x.star()).star()));
            let res = &k - &x;
            push(&mut out, Axiom::StarAntipode, res.to_string(), res.is_zero());
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    Coassociativity,
    LeftCounit,
    RightCounit,
    LeftAntipode,
    RightAntipode,
    StarCoproduct,
    StarAntipode,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Coassociativity => "coassociativity",
            Axiom::LeftCounit => "counit-left",
            Axiom::RightCounit => "counit-right",
            Axiom::LeftAntipode => "antipode-left",
            Axiom::RightAntipode => "antipode-right",
            Axiom::StarCoproduct => "coproduct-star",
            Axiom::StarAntipode => "antipode-star",
        };
        write!(f, "{}", s)
    }
}

#[derive(Clone, Debug)]
pub struct AxiomVerdict {
    pub label: String,
    pub axiom: Axiom,
    pub passed: bool,
    /// Rendered residual; "0" on success.
    pub residual: String,
}

/// Corepresentation matrix `u` with Δ(u_ij) = Σ_k u_ik ⊗ u_kj.
pub fn matrix_coproduct(u: &[Vec<NCPoly>]) -> Vec<Vec<TensorPoly>> {
    let n = u.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a = u[i][j].alphabet().clone();
                    let mut t = TensorPoly::zero(&[a.clone(), a]);
                    for k in 0..n {
                        t = &t + &TensorPoly::pure(&[&u[i][k], &u[k][j]]);
                    }
                    t
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qgroups::su2::{su2, su2_hopf};

    #[test]
    fn coproduct_of_alpha() {
        let h = su2_hopf();
        let p = su2();
        let expect = &TensorPoly::pure(&[&p.gen("α"), &p.gen("α")])
            - &TensorPoly::pure(&[&p.gen("γ*"), &p.gen("γ")]).scale(&Scalar::mu());
        assert_eq!(h.delta(&p.gen("α")), expect);
        assert_eq!(h.delta(&p.one()), TensorPoly::one(&[p.alphabet().clone(), p.alphabet().clone()]));
    }

    #[test]
    fn counit_recovers_gamma_star_gamma() {
        let h = su2_hopf();
        let p = su2();
        let x = p.word(&["γ*", "γ"]);
        let back = h.delta(&x).apply_functional(0, |w| h.counit_word(w)).to_poly();
        assert_eq!(p.normal_form(&back), x);
    }

    #[test]
    fn axioms_on_basis_degree_four() {
        let h = su2_hopf();
        let p = su2();
        let sample: Vec<_> = p
            .basis_words(4)
            .into_iter()
            .map(|w| (p.alphabet().render_word(&w), NCPoly::word(p.alphabet(), w)))
            .collect();
        let verdicts = h.axiom_suite(&sample);
        assert_eq!(verdicts.len(), sample.len() * 7);
        for v in verdicts {
            assert!(v.passed, "{} {}: {}", v.label, v.axiom, v.residual);
        }
    }

    #[test]
    fn haar_table() {
        let p = su2();
        assert!(haar_su2(&p.one()).is_one());
        assert!(haar_su2(&p.word(&["α", "γ*"])).is_zero());
        let k1 = haar_su2(&p.word(&["γ*", "γ"]));
        let expect = (&Scalar::one() / &(&Scalar::one() + &Scalar::mu_pow(2))).unwrap();
        assert_eq!(k1, expect);
        // h(α*α) = 1 − h(γ*γ)
        assert_eq!(haar_su2(&p.word(&["α*", "α"])), &Scalar::one() - &expect);
    }

    #[test]
    fn haar_bi_invariant_degree_four() {
        for v in haar_invariance_check(su2_hopf(), 4) {
            assert!(v.passed(), "{}: {} | {}", v.word, v.left_residual, v.right_residual);
        }
    }
}

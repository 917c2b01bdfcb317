use super::HopfData;
use crate::ncalg::{NCPoly, Presentation, Word};
use crate::qgroups::su2::su2;
use crate::scalar::Scalar;
use std::fmt;

/// A linear functional given by its values on normal-form words.
pub struct LinearFunctional<'a> {
    pub name: String,
    pres: &'a Presentation,
    rule: Box<dyn Fn(&Word) -> Scalar + Send + Sync + 'a>,
}

impl<'a> LinearFunctional<'a> {
    pub fn new(name: &str, pres: &'a Presentation, rule: impl Fn(&Word) -> Scalar + Send + Sync + 'a) -> Self {
        LinearFunctional { name: name.into(), pres, rule: Box::new(rule) }
    }

    /// Value on a normal-form word.
    pub fn on_word(&self, w: &Word) -> Scalar {
        (self.rule)(w)
    }

    pub fn apply(&self, x: &NCPoly) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, c) in self.pres.normal_form(x).terms() {
            acc = &acc + &(c * &self.on_word(w));
        }
        acc
    }
}

impl fmt::Debug for LinearFunctional<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearFunctional({})", self.name)
    }
}

/// h((γ*γ)^k) = (1 − μ²)/(1 − μ^{2k+2}); zero on every other normal word.
pub fn haar_su2_word(w: &Word) -> Scalar {
    let a = su2().alphabet();
    let (gs, g) = (a.index("γ*").unwrap(), a.index("γ").unwrap());
    let n = w.0.iter().take_while(|&&x| x == gs).count();
    let l = w.len() - n;
    if w.0[n..].iter().any(|&x| x != g) || n != l {
        return Scalar::zero();
    }
    let mu2 = Scalar::mu_pow(2);
    let num = &Scalar::one() - &mu2;
    let den = &Scalar::one() - &Scalar::mu_pow(2 * n as i32 + 2);
    (&num / &den).expect("nonzero denominator")
}

pub fn haar_su2(x: &NCPoly) -> Scalar {
    LinearFunctional::new("h", su2(), haar_su2_word).apply(x)
}

#[derive(Clone, Debug)]
pub struct InvarianceVerdict {
    pub word: String,
    pub value: Scalar,
    /// (h⊗id)Δx − h(x)·1
    pub left_residual: NCPoly,
    /// (id⊗h)Δx − h(x)·1
    pub right_residual: NCPoly,
}

impl InvarianceVerdict {
    pub fn passed(&self) -> bool {
        self.left_residual.is_zero() && self.right_residual.is_zero()
    }
}

/// Bi-invariance of the SU_μ(2) Haar state on every basis word of length ≤ `degree`.
pub fn haar_invariance_check(hopf: &HopfData, degree: usize) -> Vec<InvarianceVerdict> {
    let p = hopf.presentation();
    p.basis_words(degree)
        .into_iter()
        .map(|w| {
            let x = NCPoly::word(p.alphabet(), w.clone());
            let hx = haar_su2_word(&w);
            let dx = hopf.delta(&x);
            let target = p.constant(hx.clone());
            let l = &dx.apply_functional(0, haar_su2_word).to_poly() - &target;
            let r = &dx.apply_functional(1, haar_su2_word).to_poly() - &target;
            InvarianceVerdict {
                word: p.alphabet().render_word(&w),
                value: hx,
                left_residual: p.normal_form(&l),
                right_residual: p.normal_form(&r),
            }
        })
        .collect()
}

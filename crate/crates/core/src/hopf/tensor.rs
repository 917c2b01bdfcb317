use crate::ncalg::{Alphabet, NCPoly, Presentation, Word};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Element of an algebraic tensor power, stored as a sum of pure tensors of words.
///
/// Arity 0 is a scalar, arity 1 a plain polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPoly {
    alphas: Vec<Arc<Alphabet>>,
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl TensorPoly {
    pub fn zero(alphas: &[Arc<Alphabet>]) -> Self {
        TensorPoly { alphas: alphas.to_vec(), terms: BTreeMap::new() }
    }

    pub fn one(alphas: &[Arc<Alphabet>]) -> Self {
        let mut t = TensorPoly::zero(alphas);
        t.add_term(vec![Word::empty(); alphas.len()], Scalar::one());
        t
    }

    pub fn scalar(c: Scalar) -> Self {
        let mut t = TensorPoly::zero(&[]);
        t.add_term(Vec::new(), c);
        t
    }

    /// The pure tensor `p₀ ⊗ p₁ ⊗ …` expanded bilinearly.
    pub fn pure(legs: &[&NCPoly]) -> Self {
        let alphas: Vec<_> = legs.iter().map(|p| p.alphabet().clone()).collect();
        let mut acc = TensorPoly::scalar(Scalar::one());
        for p in legs {
            let mut next = BTreeMap::new();
            for (ws, c) in &acc.terms {
                for (w, d) in p.terms() {
                    let mut k = ws.clone();
                    k.push(w.clone());
                    next.insert(k, c * d);
                }
            }
            acc.terms = next;
        }
        acc.alphas = alphas;
        acc.terms.retain(|_, c| !c.is_zero());
        acc
    }

    pub fn from_poly(p: &NCPoly) -> Self {
        TensorPoly::pure(&[p])
    }

    pub fn arity(&self) -> usize {
        self.alphas.len()
    }

    pub fn alphabets(&self) -> &[Arc<Alphabet>] {
        &self.alphas
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, legs: Vec<Word>, c: Scalar) {
        debug_assert_eq!(legs.len(), self.alphas.len());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &TensorPoly, c: &Scalar) {
        for (k, d) in &o.terms {
            self.add_term(k.clone(), c * d);
        }
    }

    pub fn scale(&self, c: &Scalar) -> TensorPoly {
        let mut t = TensorPoly::zero(&self.alphas);
        t.add_scaled(self, c);
        t
    }

    /// Legwise star with conjugated coefficients.
    pub fn star(&self) -> TensorPoly {
        let mut t = TensorPoly::zero(&self.alphas);
        for (k, c) in &self.terms {
            let legs = k.iter().zip(&self.alphas).map(|(w, a)| a.star_word(w)).collect();
            t.add_term(legs, c.star());
        }
        t
    }

    /// Reverse the order of the legs.
    pub fn flip(&self) -> TensorPoly {
        let alphas: Vec<_> = self.alphas.iter().rev().cloned().collect();
        let mut t = TensorPoly::zero(&alphas);
        for (k, c) in &self.terms {
            t.add_term(k.iter().rev().cloned().collect(), c.clone());
        }
        t
    }

    /// Legwise product, each leg reduced in its presentation.
    pub fn mul(&self, o: &TensorPoly, pres: &[&Presentation]) -> TensorPoly {
        assert_eq!(self.arity(), o.arity());
        assert_eq!(pres.len(), self.arity());
        let mut t = TensorPoly::zero(&self.alphas);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                let mut part = TensorPoly::scalar(c1 * c2);
                for (i, p) in pres.iter().enumerate() {
                    let leg = p.normal_form(&NCPoly::word(&self.alphas[i], k1[i].concat(&k2[i])));
                    part = part.extend_with(&leg);
                }
                t.add_scaled(&part, &Scalar::one());
            }
        }
        t
    }

    fn extend_with(&self, p: &NCPoly) -> TensorPoly {
        let mut alphas = self.alphas.clone();
        alphas.push(p.alphabet().clone());
        let mut t = TensorPoly::zero(&alphas);
        for (k, c) in &self.terms {
            for (w, d) in p.terms() {
                let mut nk = k.clone();
                nk.push(w.clone());
                t.add_term(nk, c * d);
            }
        }
        t
    }

    /// Image of `p` under the algebra map sending generator `g` to `images[g]`,
    /// with products taken legwise in `pres`.
    pub fn substitute(p: &NCPoly, images: &[TensorPoly], pres: &[&Presentation]) -> TensorPoly {
        let alphas: Vec<_> = pres.iter().map(|q| q.alphabet().clone()).collect();
        let mut out = TensorPoly::zero(&alphas);
        for (w, c) in p.terms() {
            let mut acc = TensorPoly::one(&alphas);
            for &g in w.0.iter() {
                acc = acc.mul(&images[g as usize], pres);
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// Reduce every leg to normal form.
    pub fn normalize(&self, pres: &[&Presentation]) -> TensorPoly {
        let one = TensorPoly::one(&self.alphas);
        one.mul(self, pres)
    }

    /// Replace leg `i` by the image of a linear map whose values are tensors
    /// of some fixed arity (0 for functionals, 1 for endomorphisms, 2 for coproducts).
    pub fn map_leg(&self, i: usize, f: impl Fn(&Word) -> TensorPoly) -> TensorPoly {
        let mut alphas: Option<Vec<Arc<Alphabet>>> = None;
        let mut out: BTreeMap<Vec<Word>, Scalar> = BTreeMap::new();
        for (k, c) in &self.terms {
            let img = f(&k[i]);
            if alphas.is_none() {
                let mut a = self.alphas[..i].to_vec();
                a.extend(img.alphas.iter().cloned());
                a.extend(self.alphas[i + 1..].iter().cloned());
                alphas = Some(a);
            }
            for (ik, d) in &img.terms {
                let mut nk = k[..i].to_vec();
                nk.extend(ik.iter().cloned());
                nk.extend(k[i + 1..].iter().cloned());
                let e = out.entry(nk).or_insert_with(Scalar::zero);
                *e = &*e + &(c * d);
            }
        }
        out.retain(|_, c| !c.is_zero());
        let alphas = alphas.unwrap_or_else(|| {
            // empty input: arity follows from a probe on the unit word
            let img = f(&Word::empty());
            let mut a = self.alphas[..i].to_vec();
            a.extend(img.alphas.iter().cloned());
            a.extend(self.alphas[i + 1..].iter().cloned());
            a
        });
        TensorPoly { alphas, terms: out }
    }

    /// Apply a linear functional to leg `i`.
    pub fn apply_functional(&self, i: usize, f: impl Fn(&Word) -> Scalar) -> TensorPoly {
        self.map_leg(i, |w| TensorPoly::scalar(f(w)))
    }

    /// Apply a linear map to leg `i` (result reduced by the caller if needed).
    pub fn apply_map(&self, i: usize, f: impl Fn(&Word) -> NCPoly) -> TensorPoly {
        self.map_leg(i, |w| TensorPoly::from_poly(&f(w)))
    }

    /// Multiply legs `i` and `i + 1` together in `pres`.
    pub fn contract(&self, i: usize, pres: &Presentation) -> TensorPoly {
        let mut alphas = self.alphas[..i].to_vec();
        alphas.push(pres.alphabet().clone());
        alphas.extend(self.alphas[i + 2..].iter().cloned());
        let mut t = TensorPoly::zero(&alphas);
        for (k, c) in &self.terms {
            let p = pres.normal_form(&NCPoly::word(pres.alphabet(), k[i].concat(&k[i + 1])));
            for (w, d) in p.terms() {
                let mut nk = k[..i].to_vec();
                nk.push(w.clone());
                nk.extend(k[i + 2..].iter().cloned());
                t.add_term(nk, c * d);
            }
        }
        t
    }

    /// Arity-1 tensor as a polynomial.
    pub fn to_poly(&self) -> NCPoly {
        assert_eq!(self.arity(), 1);
        let mut p = NCPoly::zero(&self.alphas[0]);
        for (k, c) in &self.terms {
            p.add_term(k[0].clone(), c.clone());
        }
        p
    }

    /// Arity-0 tensor as a scalar.
    pub fn to_scalar(&self) -> Scalar {
        assert_eq!(self.arity(), 0);
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Sweedler form: first legs collected over each distinct last leg.
    pub fn sweedler(&self) -> Vec<(TensorPoly, Word)> {
        let n = self.arity();
        assert!(n >= 1);
        let mut by_last: BTreeMap<Word, TensorPoly> = BTreeMap::new();
        for (k, c) in &self.terms {
            by_last
                .entry(k[n - 1].clone())
                .or_insert_with(|| TensorPoly::zero(&self.alphas[..n - 1]))
                .add_term(k[..n - 1].to_vec(), c.clone());
        }
        by_last.into_iter().map(|(w, t)| (t, w)).collect()
    }
}

impl std::ops::Add for &TensorPoly {
    type Output = TensorPoly;
    fn add(self, o: &TensorPoly) -> TensorPoly {
        let mut t = self.clone();
        t.add_scaled(o, &Scalar::one());
        t
    }
}

impl std::ops::Sub for &TensorPoly {
    type Output = TensorPoly;
    fn sub(self, o: &TensorPoly) -> TensorPoly {
        let mut t = self.clone();
        t.add_scaled(o, &Scalar::from_int(-1));
        t
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let legs: Vec<String> = k
                    .iter()
                    .zip(&self.alphas)
                    .map(|(w, a)| if w.is_empty() { "1".to_string() } else { a.render_word(w) })
                    .collect();
                let body = legs.join(" ⊗ ");
                if c.is_one() {
                    body
                } else if body.is_empty() {
                    format!("({})", c)
                } else {
                    format!("({})·{}", c, body)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

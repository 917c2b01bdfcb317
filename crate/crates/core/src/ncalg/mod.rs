//! Noncommutative *-polynomials and presented *-algebras.

mod completion;
mod presentation;
mod random;

pub use completion::{complete, CompletionError, CompletionOptions};
pub use random::random_poly;
pub use presentation::{hom_check, HomCheckError, HomReport, LoadError, Presentation, Rule, Status};

use crate::scalar::Scalar;
use smallvec::SmallVec;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

pub type Gen = u16;

/// Generator names, star pairing and weights. The declaration order is the
/// letter order used by the monomial order.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
    star: Vec<Gen>,
    weight: Vec<u32>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlphabetError {
    #[error("star pairing is not an involution at `{0}`")]
    BadStar(String),
    #[error("duplicate generator `{0}`")]
    Duplicate(String),
    #[error("unknown generator `{0}`")]
    Unknown(String),
    #[error("generator weights must be positive")]
    ZeroWeight,
}

impl Alphabet {
    /// `gens` lists (name, star-partner name, weight).
    pub fn new(gens: &[(&str, &str, u32)]) -> Result<Arc<Alphabet>, AlphabetError> {
        let names: Vec<String> = gens.iter().map(|g| g.0.to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(AlphabetError::Duplicate(n.clone()));
            }
        }
        let mut star = Vec::with_capacity(gens.len());
        for g in gens {
            let j = names
                .iter()
                .position(|n| n == g.1)
                .ok_or_else(|| AlphabetError::Unknown(g.1.to_string()))?;
            star.push(j as Gen);
        }
        for (i, &j) in star.iter().enumerate() {
            if star[j as usize] as usize != i {
                return Err(AlphabetError::BadStar(names[i].clone()));
            }
        }
        let weight: Vec<u32> = gens.iter().map(|g| g.2).collect();
        if weight.contains(&0) {
            return Err(AlphabetError::ZeroWeight);
        }
        Ok(Arc::new(Alphabet { names, star, weight }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn star(&self, g: Gen) -> Gen {
        self.star[g as usize]
    }

    pub fn weight(&self, g: Gen) -> u32 {
        self.weight[g as usize]
    }

    pub fn index(&self, name: &str) -> Option<Gen> {
        self.names.iter().position(|n| n == name).map(|i| i as Gen)
    }

    pub fn word_weight(&self, w: &Word) -> u32 {
        w.0.iter().map(|&g| self.weight(g)).sum()
    }

    pub fn star_word(&self, w: &Word) -> Word {
        Word(w.0.iter().rev().map(|&g| self.star(g)).collect())
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.0.iter().map(|&g| self.name(g)).collect::<Vec<_>>().join("·")
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Word(pub SmallVec<[Gen; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_slice(s: &[Gen]) -> Self {
        Word(SmallVec::from_slice(s))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn slice(&self, a: usize, b: usize) -> Word {
        Word::from_slice(&self.0[a..b])
    }

    /// Position of the first occurrence of `sub`.
    pub fn find(&self, sub: &Word) -> Option<usize> {
        if sub.len() > self.len() {
            return None;
        }
        (0..=self.len() - sub.len()).find(|&i| self.0[i..i + sub.len()] == sub.0[..])
    }
}

/// Monomial order key: weighted degree, then letter-wise lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Key(pub u32, pub Word);

#[derive(Debug, Error, PartialEq, Eq)]
#[error("generator universe mismatch")]
pub struct UniverseMismatch;

/// Noncommutative polynomial; terms keyed by the monomial order.
#[derive(Clone, Debug)]
pub struct NCPoly {
    alpha: Arc<Alphabet>,
    terms: BTreeMap<Key, Scalar>,
}

impl PartialEq for NCPoly {
    fn eq(&self, o: &Self) -> bool {
        self.terms == o.terms && (Arc::ptr_eq(&self.alpha, &o.alpha) || self.alpha == o.alpha)
    }
}

impl Eq for NCPoly {}

impl NCPoly {
    pub fn zero(alpha: &Arc<Alphabet>) -> Self {
        NCPoly { alpha: alpha.clone(), terms: BTreeMap::new() }
    }

    pub fn one(alpha: &Arc<Alphabet>) -> Self {
        NCPoly::constant(alpha, Scalar::one())
    }

    pub fn constant(alpha: &Arc<Alphabet>, c: Scalar) -> Self {
        NCPoly::term(alpha, Word::empty(), c)
    }

    pub fn term(alpha: &Arc<Alphabet>, w: Word, c: Scalar) -> Self {
        let mut p = NCPoly::zero(alpha);
        p.add_term(w, c);
        p
    }

    pub fn word(alpha: &Arc<Alphabet>, w: Word) -> Self {
        NCPoly::term(alpha, w, Scalar::one())
    }

    /// Generator by name; panics on an unknown name.
    pub fn gen(alpha: &Arc<Alphabet>, name: &str) -> Self {
        let g = alpha.index(name).unwrap_or_else(|| panic!("unknown generator {name}"));
        NCPoly::word(alpha, Word::from_slice(&[g]))
    }

    /// Product of generators given by name, e.g. `["α", "γ*"]`.
    pub fn monomial(alpha: &Arc<Alphabet>, names: &[&str]) -> Self {
        let w: SmallVec<[Gen; 8]> = names
            .iter()
            .map(|n| alpha.index(n).unwrap_or_else(|| panic!("unknown generator {n}")))
            .collect();
        NCPoly::word(alpha, Word(w))
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alpha
    }

    pub fn same_universe(&self, o: &NCPoly) -> bool {
        Arc::ptr_eq(&self.alpha, &o.alpha) || self.alpha == o.alpha
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter().map(|(k, c)| (&k.1, c))
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        let k = Key(self.alpha.word_weight(w), w.clone());
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    /// Coefficient of the empty word.
    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Word::empty())
    }

    pub fn lead(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back().map(|(k, c)| (&k.1, c))
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|k| k.1.len()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let k = Key(self.alpha.word_weight(&w), w);
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &NCPoly, c: &Scalar) {
        for (k, v) in &o.terms {
            self.add_term(k.1.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero(&self.alpha);
        }
        NCPoly {
            alpha: self.alpha.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Conjugate-linear anti-automorphism.
    pub fn star(&self) -> NCPoly {
        let mut r = NCPoly::zero(&self.alpha);
        for (k, v) in &self.terms {
            r.add_term(self.alpha.star_word(&k.1), v.star());
        }
        r
    }

    pub fn checked_add(&self, o: &NCPoly) -> Result<NCPoly, UniverseMismatch> {
        if !self.same_universe(o) {
            return Err(UniverseMismatch);
        }
        Ok(self + o)
    }

    pub fn checked_mul(&self, o: &NCPoly) -> Result<NCPoly, UniverseMismatch> {
        if !self.same_universe(o) {
            return Err(UniverseMismatch);
        }
        Ok(self * o)
    }

    /// Left and right multiplication by words.
    pub fn sandwich(&self, l: &Word, r: &Word) -> NCPoly {
        let mut out = NCPoly::zero(&self.alpha);
        for (k, v) in &self.terms {
            out.add_term(l.concat(&k.1).concat(r), v.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> NCPoly {
        let mut acc = NCPoly::one(&self.alpha);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> NCPoly {
        let mut r = NCPoly::zero(&self.alpha);
        for (k, v) in &self.terms {
            r.add_term(k.1.clone(), f(v));
        }
        r
    }
}

impl std::ops::Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, o: &NCPoly) -> NCPoly {
        let mut r = self.clone();
        for (k, v) in &o.terms {
            r.add_term(k.1.clone(), v.clone());
        }
        r
    }
}

impl std::ops::Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, o: &NCPoly) -> NCPoly {
        let mut r = self.clone();
        for (k, v) in &o.terms {
            r.add_term(k.1.clone(), -v);
        }
        r
    }
}

impl std::ops::Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&Scalar::from_int(-1))
    }
}

impl std::ops::Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, o: &NCPoly) -> NCPoly {
        let mut r = NCPoly::zero(&self.alpha);
        for (k1, v1) in &self.terms {
            for (k2, v2) in &o.terms {
                r.add_term(k1.1.concat(&k2.1), v1 * v2);
            }
        }
        r
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl std::ops::$tr for NCPoly {
            type Output = NCPoly;
            fn $m(self, o: NCPoly) -> NCPoly { (&self).$m(&o) }
        }
        impl std::ops::$tr<&NCPoly> for NCPoly {
            type Output = NCPoly;
            fn $m(self, o: &NCPoly) -> NCPoly { (&self).$m(o) }
        }
        impl std::ops::$tr<NCPoly> for &NCPoly {
            type Output = NCPoly;
            fn $m(self, o: NCPoly) -> NCPoly { self.$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl std::ops::Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(k, c)| {
                let w = self.alpha.render_word(&k.1);
                if c.is_one() {
                    w
                } else if k.1.is_empty() {
                    format!("({})", c)
                } else {
                    format!("({})·{}", c, w)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn su2_alpha() -> Arc<Alphabet> {
        Alphabet::new(&[("α", "α*", 2), ("α*", "α", 2), ("γ*", "γ", 1), ("γ", "γ*", 1)]).unwrap()
    }

    #[test]
    fn star_is_anti_multiplicative() {
        let a = su2_alpha();
        let al = NCPoly::gen(&a, "α");
        let ga = NCPoly::gen(&a, "γ");
        let p = &al * &ga;
        assert_eq!(p.star(), NCPoly::monomial(&a, &["γ*", "α*"]));
        assert_eq!(p.star(), &ga.star() * &al.star());
        assert_eq!(p.star().star(), p);
    }

    #[test]
    fn unit_is_neutral() {
        let a = su2_alpha();
        let al = NCPoly::gen(&a, "α");
        assert_eq!(&al * &NCPoly::one(&a), al);
    }

    #[test]
    fn bad_star_pairing() {
        assert!(Alphabet::new(&[("x", "y", 1), ("y", "y", 1)]).is_err());
    }

    #[test]
    fn universe_mismatch() {
        let a = su2_alpha();
        let b = Alphabet::new(&[("x", "x", 1)]).unwrap();
        assert_eq!(
            NCPoly::gen(&a, "α").checked_mul(&NCPoly::gen(&b, "x")),
            Err(UniverseMismatch)
        );
    }
}

//! The group Z₂ ∗ Z^∞ = ⟨y⟩ ∗ ⟨g₀⟩ ∗ ⟨g₁⟩ ∗ ⋯ and its group algebra.

pub mod vrep;

use crate::scalar::Scalar;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

/// A syllable of a reduced word: y, or gₙ^k with k ≠ 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Syl {
    Y,
    G(u32, i32),
}

impl Syl {
    pub fn inv(self) -> Syl {
        match self {
            Syl::Y => Syl::Y,
            Syl::G(n, k) => Syl::G(n, -k),
        }
    }
}

/// Reduced word: adjacent syllables come from different free factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupWord(Vec<Syl>);

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord(Vec::new())
    }

    pub fn y() -> Self {
        GroupWord(vec![Syl::Y])
    }

    pub fn g(n: u32) -> Self {
        GroupWord(vec![Syl::G(n, 1)])
    }

    pub fn g_pow(n: u32, k: i32) -> Self {
        GroupWord::reduce(&[Syl::G(n, k)])
    }

    pub fn syllables(&self) -> &[Syl] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Free reduction of an arbitrary syllable sequence.
    pub fn reduce(s: &[Syl]) -> Self {
        let mut out: Vec<Syl> = Vec::with_capacity(s.len());
        for &x in s {
            push(&mut out, x);
        }
        GroupWord(out)
    }

    pub fn mul(&self, o: &GroupWord) -> GroupWord {
        let mut out = self.0.clone();
        for &x in &o.0 {
            push(&mut out, x);
        }
        GroupWord(out)
    }

    /// Formal inverse, which is the star in the group algebra.
    pub fn inv(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|s| s.inv()).collect())
    }
}

fn push(out: &mut Vec<Syl>, x: Syl) {
    if let Syl::G(_, 0) = x {
        return;
    }
    match (out.last().copied(), x) {
        (Some(Syl::Y), Syl::Y) => {
            out.pop();
        }
        (Some(Syl::G(n, k)), Syl::G(m, l)) if n == m => {
            out.pop();
            if k + l != 0 {
                out.push(Syl::G(n, k + l));
            }
        }
        _ => out.push(x),
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|s| match *s {
                Syl::Y => "y".to_string(),
                Syl::G(n, 1) => format!("g{n}"),
                Syl::G(n, k) => format!("g{n}^{k}"),
            })
            .collect();
        f.write_str(&parts.join("."))
    }
}

/// Coefficients of the group algebra.
pub trait Coeff: Clone + fmt::Debug + PartialEq {
    fn zero() -> Self;
    fn from_ratio(n: i64, d: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn conj(&self) -> Self;
    fn to_complex(&self) -> Complex64;
}

impl Coeff for f64 {
    fn zero() -> Self {
        0.0
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        n as f64 / d as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn conj(&self) -> Self {
        *self
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::new(*self, 0.0)
    }
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::from_ratio(n, d)
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn conj(&self) -> Self {
        self.star()
    }
    /// Rational coefficients only.
    fn to_complex(&self) -> Complex64 {
        let r = self.as_rational().expect("rational coefficient");
        Complex64::new(r.to_f64().unwrap(), 0.0)
    }
}

/// Finite sum Σ c_w·w.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupAlgElem<C: Coeff> {
    terms: BTreeMap<GroupWord, C>,
}

impl<C: Coeff> Default for GroupAlgElem<C> {
    fn default() -> Self {
        GroupAlgElem { terms: BTreeMap::new() }
    }
}

impl<C: Coeff> GroupAlgElem<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: GroupWord) -> Self {
        Self::term(w, C::from_ratio(1, 1))
    }

    pub fn term(w: GroupWord, c: C) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn one() -> Self {
        Self::word(GroupWord::identity())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupWord, &C)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &GroupWord) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, w: GroupWord, c: C) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.get(&w) {
            Some(d) => d.add(&c),
            None => c,
        };
        if s.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, s);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut e = self.clone();
        for (w, c) in &o.terms {
            e.add_term(w.clone(), c.clone());
        }
        e
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut e = Self::zero();
        for (w, c) in &self.terms {
            e.add_term(w.clone(), c.mul(k));
        }
        e
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut e = Self::zero();
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                e.add_term(a.mul(b), c.mul(d));
            }
        }
        e
    }

    pub fn star(&self) -> Self {
        let mut e = Self::zero();
        for (w, c) in &self.terms {
            e.add_term(w.inv(), c.conj());
        }
        e
    }

    /// Words with a coefficient above `cut` in absolute value.
    pub fn support(&self, cut: f64) -> Vec<&GroupWord> {
        self.terms.iter().filter(|(_, c)| c.to_complex().norm() > cut).map(|(w, _)| w).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.to_complex().norm()).fold(0.0, f64::max)
    }
}

impl GroupAlgElem<f64> {
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-1.0))
    }
}

impl<C: Coeff> fmt::Display for GroupAlgElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({:?})·{}", c, w)).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The character y ↦ y_sign, gₙ ↦ e(−θn(n+1)/2), so that g_{n−1}gₙ⁻¹ ↦ λₙ = e(nθ).
pub fn character_word(w: &GroupWord, theta: f64, y_sign: i32) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for s in w.syllables() {
        match *s {
            Syl::Y => acc *= y_sign as f64,
            Syl::G(n, k) => {
                let ph = -theta * (n as f64) * (n as f64 + 1.0) / 2.0 * k as f64;
                acc *= Complex64::from_polar(1.0, 2.0 * PI * ph);
            }
        }
    }
    acc
}

pub fn character_eval<C: Coeff>(x: &GroupAlgElem<C>, theta: f64, y_sign: i32) -> Complex64 {
    x.terms().map(|(w, c)| c.to_complex() * character_word(w, theta, y_sign)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_reductions() {
        assert!(GroupWord::y().mul(&GroupWord::y()).is_identity());
        assert!(GroupWord::g(1).mul(&GroupWord::g(1).inv()).is_identity());
        let w = GroupWord::reduce(&[Syl::G(0, 1), Syl::Y, Syl::G(1, -1)]);
        assert_eq!(w.inv(), GroupWord::reduce(&[Syl::G(1, 1), Syl::Y, Syl::G(0, -1)]));
        assert_eq!(w.to_string(), "g0.y.g1^-1");
        assert_eq!(GroupWord::g(3).mul(&GroupWord::g(3)).to_string(), "g3^2");
    }

    #[test]
    fn inverse_is_conjugate_under_characters() {
        let w = GroupWord::reduce(&[Syl::G(0, 1), Syl::Y, Syl::G(1, -1)]);
        for th in [0.1, 1.0 / 3.0, 0.77] {
            for ys in [1, -1] {
                let a = character_word(&w, th, ys).conj();
                let b = character_word(&w.inv(), th, ys);
                assert!((a - b).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn character_fixtures() {
        assert_eq!(character_word(&GroupWord::identity(), 0.3, -1), Complex64::new(1.0, 0.0));
        assert_eq!(character_word(&GroupWord::y(), 0.3, 1), Complex64::new(1.0, 0.0));
        let th = 1.0 / 3.0;
        for n in 1..6u32 {
            let w = GroupWord::g(n - 1).mul(&GroupWord::g(n).inv());
            let want = Complex64::from_polar(1.0, 2.0 * PI * n as f64 * th);
            assert!((character_word(&w, th, 1) - want).norm() < 1e-12);
        }
    }

    #[test]
    fn algebra_star_is_antimultiplicative() {
        let a = GroupAlgElem::<Scalar>::word(GroupWord::g(0)).add(&GroupAlgElem::term(GroupWord::y(), Scalar::from_ratio(1, 2)));
        let b = GroupAlgElem::<Scalar>::word(GroupWord::g(1).inv()).add(&GroupAlgElem::one());
        assert_eq!(a.mul(&b).star(), b.star().mul(&a.star()));
    }

    fn syl() -> impl Strategy<Value = Syl> {
        prop_oneof![Just(Syl::Y), (0u32..4, -2i32..=2).prop_map(|(n, k)| Syl::G(n, k))]
    }

    fn word() -> impl Strategy<Value = GroupWord> {
        proptest::collection::vec(syl(), 0..8).prop_map(|v| GroupWord::reduce(&v))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn associative(a in word(), b in word(), c in word()) {
            prop_assert_eq!(a.mul(&b.mul(&c)), a.mul(&b).mul(&c));
        }

        #[test]
        fn reduced_and_invertible(a in word()) {
            for p in a.syllables().windows(2) {
                let same = match (p[0], p[1]) {
                    (Syl::Y, Syl::Y) => true,
                    (Syl::G(n, _), Syl::G(m, _)) => n == m,
                    _ => false,
                };
                prop_assert!(!same);
            }
            prop_assert!(a.mul(&a.inv()).is_identity());
            prop_assert!(a.inv().mul(&a).is_identity());
        }

        #[test]
        fn reduction_is_confluent(v in proptest::collection::vec(syl(), 0..10), cut in 0usize..10) {
            let cut = cut.min(v.len());
            let split = GroupWord::reduce(&v[..cut]).mul(&GroupWord::reduce(&v[cut..]));
            prop_assert_eq!(split, GroupWord::reduce(&v));
        }
    }
}

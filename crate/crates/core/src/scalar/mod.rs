//! Exact coefficient ring: rational functions over Q in named indeterminates,
//! extended by a tower of square roots and by formal phases e(kθ/2).
//!
//! The base indeterminate is `s` with μ = s², so μ^{1/2} is polynomial.

pub mod poly;
pub mod ratfunc;
pub mod linalg;
pub mod serial;
pub mod sqrt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use poly::{var_index, Mono, Poly};
use ratfunc::RatFunc;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element with several distinct phases is not invertible in this ring")]
    NotInvertible,
    #[error("radical `{0}` adjoined with zero square")]
    ZeroSquare(String),
    #[error("radical `{0}` already adjoined with a different square")]
    RadicalConflict(String),
    #[error("radical `{0}` violates the tower order")]
    RankViolation(String),
    #[error("radical `{0}` has a phase in its square")]
    PhaseInSquare(String),
    #[error("radical `{0}` has a negative square at this assignment")]
    NegativeSquare(String),
    #[error("no value assigned to `{0}`")]
    MissingAssignment(String),
    #[error("`{0}` is not a square of the supported form")]
    NotASquare(String),
    #[error("radical tower is full")]
    TowerFull,
}

/// Phase exponent e(k·θ/2), stored as k.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct PhaseExp(pub i32);

impl PhaseExp {
    pub fn theta(n: i32) -> Self {
        PhaseExp(2 * n)
    }

    pub fn halves(self) -> i32 {
        self.0
    }

    pub fn is_integral(self) -> bool {
        self.0 % 2 == 0
    }
}

impl fmt::Display for PhaseExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.0;
        if k % 2 == 0 {
            match k / 2 {
                1 => write!(f, "e(θ)"),
                -1 => write!(f, "e(-θ)"),
                n => write!(f, "e({}θ)", n),
            }
        } else {
            write!(f, "e({}θ/2)", k)
        }
    }
}

#[derive(Clone, Debug)]
struct RadicalInfo {
    name: String,
    square: Scalar,
}

fn radicals() -> &'static RwLock<Vec<RadicalInfo>> {
    static REG: OnceLock<RwLock<Vec<RadicalInfo>>> = OnceLock::new();
    REG.get_or_init(|| {
        let s2 = Scalar::mu();
        let t = Scalar::t();
        let one = Scalar::one();
        let u_sq = &one + &(&s2 * &s2);
        let w_sq = &t.inv().unwrap() - &t;
        let mu2p1 = &(&s2 * &s2) + &one;
        let rho_sq = &(&(&s2 * &s2) * &(&t * &t))
            / &(&(&mu2p1 * &mu2p1) * &(&one - &t));
        let rho_sq = rho_sq.unwrap();
        RwLock::new(vec![
            RadicalInfo { name: "u".into(), square: u_sq },
            RadicalInfo { name: "w".into(), square: w_sq },
            RadicalInfo { name: "ρ".into(), square: rho_sq },
        ])
    })
}

/// Handle to an adjoined square root; the rank is its position in the tower.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Radical(pub u32);

impl Radical {
    pub fn name(self) -> String {
        radicals().read().unwrap()[self.0 as usize].name.clone()
    }

    pub fn square(self) -> Scalar {
        radicals().read().unwrap()[self.0 as usize].square.clone()
    }

    pub fn rank(self) -> u32 {
        self.0
    }

    pub fn value(self) -> Scalar {
        Scalar::radical_mono(1u64 << self.0)
    }

    pub fn lookup(name: &str) -> Option<Radical> {
        radicals()
            .read()
            .unwrap()
            .iter()
            .position(|r| r.name == name)
            .map(|i| Radical(i as u32))
    }
}

/// Adjoin `name` with `name² = square`; idempotent for an identical square.
pub fn adjoin_radical(name: &str, square: &Scalar) -> Result<Radical, ScalarError> {
    if square.is_zero() {
        return Err(ScalarError::ZeroSquare(name.into()));
    }
    if square.terms.keys().any(|(p, _)| p.0 != 0) {
        return Err(ScalarError::PhaseInSquare(name.into()));
    }
    let mut reg = radicals().write().unwrap();
    if let Some(i) = reg.iter().position(|r| r.name == name) {
        if &reg[i].square == square {
            return Ok(Radical(i as u32));
        }
        return Err(ScalarError::RadicalConflict(name.into()));
    }
    let rank = reg.len() as u32;
    if rank >= 64 {
        return Err(ScalarError::TowerFull);
    }
    if square.terms.keys().any(|(_, m)| *m >> rank != 0) {
        return Err(ScalarError::RankViolation(name.into()));
    }
    reg.push(RadicalInfo { name: name.into(), square: square.clone() });
    Ok(Radical(rank))
}

/// The standard tower radicals: u = (1+μ²)^{1/2}, w = (t⁻¹−t)^{1/2}, ρ.
pub fn rad_u() -> Scalar {
    Radical(0).value()
}

pub fn rad_w() -> Scalar {
    Radical(1).value()
}

pub fn rad_rho() -> Scalar {
    Radical(2).value()
}

/// (phase, square-free radical monomial as a bitmask by rank)
type TermKey = (PhaseExp, u64);

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Scalar {
    terms: BTreeMap<TermKey, RatFunc>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_ratfunc(RatFunc::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_ratfunc(RatFunc::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Scalar::from_ratfunc(RatFunc::from_rational(c))
    }

    pub fn from_ratfunc(r: RatFunc) -> Self {
        let mut s = Scalar::zero();
        if !r.is_zero() {
            s.terms.insert((PhaseExp(0), 0), r);
        }
        s
    }

    pub fn from_poly(p: Poly) -> Self {
        Scalar::from_ratfunc(RatFunc::from_poly(p))
    }

    /// A named real indeterminate (parameter).
    pub fn var(name: &str) -> Self {
        Scalar::from_poly(Poly::var(name))
    }

    /// s = μ^{1/2}.
    pub fn s() -> Self {
        Scalar::var("s")
    }

    /// μ = s².
    pub fn mu() -> Self {
        Scalar::from_poly(Poly::monomial(Mono::var(var_index("s"), 2), BigRational::one()))
    }

    /// μ^k for integer k.
    pub fn mu_pow(k: i32) -> Self {
        Scalar::s().pow(2 * k)
    }

    pub fn t() -> Self {
        Scalar::var("t")
    }

    /// e(kθ/2).
    pub fn phase(p: PhaseExp) -> Self {
        let mut s = Scalar::zero();
        s.terms.insert((p, 0), RatFunc::one());
        s
    }

    fn radical_mono(mask: u64) -> Self {
        let _ = radicals();
        let mut s = Scalar::zero();
        s.terms.insert((PhaseExp(0), mask), RatFunc::one());
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&(PhaseExp(0), 0)).is_some_and(|r| r.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (PhaseExp, u64, &RatFunc)> {
        self.terms.iter().map(|((p, m), r)| (*p, *m, r))
    }

    /// The rational function coefficient when the scalar has no phase or radical.
    pub fn as_ratfunc(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => self.terms.get(&(PhaseExp(0), 0)).cloned(),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.as_ratfunc()?.as_constant()
    }

    pub fn phases(&self) -> BTreeSet<PhaseExp> {
        self.terms.keys().map(|k| k.0).collect()
    }

    /// Radical ranks appearing in any term.
    pub fn radical_mask(&self) -> u64 {
        self.terms.keys().fold(0, |a, k| a | k.1)
    }

    /// Split by the parity of radical `r`: self = even + odd·r.
    pub fn split_radical(&self, r: Radical) -> (Scalar, Scalar) {
        let bit = 1u64 << r.0;
        let mut even = Scalar::zero();
        let mut odd = Scalar::zero();
        for (k, c) in &self.terms {
            if k.1 & bit == 0 {
                even.terms.insert(*k, c.clone());
            } else {
                odd.terms.insert((k.0, k.1 & !bit), c.clone());
            }
        }
        (even, odd)
    }

    fn add_term(&mut self, k: TermKey, c: RatFunc) {
        if c.is_zero() {
            return;
        }
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

    pub fn scale_ratfunc(&self, c: &RatFunc) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(k, r)| (*k, r * c)).collect() }
    }

    pub fn scale_rational(&self, c: &BigRational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(k, r)| (*k, r.scale(c))).collect() }
    }

    /// Complex conjugation: phases invert, everything else is real.
    pub fn star(&self) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|((p, m), r)| ((PhaseExp(-p.0), *m), r.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: i32) -> Scalar {
        if e < 0 {
            return self.inv().expect("power of non-invertible scalar").pow(-e);
        }
        let mut base = self.clone();
        let mut acc = Scalar::one();
        let mut e = e as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let ph = self.phases();
        if ph.len() > 1 {
            return Err(ScalarError::NotInvertible);
        }
        let p = *ph.iter().next().unwrap();
        let mut base = Scalar::zero();
        for ((_, m), r) in &self.terms {
            base.terms.insert((PhaseExp(0), *m), r.clone());
        }
        let inv = inv_radical(&base)?;
        Ok(&inv * &Scalar::phase(PhaseExp(-p.0)))
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &o.inv()?)
    }

    /// Evaluate at real values of the indeterminates and θ.
    pub fn eval_complex(&self, a: &Assignment) -> Result<Complex64, ScalarError> {
        let mut ev = Evaluator::new(a)?;
        ev.eval(self)
    }

    /// Names of all indeterminates used, including those inside radical squares.
    pub fn indeterminates(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        collect_vars(self, &mut out);
        out
    }
}

fn collect_vars(x: &Scalar, out: &mut BTreeSet<String>) {
    let nvars = poly::var_count();
    let mut mask = 0u64;
    for ((_, m), r) in &x.terms {
        mask |= m;
        for i in 0..nvars {
            if r.uses_var(i) {
                out.insert(poly::var_name(i));
            }
        }
    }
    for b in 0..64 {
        if mask & (1 << b) != 0 {
            collect_vars(&Radical(b).square(), out);
        }
    }
}

fn inv_radical(x: &Scalar) -> Result<Scalar, ScalarError> {
    let mask = x.radical_mask();
    if mask == 0 {
        let r = x.as_ratfunc().unwrap();
        return r.recip().map(Scalar::from_ratfunc).ok_or(ScalarError::DivisionByZero);
    }
    let top = Radical(63 - mask.leading_zeros());
    let (a, b) = x.split_radical(top);
    let conj = &a - &(&b * &top.value());
    let norm = &(&a * &a) - &(&(&b * &b) * &top.square());
    if norm.is_zero() {
        return Err(ScalarError::DivisionByZero);
    }
    Ok(&conj * &inv_radical(&norm)?)
}

fn mul_terms(acc: &mut Scalar, k1: TermKey, c1: &RatFunc, k2: TermKey, c2: &RatFunc) {
    let p = PhaseExp(k1.0 .0 + k2.0 .0);
    let overlap = k1.1 & k2.1;
    let c = c1 * c2;
    if overlap == 0 {
        acc.add_term((p, k1.1 | k2.1), c);
        return;
    }
    let mut factor = Scalar::from_ratfunc(c);
    for b in 0..64 {
        if overlap & (1 << b) != 0 {
            factor = &factor * &Radical(b).square();
        }
    }
    let rest = k1.1 ^ k2.1;
    let mut base = Scalar::zero();
    base.terms.insert((p, rest), RatFunc::one());
    let prod = &factor * &base;
    for (k, v) in prod.terms {
        acc.add_term(k, v);
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, c.clone());
        }
        r
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, -c);
        }
        r
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let mut r = Scalar::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                mul_terms(&mut r, *k1, c1, *k2, c2);
            }
        }
        r
    }
}

/// Panics on a non-invertible divisor; use [`Scalar::checked_div`] to handle errors.
impl std::ops::Div for &Scalar {
    type Output = Result<Scalar, ScalarError>;
    fn div(self, o: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_div(o)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl std::ops::$tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar { (&self).$m(&o) }
        }
        impl std::ops::$tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar { (&self).$m(o) }
        }
        impl std::ops::$tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar { self.$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

/// Real values for indeterminates plus θ.
#[derive(Clone, Debug, Default)]
pub struct Assignment {
    pub values: BTreeMap<String, f64>,
    pub theta: f64,
}

impl Assignment {
    /// Assignment with μ given (s = √μ).
    pub fn with_mu(mu: f64) -> Self {
        let mut a = Assignment::default();
        a.values.insert("s".into(), mu.sqrt());
        a
    }

    pub fn set(mut self, name: &str, v: f64) -> Self {
        self.values.insert(name.into(), v);
        self
    }

    pub fn theta(mut self, th: f64) -> Self {
        self.theta = th;
        self
    }
}

struct Evaluator<'a> {
    a: &'a Assignment,
    by_index: Vec<Option<f64>>,
    rad: HashMap<u32, f64>,
}

impl<'a> Evaluator<'a> {
    fn new(a: &'a Assignment) -> Result<Self, ScalarError> {
        Ok(Evaluator { a, by_index: Vec::new(), rad: HashMap::new() })
    }

    fn var_value(&mut self, i: usize) -> Result<f64, ScalarError> {
        if self.by_index.len() <= i {
            self.by_index.resize(i + 1, None);
        }
        if let Some(v) = self.by_index[i] {
            return Ok(v);
        }
        let name = poly::var_name(i);
        let v = *self.a.values.get(&name).ok_or(ScalarError::MissingAssignment(name))?;
        self.by_index[i] = Some(v);
        Ok(v)
    }

    fn ratfunc(&mut self, r: &RatFunc) -> Result<f64, ScalarError> {
        let mut need = BTreeSet::new();
        for p in [r.num(), r.den()] {
            for (m, _) in p.terms() {
                for (i, &e) in m.0.iter().enumerate() {
                    if e > 0 {
                        need.insert(i);
                    }
                }
            }
        }
        for &i in &need {
            self.var_value(i)?;
        }
        let vals = self.by_index.clone();
        Ok(r.eval_f64(&|i| vals[i].unwrap_or(f64::NAN)))
    }

    fn radical(&mut self, b: u32) -> Result<f64, ScalarError> {
        if let Some(v) = self.rad.get(&b) {
            return Ok(*v);
        }
        let r = Radical(b);
        let sq = self.eval(&r.square())?;
        if sq.re <= 0.0 {
            return Err(ScalarError::NegativeSquare(r.name()));
        }
        let v = sq.re.sqrt();
        self.rad.insert(b, v);
        Ok(v)
    }

    fn eval(&mut self, x: &Scalar) -> Result<Complex64, ScalarError> {
        let mut acc = Complex64::new(0.0, 0.0);
        for ((p, m), r) in &x.terms {
            let mut v = self.ratfunc(r)?;
            for b in 0..64 {
                if m & (1 << b) != 0 {
                    v *= self.radical(b)?;
                }
            }
            let ang = std::f64::consts::PI * (p.0 as f64) * self.a.theta;
            acc += Complex64::from_polar(v, ang);
        }
        Ok(acc)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts: Vec<(PhaseExp, Vec<String>, String)> = self
            .terms
            .iter()
            .map(|((p, m), r)| {
                let mut names: Vec<String> = (0..64)
                    .filter(|b| m & (1u64 << b) != 0)
                    .map(|b| Radical(b).name())
                    .collect();
                names.sort();
                (*p, names, r.to_string())
            })
            .collect();
        parts.sort();
        let rendered: Vec<String> = parts
            .into_iter()
            .map(|(p, names, r)| {
                let mut fs: Vec<String> = Vec::new();
                if p.0 != 0 {
                    fs.push(p.to_string());
                }
                fs.extend(names);
                if fs.is_empty() {
                    r
                } else if r == "1" {
                    fs.join("*")
                } else {
                    format!("{}*({})", fs.join("*"), r)
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_squared() {
        assert_eq!(&Scalar::mu() * &Scalar::mu(), Scalar::s().pow(4));
    }

    #[test]
    fn phase_conjugation() {
        let e = Scalar::phase(PhaseExp::theta(1));
        assert_eq!(e.star(), Scalar::phase(PhaseExp::theta(-1)));
        assert!((&e * &e.star()).is_one());
    }

    #[test]
    fn rho_squared() {
        let rho = rad_rho();
        let s4 = Scalar::s().pow(4);
        let t = Scalar::t();
        let one = Scalar::one();
        let expect = (&(&s4 * &(&t * &t)) / &(&(&(&s4 + &one) * &(&s4 + &one)) * &(&one - &t))).unwrap();
        assert_eq!(&rho * &rho, expect);
    }

    #[test]
    fn w_squared_and_u_fourth() {
        let w = rad_w();
        let t = Scalar::t();
        assert_eq!(&w * &w, &t.inv().unwrap() - &t);
        let u = rad_u();
        let sq = &Scalar::one() + &Scalar::s().pow(4);
        assert_eq!(u.pow(4), &sq * &sq);
    }

    #[test]
    fn zero_square_rejected() {
        assert_eq!(
            adjoin_radical("x_zero", &Scalar::zero()),
            Err(ScalarError::ZeroSquare("x_zero".into()))
        );
    }

    #[test]
    fn conflicting_square_rejected() {
        assert!(matches!(
            adjoin_radical("u", &Scalar::from_int(2)),
            Err(ScalarError::RadicalConflict(_))
        ));
        assert_eq!(adjoin_radical("u", &Radical(0).square()), Ok(Radical(0)));
    }

    #[test]
    fn radical_inverse() {
        let x = &Scalar::one() + &rad_u();
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        let z = &(&rad_rho() * &rad_u()) + &Scalar::t();
        assert!((&z * &z.inv().unwrap()).is_one());
    }

    #[test]
    fn multi_phase_not_invertible() {
        let x = &Scalar::one() + &Scalar::phase(PhaseExp::theta(1));
        assert_eq!(x.inv(), Err(ScalarError::NotInvertible));
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn evaluation() {
        let mu = Scalar::mu();
        let x = (&mu / &(&Scalar::one() + &(&mu * &mu))).unwrap();
        let v = x.eval_complex(&Assignment::with_mu(0.5)).unwrap();
        assert!((v.re - 0.4).abs() < 1e-15 && v.im.abs() < 1e-15);
        let e = Scalar::phase(PhaseExp::theta(1));
        let v = e.eval_complex(&Assignment::default().theta(1.0 / 3.0)).unwrap();
        let want = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        assert!((v - want).norm() < 1e-15);
    }

    #[test]
    fn lambda_plus_value() {
        let c = Scalar::var("c");
        let d = adjoin_radical("δ", &(&c + &Scalar::from_ratio(1, 4))).unwrap();
        let lp = &Scalar::from_ratio(1, 2) + &d.value();
        let v = lp.eval_complex(&Assignment::default().set("c", 0.3)).unwrap();
        assert!((v.re - (0.5 + 0.55f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn missing_and_negative() {
        let x = Scalar::var("q_missing");
        assert!(matches!(
            x.eval_complex(&Assignment::default()),
            Err(ScalarError::MissingAssignment(_))
        ));
        let w = rad_w();
        let a = Assignment::with_mu(0.5).set("t", 2.0);
        assert!(matches!(w.eval_complex(&a), Err(ScalarError::NegativeSquare(_))));
    }

    #[test]
    fn rendering_orders_terms() {
        let x = &(&Scalar::phase(PhaseExp::theta(-2)) * &Scalar::t()) + &rad_u();
        assert_eq!(x.to_string(), "e(-2θ)*(t) + u");
    }
}

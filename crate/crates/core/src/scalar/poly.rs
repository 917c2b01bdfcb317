//! Sparse multivariate polynomials over Q.
//!
//! Variables are interned by name in a process-wide table; `s` and `t` are
//! always variables 0 and 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

fn var_table() -> &'static RwLock<Vec<String>> {
    static TABLE: OnceLock<RwLock<Vec<String>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec!["s".to_string(), "t".to_string()]))
}

/// Index of the named variable, interning it on first use.
pub fn var_index(name: &str) -> usize {
    {
        let t = var_table().read().unwrap();
        if let Some(i) = t.iter().position(|n| n == name) {
            return i;
        }
    }
    let mut t = var_table().write().unwrap();
    if let Some(i) = t.iter().position(|n| n == name) {
        return i;
    }
    t.push(name.to_string());
    t.len() - 1
}

pub fn var_count() -> usize {
    var_table().read().unwrap().len()
}

pub fn var_name(i: usize) -> String {
    var_table().read().unwrap()[i].clone()
}

/// Exponent vector with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(pub SmallVec<[u32; 4]>);

impl Mono {
    pub fn one() -> Self {
        Mono(SmallVec::new())
    }

    pub fn var(i: usize, e: u32) -> Self {
        let mut v: SmallVec<[u32; 4]> = SmallVec::from_elem(0, i + 1);
        v[i] = e;
        let mut m = Mono(v);
        m.trim();
        m
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let n = self.0.len().max(o.0.len());
        let mut v: SmallVec<[u32; 4]> = SmallVec::with_capacity(n);
        for i in 0..n {
            v.push(self.exp(i) + o.exp(i));
        }
        Mono(v)
    }

    pub fn divides(&self, o: &Mono) -> bool {
        self.0.iter().enumerate().all(|(i, &e)| e <= o.exp(i))
    }

    /// `o / self`, assuming divisibility.
    pub fn div_of(&self, o: &Mono) -> Mono {
        let mut v: SmallVec<[u32; 4]> = SmallVec::with_capacity(o.0.len());
        for i in 0..o.0.len() {
            v.push(o.exp(i) - self.exp(i));
        }
        let mut m = Mono(v);
        m.trim();
        m
    }

    pub fn gcd(&self, o: &Mono) -> Mono {
        let n = self.0.len().min(o.0.len());
        let mut m = Mono((0..n).map(|i| self.0[i].min(o.0[i])).collect());
        m.trim();
        m
    }

    pub fn max_var(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    fn without(&self, i: usize) -> Mono {
        let mut m = self.clone();
        if i < m.0.len() {
            m.0[i] = 0;
        }
        m.trim();
        m
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            let n = self.0.len().max(o.0.len());
            for i in 0..n {
                match self.exp(i).cmp(&o.exp(i)) {
                    Ordering::Equal => continue,
                    c => return c,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Polynomial in the interned variables with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, BigRational>,
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Poly {
    fn cmp(&self, o: &Self) -> Ordering {
        self.terms.iter().rev().cmp(o.terms.iter().rev())
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(Mono::one(), c);
        }
        p
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(name: &str) -> Self {
        Poly::monomial(Mono::var(var_index(name), 1), BigRational::one())
    }

    pub fn monomial(m: Mono, c: BigRational) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Mono::one()).is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Mono::one()).cloned(),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn lead(&self) -> Option<(&Mono, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn max_var(&self) -> Option<usize> {
        self.terms.keys().filter_map(|m| m.max_var()).max()
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exp(i) > 0)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(i)).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Mono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
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

    /// Gcd of all monomials in the support.
    pub fn mono_content(&self) -> Mono {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Mono::one();
        };
        it.fold(first.clone(), |g, m| g.gcd(&m))
    }

    /// Divide every monomial by `m` (caller guarantees divisibility).
    pub fn div_mono(&self, m: &Mono) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(k, a)| (m.div_of(k), a.clone())).collect(),
        }
    }

    /// Exact quotient `self / d`; `None` when `d` does not divide.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.lead()?;
        if d.is_monomial() {
            let inv = dc.recip();
            let mut q = Poly::zero();
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                q.terms.insert(dm.div_of(m), c * &inv);
            }
            return Some(q);
        }
        let mut r = self.clone();
        let mut q = Poly::zero();
        let inv = dc.recip();
        while let Some((rm, rc)) = r.lead() {
            if !dm.divides(rm) {
                return None;
            }
            let qm = dm.div_of(rm);
            let qc = rc * &inv;
            r = &r - &d.mul_mono(&qm, &qc);
            q.add_term(qm, qc);
        }
        Some(q)
    }

    /// Coefficients with respect to variable `v`: degree ↦ coefficient polynomial.
    pub fn coeffs_in(&self, v: usize) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exp(v))
                .or_default()
                .add_term(m.without(v), c.clone());
        }
        out
    }

    fn from_coeffs_in(v: usize, cs: &BTreeMap<u32, Poly>) -> Poly {
        let mut p = Poly::zero();
        for (&e, c) in cs {
            p = &p + &c.mul_mono(&Mono::var(v, e), &BigRational::one());
        }
        p
    }

    /// Divide by the leading coefficient so the result is monic.
    pub fn monic(&self) -> Poly {
        match self.lead() {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => Poly::zero(),
        }
    }

    /// Substitute rational values for variables and evaluate numerically.
    pub fn eval_f64(&self, vals: &dyn Fn(usize) -> f64) -> f64 {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut t = rat_to_f64(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= vals(i).powi(e as i32);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn is_negative_lead(&self) -> bool {
        self.lead().is_some_and(|(_, c)| c.is_negative())
    }
}

pub fn rat_to_f64(c: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or_else(|| {
        let n = c.numer().to_f64().unwrap_or(f64::NAN);
        let d = c.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Gcd of two polynomials, normalized monic (gcd(0,0) = 0).
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one();
    }
    if a.is_monomial() || b.is_monomial() {
        let g = a.mono_content().gcd(&b.mono_content());
        return Poly::monomial(g, BigRational::one());
    }
    if a == b {
        return a.monic();
    }
    // Pull out common monomial factors first; cheap and frequent.
    let ma = a.mono_content();
    let mb = b.mono_content();
    let gm = ma.gcd(&mb);
    let a1 = a.div_mono(&ma);
    let b1 = b.div_mono(&mb);
    let g = gcd_rec(&a1, &b1);
    g.mul_mono(&gm, &BigRational::one()).monic()
}

fn gcd_rec(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one();
    }
    let v = a.max_var().max(b.max_var()).unwrap();
    let (ua, ub) = (a.uses_var(v), b.uses_var(v));
    if !ua {
        return gcd_rec(a, &content_in(b, v));
    }
    if !ub {
        return gcd_rec(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let gc = gcd_rec(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        if q.degree_in(v) == 0 {
            // q is nonzero and free of v, and p is primitive in v
            p = Poly::one();
            break;
        }
        let r = prem(&p, &q, v);
        p = q;
        q = if r.is_zero() { r } else { primitive_in(&r, v) };
    }
    let pp = if p.uses_var(v) { primitive_in(&p, v) } else { Poly::one() };
    (&pp * &gc).monic()
}

fn content_in(p: &Poly, v: usize) -> Poly {
    let cs = p.coeffs_in(v);
    let mut g = Poly::zero();
    for c in cs.values() {
        g = if g.is_zero() { c.monic() } else { gcd(&g, c) };
        if g.as_constant().is_some() && !g.is_zero() {
            return Poly::one();
        }
    }
    g
}

fn primitive_in(p: &Poly, v: usize) -> Poly {
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides").monic()
}

/// Pseudo-remainder of `a` by `b` in variable `v`.
fn prem(a: &Poly, b: &Poly, v: usize) -> Poly {
    let n = b.degree_in(v);
    let bc = b.coeffs_in(v);
    let lb = bc[&n].clone();
    let mut r = a.clone();
    loop {
        if r.is_zero() {
            return r;
        }
        let dr = r.degree_in(v);
        if dr < n {
            return r;
        }
        let rc = r.coeffs_in(v);
        let lr = &rc[&dr];
        let shift = Mono::var(v, dr - n);
        let sub = (&Poly::from_coeffs_in(v, &bc) * lr).mul_mono(&shift, &BigRational::one());
        r = &(&r * &lb) - &sub;
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let (big, small) = if self.terms.len() >= o.terms.len() { (self, o) } else { (o, self) };
        let mut r = big.clone();
        for (m, c) in &small.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), -c.clone());
        }
        r
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut r = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        r
    }
}

fn fmt_rat(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(var_name(i)),
                    _ => factors.push(format!("{}^{}", var_name(i), e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", fmt_rat(&a))?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rat(&a), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

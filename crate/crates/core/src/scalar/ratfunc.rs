//! Reduced rational functions num/den with monic denominator.

use super::poly::{gcd, Mono, Poly};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn from_rational(c: BigRational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_poly(Poly::from_int(n))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        let d = self.den.as_constant()?;
        Some(self.num.as_constant()? / d)
    }

    /// Build num/den and bring to lowest terms.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (n, d) = reduce(num, den);
        RatFunc::normalized(n, d)
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        let (_, lc) = den.lead().expect("nonzero den");
        if lc.is_one() {
            return RatFunc { num, den };
        }
        let inv = lc.recip();
        RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn recip(&self) -> Option<RatFunc> {
        if self.num.is_zero() {
            return None;
        }
        Some(RatFunc::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i32) -> RatFunc {
        if e < 0 {
            return self.recip().expect("inverse of zero").pow(-e);
        }
        RatFunc { num: self.num.pow(e as u32), den: self.den.pow(e as u32) }
            .renorm()
    }

    fn renorm(self) -> RatFunc {
        RatFunc::normalized(self.num, self.den)
    }

    pub fn scale(&self, c: &BigRational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn eval_f64(&self, vals: &dyn Fn(usize) -> f64) -> f64 {
        self.num.eval_f64(vals) / self.den.eval_f64(vals)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.num.uses_var(i) || self.den.uses_var(i)
    }
}

fn reduce(num: Poly, den: Poly) -> (Poly, Poly) {
    if let Some(c) = den.as_constant() {
        let inv = c.recip();
        return (num.scale(&inv), Poly::one());
    }
    if den.is_monomial() || num.is_monomial() {
        let g = num.mono_content().gcd(&den.mono_content());
        if g.is_one() {
            return (num, den);
        }
        return (num.div_mono(&g), den.div_mono(&g));
    }
    let g = gcd(&num, &den);
    if g.as_constant().is_some() {
        return (num, den);
    }
    (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
}

impl std::ops::Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let n = &self.num + &o.num;
            if self.den.is_one() {
                return RatFunc { num: n, den: Poly::one() };
            }
            return RatFunc::new(n, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc { num: &(&self.num * &o.den) + &o.num, den: o.den.clone() };
        }
        if o.den.is_one() {
            return RatFunc { num: &(&o.num * &self.den) + &self.num, den: self.den.clone() };
        }
        let g = if self.den.is_monomial() && o.den.is_monomial() {
            Poly::monomial(
                self.den.mono_content().gcd(&o.den.mono_content()),
                BigRational::one(),
            )
        } else {
            gcd(&self.den, &o.den)
        };
        let d1 = self.den.div_exact(&g).unwrap();
        let d2 = o.den.div_exact(&g).unwrap();
        let n = &(&self.num * &d2) + &(&o.num * &d1);
        let d = &(&d1 * &d2) * &g;
        if n.is_zero() {
            return RatFunc::zero();
        }
        // only factors of g can cancel
        let h = if g.as_constant().is_some() { Poly::one() } else { gcd(&n, &g) };
        if h.as_constant().is_some() {
            RatFunc::normalized(n, d)
        } else {
            RatFunc::normalized(n.div_exact(&h).unwrap(), d.div_exact(&h).unwrap())
        }
    }
}

impl std::ops::Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl std::ops::Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl std::ops::Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: &self.num * &o.num, den: Poly::one() };
        }
        let (n1, d2) = reduce(self.num.clone(), o.den.clone());
        let (n2, d1) = reduce(o.num.clone(), self.den.clone());
        RatFunc::normalized(&n1 * &n2, &d1 * &d2)
    }
}

impl std::ops::Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        self * &o.recip().expect("division by zero rational function")
    }
}

impl From<Mono> for RatFunc {
    fn from(m: Mono) -> Self {
        RatFunc::from_poly(Poly::monomial(m, BigRational::one()))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Poly| {
            if p.len() > 1 {
                format!("({})", p)
            } else {
                p.to_string()
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums_cancel_to_one() {
        let s = Poly::var("s");
        let d = &Poly::one() + &s;
        let a = RatFunc::new(Poly::one(), d.clone());
        let b = RatFunc::new(s.clone(), d);
        assert!((&a + &b).is_one());
    }

    #[test]
    fn product_reduces() {
        let s = Poly::var("s");
        let t = Poly::var("t");
        let a = RatFunc::new(&s * &t, &s + &Poly::one());
        let b = RatFunc::new(&s + &Poly::one(), s.pow(2));
        let p = &a * &b;
        assert_eq!(p, RatFunc::new(t, s));
    }
}

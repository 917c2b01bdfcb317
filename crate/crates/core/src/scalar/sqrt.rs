//! Exact square roots of positive rational functions of μ.
//!
//! The radicand is split over the coprime factors Φ_d(μ²) (with Φ₁ oriented as 1 − μ²),
//! powers of s, and a rational constant. Each factor with an odd exponent becomes a radical:
//! `u` for 1 + μ², `q{d}` for Φ_d(μ²)^{1/2}, `√s`, and `√{n}` for a square-free integer n.

use super::poly::{var_index, Mono, Poly};
use super::{adjoin_radical, Scalar, ScalarError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::sync::OnceLock;

const MAX_ORDER: usize = 36;

fn cyclotomic_int(n: usize, memo: &mut Vec<Vec<i64>>) -> Vec<i64> {
    // coefficient vectors, lowest degree first
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = div_monic(&num, &memo[d]);
        }
    }
    num
}

fn div_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= c * bj;
        }
    }
    debug_assert!(r.iter().all(|c| *c == 0));
    q
}

/// Φ_d(μ²) as polynomials in s, d = 1..=MAX_ORDER (Φ₁ as 1 − μ²).
fn factors() -> &'static [Poly] {
    static F: OnceLock<Vec<Poly>> = OnceLock::new();
    F.get_or_init(|| {
        let s = var_index("s");
        let mut memo: Vec<Vec<i64>> = vec![Vec::new()];
        let mut out = Vec::new();
        for n in 1..=MAX_ORDER {
            let c = cyclotomic_int(n, &mut memo);
            let sign = if n == 1 { -1 } else { 1 };
            let mut p = Poly::zero();
            for (k, a) in c.iter().enumerate() {
                if *a != 0 {
                    let m = Poly::monomial(Mono::var(s, 4 * k as u32), BigRational::from_integer(BigInt::from(sign * a)));
                    p = &p + &m;
                }
            }
            memo.push(c);
            out.push(p);
        }
        out
    })
}

fn strip(mut p: Poly, exps: &mut [i32], sign: i32) -> Poly {
    for (i, f) in factors().iter().enumerate() {
        while let Some(q) = p.div_exact(f) {
            p = q;
            exps[i] += sign;
        }
    }
    p
}

fn squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    // n = k²·f
    let mut f = n.clone();
    let mut k = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(10_000);
    while p <= limit && &p * &p <= f {
        let p2 = &p * &p;
        while (&f % &p2).is_zero() {
            f /= &p2;
            k *= &p;
        }
        p += 1;
    }
    let r = f.sqrt();
    if &r * &r == f {
        return (k * r, BigInt::one());
    }
    (k, f)
}

fn radical_value(name: &str, square: Scalar) -> Result<Scalar, ScalarError> {
    Ok(adjoin_radical(name, &square)?.value())
}

/// The positive square root of a radical-free, phase-free rational function of s
/// that is positive for μ ∈ (0, 1).
pub fn sqrt_positive(x: &Scalar) -> Result<Scalar, ScalarError> {
    let not_sq = || ScalarError::NotASquare(x.to_string());
    let r = x.as_ratfunc().ok_or_else(not_sq)?;
    if r.is_zero() {
        return Ok(Scalar::zero());
    }
    let s = var_index("s");
    let mut exps = vec![0i32; MAX_ORDER];
    let (num, den) = (r.num().clone(), r.den().clone());
    let (mn, md) = (num.mono_content(), den.mono_content());
    let mut s_exp = mn.exp(s) as i32 - md.exp(s) as i32;
    if mn.degree() != mn.exp(s) || md.degree() != md.exp(s) {
        return Err(not_sq());
    }
    let num = strip(num.div_mono(&mn), &mut exps, 1);
    let den = strip(den.div_mono(&md), &mut exps, -1);
    let (Some(cn), Some(cd)) = (num.as_constant(), den.as_constant()) else {
        return Err(not_sq());
    };
    let c = cn / cd;
    if !c.is_positive() {
        return Err(not_sq());
    }
    let mut out = Scalar::one();
    let (kn, fn_) = squarefree_split(&(c.numer() * c.denom()));
    out = &out * &Scalar::from_rational(BigRational::new(kn, c.denom().clone()));
    if !fn_.is_one() {
        out = &out * &radical_value(&format!("√{fn_}"), Scalar::from_rational(BigRational::from_integer(fn_.clone())))?;
    }
    if s_exp.rem_euclid(2) == 1 {
        out = &out * &radical_value("√s", Scalar::s())?;
        s_exp -= 1;
    }
    out = &out * &Scalar::s().pow(s_exp / 2);
    for (i, e) in exps.iter().enumerate() {
        if *e == 0 {
            continue;
        }
        let f = Scalar::from_poly(factors()[i].clone());
        out = &out * &f.pow(e.div_euclid(2));
        if e.rem_euclid(2) == 1 {
            let name = if i == 1 { "u".to_string() } else { format!("q{}", i + 1) };
            out = &out * &radical_value(&name, f)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rad_u, Assignment};

    #[test]
    fn cyclotomic_table() {
        let mut memo = vec![Vec::new()];
        for n in 1..=12 {
            let c = cyclotomic_int(n, &mut memo);
            memo.push(c);
        }
        assert_eq!(memo[3], vec![1, 1, 1]);
        assert_eq!(memo[12], vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn squares_back() {
        let one = Scalar::one();
        let m2 = Scalar::mu_pow(2);
        let cases = [
            &one + &m2,
            (&(&(&one + &m2) + &m2.pow(2)) / &(&one + &m2)).unwrap(),
            &Scalar::from_ratio(9, 2) * &Scalar::mu_pow(3),
            (&(&one - &m2) / &Scalar::from_int(4)).unwrap(),
            (&(&one + &m2).pow(3) * &Scalar::mu()).pow(1),
        ];
        for x in cases {
            let r = sqrt_positive(&x).unwrap();
            assert_eq!(&r * &r, x);
            let v = r.eval_complex(&Assignment::with_mu(0.5)).unwrap();
            assert!(v.re > 0.0 && v.im.abs() < 1e-14);
        }
    }

    #[test]
    fn reuses_u() {
        assert_eq!(sqrt_positive(&(&Scalar::one() + &Scalar::mu_pow(2))).unwrap(), rad_u());
    }

    #[test]
    fn rejects_non_squares() {
        assert!(sqrt_positive(&(&Scalar::one() + &Scalar::mu())).is_err());
        assert!(sqrt_positive(&Scalar::from_int(-1)).is_err());
        assert!(sqrt_positive(&rad_u()).is_err());
    }
}

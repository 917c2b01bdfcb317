//! Exact JSON encoding of scalars and of the radicals they use.

use super::poly::{var_count, var_index, var_name, Mono, Poly};
use super::ratfunc::RatFunc;
use super::{adjoin_radical, radicals, PhaseExp, Radical, Scalar, ScalarError};
use num_rational::BigRational;
use serde_json::{json, Map, Value};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SerialError {
    #[error("malformed scalar encoding: {0}")]
    Malformed(String),
    #[error("unknown radical `{0}`")]
    UnknownRadical(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

fn bad(s: impl Into<String>) -> SerialError {
    SerialError::Malformed(s.into())
}

fn poly_to_json(p: &Poly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            let mut exps = Map::new();
            for i in 0..var_count() {
                let e = m.exp(i);
                if e > 0 {
                    exps.insert(var_name(i), json!(e));
                }
            }
            json!([Value::Object(exps), c.to_string()])
        })
        .collect();
    Value::Array(terms)
}

fn poly_from_json(v: &Value) -> Result<Poly, SerialError> {
    let mut out = Poly::zero();
    for t in v.as_array().ok_or_else(|| bad("polynomial is not an array"))? {
        let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("term is not a pair"))?;
        let mut m = Mono::one();
        for (name, e) in pair[0].as_object().ok_or_else(|| bad("monomial is not an object"))? {
            let e = e.as_u64().ok_or_else(|| bad("exponent is not a natural number"))? as u32;
            m = m.mul(&Mono::var(var_index(name), e));
        }
        let c = pair[1].as_str().ok_or_else(|| bad("coefficient is not a string"))?;
        let c = BigRational::from_str(c).map_err(|_| bad(format!("coefficient `{c}`")))?;
        out = &out + &Poly::monomial(m, c);
    }
    Ok(out)
}

fn mask_names(mask: u64) -> Vec<String> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| Radical(i).name()).collect()
}

impl Scalar {
    /// Terms as {phase (halves of θ), radical names, num, den}; monomials map variable names to exponents.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|((p, m), r)| {
                json!({
                    "phase": p.0,
                    "radicals": mask_names(*m),
                    "num": poly_to_json(r.num()),
                    "den": poly_to_json(r.den()),
                })
            })
            .collect();
        Value::Array(terms)
    }

    /// Inverse of [`Scalar::to_json`]; radicals must already be adjoined under their names.
    pub fn from_json(v: &Value) -> Result<Scalar, SerialError> {
        let mut out = Scalar::zero();
        for t in v.as_array().ok_or_else(|| bad("scalar is not an array"))? {
            let phase = t["phase"].as_i64().ok_or_else(|| bad("phase"))? as i32;
            let mut mask = 0u64;
            for n in t["radicals"].as_array().ok_or_else(|| bad("radicals"))? {
                let n = n.as_str().ok_or_else(|| bad("radical name"))?;
                let r = Radical::lookup(n).ok_or_else(|| SerialError::UnknownRadical(n.into()))?;
                mask |= 1 << r.0;
            }
            let den = poly_from_json(&t["den"])?;
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            let rf = RatFunc::new(poly_from_json(&t["num"])?, den);
            let mut term = Scalar::zero();
            if !rf.is_zero() {
                term.terms.insert((PhaseExp(0), 0), rf);
            }
            out = &out + &(&(&term * &Scalar::phase(PhaseExp(phase))) * &Scalar::radical_mono(mask));
        }
        Ok(out)
    }
}

/// Every radical in `mask`, together with those its squares depend on, in tower order.
pub fn radical_table(mask: u64) -> Value {
    let reg = radicals().read().unwrap();
    let mut need = mask;
    for i in (0..reg.len()).rev() {
        if need >> i & 1 == 1 {
            need |= reg[i].square.radical_mask();
        }
    }
    let entries: Vec<Value> = (0..reg.len())
        .filter(|i| need >> i & 1 == 1)
        .map(|i| json!({"name": reg[i].name, "square": reg[i].square.to_json()}))
        .collect();
    Value::Array(entries)
}

/// Adjoin every radical of a table written by [`radical_table`].
pub fn load_radical_table(v: &Value) -> Result<(), SerialError> {
    for e in v.as_array().ok_or_else(|| bad("radical table is not an array"))? {
        let name = e["name"].as_str().ok_or_else(|| bad("radical name"))?;
        let sq = Scalar::from_json(&e["square"])?;
        adjoin_radical(name, &sq)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rad_rho, rad_u, sqrt::sqrt_positive};

    #[test]
    fn round_trip() {
        let q3 = sqrt_positive(&(&(&Scalar::one() + &Scalar::mu_pow(2)) + &Scalar::mu_pow(4))).unwrap();
        let x = &(&(&rad_u() * &rad_rho()) + &Scalar::phase(PhaseExp(-3)).scale_rational(&BigRational::from_str("-7/3").unwrap()))
            + &(&q3 / &(&Scalar::t() + &Scalar::mu())).unwrap();
        let v = x.to_json();
        assert_eq!(Scalar::from_json(&v).unwrap(), x);
        let table = radical_table(x.radical_mask());
        load_radical_table(&table).unwrap();
        let names: Vec<&str> = table.as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
        assert!(names.contains(&"ρ") && names.contains(&"u"));
    }

    #[test]
    fn zero_and_errors() {
        assert_eq!(Scalar::from_json(&Scalar::zero().to_json()).unwrap(), Scalar::zero());
        assert!(matches!(Scalar::from_json(&json!([{"phase": 0, "radicals": ["nope"], "num": [], "den": []}])), Err(SerialError::UnknownRadical(_))));
        assert!(Scalar::from_json(&json!([{"phase": 0, "radicals": [], "num": [[{}, "1"]], "den": []}])).is_err());
        assert!(Scalar::from_json(&json!({"x": 1})).is_err());
    }
}

//! Named presentations with their Hopf data, buildable from a short spec string.

use super::af::{af_level, AfError};
use super::podles::{podles_ab, podles_chi};
use super::somu3::{somu3, somu3_hopf, SOMU3_BOUND};
use super::su2::{su2, su2_hopf};
use super::umu2::{umu2, umu2_hopf};
use super::wang::{qperm_cstar, qperm_hopf, wang, wang_hopf};
use crate::hopf::HopfData;
use crate::ncalg::{Gen, LoadError, Presentation};
use crate::scalar::Scalar;
use num_rational::BigRational;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

pub const PODLES_BOUND: usize = 6;
pub const WANG_BOUND: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogName {
    SUmu2,
    Umu2,
    SOmu3,
    PodlesAB,
    PodlesChi,
    /// Diagonal entries of Q.
    WangAu(Vec<Scalar>),
    QPerm(usize),
    AFLevel(Vec<usize>),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    Unknown(String),
    #[error("invalid parameters for {0}: {1}")]
    Params(String, String),
    #[error(transparent)]
    Af(#[from] AfError),
    #[error(transparent)]
    Load(#[from] LoadError),
}

fn parse_entry(s: &str) -> Result<Scalar, String> {
    let s = s.trim();
    if let Some(k) = s.strip_prefix("mu^") {
        return k.parse::<i32>().map(Scalar::mu_pow).map_err(|_| format!("exponent `{k}`"));
    }
    if s == "mu" || s == "μ" {
        return Ok(Scalar::mu());
    }
    BigRational::from_str(s).map(Scalar::from_rational).map_err(|_| format!("entry `{s}`"))
}

fn render_entry(q: &Scalar) -> String {
    if let Some(r) = q.as_rational() {
        return r.to_string();
    }
    (-64..=64)
        .find(|&k| &Scalar::mu_pow(k) == q)
        .map(|k| if k == 1 { "mu".to_string() } else { format!("mu^{k}") })
        .unwrap_or_else(|| q.to_string())
}

impl FromStr for CatalogName {
    type Err = CatalogError;

    /// `SUmu2`, `Umu2`, `SOmu3`, `PodlesAB`, `PodlesChi`, `QPerm(n)`, `AFLevel(l1,l2,…)`,
    /// `WangAu(q1,…,qn)` with entries integers, fractions, `mu` or `mu^k`.
    fn from_str(s: &str) -> Result<Self, CatalogError> {
        let s = s.trim();
        let (head, args) = match s.find('(') {
            Some(i) if s.ends_with(')') => (&s[..i], Some(&s[i + 1..s.len() - 1])),
            _ => (s, None),
        };
        let params = |e: String| CatalogError::Params(head.into(), e);
        let list = || -> Vec<&str> { args.map(|a| a.split(',').map(str::trim).collect()).unwrap_or_default() };
        match (head, args) {
            ("SUmu2", None) => Ok(CatalogName::SUmu2),
            ("Umu2", None) => Ok(CatalogName::Umu2),
            ("SOmu3", None) => Ok(CatalogName::SOmu3),
            ("PodlesAB", None) => Ok(CatalogName::PodlesAB),
            ("PodlesChi", None) => Ok(CatalogName::PodlesChi),
            ("QPerm", Some(a)) => match a.trim().parse::<usize>() {
                Ok(n) if n >= 1 => Ok(CatalogName::QPerm(n)),
                _ => Err(params(format!("n must be a positive integer, got `{a}`"))),
            },
            ("AFLevel", Some(_)) => {
                let b: Result<Vec<usize>, _> = list().iter().map(|x| x.parse::<usize>()).collect();
                match b {
                    Ok(b) if !b.is_empty() && !b.contains(&0) => Ok(CatalogName::AFLevel(b)),
                    _ => Err(params("branching must list positive integers".into())),
                }
            }
            ("WangAu", Some(_)) => {
                let q: Vec<Scalar> = list().iter().map(|x| parse_entry(x)).collect::<Result<_, _>>().map_err(params)?;
                if q.iter().any(Scalar::is_zero) {
                    return Err(params("Q must be invertible".into()));
                }
                Ok(CatalogName::WangAu(q))
            }
            _ => Err(CatalogError::Unknown(s.into())),
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<String>| v.join(",");
        match self {
            CatalogName::SUmu2 => write!(f, "SUmu2"),
            CatalogName::Umu2 => write!(f, "Umu2"),
            CatalogName::SOmu3 => write!(f, "SOmu3"),
            CatalogName::PodlesAB => write!(f, "PodlesAB"),
            CatalogName::PodlesChi => write!(f, "PodlesChi"),
            CatalogName::WangAu(q) => write!(f, "WangAu({})", join(q.iter().map(render_entry).collect())),
            CatalogName::QPerm(n) => write!(f, "QPerm({n})"),
            CatalogName::AFLevel(b) => write!(f, "AFLevel({})", join(b.iter().map(|l| l.to_string()).collect())),
        }
    }
}

#[derive(Debug)]
pub struct AlgebraCatalogEntry {
    pub name: CatalogName,
    pub presentation: Presentation,
    pub hopf: Option<HopfData>,
}

impl AlgebraCatalogEntry {
    pub fn is_quantum_group(&self) -> bool {
        !matches!(self.name, CatalogName::PodlesAB | CatalogName::PodlesChi | CatalogName::AFLevel(_))
    }

    pub fn dump(&self) -> Value {
        json!({"entry": self.name.to_string(), "hopf": self.hopf.is_some(), "presentation": self.presentation.dump()})
    }

    /// Rebuild from [`AlgebraCatalogEntry::dump`]; Hopf data is reinstalled on the loaded presentation.
    pub fn load(v: &Value) -> Result<Self, CatalogError> {
        let name: CatalogName = v["entry"].as_str().ok_or_else(|| CatalogError::Unknown("<missing>".into()))?.parse()?;
        let presentation = Presentation::load(&v["presentation"])?;
        let hopf = if v["hopf"].as_bool() == Some(true) { hopf_for(&name, presentation.clone()) } else { None };
        Ok(AlgebraCatalogEntry { name, presentation, hopf })
    }
}

fn hopf_for(name: &CatalogName, p: Presentation) -> Option<HopfData> {
    match name {
        CatalogName::SUmu2 => Some(su2_hopf_on(p)),
        CatalogName::Umu2 => Some(umu2_hopf_on(p)),
        CatalogName::SOmu3 => Some(somu3_hopf(p)),
        CatalogName::WangAu(q) => Some(wang_hopf(p, q)),
        CatalogName::QPerm(n) => Some(qperm_hopf(p, *n)),
        _ => None,
    }
}

fn su2_hopf_on(p: Presentation) -> HopfData {
    rebase(su2_hopf(), p)
}

fn umu2_hopf_on(p: Presentation) -> HopfData {
    rebase(umu2_hopf(), p)
}

/// The same generator data installed on another copy of the presentation.
fn rebase(h: &HopfData, p: Presentation) -> HopfData {
    let (mut d, mut e, mut k) = (BTreeMap::new(), BTreeMap::new(), BTreeMap::new());
    let q = h.presentation();
    for (g, name) in q.alphabet().names().iter().enumerate() {
        let x = q.gen(name);
        d.insert(name.clone(), h.generator_delta(g as Gen).clone());
        e.insert(name.clone(), h.counit(&x));
        k.insert(name.clone(), h.antipode(&x));
    }
    HopfData::new(p, d, e, k).expect("data for every generator")
}

/// Build a catalog entry; completion shortfalls show up in the presentation status.
pub fn make_algebra(name: &CatalogName) -> Result<AlgebraCatalogEntry, CatalogError> {
    let presentation = match name {
        CatalogName::SUmu2 => su2().clone(),
        CatalogName::Umu2 => umu2().clone(),
        CatalogName::SOmu3 => somu3(SOMU3_BOUND),
        CatalogName::PodlesAB => podles_ab(PODLES_BOUND),
        CatalogName::PodlesChi => podles_chi(PODLES_BOUND),
        CatalogName::WangAu(q) => {
            if q.is_empty() {
                return Err(CatalogError::Params("WangAu".into(), "n ≥ 1".into()));
            }
            wang(q, WANG_BOUND)
        }
        CatalogName::QPerm(n) => {
            if *n == 0 {
                return Err(CatalogError::Params("QPerm".into(), "n ≥ 1".into()));
            }
            qperm_cstar(*n).presentation
        }
        CatalogName::AFLevel(b) => af_level(b)?.presentation,
    };
    let hopf = hopf_for(name, presentation.clone());
    Ok(AlgebraCatalogEntry { name: name.clone(), presentation, hopf })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in ["SUmu2", "Umu2", "SOmu3", "PodlesAB", "PodlesChi", "QPerm(3)", "AFLevel(2,1)", "WangAu(1,mu^2,3/2)", "WangAu(mu)"] {
            assert_eq!(s.parse::<CatalogName>().unwrap().to_string(), s);
        }
        assert!(matches!("QPerm(0)".parse::<CatalogName>(), Err(CatalogError::Params(..))));
        assert!(matches!("AFLevel(2,0)".parse::<CatalogName>(), Err(CatalogError::Params(..))));
        assert!(matches!("WangAu(0,1)".parse::<CatalogName>(), Err(CatalogError::Params(..))));
        assert!(matches!("Torus".parse::<CatalogName>(), Err(CatalogError::Unknown(_))));
    }

    #[test]
    fn qperm_three() {
        let e = make_algebra(&CatalogName::QPerm(3)).unwrap();
        let p = &e.presentation;
        assert_eq!(p.alphabet().len(), 9);
        for g in p.alphabet().names() {
            let x = p.gen(g);
            assert!(p.reduces_to_zero(&(&p.mul(&x, &x) - &x)));
            assert_eq!(x.star(), x);
        }
        assert!(p.reduces_to_zero(&(&(&(&p.gen("a11") + &p.gen("a12")) + &p.gen("a13")) - &p.one())));
        assert!(p.reduces_to_zero(&(&(&(&p.gen("a11") + &p.gen("a21")) + &p.gen("a31")) - &p.one())));
        assert!(e.hopf.is_some());
    }

    #[test]
    fn su2_entry_passes_axioms() {
        let e = make_algebra(&CatalogName::SUmu2).unwrap();
        let h = e.hopf.as_ref().unwrap();
        let p = h.presentation();
        let sample: Vec<_> = p.alphabet().names().iter().map(|g| (g.clone(), p.gen(g))).collect();
        assert!(h.axiom_suite(&sample).iter().all(|v| v.passed));
    }

    #[test]
    fn af_one_is_trivial() {
        let e = make_algebra(&CatalogName::AFLevel(vec![1])).unwrap();
        let p = &e.presentation;
        assert!(p.reduces_to_zero(&(&p.gen("a(1,1)(1,1)") - &p.one())));
        assert!(e.hopf.is_none());
    }

    #[test]
    fn hopf_exactly_for_quantum_groups() {
        for s in ["SUmu2", "Umu2", "SOmu3", "PodlesAB", "PodlesChi", "QPerm(2)", "AFLevel(2)", "WangAu(1,mu)"] {
            let e = make_algebra(&s.parse().unwrap()).unwrap();
            assert_eq!(e.hopf.is_some(), e.is_quantum_group(), "{s}");
        }
    }

    #[test]
    fn relations_star_closed() {
        for s in ["SUmu2", "Umu2", "SOmu3", "PodlesAB", "QPerm(3)", "WangAu(1,mu)"] {
            let p = make_algebra(&s.parse().unwrap()).unwrap().presentation;
            for (l, r) in p.relations() {
                assert!(p.reduces_to_zero(&r.star()), "{s}: {l}*");
            }
        }
    }

    #[test]
    fn dump_load_round_trip() {
        for s in ["SUmu2", "Umu2", "PodlesAB", "PodlesChi", "QPerm(2)", "WangAu(1,mu^2)"] {
            let e = make_algebra(&s.parse().unwrap()).unwrap();
            let v = e.dump();
            let text = serde_json::to_string_pretty(&v).unwrap();
            let back = AlgebraCatalogEntry::load(&serde_json::from_str(&text).unwrap()).unwrap();
            assert_eq!(back.name, e.name);
            assert_eq!(back.presentation.status(), e.presentation.status());
            assert_eq!(back.presentation.rules().len(), e.presentation.rules().len());
            assert_eq!(back.dump(), v, "{s}");
            assert_eq!(back.hopf.is_some(), e.hopf.is_some());
            let p = &back.presentation;
            for (l, r) in e.presentation.relations() {
                assert!(p.reduces_to_zero(r), "{s}: {l}");
            }
        }
    }
}

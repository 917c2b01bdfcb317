//! Consecutive levels of the quantum permutation tower of an AF algebra.
//!
//! A branching (l_1, …, l_m) splits coarse point i into fine points (i, 1), …, (i, l_i).

use super::wang::{orthogonality_families, positivity_closure};
use super::Check;
use crate::ncalg::{complete, Alphabet, CompletionOptions, NCPoly, Presentation};
use std::sync::Arc;
use thiserror::Error;

/// Bound for the first completion and for the re-completions after each C* round.
pub const AF_BOUNDS: (usize, usize) = (3, 4);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AfError {
    #[error("branching must be a non-empty vector of positive integers")]
    BadBranching,
}

#[derive(Clone, Debug)]
pub struct AfLevel {
    pub branching: Vec<usize>,
    /// Fine points (i, r), 0-based, in order.
    pub points: Vec<(usize, usize)>,
    pub presentation: Presentation,
    pub checks: Vec<Check>,
}

pub fn coarse_name(i: usize, j: usize) -> String {
    format!("a{}{}", i + 1, j + 1)
}

pub fn fine_name(p: (usize, usize), q: (usize, usize)) -> String {
    format!("a({},{})({},{})", p.0 + 1, p.1 + 1, q.0 + 1, q.1 + 1)
}

fn points(branching: &[usize]) -> Vec<(usize, usize)> {
    branching.iter().enumerate().flat_map(|(i, &l)| (0..l).map(move |r| (i, r))).collect()
}

pub fn af_alphabet(branching: &[usize]) -> Arc<Alphabet> {
    let m = branching.len();
    let pts = points(branching);
    let mut names: Vec<(String, u32)> = Vec::new();
    for &p in &pts {
        for &q in &pts {
            names.push((fine_name(p, q), 1));
        }
    }
    for i in 0..m {
        for j in 0..m {
            names.push((coarse_name(i, j), 2));
        }
    }
    let gens: Vec<(&str, &str, u32)> = names.iter().map(|(s, w)| (s.as_str(), s.as_str(), *w)).collect();
    Alphabet::new(&gens).expect("distinct generator names")
}

fn magic_relations(
    a: &Arc<Alphabet>,
    n: usize,
    name: impl Fn(usize, usize) -> String,
    tag: &str,
) -> Vec<(String, NCPoly)> {
    let g = |i: usize, j: usize| NCPoly::gen(a, &name(i, j));
    let one = NCPoly::one(a);
    let mut rels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let x = g(i, j);
            rels.push((format!("{tag} {}²", name(i, j)), &(&x * &x) - &x));
        }
    }
    for i in 0..n {
        let row = (0..n).fold(-&one, |acc, j| &acc + &g(i, j));
        let col = (0..n).fold(-&one, |acc, j| &acc + &g(j, i));
        rels.push((format!("{tag} row{}", i + 1), row));
        rels.push((format!("{tag} col{}", i + 1), col));
    }
    rels
}

/// Fine magic-unitary relations and a_ij = Σ_r a_{(i,r),(j,s)} for every s.
pub fn af_relations(branching: &[usize]) -> Vec<(String, NCPoly)> {
    let a = af_alphabet(branching);
    let pts = points(branching);
    let mut rels = magic_relations(&a, pts.len(), |p, q| fine_name(pts[p], pts[q]), "fine");
    let m = branching.len();
    for i in 0..m {
        for j in 0..m {
            for s in 0..branching[j] {
                let sum = (0..branching[i])
                    .fold(NCPoly::zero(&a), |acc, r| &acc + &NCPoly::gen(&a, &fine_name((i, r), (j, s))));
                let rel = &NCPoly::gen(&a, &coarse_name(i, j)) - &sum;
                rels.push((format!("compat {} s={}", coarse_name(i, j), s + 1), rel));
            }
        }
    }
    rels
}

/// Both levels with compatibility installed, completed and closed under fine orthogonality.
pub fn af_level(branching: &[usize]) -> Result<AfLevel, AfError> {
    if branching.is_empty() || branching.contains(&0) {
        return Err(AfError::BadBranching);
    }
    let pts = points(branching);
    let a = af_alphabet(branching);
    let label = branching.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",");
    let p = Presentation::new(&format!("AFLevel({label})"), &a, af_relations(branching));
    let p = complete(&p, CompletionOptions::bound(AF_BOUNDS.0)).expect("linear and idempotent relations orient");
    let fams = orthogonality_families(&p, pts.len(), |x, y| fine_name(pts[x], pts[y]));
    let closed = positivity_closure(&p, fams, AF_BOUNDS.1);
    Ok(AfLevel { branching: branching.to_vec(), points: pts, presentation: closed.presentation, checks: closed.checks })
}

/// m′ = Σ l_i, and every coarse magic-unitary relation reduces to 0 at the fine level.
pub fn check_af_level(branching: &[usize]) -> Result<Vec<Check>, AfError> {
    let lvl = af_level(branching)?;
    let p = &lvl.presentation;
    let m = branching.len();
    let mut out = Vec::new();
    let mp = lvl.points.len();
    let sum: usize = branching.iter().sum();
    out.push(Check {
        label: "m′ = Σ l_i".into(),
        passed: mp == sum,
        detail: format!("m = {m}, m′ = {mp}, Σ l_i = {sum}"),
    });
    out.extend(lvl.checks.iter().filter(|c| !c.passed).cloned());
    for (label, rel) in magic_relations(p.alphabet(), m, coarse_name, "coarse") {
        let r = p.normal_form(&rel);
        out.push(Check::zero(label, &r, r.is_zero()));
    }
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                if j != k {
                    let r = p.normal_form(&p.word(&[&coarse_name(i, j), &coarse_name(i, k)]));
                    out.push(Check::zero(format!("coarse {}·{}", coarse_name(i, j), coarse_name(i, k)), &r, r.is_zero()));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn passes(b: &[usize]) {
        for c in check_af_level(b).unwrap() {
            assert!(c.passed, "{b:?}: {c}");
        }
    }

    #[test]
    fn trivial_branchings() {
        passes(&[1]);
        passes(&[1, 1]);
    }

    #[test]
    fn single_point_level_is_trivial() {
        let p = af_level(&[1]).unwrap().presentation;
        assert!(p.reduces_to_zero(&(&p.gen("a(1,1)(1,1)") - &p.one())));
        assert!(p.reduces_to_zero(&(&p.gen("a11") - &p.one())));
    }

    #[test]
    fn doubling() {
        passes(&[2]);
    }

    #[test]
    fn two_one() {
        passes(&[2, 1]);
    }

    #[test]
    fn three_two() {
        passes(&[3, 2]);
    }

    /// Characters from fibre-preserving permutations of the fine points.
    fn classical_points(b: &[usize]) -> Vec<Vec<usize>> {
        fn perms(rest: Vec<usize>) -> Vec<Vec<usize>> {
            if rest.is_empty() {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for (i, &x) in rest.iter().enumerate() {
                let mut r = rest.clone();
                r.remove(i);
                for mut p in perms(r) {
                    p.insert(0, x);
                    out.push(p);
                }
            }
            out
        }
        let pts = points(b);
        let n = pts.len();
        perms((0..n).collect())
            .into_iter()
            .filter(|sig| {
                (0..n).all(|p| (0..n).all(|q| (pts[p].0 == pts[q].0) == (pts[sig[p]].0 == pts[sig[q]].0)))
            })
            .collect()
    }

    #[test]
    fn classical_quotient_satisfies_every_rule() {
        for b in [vec![2], vec![2, 1], vec![1, 1]] {
            let lvl = af_level(&b).unwrap();
            let p = &lvl.presentation;
            let a = p.alphabet();
            let sigs = classical_points(&b);
            assert!(!sigs.is_empty());
            for sig in sigs {
                let mut val = vec![0i64; a.len()];
                for (x, &pp) in lvl.points.iter().enumerate() {
                    for (y, &qq) in lvl.points.iter().enumerate() {
                        let v = (x == sig[y]) as i64;
                        val[a.index(&fine_name(pp, qq)).unwrap() as usize] = v;
                        if v == 1 {
                            val[a.index(&coarse_name(pp.0, qq.0)).unwrap() as usize] = 1;
                        }
                    }
                }
                let eval = |q: &NCPoly| {
                    q.terms().fold(crate::scalar::Scalar::zero(), |acc, (w, c)| {
                        let m: i64 = w.0.iter().map(|&g| val[g as usize]).product();
                        &acc + &c.scale_rational(&num_rational::BigRational::from_integer(m.into()))
                    })
                };
                for r in p.rules() {
                    let lhs = NCPoly::word(a, r.lhs.clone());
                    assert!(eval(&(&lhs - &r.rhs)).is_zero(), "{b:?} σ={sig:?}");
                }
            }
        }
    }

    #[test]
    fn bad_branching() {
        assert_eq!(check_af_level(&[]).unwrap_err(), AfError::BadBranching);
        assert_eq!(check_af_level(&[2, 0]).unwrap_err(), AfError::BadBranching);
    }
}

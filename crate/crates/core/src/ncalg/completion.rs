//! Bounded overlap completion of noncommutative rewrite systems.

use super::presentation::{Presentation, Rule, RuleSet, Status};
use super::{Key, NCPoly, Word};
use crate::scalar::Scalar;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Clone, Copy, Debug)]
pub struct CompletionOptions {
    /// Ambiguities whose overlap word is longer than this are skipped.
    pub degree_bound: usize,
    /// Stop (status fixture-only) once this many rules exist.
    pub max_rules: usize,
}

impl CompletionOptions {
    pub fn bound(d: usize) -> Self {
        CompletionOptions { degree_bound: d, max_rules: 400 }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CompletionError {
    #[error("relation `{0}` cannot be oriented: leading coefficient is not a unit")]
    NonOrientable(String),
}

fn orient(p: &NCPoly) -> Option<Rule> {
    let (lw, lc) = p.lead()?;
    let inv = lc.inv().ok()?;
    let lw = lw.clone();
    let mut rhs = p.scale(&-&inv);
    rhs.add_term(lw.clone(), Scalar::one());
    Some(Rule { lhs: lw, rhs })
}

/// Complete `pres` with overlap ambiguities bounded by `opts.degree_bound`.
pub fn complete(pres: &Presentation, opts: CompletionOptions) -> Result<Presentation, CompletionError> {
    let alpha = pres.alphabet().clone();
    for r in &pres.relations {
        if let Some((_, lc)) = r.poly.lead() {
            if lc.inv().is_err() {
                return Err(CompletionError::NonOrientable(r.label.clone()));
            }
        }
    }
    let mut rs = RuleSet::new(alpha.clone(), Vec::new());
    let mut pending: Vec<NCPoly> = pres.relations.iter().map(|r| r.poly.clone()).collect();
    let mut seen_pairs: BTreeSet<(Word, Word, usize)> = BTreeSet::new();
    let mut capped = false;
    let mut diagnostics = Vec::new();

    'outer: loop {
        while !pending.is_empty() {
            // smallest leading word first; ties keep insertion order
            let mut best = 0;
            let mut best_key: Option<Key> = None;
            for (i, p) in pending.iter().enumerate() {
                let k = p.lead().map(|(w, _)| Key(alpha.word_weight(w), w.clone()));
                if best_key.is_none() || k < best_key {
                    best = i;
                    best_key = k;
                }
            }
            let p = pending.remove(best);
            let p = rs.nf(&p);
            if p.is_zero() {
                continue;
            }
            let Some(rule) = orient(&p) else {
                let (w, _) = p.lead().unwrap();
                return Err(CompletionError::NonOrientable(alpha.render_word(w)));
            };
            if rs.rules.len() >= opts.max_rules {
                capped = true;
                diagnostics.push(format!("rule cap {} reached", opts.max_rules));
                break 'outer;
            }
            let new_lhs = rule.lhs.clone();
            let mut kept: Vec<Rule> = Vec::with_capacity(rs.rules.len() + 1);
            for r in rs.rules.drain(..) {
                if r.lhs.find(&new_lhs).is_some() {
                    let mut back = r.rhs.clone();
                    back.add_term(r.lhs.clone(), Scalar::from_int(-1));
                    pending.push(back);
                } else {
                    kept.push(r);
                }
            }
            kept.push(rule);
            kept.sort_by(|a, b| Key(alpha.word_weight(&a.lhs), a.lhs.clone())
                .cmp(&Key(alpha.word_weight(&b.lhs), b.lhs.clone())));
            rs = RuleSet::new(alpha.clone(), kept);
            // inter-reduce right-hand sides
            let mut changed = false;
            let mut rules = rs.rules.clone();
            for r in rules.iter_mut() {
                if r.rhs.terms().any(|(w, _)| w.find(&new_lhs).is_some()) {
                    r.rhs = rs.nf(&r.rhs);
                    changed = true;
                }
            }
            if changed {
                rs = RuleSet::new(alpha.clone(), rules);
            }
        }

        // collect unseen ambiguities of the current rule set
        let mut spolys: Vec<(Key, NCPoly)> = Vec::new();
        for r1 in &rs.rules {
            for r2 in &rs.rules {
                let (u, v) = (&r1.lhs, &r2.lhs);
                for k in 1..u.len().min(v.len()) {
                    if u.0[u.len() - k..] != v.0[..k] {
                        continue;
                    }
                    let id = (u.clone(), v.clone(), k);
                    if seen_pairs.contains(&id) {
                        continue;
                    }
                    let w = u.concat(&v.slice(k, v.len()));
                    if w.len() > opts.degree_bound {
                        continue;
                    }
                    seen_pairs.insert(id);
                    let left = r1.rhs.sandwich(&Word::empty(), &v.slice(k, v.len()));
                    let right = r2.rhs.sandwich(&u.slice(0, u.len() - k), &Word::empty());
                    let s = rs.nf(&(&left - &right));
                    if !s.is_zero() {
                        spolys.push((Key(alpha.word_weight(&w), w), s));
                    }
                }
            }
        }
        if spolys.is_empty() {
            break;
        }
        spolys.sort_by(|a, b| a.0.cmp(&b.0));
        pending.extend(spolys.into_iter().map(|(_, s)| s));
    }

    // re-verify every ambiguity of the final rule set
    let mut skipped = false;
    let mut unresolved = 0usize;
    for r1 in &rs.rules {
        for r2 in &rs.rules {
            let (u, v) = (&r1.lhs, &r2.lhs);
            for k in 1..u.len().min(v.len()) {
                if u.0[u.len() - k..] != v.0[..k] {
                    continue;
                }
                if u.len() + v.len() - k > opts.degree_bound {
                    skipped = true;
                    continue;
                }
                let left = r1.rhs.sandwich(&Word::empty(), &v.slice(k, v.len()));
                let right = r2.rhs.sandwich(&u.slice(0, u.len() - k), &Word::empty());
                if !rs.nf(&(&left - &right)).is_zero() {
                    unresolved += 1;
                }
            }
        }
    }
    if unresolved > 0 {
        diagnostics.push(format!("{} ambiguities unresolved", unresolved));
    }
    for r in &pres.relations {
        if !rs.nf(&r.poly).is_zero() {
            diagnostics.push(format!("relation {} not reduced", r.label));
        }
    }
    let status = if capped || !diagnostics.is_empty() {
        Status::FixtureOnly
    } else if skipped {
        Status::ProvedUpTo(opts.degree_bound)
    } else {
        Status::Confluent
    };
    Ok(Presentation {
        name: pres.name.clone(),
        relations: pres.relations.clone(),
        rs,
        bound: opts.degree_bound,
        status,
        diagnostics,
    })
}

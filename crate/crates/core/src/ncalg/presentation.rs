use super::{Alphabet, AlphabetError, Gen, NCPoly, Word};
use crate::scalar::serial::{load_radical_table, radical_table, SerialError};
use crate::scalar::Scalar;
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};
use thiserror::Error;

/// Confluence status of a rule set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Every ambiguity of the final rule set was resolved.
    Confluent,
    /// Ambiguities up to the given word length resolve; longer ones were skipped.
    ProvedUpTo(usize),
    /// Rules are usable for reduction but confluence was not established.
    FixtureOnly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Confluent => write!(f, "confluent"),
            Status::ProvedUpTo(d) => write!(f, "proved-up-to-{}", d),
            Status::FixtureOnly => write!(f, "fixture-only"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

#[derive(Clone, Debug)]
pub struct Relation {
    pub label: String,
    pub poly: NCPoly,
}

/// Rewrite rules with a subword index and a normal-form memo.
#[derive(Debug)]
pub(crate) struct RuleSet {
    pub(crate) alpha: Arc<Alphabet>,
    pub(crate) rules: Vec<Rule>,
    index: HashMap<Word, usize>,
    lens: Vec<usize>,
    cache: RwLock<HashMap<Word, NCPoly>>,
}

impl Clone for RuleSet {
    fn clone(&self) -> Self {
        RuleSet::new(self.alpha.clone(), self.rules.clone())
    }
}

impl RuleSet {
    pub(crate) fn new(alpha: Arc<Alphabet>, rules: Vec<Rule>) -> Self {
        let mut index = HashMap::new();
        let mut lens: Vec<usize> = Vec::new();
        for (i, r) in rules.iter().enumerate() {
            index.insert(r.lhs.clone(), i);
            if !lens.contains(&r.lhs.len()) {
                lens.push(r.lhs.len());
            }
        }
        lens.sort_unstable();
        RuleSet { alpha, rules, index, lens, cache: RwLock::new(HashMap::new()) }
    }

    /// First (leftmost, shortest) occurrence of a rule lhs in `w`.
    pub(crate) fn find_redex(&self, w: &[Gen]) -> Option<(usize, usize)> {
        for i in 0..w.len() {
            for &l in &self.lens {
                if i + l > w.len() {
                    break;
                }
                if let Some(&r) = self.index.get(&Word::from_slice(&w[i..i + l])) {
                    return Some((i, r));
                }
            }
        }
        None
    }

    pub(crate) fn is_reducible(&self, w: &Word) -> bool {
        self.find_redex(&w.0).is_some()
    }

    pub(crate) fn nf_word(&self, w: &Word) -> NCPoly {
        if let Some(p) = self.cache.read().unwrap().get(w) {
            return p.clone();
        }
        let out = match self.find_redex(&w.0) {
            None => NCPoly::word(&self.alpha, w.clone()),
            Some((i, r)) => {
                let rule = &self.rules[r];
                let pre = w.slice(0, i);
                let post = w.slice(i + rule.lhs.len(), w.len());
                let mut acc = NCPoly::zero(&self.alpha);
                for (m, c) in rule.rhs.terms() {
                    let nw = pre.concat(m).concat(&post);
                    acc.add_scaled(&self.nf_word(&nw), c);
                }
                acc
            }
        };
        self.cache.write().unwrap().insert(w.clone(), out.clone());
        out
    }

    pub(crate) fn nf(&self, p: &NCPoly) -> NCPoly {
        let mut acc = NCPoly::zero(&self.alpha);
        for (w, c) in p.terms() {
            acc.add_scaled(&self.nf_word(w), c);
        }
        acc
    }
}

/// A presented *-algebra together with its rewrite system.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    pub(crate) relations: Vec<Relation>,
    pub(crate) rs: RuleSet,
    pub(crate) bound: usize,
    pub(crate) status: Status,
    pub(crate) diagnostics: Vec<String>,
}

impl Presentation {
    /// Uncompleted presentation; relations are star-closed by the caller or by [`Presentation::star_closed`].
    pub fn new(name: &str, alpha: &Arc<Alphabet>, relations: Vec<(String, NCPoly)>) -> Self {
        Presentation {
            name: name.into(),
            relations: relations
                .into_iter()
                .map(|(label, poly)| Relation { label, poly })
                .collect(),
            rs: RuleSet::new(alpha.clone(), Vec::new()),
            bound: 0,
            status: Status::FixtureOnly,
            diagnostics: Vec::new(),
        }
    }

    /// Add the star of each relation not already present.
    pub fn star_closed(mut self) -> Self {
        let mut extra = Vec::new();
        for r in &self.relations {
            let s = r.poly.star();
            let dup = self
                .relations
                .iter()
                .chain(extra.iter())
                .any(|o: &Relation| o.poly == s || o.poly == -&s);
            if !dup {
                extra.push(Relation { label: format!("{}*", r.label), poly: s });
            }
        }
        self.relations.extend(extra);
        self
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.rs.alpha
    }

    pub fn relations(&self) -> impl Iterator<Item = (&str, &NCPoly)> {
        self.relations.iter().map(|r| (r.label.as_str(), &r.poly))
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rs.rules
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn diagnostics(&self) -> &[String] {
        &self.diagnostics
    }

    pub fn gen(&self, name: &str) -> NCPoly {
        NCPoly::gen(self.alphabet(), name)
    }

    pub fn word(&self, names: &[&str]) -> NCPoly {
        NCPoly::monomial(self.alphabet(), names)
    }

    pub fn one(&self) -> NCPoly {
        NCPoly::one(self.alphabet())
    }

    pub fn zero(&self) -> NCPoly {
        NCPoly::zero(self.alphabet())
    }

    pub fn constant(&self, c: Scalar) -> NCPoly {
        NCPoly::constant(self.alphabet(), c)
    }

    pub fn normal_form(&self, p: &NCPoly) -> NCPoly {
        self.rs.nf(p)
    }

    pub fn is_normal_word(&self, w: &Word) -> bool {
        !self.rs.is_reducible(w)
    }

    /// True iff the normal form is zero. Under [`Status::FixtureOnly`] a
    /// `false` only means "not reduced", not "provably nonzero".
    pub fn reduces_to_zero(&self, p: &NCPoly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Product with intermediate normal forms.
    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        let mut acc = self.zero();
        for (w1, c1) in a.terms() {
            for (w2, c2) in b.terms() {
                acc.add_scaled(&self.rs.nf_word(&w1.concat(w2)), &(c1 * c2));
            }
        }
        acc
    }

    pub fn mul_all(&self, fs: &[&NCPoly]) -> NCPoly {
        let mut acc = self.one();
        for f in fs {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn pow(&self, a: &NCPoly, e: u32) -> NCPoly {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Substitute generator images (indexed by source generator) and reduce here.
    pub fn substitute(&self, p: &NCPoly, images: &[NCPoly]) -> NCPoly {
        let mut acc = self.zero();
        for (w, c) in p.terms() {
            let mut t = self.constant(c.clone());
            for &g in w.0.iter() {
                t = self.mul(&t, &images[g as usize]);
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Normal-form basis words up to a word length.
    pub fn basis_words(&self, max_len: usize) -> Vec<Word> {
        let n = self.alphabet().len() as Gen;
        let mut out = vec![Word::empty()];
        let mut frontier = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for g in 0..n {
                    let nw = w.concat(&Word::from_slice(&[g]));
                    if self.is_normal_word(&nw) {
                        next.push(nw);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// Structured catalog entry: generators, star pairs, order, bound, status, relations and rules.
    /// Each polynomial appears rendered and as exact terms; the radical table makes the file loadable.
    pub fn dump(&self) -> Value {
        let a = self.alphabet();
        let gens: Vec<Value> = (0..a.len() as Gen)
            .map(|g| json!({"name": a.name(g), "star": a.name(a.star(g)), "weight": a.weight(g)}))
            .collect();
        let mut mask = 0u64;
        let mut poly = |p: &NCPoly| {
            mask |= p.terms().fold(0, |m, (_, c)| m | c.radical_mask());
            poly_terms(p)
        };
        let rels: Vec<Value> = self
            .relations
            .iter()
            .map(|r| json!({"label": r.label, "poly": r.poly.to_string(), "terms": poly(&r.poly)}))
            .collect();
        let rules: Vec<Value> = self
            .rs
            .rules
            .iter()
            .map(|r| {
                json!({
                    "lhs": a.render_word(&r.lhs),
                    "rhs": r.rhs.to_string(),
                    "lhs_word": word_names(a, &r.lhs),
                    "rhs_terms": poly(&r.rhs),
                })
            })
            .collect();
        json!({
            "name": self.name,
            "generators": gens,
            "order": "weighted-deglex",
            "bound": self.bound,
            "status": self.status.to_string(),
            "diagnostics": self.diagnostics,
            "radicals": radical_table(mask),
            "relations": rels,
            "rules": rules,
        })
    }

    /// Rebuild a presentation written by [`Presentation::dump`], rules included.
    pub fn load(v: &Value) -> Result<Presentation, LoadError> {
        let field = |k: &str| v.get(k).ok_or_else(|| LoadError::Missing(k.into()));
        let name = field("name")?.as_str().ok_or_else(|| LoadError::Missing("name".into()))?;
        let order = field("order")?.as_str().unwrap_or("");
        if order != "weighted-deglex" {
            return Err(LoadError::Order(order.into()));
        }
        let mut gens = Vec::new();
        for g in field("generators")?.as_array().ok_or_else(|| LoadError::Missing("generators".into()))? {
            let n = g["name"].as_str().ok_or_else(|| LoadError::Missing("generator name".into()))?;
            let st = g["star"].as_str().ok_or_else(|| LoadError::Missing("generator star".into()))?;
            let w = g["weight"].as_u64().ok_or_else(|| LoadError::Missing("generator weight".into()))? as u32;
            gens.push((n.to_string(), st.to_string(), w));
        }
        let refs: Vec<(&str, &str, u32)> = gens.iter().map(|(n, s, w)| (n.as_str(), s.as_str(), *w)).collect();
        let a = Alphabet::new(&refs)?;
        load_radical_table(field("radicals")?)?;
        let mut relations = Vec::new();
        for r in field("relations")?.as_array().ok_or_else(|| LoadError::Missing("relations".into()))? {
            let label = r["label"].as_str().ok_or_else(|| LoadError::Missing("relation label".into()))?;
            relations.push(Relation { label: label.into(), poly: poly_from_terms(&a, &r["terms"])? });
        }
        let mut rules = Vec::new();
        for r in field("rules")?.as_array().ok_or_else(|| LoadError::Missing("rules".into()))? {
            let lhs = word_from_names(&a, &r["lhs_word"])?;
            rules.push(Rule { lhs, rhs: poly_from_terms(&a, &r["rhs_terms"])? });
        }
        let status = parse_status(field("status")?.as_str().unwrap_or(""))?;
        let bound = field("bound")?.as_u64().ok_or_else(|| LoadError::Missing("bound".into()))? as usize;
        let diagnostics = v
            .get("diagnostics")
            .and_then(Value::as_array)
            .map(|d| d.iter().filter_map(|x| x.as_str().map(String::from)).collect())
            .unwrap_or_default();
        Ok(Presentation { name: name.into(), relations, rs: RuleSet::new(a, rules), bound, status, diagnostics })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LoadError {
    #[error("missing or malformed field `{0}`")]
    Missing(String),
    #[error("unsupported order `{0}`")]
    Order(String),
    #[error("unknown status `{0}`")]
    Status(String),
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
    #[error(transparent)]
    Scalar(#[from] SerialError),
}

fn word_names(a: &Alphabet, w: &Word) -> Vec<String> {
    w.0.iter().map(|&g| a.name(g).to_string()).collect()
}

fn poly_terms(p: &NCPoly) -> Value {
    let a = p.alphabet();
    Value::Array(p.terms().map(|(w, c)| json!([word_names(a, w), c.to_json()])).collect())
}

fn word_from_names(a: &Arc<Alphabet>, v: &Value) -> Result<Word, LoadError> {
    let mut out = Vec::new();
    for n in v.as_array().ok_or_else(|| LoadError::Missing("word".into()))? {
        let n = n.as_str().ok_or_else(|| LoadError::Missing("word letter".into()))?;
        out.push(a.index(n).ok_or_else(|| AlphabetError::Unknown(n.into()))?);
    }
    Ok(Word::from_slice(&out))
}

fn poly_from_terms(a: &Arc<Alphabet>, v: &Value) -> Result<NCPoly, LoadError> {
    let mut p = NCPoly::zero(a);
    for t in v.as_array().ok_or_else(|| LoadError::Missing("terms".into()))? {
        let pair = t.as_array().filter(|x| x.len() == 2).ok_or_else(|| LoadError::Missing("term".into()))?;
        p.add_term(word_from_names(a, &pair[0])?, Scalar::from_json(&pair[1])?);
    }
    Ok(p)
}

fn parse_status(s: &str) -> Result<Status, LoadError> {
    match s {
        "confluent" => Ok(Status::Confluent),
        "fixture-only" => Ok(Status::FixtureOnly),
        _ => s
            .strip_prefix("proved-up-to-")
            .and_then(|d| d.parse().ok())
            .map(Status::ProvedUpTo)
            .ok_or_else(|| LoadError::Status(s.into())),
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomCheckError {
    #[error("image of `{0}*` is not the star of the image of `{0}`")]
    StarIncompatible(String),
    #[error("no image given for generator `{0}`")]
    MissingImage(String),
}

#[derive(Clone, Debug)]
pub struct RelationVerdict {
    pub label: String,
    pub residual: NCPoly,
}

impl RelationVerdict {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct HomReport {
    pub verdicts: Vec<RelationVerdict>,
    pub target_status: Status,
}

impl HomReport {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed())
    }
}

/// Check that generator images define a *-homomorphism `src → dst`.
pub fn hom_check(
    src: &Presentation,
    dst: &Presentation,
    images: &BTreeMap<String, NCPoly>,
) -> Result<HomReport, HomCheckError> {
    let sa = src.alphabet();
    let mut imgs = Vec::with_capacity(sa.len());
    for g in 0..sa.len() as Gen {
        let im = images
            .get(sa.name(g))
            .ok_or_else(|| HomCheckError::MissingImage(sa.name(g).to_string()))?;
        imgs.push(dst.normal_form(im));
    }
    for g in 0..sa.len() as Gen {
        let sg = sa.star(g);
        if dst.normal_form(&imgs[g as usize].star()) != imgs[sg as usize] {
            return Err(HomCheckError::StarIncompatible(sa.name(g).to_string()));
        }
    }
    let verdicts = src
        .relations
        .iter()
        .map(|r| RelationVerdict { label: r.label.clone(), residual: dst.substitute(&r.poly, &imgs) })
        .collect();
    Ok(HomReport { verdicts, target_status: dst.status })
}

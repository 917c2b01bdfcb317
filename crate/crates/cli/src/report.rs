use serde_json::{json, Map, Value};
use std::collections::BTreeMap;
use std::fmt::Write;

pub const SCHEMA: &str = "qiso-report/1";

#[derive(Clone, Debug, PartialEq)]
pub enum Residual {
    /// Rendered exact residual; "0" when the check holds.
    Exact(String),
    Numeric { value: f64, tol: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Record {
    pub id: String,
    /// What is being checked, in words.
    pub label: String,
    pub params: Vec<(String, f64)>,
    pub passed: bool,
    pub residual: Residual,
    pub repro: Option<String>,
}

impl Record {
    fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("id".into(), json!(self.id));
        m.insert("label".into(), json!(self.label));
        let mut ps = Map::new();
        for (k, v) in &self.params {
            ps.insert(k.clone(), num(*v));
        }
        m.insert("params".into(), Value::Object(ps));
        m.insert("verdict".into(), json!(if self.passed { "pass" } else { "fail" }));
        match &self.residual {
            Residual::Exact(s) => {
                m.insert("kind".into(), json!("exact"));
                m.insert("residual".into(), json!(s));
            }
            Residual::Numeric { value, tol } => {
                m.insert("kind".into(), json!("numeric"));
                m.insert("residual".into(), num(*value));
                m.insert("tol".into(), num(*tol));
            }
        }
        if let Some(r) = &self.repro {
            m.insert("repro".into(), json!(r));
        }
        Value::Object(m)
    }
}

/// JSON has no infinities or NaN; those are written as strings.
fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        json!(x.to_string())
    }
}

/// Presentation metadata: name, completion status, rule count.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EngineEntry {
    pub name: String,
    pub status: String,
    pub rules: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub suite: String,
    pub params: Vec<(String, String)>,
    pub engine: Vec<EngineEntry>,
    pub records: Vec<Record>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    /// Sort records and engine entries, make ids unique and attach the reproduction command to failures.
    pub fn finalize(mut self, command: &str) -> Self {
        self.records.sort_by(|a, b| a.id.cmp(&b.id));
        let mut seen: BTreeMap<String, usize> = BTreeMap::new();
        for r in &mut self.records {
            let k = seen.entry(r.id.clone()).or_default();
            *k += 1;
            if *k > 1 {
                r.id = format!("{}#{}", r.id, k);
            }
            r.repro = (!r.passed).then(|| command.to_string());
        }
        self.engine.sort();
        self.engine.dedup();
        self
    }

    pub fn summary(&self) -> Summary {
        let passed = self.records.iter().filter(|r| r.passed).count();
        Summary { total: self.records.len(), passed, failed: self.records.len() - passed }
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn to_json(&self) -> Value {
        let s = self.summary();
        let mut params = Map::new();
        for (k, v) in &self.params {
            params.insert(k.clone(), json!(v));
        }
        let engine: Vec<Value> =
            self.engine.iter().map(|e| json!({"name": e.name, "status": e.status, "rules": e.rules})).collect();
        json!({
            "schema": SCHEMA,
            "suite": self.suite,
            "params": Value::Object(params),
            "summary": {"total": s.total, "passed": s.passed, "failed": s.failed},
            "engine": engine,
            "records": self.records.iter().map(Record::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(out, "suite {} [{}]", self.suite, ps.join(", ")).unwrap();
        for e in &self.engine {
            writeln!(out, "  engine {}: {} ({} rules)", e.name, e.status, e.rules).unwrap();
        }
        let width = self.records.iter().map(|r| r.id.chars().count()).max().unwrap_or(0);
        for r in &self.records {
            let res = match &r.residual {
                Residual::Exact(s) => s.clone(),
                Residual::Numeric { value, tol } => format!("{value:.3e} (tol {tol:.0e})"),
            };
            let pad = width - r.id.chars().count();
            writeln!(out, "{} {}{}  {}", if r.passed { "PASS" } else { "FAIL" }, r.id, " ".repeat(pad), res).unwrap();
            if let Some(c) = &r.repro {
                writeln!(out, "     label: {}\n     repro: {c}", r.label).unwrap();
            }
        }
        let s = self.summary();
        writeln!(out, "{} checks: {} passed, {} failed", s.total, s.passed, s.failed).unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(id: &str, passed: bool) -> Record {
        Record {
            id: id.into(),
            label: format!("label of {id}"),
            params: vec![("mu".into(), 0.5)],
            passed,
            residual: if passed { Residual::Exact("0".into()) } else { Residual::Numeric { value: f64::INFINITY, tol: 1e-12 } },
            repro: None,
        }
    }

    fn report() -> Report {
        Report {
            suite: "demo".into(),
            params: vec![("mu".into(), "0.5".into())],
            engine: vec![],
            records: vec![rec("b", true), rec("a", false), rec("b", true)],
        }
        .finalize("qiso --suite demo")
    }

    #[test]
    fn sorted_unique_and_tallied() {
        let r = report();
        let ids: Vec<&str> = r.records.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, ["a", "b", "b#2"]);
        assert_eq!(r.summary(), Summary { total: 3, passed: 2, failed: 1 });
        let v = r.to_json();
        assert_eq!(v["summary"]["failed"], 1);
        assert_eq!(v["records"].as_array().unwrap().iter().filter(|x| x["verdict"] == "fail").count(), 1);
    }

    #[test]
    fn failures_carry_label_and_repro() {
        let v = report().to_json();
        let a = &v["records"][0];
        assert_eq!(a["verdict"], "fail");
        assert_eq!(a["label"], "label of a");
        assert_eq!(a["repro"], "qiso --suite demo");
        assert_eq!(a["residual"], "inf");
        assert!(v["records"][1].get("repro").is_none());
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let s = report().to_json_string();
        let back: Value = serde_json::from_str(&s).unwrap();
        let mut again = serde_json::to_string_pretty(&back).unwrap();
        again.push('\n');
        assert_eq!(s, again);
        assert_eq!(back["schema"], SCHEMA);
    }
}

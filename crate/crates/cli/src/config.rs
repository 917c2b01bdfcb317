use clap::{Parser, ValueEnum};
use qiso_core::repnum::cp::MIN_NMAX;
use qiso_core::rieffel::Doubling;
use std::fmt;
use std::path::PathBuf;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum SuiteId {
    Su2Core,
    HopfAxioms,
    Haar,
    PodlesSymbolic,
    PodlesNumeric,
    Somu3,
    Umu2Action,
    Irreps,
    RieffelTorus,
    QisoAtheta,
    QisoCp,
    WangAf,
}

impl SuiteId {
    pub fn as_str(self) -> &'static str {
        match self {
            SuiteId::Su2Core => "su2-core",
            SuiteId::HopfAxioms => "hopf-axioms",
            SuiteId::Haar => "haar",
            SuiteId::PodlesSymbolic => "podles-symbolic",
            SuiteId::PodlesNumeric => "podles-numeric",
            SuiteId::Somu3 => "somu3",
            SuiteId::Umu2Action => "umu2-action",
            SuiteId::Irreps => "irreps",
            SuiteId::RieffelTorus => "rieffel-torus",
            SuiteId::QisoAtheta => "qiso-atheta",
            SuiteId::QisoCp => "qiso-cp",
            SuiteId::WangAf => "wang-af",
        }
    }

    pub fn all() -> [SuiteId; 12] {
        use SuiteId::*;
        [Su2Core, HopfAxioms, Haar, PodlesSymbolic, PodlesNumeric, Somu3, Umu2Action, Irreps, RieffelTorus, QisoAtheta, QisoCp, WangAf]
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Order of the blocks in J̃: `plus-minus` is J ⊕ (−J), `minus-plus` is (−J) ⊕ J.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum JTilde {
    PlusMinus,
    #[default]
    MinusPlus,
}

impl JTilde {
    pub fn doubling(self) -> Doubling {
        match self {
            JTilde::PlusMinus => Doubling::JMinusJ,
            JTilde::MinusPlus => Doubling::MinusJJ,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            JTilde::PlusMinus => "plus-minus",
            JTilde::MinusPlus => "minus-plus",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Parse "p/q" or a decimal.
pub fn parse_ratio(s: &str) -> Result<f64, String> {
    let v = match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| format!("bad numerator in `{s}`"))?;
            let q: f64 = q.trim().parse().map_err(|_| format!("bad denominator in `{s}`"))?;
            if q == 0.0 {
                return Err(format!("zero denominator in `{s}`"));
            }
            p / q
        }
        None => s.trim().parse().map_err(|_| format!("not a number: `{s}`"))?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("not finite: `{s}`"))
    }
}

/// Parse a half-integer spin such as `3/2`, `1` or `1.5` into 2l.
pub fn parse_spin(s: &str) -> Result<u32, String> {
    let v = parse_ratio(s)?;
    let twice = 2.0 * v;
    if v < 0.0 || twice.fract() != 0.0 {
        return Err(format!("`{s}` is not a non-negative half-integer"));
    }
    Ok(twice as u32)
}

#[derive(Parser, Clone, Debug, PartialEq)]
#[command(name = "qiso", version, about = "Run a verification suite and emit a report")]
pub struct SuiteConfig {
    #[arg(long, value_enum)]
    pub suite: SuiteId,
    #[arg(long)]
    pub mu: Option<f64>,
    #[arg(long)]
    pub t: Option<f64>,
    #[arg(long)]
    pub c: Option<f64>,
    /// θ as a decimal or p/q.
    #[arg(long, value_parser = parse_ratio)]
    pub theta: Option<f64>,
    #[arg(long)]
    pub nmax: Option<usize>,
    /// Highest spin l, e.g. 3/2.
    #[arg(long, value_parser = parse_spin)]
    pub lmax: Option<u32>,
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub jtilde: JTilde,
    /// Override for the numeric tolerances.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

impl SuiteConfig {
    pub fn new(suite: SuiteId) -> Self {
        SuiteConfig {
            suite,
            mu: None,
            t: None,
            c: None,
            theta: None,
            nmax: None,
            lmax: None,
            degree: None,
            jtilde: JTilde::default(),
            tol: None,
            out: None,
            format: Format::default(),
        }
    }
}

pub const MAX_DEGREE: usize = 6;
pub const MAX_TWICE_L: u32 = 4;
pub const MAX_NMAX: usize = 4096;

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("--mu {0} must lie in (0, 1)")]
    Mu(f64),
    #[error("--c {0} must be positive")]
    C(f64),
    #[error("--t {0} must lie in (0, 1)")]
    T(f64),
    #[error("--t {t} and --c {c} disagree: c = (1 − t)/t² = {implied}")]
    TAndC { t: f64, c: f64, implied: f64 },
    #[error("--nmax {0} must lie in [{MIN_NMAX}, {MAX_NMAX}]")]
    Nmax(usize),
    #[error("--lmax must be at most {}", MAX_TWICE_L as f64 / 2.0)]
    Lmax,
    #[error("--degree {0} exceeds {MAX_DEGREE}")]
    Degree(usize),
    #[error("--tol {0} must be positive")]
    Tol(f64),
}

/// Validated parameters with suite defaults filled in.
#[derive(Clone, Debug, PartialEq)]
pub struct Params {
    pub suite: SuiteId,
    pub mu: f64,
    pub c: f64,
    pub theta: f64,
    pub nmax: usize,
    pub twice_lmax: u32,
    pub degree: usize,
    pub jtilde: JTilde,
    pub tol: Option<f64>,
}

impl Params {
    pub fn resolve(cfg: &SuiteConfig) -> Result<Params, ConfigError> {
        if let Some(mu) = cfg.mu {
            if !(mu > 0.0 && mu < 1.0) {
                return Err(ConfigError::Mu(mu));
            }
        }
        if let Some(c) = cfg.c {
            if !(c > 0.0 && c.is_finite()) {
                return Err(ConfigError::C(c));
            }
        }
        let from_t = match cfg.t {
            Some(t) if !(t > 0.0 && t < 1.0) => return Err(ConfigError::T(t)),
            Some(t) => Some((1.0 - t) / (t * t)),
            None => None,
        };
        let c = match (cfg.c, from_t) {
            (Some(c), Some(implied)) if (c - implied).abs() > 1e-12 * c.max(1.0) => {
                return Err(ConfigError::TAndC { t: cfg.t.unwrap(), c, implied })
            }
            (Some(c), _) => c,
            (None, Some(implied)) => implied,
            (None, None) => 0.3,
        };
        let nmax = cfg.nmax.unwrap_or(if cfg.suite == SuiteId::QisoCp { 40 } else { 64 });
        if !(MIN_NMAX..=MAX_NMAX).contains(&nmax) {
            return Err(ConfigError::Nmax(nmax));
        }
        let twice_lmax = cfg.lmax.unwrap_or(3);
        if twice_lmax > MAX_TWICE_L {
            return Err(ConfigError::Lmax);
        }
        let degree = cfg.degree.unwrap_or(4);
        if degree > MAX_DEGREE {
            return Err(ConfigError::Degree(degree));
        }
        if let Some(tol) = cfg.tol {
            if !(tol > 0.0) {
                return Err(ConfigError::Tol(tol));
            }
        }
        Ok(Params {
            suite: cfg.suite,
            mu: cfg.mu.unwrap_or(0.5),
            c,
            theta: cfg.theta.unwrap_or(1.0 / 3.0),
            nmax,
            twice_lmax,
            degree,
            jtilde: cfg.jtilde,
            tol: cfg.tol,
        })
    }

    /// The parameters the suite reads, as (flag, value) pairs.
    pub fn relevant(&self) -> Vec<(&'static str, String)> {
        use SuiteId::*;
        let mut v: Vec<(&'static str, String)> = Vec::new();
        let lmax = if self.twice_lmax % 2 == 0 { format!("{}", self.twice_lmax / 2) } else { format!("{}/2", self.twice_lmax) };
        match self.suite {
            Su2Core | Haar => {
                v.push(("degree", self.degree.to_string()));
                v.push(("mu", self.mu.to_string()));
            }
            HopfAxioms => v.push(("degree", self.degree.to_string())),
            PodlesNumeric => {
                v.push(("mu", self.mu.to_string()));
                v.push(("c", self.c.to_string()));
                v.push(("nmax", self.nmax.to_string()));
            }
            Irreps => v.push(("lmax", lmax)),
            RieffelTorus => {
                v.push(("degree", self.degree.to_string()));
                v.push(("theta", self.theta.to_string()));
            }
            QisoAtheta => v.push(("jtilde", self.jtilde.as_str().to_string())),
            QisoCp => {
                v.push(("mu", self.mu.to_string()));
                v.push(("c", self.c.to_string()));
                v.push(("theta", self.theta.to_string()));
                v.push(("nmax", self.nmax.to_string()));
            }
            PodlesSymbolic | Somu3 | Umu2Action | WangAf => {}
        }
        if let Some(t) = self.tol {
            v.push(("tol", t.to_string()));
        }
        v
    }

    /// Command line reproducing this run.
    pub fn command_line(&self) -> String {
        let mut s = format!("qiso --suite {}", self.suite);
        for (k, v) in self.relevant() {
            s.push_str(&format!(" --{k} {v}"));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> SuiteConfig {
        SuiteConfig::parse_from(std::iter::once("qiso").chain(args.iter().copied()))
    }

    #[test]
    fn defaults() {
        let p = Params::resolve(&cfg(&["--suite", "qiso-cp"])).unwrap();
        assert_eq!((p.mu, p.c, p.nmax), (0.5, 0.3, 40));
        assert!((p.theta - 1.0 / 3.0).abs() < 1e-16);
        assert_eq!(p.jtilde, JTilde::MinusPlus);
        let p = Params::resolve(&cfg(&["--suite", "podles-numeric"])).unwrap();
        assert_eq!(p.nmax, 64);
    }

    #[test]
    fn ratios_and_spins() {
        assert_eq!(parse_ratio("1/4"), Ok(0.25));
        assert!(parse_ratio("1/0").is_err());
        assert_eq!(parse_spin("3/2"), Ok(3));
        assert_eq!(parse_spin("1"), Ok(2));
        assert!(parse_spin("1/3").is_err());
    }

    #[test]
    fn domains() {
        assert_eq!(Params::resolve(&cfg(&["--suite", "haar", "--mu", "1"])), Err(ConfigError::Mu(1.0)));
        assert_eq!(Params::resolve(&cfg(&["--suite", "haar", "--c", "0"])), Err(ConfigError::C(0.0)));
        assert_eq!(Params::resolve(&cfg(&["--suite", "qiso-cp", "--nmax", "3"])), Err(ConfigError::Nmax(3)));
        assert!(matches!(Params::resolve(&cfg(&["--suite", "haar", "--t", "0.5", "--c", "1"])), Err(ConfigError::TAndC { .. })));
        let p = Params::resolve(&cfg(&["--suite", "podles-numeric", "--t", "0.5"])).unwrap();
        assert_eq!(p.c, 2.0);
    }

    #[test]
    fn command_line_round_trips() {
        let p = Params::resolve(&cfg(&["--suite", "qiso-cp", "--theta", "1/3", "--nmax", "12"])).unwrap();
        let line = p.command_line();
        let args: Vec<&str> = line.split(' ').skip(1).collect();
        assert_eq!(Params::resolve(&cfg(&args)).unwrap(), p);
    }
}

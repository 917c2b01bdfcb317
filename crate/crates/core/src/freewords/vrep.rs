//! The representation V of the quantum isometry group on the truncated CP Hilbert space.

use super::{character_eval, Coeff, GroupAlgElem, GroupWord};
use crate::repnum::cp::{c_pm, idx, CPTriple, Sign};
use crate::repnum::{NumCheck, RepError, SparseOp, TOL_IDENTITY};
use crate::scalar::Scalar;
use num_complex::Complex64;
use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;

type Elem = GroupAlgElem<f64>;

/// Sparse matrix with group-algebra entries.
#[derive(Clone, Debug, PartialEq)]
pub struct GMat<C: Coeff> {
    pub dim: usize,
    entries: BTreeMap<(usize, usize), GroupAlgElem<C>>,
}

impl<C: Coeff> GMat<C> {
    pub fn zero(dim: usize) -> Self {
        GMat { dim, entries: BTreeMap::new() }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.add_at(i, i, &GroupAlgElem::one());
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> GroupAlgElem<C> {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &GroupAlgElem<C>)> {
        self.entries.iter()
    }

    pub fn add_at(&mut self, i: usize, j: usize, x: &GroupAlgElem<C>) {
        let s = self.get(i, j).add(x);
        if s.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), s);
        }
    }

    pub fn mul(&self, o: &GMat<C>) -> GMat<C> {
        let mut rows: BTreeMap<usize, Vec<(usize, &GroupAlgElem<C>)>> = BTreeMap::new();
        for (&(k, j), v) in &o.entries {
            rows.entry(k).or_default().push((j, v));
        }
        let mut out = GMat::zero(self.dim);
        for (&(i, k), a) in &self.entries {
            if let Some(r) = rows.get(&k) {
                for (j, b) in r {
                    out.add_at(i, *j, &a.mul(b));
                }
            }
        }
        out
    }

    /// Transpose with starred entries.
    pub fn star(&self) -> GMat<C> {
        let mut out = GMat::zero(self.dim);
        for (&(i, j), v) in &self.entries {
            out.add_at(j, i, &v.star());
        }
        out
    }

    /// Entrywise character evaluation, laid out like `like`.
    pub fn eval(&self, like: &SparseOp, theta: f64, y_sign: i32) -> SparseOp {
        let mut m = like.like();
        for (&(i, j), v) in &self.entries {
            m.set(i, j, character_eval(v, theta, y_sign));
        }
        m
    }

    /// Convert coefficients to `f64`.
    pub fn to_f64(&self) -> GMat<f64> {
        let mut out = GMat::zero(self.dim);
        for (&(i, j), v) in &self.entries {
            let mut e = Elem::zero();
            for (w, c) in v.terms() {
                e.add_term(w.clone(), c.to_complex().re);
            }
            out.add_at(i, j, &e);
        }
        out
    }
}

/// X ⊗ q for a real operator X.
pub fn tensor(x: &SparseOp, q: &Elem) -> GMat<f64> {
    let mut out = GMat::zero(x.dim());
    for (&(i, j), v) in x.entries() {
        out.add_at(i, j, &q.scale(&v.re));
    }
    out
}

/// Outcome of comparing two group-algebra matrices column by column.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Comparison {
    pub word_mismatches: usize,
    pub max_coeff_diff: f64,
    pub first_mismatch: Option<String>,
}

impl Comparison {
    /// Infinite when the word sets differ.
    pub fn residual(&self) -> f64 {
        if self.word_mismatches > 0 {
            f64::INFINITY
        } else {
            self.max_coeff_diff
        }
    }
}

/// Compare columns `j` with `cols(j)` true; words must agree exactly.
pub fn compare(a: &GMat<f64>, b: &GMat<f64>, cols: impl Fn(usize) -> bool) -> Comparison {
    let keys: BTreeSet<(usize, usize)> =
        a.entries.keys().chain(b.entries.keys()).copied().filter(|&(_, j)| cols(j)).collect();
    let mut cmp = Comparison::default();
    for (i, j) in keys {
        let (x, y) = (a.get(i, j), b.get(i, j));
        let wx: BTreeSet<&GroupWord> = x.terms().map(|(w, _)| w).collect();
        let wy: BTreeSet<&GroupWord> = y.terms().map(|(w, _)| w).collect();
        if wx != wy {
            cmp.word_mismatches += 1;
            cmp.first_mismatch.get_or_insert_with(|| format!("({i},{j}): {x} vs {y}"));
        }
        cmp.max_coeff_diff = cmp.max_coeff_diff.max(x.sub(&y).max_abs());
    }
    cmp
}

/// V(eₙ,eₙ) = (eₙ,eₙ)⊗gₙ and V(eₙ,−eₙ) = (eₙ,−eₙ)⊗gₙy, truncated at N_max.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRep {
    pub nmax: usize,
}

impl VRep {
    pub fn new(nmax: usize) -> Self {
        VRep { nmax }
    }

    pub fn dim(&self) -> usize {
        2 * (self.nmax + 1)
    }

    pub fn q_plus(n: usize) -> GroupWord {
        GroupWord::g(n as u32)
    }

    pub fn q_minus(n: usize) -> GroupWord {
        GroupWord::g(n as u32).mul(&GroupWord::y())
    }

    /// Ũ in the basis (eₙ⁺, eₙ⁻): the block ½[[g+gy, g−gy], [g−gy, g+gy]] for each n.
    pub fn u<C: Coeff>(&self) -> GMat<C> {
        let half = C::from_ratio(1, 2);
        let mhalf = C::from_ratio(-1, 2);
        let mut m = GMat::zero(self.dim());
        for n in 0..=self.nmax {
            let sum = GroupAlgElem::term(Self::q_plus(n), half.clone()).add(&GroupAlgElem::term(Self::q_minus(n), half.clone()));
            let diff = GroupAlgElem::term(Self::q_plus(n), half.clone()).add(&GroupAlgElem::term(Self::q_minus(n), mhalf.clone()));
            let (p, q) = (idx(n, Sign::Plus), idx(n, Sign::Minus));
            m.add_at(p, p, &sum);
            m.add_at(q, q, &sum);
            m.add_at(p, q, &diff);
            m.add_at(q, p, &diff);
        }
        m
    }

    /// Ũ*Ũ = ŨŨ* = 1 with exact rational coefficients.
    pub fn unitarity(&self) -> (bool, bool) {
        let u = self.u::<Scalar>();
        let one = GMat::identity(self.dim());
        (u.star().mul(&u) == one, u.mul(&u.star()) == one)
    }

    /// α(X) = Ũ(X⊗1)Ũ*.
    pub fn ad(&self, x: &SparseOp) -> Result<GMat<f64>, RepError> {
        if x.dim() != self.dim() {
            return Err(RepError::Size(x.dim(), self.dim()));
        }
        let u = self.u::<f64>();
        let us = u.star();
        let block = |k: usize| [k & !1, k | 1];
        let mut out = GMat::zero(self.dim());
        for (&(k, l), v) in x.entries() {
            if v.im != 0.0 {
                return Err(RepError::Domain(format!("complex entry at ({k},{l})")));
            }
            for i in block(k) {
                let a = u.get(i, k).scale(&v.re);
                if a.is_zero() {
                    continue;
                }
                for j in block(l) {
                    out.add_at(i, j, &a.mul(&us.get(l, j)));
                }
            }
        }
        Ok(out)
    }
}

/// Normalization of the α(B) prefactor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BNorm {
    /// 1/(4c_±(n)^{1/2}), which is what Ũ(B⊗1)Ũ* produces.
    Derived,
    /// 1/(4c_±(n)) as displayed in the source.
    AsDisplayed,
}

fn w(x: GroupWord) -> Elem {
    Elem::word(x)
}

fn qq(a: GroupWord, b: GroupWord) -> Elem {
    w(a.mul(&b.inv()))
}

/// Σ A Pₙ ⊗ (1/2λ₊){λ₊(1 + q⁺q⁻*) + λ₋(1 − q⁺q⁻*)} + Σ A Qₙ ⊗ (1/2λ₋){λ₊(1 − q⁺q⁻*) + λ₋(1 + q⁺q⁻*)}.
pub fn alpha_a_closed(t: &CPTriple) -> GMat<f64> {
    let (lp, lm) = (t.lambda_plus, t.lambda_minus);
    let one = Elem::one();
    let mut out = GMat::zero(t.a.dim());
    for n in 0..=t.nmax {
        let x = qq(VRep::q_plus(n), VRep::q_minus(n));
        let plus = one.add(&x);
        let minus = one.sub(&x);
        let cp = plus.scale(&lp).add(&minus.scale(&lm)).scale(&(1.0 / (2.0 * lp)));
        let cm = minus.scale(&lp).add(&plus.scale(&lm)).scale(&(1.0 / (2.0 * lm)));
        for (s, c) in [(Sign::Plus, cp), (Sign::Minus, cm)] {
            let op = t.a.mul(&t.proj(n, s)).unwrap();
            for (&(i, j), v) in tensor(&op, &c).entries() {
                out.add_at(i, j, v);
            }
        }
    }
    out
}

/// Σ_{n≥1} B Pₙ ⊗ k₊[(c₊^½+c₋^½)(q⁺q⁺* + q⁻q⁻*) + (c₊^½−c₋^½)(q⁻q⁺* + q⁺q⁻*)]
/// + Σ_{n≥1} B Qₙ ⊗ k₋[(c₊^½+c₋^½)(q⁺q⁺* + q⁻q⁻*) − (c₊^½−c₋^½)(q⁺q⁻* + q⁻q⁺*)],
/// with products q_{n−1}q_n*.
pub fn alpha_b_closed(t: &CPTriple, norm: BNorm) -> GMat<f64> {
    let mut out = GMat::zero(t.b.dim());
    for n in 1..=t.nmax {
        let (cp, cm) = (c_pm(t.mu, t.c, n, Sign::Plus), c_pm(t.mu, t.c, n, Sign::Minus));
        let (sp, sm) = (cp.sqrt(), cm.sqrt());
        let (p0, m0, p1, m1) = (VRep::q_plus(n - 1), VRep::q_minus(n - 1), VRep::q_plus(n), VRep::q_minus(n));
        let same = qq(p0.clone(), p1.clone()).add(&qq(m0.clone(), m1.clone()));
        let cross = qq(m0, p1).add(&qq(p0, m1));
        let (kp, km) = match norm {
            BNorm::Derived => (1.0 / (4.0 * sp), 1.0 / (4.0 * sm)),
            BNorm::AsDisplayed => (1.0 / (4.0 * cp), 1.0 / (4.0 * cm)),
        };
        let coef_p = same.scale(&(sp + sm)).add(&cross.scale(&(sp - sm))).scale(&kp);
        let coef_m = same.scale(&(sp + sm)).sub(&cross.scale(&(sp - sm))).scale(&km);
        for (s, c) in [(Sign::Plus, coef_p), (Sign::Minus, coef_m)] {
            let op = t.b.mul(&t.proj(n, s)).unwrap();
            for (&(i, j), v) in tensor(&op, &c).entries() {
                out.add_at(i, j, v);
            }
        }
    }
    out
}

/// Σ_{n≥1} τ(Pₙ+Qₙ) ⊗ q⁺_{n−1}q⁺ₙ*.
pub fn alpha_tau_closed(t: &CPTriple) -> GMat<f64> {
    let mut out = GMat::zero(t.tau.dim());
    for n in 1..=t.nmax {
        let op = t.tau.mul(&t.proj_tilde(n)).unwrap();
        for (&(i, j), v) in tensor(&op, &qq(VRep::q_plus(n - 1), VRep::q_plus(n))).entries() {
            out.add_at(i, j, v);
        }
    }
    out
}

/// The relations alg1–alg4 for q⁺ₙ = gₙ, q⁻ₙ = gₙy, as worst coefficient over n.
pub fn alg_relations(t: &CPTriple) -> [(String, f64); 4] {
    let (p, m) = (VRep::q_plus, VRep::q_minus);
    let sq = |n: usize| {
        let (a, b) = (c_pm(t.mu, t.c, n, Sign::Plus).sqrt(), c_pm(t.mu, t.c, n, Sign::Minus).sqrt());
        (a + b, a - b)
    };
    let mut r = [0.0f64; 4];
    for n in 0..=t.nmax {
        r[0] = r[0].max(qq(p(n), m(n)).sub(&qq(m(n), p(n))).max_abs());
        if n >= 1 {
            let (s, d) = sq(n);
            let same = qq(p(n - 1), p(n)).sub(&qq(m(n - 1), m(n)));
            let e2 = same.scale(&s).add(&qq(p(n - 1), m(n)).sub(&qq(m(n - 1), p(n))).scale(&d));
            let e3 = same.scale(&s).add(&qq(m(n - 1), p(n)).sub(&qq(p(n - 1), m(n))).scale(&d));
            r[1] = r[1].max(e2.max_abs());
            r[2] = r[2].max(e3.max_abs());
        }
        if n < t.nmax {
            let (s, d) = sq(n + 1);
            let lhs = qq(p(n + 1), p(n)).sub(&qq(m(n + 1), m(n))).scale(&s);
            let rhs = qq(m(n + 1), p(n)).sub(&qq(p(n + 1), m(n))).scale(&d);
            r[3] = r[3].max(lhs.sub(&rhs).max_abs());
        }
    }
    [
        ("alg1: q⁺ₙq⁻ₙ* = q⁻ₙq⁺ₙ*".into(), r[0]),
        ("alg2".into(), r[1]),
        ("alg3".into(), r[2]),
        ("alg4".into(), r[3]),
    ]
}

/// yₙ = q⁻ₙ*q⁺ₙ.
pub fn y_n(n: usize) -> GroupWord {
    VRep::q_minus(n).inv().mul(&VRep::q_plus(n))
}

/// id8: q⁻ₙ = q⁺ₙy_{n−1} and id9: yₙ = y_{n−1}, exact in reduced words.
pub fn word_identities(nmax: usize) -> (bool, bool) {
    let id8 = (1..=nmax).all(|n| VRep::q_minus(n) == VRep::q_plus(n).mul(&y_n(n - 1)));
    let id9 = (1..=nmax).all(|n| y_n(n) == y_n(n - 1) && y_n(n) == GroupWord::y());
    (id8, id9)
}

fn interior_cols(t: &CPTriple) -> impl Fn(usize) -> bool + '_ {
    move |j| t.a.is_interior(j)
}

/// ad_V of A, B, τ, P̃ₙ and 1 against the closed forms, plus the group-algebra identities.
pub fn closed_form_suite(rep: &VRep, t: &CPTriple) -> Result<Vec<NumCheck>, RepError> {
    let p = vec![("mu", t.mu), ("c", t.c), ("nmax", t.nmax as f64)];
    let mut out = Vec::new();
    let (l, r) = rep.unitarity();
    out.push(NumCheck::new("V: Ũ*Ũ = 1 (exact)", &p, if l { 0.0 } else { f64::INFINITY }, TOL_IDENTITY));
    out.push(NumCheck::new("V: ŨŨ* = 1 (exact)", &p, if r { 0.0 } else { f64::INFINITY }, TOL_IDENTITY));
    let cols = interior_cols(t);
    let cases: Vec<(&str, GMat<f64>, GMat<f64>)> = vec![
        ("α(A) = closed form", rep.ad(&t.a)?, alpha_a_closed(t)),
        ("α(B) = closed form", rep.ad(&t.b)?, alpha_b_closed(t, BNorm::Derived)),
        ("α(τ) = Σ τ(Pₙ+Qₙ) ⊗ q⁺ₙ₋₁q⁺ₙ*", rep.ad(&t.tau)?, alpha_tau_closed(t)),
        ("α(1) = 1 ⊗ ε", rep.ad(&t.identity())?, tensor(&t.identity(), &Elem::one())),
    ];
    for (id, got, want) in cases {
        out.push(NumCheck::new(id, &p, compare(&got, &want, &cols).residual(), TOL_IDENTITY));
    }
    let mut worst = 0.0f64;
    for n in 0..=t.nmax {
        let pt = t.proj_tilde(n);
        worst = worst.max(compare(&rep.ad(&pt)?, &tensor(&pt, &Elem::one()), &cols).residual());
    }
    out.push(NumCheck::new("α(P̃ₙ) = P̃ₙ ⊗ ε", &p, worst, TOL_IDENTITY));
    for (id, res) in alg_relations(t) {
        out.push(NumCheck::new(id, &p, res, TOL_IDENTITY));
    }
    let (id8, id9) = word_identities(t.nmax);
    out.push(NumCheck::new("q⁻ₙ = q⁺ₙyₙ₋₁ (exact)", &p, if id8 { 0.0 } else { f64::INFINITY }, TOL_IDENTITY));
    out.push(NumCheck::new("yₙ = yₙ₋₁ = y (exact)", &p, if id9 { 0.0 } else { f64::INFINITY }, TOL_IDENTITY));
    Ok(out)
}

/// ad_V(XY) = ad_V(X)ad_V(Y) on interior columns for X, Y ∈ {A, B, P̃ₙ}.
pub fn multiplicativity(rep: &VRep, t: &CPTriple, ns: &[usize]) -> Result<NumCheck, RepError> {
    let mut ops = vec![t.a.clone(), t.b.clone()];
    ops.extend(ns.iter().map(|&n| t.proj_tilde(n)));
    let ads: Vec<GMat<f64>> = ops.iter().map(|x| rep.ad(x)).collect::<Result<_, _>>()?;
    let cols = interior_cols(t);
    let mut worst = 0.0f64;
    for (x, ax) in ops.iter().zip(&ads) {
        for (y, ay) in ops.iter().zip(&ads) {
            let lhs = rep.ad(&x.mul(y)?)?;
            worst = worst.max(compare(&lhs, &ax.mul(ay), &cols).residual());
        }
    }
    Ok(NumCheck::new("α(XY) = α(X)α(Y)", &[("nmax", t.nmax as f64)], worst, TOL_IDENTITY))
}

/// φ ∘ ad_V(X) against φ(Ũ)Xφ(Ũ)* computed with complex matrices.
pub fn evaluation_homomorphism(rep: &VRep, x: &SparseOp, theta: f64, y_sign: i32) -> Result<f64, RepError> {
    let route1 = rep.ad(x)?.eval(x, theta, y_sign);
    let u = rep.u::<f64>().eval(x, theta, y_sign);
    let route2 = u.mul(x)?.mul(&u.adjoint())?;
    Ok(route1.sub(&route2)?.full_residual())
}

/// The commutator [α_φ(τ)P₊, τ₁] on interior columns eₙ⁺, n ≥ 2.
#[derive(Clone, Debug, PartialEq)]
pub struct NoActionWitness {
    pub theta: f64,
    pub nmax: usize,
    /// |1 − e(θ)|.
    pub expected: f64,
    pub column_norms: Vec<(usize, f64)>,
    pub max_norm_dev: f64,
    pub max_entry_dev: f64,
}

impl NoActionWitness {
    pub fn min_norm(&self) -> f64 {
        self.column_norms.iter().map(|c| c.1).fold(f64::INFINITY, f64::min)
    }

    pub fn checks(&self) -> Vec<NumCheck> {
        let p = [("theta", self.theta), ("nmax", self.nmax as f64)];
        vec![
            NumCheck::new("no-action: ‖[α_φ(τ)P₊, τ₁]eₙ‖ = |1 − e(θ)|", &p, self.max_norm_dev, TOL_IDENTITY),
            NumCheck::new("no-action: entry (n−2, n) = λₙ₋₁ − λₙ", &p, self.max_entry_dev, TOL_IDENTITY),
        ]
    }
}

fn e(x: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * x)
}

pub fn no_action_witness(theta: f64, nmax: usize) -> Result<NoActionWitness, RepError> {
    let t = CPTriple::new(0.5, 0.3, nmax)?;
    let rep = VRep::new(nmax);
    let alpha_tau = rep.ad(&t.tau)?.eval(&t.tau, theta, 1);
    let pp = t.proj_plus();
    let tau1 = t.tau.mul(&pp)?;
    let left = alpha_tau.mul(&pp)?;
    let comm = left.mul(&tau1)?.sub(&tau1.mul(&left)?)?;
    let expected = (Complex64::new(1.0, 0.0) - e(theta)).norm();
    let lambda = |n: usize| e(n as f64 * theta);
    let mut w = NoActionWitness { theta, nmax, expected, column_norms: Vec::new(), max_norm_dev: 0.0, max_entry_dev: 0.0 };
    for n in 2..nmax {
        let j = idx(n, Sign::Plus);
        let col = comm.column(j);
        let norm = crate::repnum::vec_norm(&col);
        w.column_norms.push((n, norm));
        w.max_norm_dev = w.max_norm_dev.max((norm - expected).abs());
        let entry = comm.get(idx(n - 2, Sign::Plus), j);
        w.max_entry_dev = w.max_entry_dev.max((entry - (lambda(n - 1) - lambda(n))).norm());
    }
    Ok(w)
}

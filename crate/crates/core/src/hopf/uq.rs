//! U_μ(su(2)), its pairing with SU_μ(2) and the induced left and right actions.

use super::{HopfData, TensorPoly};
use crate::ncalg::{complete, Alphabet, CompletionOptions, NCPoly, Presentation, Word};
use crate::qgroups::su2::{su2, su2_hopf};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

pub fn uq_alphabet() -> Arc<Alphabet> {
    static A: OnceLock<Arc<Alphabet>> = OnceLock::new();
    A.get_or_init(|| {
        Alphabet::new(&[("K", "K", 1), ("Kinv", "Kinv", 1), ("E", "F", 1), ("F", "E", 1)]).unwrap()
    })
    .clone()
}

pub fn uq_relations() -> Vec<(String, NCPoly)> {
    let a = uq_alphabet();
    let w = |n: &[&str]| NCPoly::monomial(&a, n);
    let one = NCPoly::one(&a);
    let mu = Scalar::mu();
    // (μ − μ⁻¹)⁻¹
    let c = (&Scalar::one() / &(&mu - &Scalar::mu_pow(-1))).unwrap();
    vec![
        ("uq1".into(), &w(&["K", "Kinv"]) - &one),
        ("uq2".into(), &w(&["Kinv", "K"]) - &one),
        ("uq3".into(), &w(&["K", "E"]) - &w(&["E", "K"]).scale(&mu)),
        ("uq4".into(), &w(&["F", "K"]) - &w(&["K", "F"]).scale(&mu)),
        (
            "uq5".into(),
            &(&w(&["E", "F"]) - &w(&["F", "E"])) - &(&w(&["K", "K"]) - &w(&["Kinv", "Kinv"])).scale(&c),
        ),
    ]
}

pub fn uq() -> &'static Presentation {
    static P: OnceLock<Presentation> = OnceLock::new();
    P.get_or_init(|| {
        let pres = Presentation::new("Uq", &uq_alphabet(), uq_relations()).star_closed();
        complete(&pres, CompletionOptions::bound(6)).expect("U_μ(su(2)) completes")
    })
}

pub fn uq_hopf() -> &'static HopfData {
    static H: OnceLock<HopfData> = OnceLock::new();
    H.get_or_init(|| {
        let p = uq();
        let (k, ki, e, f) = (p.gen("K"), p.gen("Kinv"), p.gen("E"), p.gen("F"));
        let mut delta = BTreeMap::new();
        delta.insert("K".to_string(), TensorPoly::pure(&[&k, &k]));
        delta.insert("Kinv".to_string(), TensorPoly::pure(&[&ki, &ki]));
        delta.insert("E".to_string(), &TensorPoly::pure(&[&e, &k]) + &TensorPoly::pure(&[&ki, &e]));
        delta.insert("F".to_string(), &TensorPoly::pure(&[&f, &k]) + &TensorPoly::pure(&[&ki, &f]));
        let eps: BTreeMap<String, Scalar> = [("K", 1), ("Kinv", 1), ("E", 0), ("F", 0)]
            .into_iter()
            .map(|(g, v)| (g.to_string(), Scalar::from_int(v)))
            .collect();
        let mut kappa = BTreeMap::new();
        kappa.insert("K".to_string(), ki.clone());
        kappa.insert("Kinv".to_string(), k.clone());
        kappa.insert("E".to_string(), e.scale(&-&Scalar::mu()));
        kappa.insert("F".to_string(), f.scale(&-&Scalar::mu_pow(-1)));
        HopfData::new(p.clone(), delta, eps, kappa).expect("complete generator data")
    })
}

/// ⟨g, y⟩ for single generators: ⟨K^{±1}, α*⟩ = ⟨K^{∓1}, α⟩ = μ^{±1/2}, ⟨E, γ⟩ = ⟨F, −μγ*⟩ = 1.
pub fn generator_pairing(g: &str, y: &str) -> Scalar {
    let s = Scalar::s();
    let s_inv = Scalar::s().pow(-1);
    match (g, y) {
        ("K", "α*") | ("Kinv", "α") => s,
        ("Kinv", "α*") | ("K", "α") => s_inv,
        ("E", "γ") => Scalar::one(),
        ("F", "γ*") => -Scalar::mu_pow(-1),
        _ => Scalar::zero(),
    }
}

/// Fundamental matrix π(g)_{ab} = ⟨g, t_ab⟩ with t = [[α, −μγ*], [γ, α*]].
fn fundamental(g: &str) -> [[Scalar; 2]; 2] {
    let t = [["α", "γ*"], ["γ", "α*"]];
    let scale = |a: usize, b: usize| if (a, b) == (0, 1) { -Scalar::mu() } else { Scalar::one() };
    let mut m: [[Scalar; 2]; 2] = Default::default();
    for a in 0..2 {
        for b in 0..2 {
            m[a][b] = &scale(a, b) * &generator_pairing(g, t[a][b]);
        }
    }
    m
}

/// SU_μ(2) generator as c·t_ab.
fn as_matrix_entry(y: &str) -> (Scalar, usize, usize) {
    match y {
        "α" => (Scalar::one(), 0, 0),
        "α*" => (Scalar::one(), 1, 1),
        "γ" => (Scalar::one(), 1, 0),
        "γ*" => (-Scalar::mu_pow(-1), 0, 1),
        _ => unreachable!("not an SU_μ(2) generator: {y}"),
    }
}

type Vector = BTreeMap<Vec<u8>, Scalar>;

fn apply_factor(v: &Vector, pos: usize, m: &[[Scalar; 2]; 2]) -> Vector {
    let mut out = Vector::new();
    for (idx, c) in v {
        for a in 0..2u8 {
            let e = &m[a as usize][idx[pos] as usize];
            if e.is_zero() {
                continue;
            }
            let mut ni = idx.clone();
            ni[pos] = a;
            let slot = out.entry(ni).or_insert_with(Scalar::zero);
            *slot = &*slot + &(c * e);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// π_n(g) on (C²)^{⊗n}: the n-fold coproduct of g in the fundamental representation.
fn apply_generator(v: &Vector, g: &str, n: usize) -> Vector {
    let k = fundamental("K");
    let ki = fundamental("Kinv");
    match g {
        "K" | "Kinv" => {
            let m = if g == "K" { k } else { ki };
            (0..n).fold(v.clone(), |acc, i| apply_factor(&acc, i, &m))
        }
        "E" | "F" => {
            let m = fundamental(g);
            let mut out = Vector::new();
            for j in 0..n {
                let mut w = apply_factor(v, j, &m);
                for i in 0..j {
                    w = apply_factor(&w, i, &ki);
                }
                for i in j + 1..n {
                    w = apply_factor(&w, i, &k);
                }
                for (idx, c) in w {
                    let slot = out.entry(idx).or_insert_with(Scalar::zero);
                    *slot = &*slot + &c;
                }
            }
            out.retain(|_, c| !c.is_zero());
            out
        }
        _ => unreachable!("not a U_μ(su(2)) generator: {g}"),
    }
}

fn pair_words(f: &Word, x: &Word) -> Scalar {
    let ua = uq_alphabet();
    let sa = su2().alphabet();
    let mut coeff = Scalar::one();
    let mut rows = Vec::with_capacity(x.len());
    let mut cols = Vec::with_capacity(x.len());
    for &y in x.0.iter() {
        let (c, a, b) = as_matrix_entry(sa.name(y));
        coeff = &coeff * &c;
        rows.push(a as u8);
        cols.push(b as u8);
    }
    let mut v = Vector::new();
    v.insert(cols, Scalar::one());
    for &g in f.0.iter().rev() {
        v = apply_generator(&v, ua.name(g), x.len());
        if v.is_empty() {
            return Scalar::zero();
        }
    }
    match v.get(&rows) {
        Some(c) => &coeff * c,
        None => Scalar::zero(),
    }
}

/// ⟨f, x⟩ computed in tensor powers of the fundamental representation.
pub fn uq_pair(f: &NCPoly, x: &NCPoly) -> Scalar {
    let mut acc = Scalar::zero();
    for (fw, fc) in f.terms() {
        for (xw, xc) in x.terms() {
            acc = &acc + &(&(fc * xc) * &pair_words(fw, xw));
        }
    }
    acc
}

/// ⟨f, x⟩ by Sweedler recursion: split a U_μ(su(2)) word through Δ of SU_μ(2),
/// and a single generator through its own coproduct.
pub fn uq_pair_recursive(f: &NCPoly, x: &NCPoly) -> Scalar {
    let mut acc = Scalar::zero();
    for (fw, fc) in f.terms() {
        for (xw, xc) in x.terms() {
            acc = &acc + &(&(fc * xc) * &rec_words(fw, xw));
        }
    }
    acc
}

fn rec_words(f: &Word, x: &Word) -> Scalar {
    let h = su2_hopf();
    match f.len() {
        0 => h.counit_word(x),
        1 => rec_gen(f.0[0], x),
        n => {
            let head = f.slice(0, 1);
            let tail = f.slice(1, n);
            let dx = h.delta_of_word(x);
            let mut acc = Scalar::zero();
            for (legs, c) in dx.terms() {
                let l = rec_words(&head, &legs[0]);
                if l.is_zero() {
                    continue;
                }
                acc = &acc + &(&(c * &l) * &rec_words(&tail, &legs[1]));
            }
            acc
        }
    }
}

fn rec_gen(g: u16, x: &Word) -> Scalar {
    let hq = uq_hopf();
    let ua = uq_alphabet();
    if x.is_empty() {
        return hq.counit_word(&Word::from_slice(&[g]));
    }
    let sa = su2().alphabet();
    if x.len() == 1 {
        return generator_pairing(ua.name(g), sa.name(x.0[0]));
    }
    let first = x.slice(0, 1);
    let rest = x.slice(1, x.len());
    let mut acc = Scalar::zero();
    for (legs, c) in hq.generator_delta(g).terms() {
        let l = rec_single(&legs[0], &first);
        if l.is_zero() {
            continue;
        }
        acc = &acc + &(&(c * &l) * &rec_single(&legs[1], &rest));
    }
    acc
}

fn rec_single(f: &Word, x: &Word) -> Scalar {
    match f.len() {
        0 => su2_hopf().counit_word(x),
        1 => rec_gen(f.0[0], x),
        _ => rec_words(f, x),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// f ▷ x = ⟨f, x₍₂₎⟩x₍₁₎ and x ◁ f = ⟨f, x₍₁₎⟩x₍₂₎.
pub fn uq_act(side: Side, f: &NCPoly, x: &NCPoly) -> NCPoly {
    let dx = su2_hopf().delta(x);
    let leg = match side {
        Side::Left => 1,
        Side::Right => 0,
    };
    let fw: Vec<(Word, Scalar)> = f.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
    let out = dx.apply_functional(leg, |w| {
        let mut acc = Scalar::zero();
        for (u, c) in &fw {
            acc = &acc + &(c * &pair_words(u, w));
        }
        acc
    });
    su2().normal_form(&out.to_poly())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::Status;

    fn g(n: &str) -> NCPoly {
        uq().gen(n)
    }

    fn x(n: &[&str]) -> NCPoly {
        su2().word(n)
    }

    #[test]
    fn presentation_completes() {
        assert_eq!(uq().status(), Status::Confluent, "{:?}", uq().diagnostics());
    }

    #[test]
    fn hopf_axioms_low_degree() {
        let h = uq_hopf();
        let p = uq();
        let sample: Vec<_> = p
            .basis_words(2)
            .into_iter()
            .map(|w| (p.alphabet().render_word(&w), NCPoly::word(p.alphabet(), w)))
            .collect();
        for v in h.axiom_suite(&sample) {
            assert!(v.passed, "{} {}: {}", v.label, v.axiom, v.residual);
        }
    }

    #[test]
    fn pairing_fixtures() {
        assert_eq!(uq_pair(&g("K"), &x(&["α*"])), Scalar::s());
        assert!(uq_pair(&g("E"), &x(&["α"])).is_zero());
        assert!(uq_pair(&uq().one(), &su2().one()).is_one());
        assert!(uq_pair(&g("E"), &x(&["γ"])).is_one());
        assert!(uq_pair(&g("F"), &x(&["γ*"]).scale(&-Scalar::mu())).is_one());
    }

    #[test]
    fn left_action_table() {
        let mu = Scalar::mu();
        let s = Scalar::s();
        let si = s.pow(-1);
        let m_gs = x(&["γ*"]).scale(&-&mu);
        let cases: Vec<(&str, NCPoly, NCPoly)> = vec![
            ("E", x(&["α"]), m_gs.clone()),
            ("E", x(&["γ"]), x(&["α*"])),
            ("E", x(&["γ*"]), su2().zero()),
            ("E", x(&["α*"]), su2().zero()),
            ("F", m_gs.clone(), x(&["α"])),
            ("F", x(&["α*"]), x(&["γ"])),
            ("F", x(&["α"]), su2().zero()),
            ("F", x(&["γ"]), su2().zero()),
            ("K", x(&["α"]), x(&["α"]).scale(&si)),
            ("K", x(&["γ*"]), x(&["γ*"]).scale(&s)),
            ("K", x(&["γ"]), x(&["γ"]).scale(&si)),
            ("K", x(&["α*"]), x(&["α*"]).scale(&s)),
        ];
        for (f, arg, want) in cases {
            assert_eq!(uq_act(Side::Left, &g(f), &arg), want, "{f} ▷ {arg}");
        }
    }

    #[test]
    fn right_action_table() {
        let mu = Scalar::mu();
        let s = Scalar::s();
        let si = s.pow(-1);
        let m_gs = x(&["γ*"]).scale(&-&mu);
        let cases: Vec<(&str, NCPoly, NCPoly)> = vec![
            ("E", x(&["γ"]), x(&["α"])),
            ("E", x(&["α*"]), m_gs.clone()),
            ("E", x(&["α"]), su2().zero()),
            ("E", x(&["γ*"]), su2().zero()),
            ("F", x(&["α"]), x(&["γ"])),
            ("F", m_gs.clone(), x(&["α*"])),
            ("F", x(&["γ"]), su2().zero()),
            ("F", x(&["α*"]), su2().zero()),
            ("K", x(&["α"]), x(&["α"]).scale(&si)),
            ("K", x(&["γ*"]), x(&["γ*"]).scale(&si)),
            ("K", x(&["γ"]), x(&["γ"]).scale(&s)),
            ("K", x(&["α*"]), x(&["α*"]).scale(&s)),
        ];
        for (f, arg, want) in cases {
            assert_eq!(uq_act(Side::Right, &g(f), &arg), want, "{arg} ◁ {f}");
        }
    }

    #[test]
    fn unit_acts_trivially() {
        assert_eq!(uq_act(Side::Left, &g("K"), &su2().one()), su2().one());
    }

    #[test]
    fn routes_agree() {
        let fs = uq().basis_words(2);
        let xs = su2().basis_words(3);
        for f in &fs {
            let fp = NCPoly::word(uq().alphabet(), f.clone());
            for w in &xs {
                let xp = NCPoly::word(su2().alphabet(), w.clone());
                assert_eq!(uq_pair(&fp, &xp), uq_pair_recursive(&fp, &xp), "{fp} / {xp}");
            }
        }
    }

    #[test]
    fn pairing_respects_relations() {
        for f in uq().basis_words(2) {
            let fp = NCPoly::word(uq().alphabet(), f);
            for (label, r) in su2().relations() {
                assert!(uq_pair(&fp, r).is_zero(), "{fp} vs {label}");
            }
        }
        for w in su2().basis_words(2) {
            let xp = NCPoly::word(su2().alphabet(), w);
            for (label, r) in uq().relations() {
                assert!(uq_pair(r, &xp).is_zero(), "{label} vs {xp}");
            }
        }
    }

    #[test]
    fn module_algebra_law() {
        let hq = uq_hopf();
        let p = su2();
        let pairs = [(["α"], ["γ"]), (["γ*"], ["α*"]), (["γ"], ["γ*"]), (["α*"], ["α"])];
        for name in ["E", "F", "K"] {
            let f = g(name);
            let df = hq.delta(&f);
            for (a, b) in pairs {
                let (xa, xb) = (x(&a), x(&b));
                let lhs = uq_act(Side::Left, &f, &p.mul(&xa, &xb));
                let mut rhs = p.zero();
                for (legs, c) in df.terms() {
                    let l = uq_act(Side::Left, &NCPoly::word(uq().alphabet(), legs[0].clone()), &xa);
                    let r = uq_act(Side::Left, &NCPoly::word(uq().alphabet(), legs[1].clone()), &xb);
                    rhs.add_scaled(&p.mul(&l, &r), c);
                }
                assert_eq!(lhs, rhs, "{name} ▷ {a:?}{b:?}");
            }
        }
    }

    #[test]
    fn star_compatibility_of_left_action() {
        let hq = uq_hopf();
        for name in ["E", "F", "K"] {
            let f = g(name);
            let kf = uq().normal_form(&hq.antipode(&f).star());
            for w in su2().basis_words(2) {
                let xp = NCPoly::word(su2().alphabet(), w);
                let lhs = uq_act(Side::Left, &f, &xp).star();
                let rhs = uq_act(Side::Left, &kf, &xp.star());
                assert_eq!(su2().normal_form(&lhs), rhs, "{name} on {xp}");
            }
        }
    }
}

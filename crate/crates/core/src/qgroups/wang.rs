//! Wang's free unitary quantum groups A_{u,n}(Q) for diagonal Q, and the
//! quantum permutation groups.

use super::Check;
use crate::hopf::{matrix_coproduct, HopfData};
use crate::ncalg::{complete, Alphabet, CompletionOptions, NCPoly, Presentation};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::sync::Arc;

pub const QPERM_BOUND: usize = 5;

pub fn qperm_name(i: usize, j: usize) -> String {
    format!("a{}{}", i + 1, j + 1)
}

pub fn qperm_alphabet(n: usize) -> Arc<Alphabet> {
    let names: Vec<String> = (0..n).flat_map(|i| (0..n).map(move |j| qperm_name(i, j))).collect();
    let gens: Vec<(&str, &str, u32)> = names.iter().map(|s| (s.as_str(), s.as_str(), 1)).collect();
    Alphabet::new(&gens).expect("distinct generator names")
}

/// a_ij² = a_ij = a_ij*, Σ_j a_ij = 1, Σ_i a_ij = 1.
pub fn qperm_relations(a: &Arc<Alphabet>, n: usize) -> Vec<(String, NCPoly)> {
    let g = |i: usize, j: usize| NCPoly::gen(a, &qperm_name(i, j));
    let one = NCPoly::one(a);
    let mut rels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let x = g(i, j);
            rels.push((format!("{}²", qperm_name(i, j)), &(&x * &x) - &x));
        }
    }
    for i in 0..n {
        let mut row = -&one;
        let mut col = -&one;
        for j in 0..n {
            row = &row + &g(i, j);
            col = &col + &g(j, i);
        }
        rels.push((format!("row{}", i + 1), row));
        rels.push((format!("col{}", i + 1), col));
    }
    rels
}

pub fn qperm(n: usize) -> Presentation {
    let a = qperm_alphabet(n);
    let p = Presentation::new(&format!("QPerm({n})"), &a, qperm_relations(&a, n));
    complete(&p, CompletionOptions::bound(QPERM_BOUND)).expect("idempotent and sum relations orient")
}

fn generator_matrix(p: &Presentation, n: usize, name: impl Fn(usize, usize) -> String) -> Vec<Vec<NCPoly>> {
    (0..n).map(|i| (0..n).map(|j| p.gen(&name(i, j))).collect()).collect()
}

/// Δ(a_ij) = Σ_k a_ik ⊗ a_kj, ε(a_ij) = δ_ij, κ(a_ij) = a_ji.
pub fn qperm_hopf(p: Presentation, n: usize) -> HopfData {
    let u = generator_matrix(&p, n, qperm_name);
    let du = matrix_coproduct(&u);
    let mut delta = BTreeMap::new();
    let mut eps = BTreeMap::new();
    let mut kappa = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            delta.insert(qperm_name(i, j), du[i][j].clone());
            eps.insert(qperm_name(i, j), Scalar::from_int((i == j) as i64));
            kappa.insert(qperm_name(i, j), u[j][i].clone());
        }
    }
    HopfData::new(p, delta, eps, kappa).expect("data for every generator")
}

/// Outcome of closing a presentation under x_k = 0 whenever Σ_k x_k*x_k = 0.
pub struct Positivity {
    pub presentation: Presentation,
    pub checks: Vec<Check>,
}

/// For each labelled family {x_k}: if some x_k does not reduce to 0 but Σ_k x_k*x_k does,
/// every x_k vanishes in any C*-completion. Such x_k are adjoined and the result re-completed,
/// repeating while new families resolve.
pub fn positivity_closure(p: &Presentation, families: Vec<(String, Vec<NCPoly>)>, bound: usize) -> Positivity {
    let mut cur = p.clone();
    let mut open = families;
    let mut checks = Vec::new();
    let mut round = 0;
    loop {
        let mut extra: Vec<(String, NCPoly)> = Vec::new();
        let mut still = Vec::new();
        for (label, xs) in open {
            if xs.iter().all(|x| cur.reduces_to_zero(x)) {
                let detail = if round == 0 { "reduces algebraically".to_string() } else { format!("reduces after C* round {round}") };
                checks.push(Check { label, passed: true, detail });
                continue;
            }
            let sos = xs.iter().fold(cur.zero(), |acc, x| &acc + &cur.mul(&x.star(), x));
            if cur.reduces_to_zero(&sos) {
                for (k, x) in xs.into_iter().enumerate() {
                    extra.push((format!("{label}[{k}] (C*)"), x));
                }
                checks.push(Check { label, passed: true, detail: format!("Σ x*x = 0, so each x = 0 (C*, round {})", round + 1) });
            } else {
                still.push((label, xs));
            }
        }
        if extra.is_empty() {
            for (label, xs) in still {
                let sos = xs.iter().fold(cur.zero(), |acc, x| &acc + &cur.mul(&x.star(), x));
                let r = cur.normal_form(&sos);
                checks.push(Check { label, passed: false, detail: format!("not reduced; Σ x*x = {r}") });
            }
            return Positivity { presentation: cur, checks };
        }
        round += 1;
        let mut rels: Vec<(String, NCPoly)> = cur.relations().map(|(l, r)| (l.to_string(), r.clone())).collect();
        rels.extend(extra);
        let q = Presentation::new(&cur.name, cur.alphabet(), rels).star_closed();
        cur = complete(&q, CompletionOptions::bound(bound)).expect("monomial relations orient");
        open = still;
    }
}

/// Row and column orthogonality families {a_ik a_ij}_{k≠j} and {a_kj a_ij}_{k≠i}.
pub fn orthogonality_families(p: &Presentation, n: usize, name: impl Fn(usize, usize) -> String) -> Vec<(String, Vec<NCPoly>)> {
    let g = |i: usize, j: usize| p.gen(&name(i, j));
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let row: Vec<NCPoly> = (0..n).filter(|&k| k != j).map(|k| p.mul(&g(i, k), &g(i, j))).collect();
            let col: Vec<NCPoly> = (0..n).filter(|&k| k != i).map(|k| p.mul(&g(k, j), &g(i, j))).collect();
            if !row.is_empty() {
                out.push((format!("row-orth {}", name(i, j)), row));
                out.push((format!("col-orth {}", name(i, j)), col));
            }
        }
    }
    out
}

/// QPerm(n) completed and closed under the C*-orthogonality of each row and column.
pub fn qperm_cstar(n: usize) -> Positivity {
    let p = qperm(n);
    let fams = orthogonality_families(&p, n, qperm_name);
    positivity_closure(&p, fams, QPERM_BOUND)
}

/// Row and column sums, and a_ij a_ik = δ_jk a_ij (with its column analogue), reduce to 0.
pub fn check_magic_unitary(n: usize) -> Vec<Check> {
    let Positivity { presentation: p, checks: mut out } = qperm_cstar(n);
    let g = |i: usize, j: usize| p.gen(&qperm_name(i, j));
    let one = p.one();
    let reduce = |label: String, x: NCPoly| {
        let r = p.normal_form(&x);
        Check::zero(label, &r, r.is_zero())
    };
    let mut sums = Vec::new();
    for i in 0..n {
        let row = (0..n).fold(-&one, |acc, j| &acc + &g(i, j));
        let col = (0..n).fold(-&one, |acc, j| &acc + &g(j, i));
        sums.push(reduce(format!("Σ_j a{}j − 1", i + 1), row));
        sums.push(reduce(format!("Σ_i ai{} − 1", i + 1), col));
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let x = p.mul(&g(i, j), &g(i, k));
                let want = if j == k { g(i, j) } else { p.zero() };
                sums.push(reduce(format!("{}·{}", qperm_name(i, j), qperm_name(i, k)), &x - &want));
                let y = p.mul(&g(j, i), &g(k, i));
                let want = if j == k { g(j, i) } else { p.zero() };
                sums.push(reduce(format!("{}·{}", qperm_name(j, i), qperm_name(k, i)), &y - &want));
            }
        }
    }
    out.extend(sums);
    out
}

pub fn wang_name(i: usize, j: usize) -> String {
    format!("u{}{}", i + 1, j + 1)
}

pub fn wang_alphabet(n: usize) -> Arc<Alphabet> {
    let mut names = Vec::new();
    for i in 0..n {
        for j in 0..n {
            names.push((wang_name(i, j), format!("{}*", wang_name(i, j))));
        }
    }
    let mut gens: Vec<(&str, &str, u32)> = names.iter().map(|(a, b)| (a.as_str(), b.as_str(), 1)).collect();
    gens.extend(names.iter().map(|(a, b)| (b.as_str(), a.as_str(), 1)));
    Alphabet::new(&gens).expect("distinct generator names")
}

/// uu* = I = u*u and u′QūQ⁻¹ = I = QūQ⁻¹u′ for Q = diag(q).
pub fn wang_relations(a: &Arc<Alphabet>, q: &[Scalar]) -> Vec<(String, NCPoly)> {
    let n = q.len();
    let u = |i: usize, j: usize| NCPoly::gen(a, &wang_name(i, j));
    let us = |i: usize, j: usize| NCPoly::gen(a, &format!("{}*", wang_name(i, j)));
    let qinv: Vec<Scalar> = q.iter().map(|x| x.inv().expect("Q invertible")).collect();
    let mut rels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let d = |c: &Scalar| NCPoly::constant(a, if i == j { c.clone() } else { Scalar::zero() });
            let one = Scalar::one();
            let mut uus = -&d(&one);
            let mut usu = -&d(&one);
            let mut conj1 = -&d(&one);
            let mut conj2 = -&d(&one);
            for k in 0..n {
                uus = &uus + &(&u(i, k) * &us(j, k));
                usu = &usu + &(&us(k, i) * &u(k, j));
                // (u′QūQ⁻¹)_ij = Σ_k u_ki q_k u_kj* q_j⁻¹
                conj1 = &conj1 + &(&u(k, i) * &us(k, j)).scale(&(&q[k] * &qinv[j]));
                // (QūQ⁻¹u′)_ij = Σ_k q_i u_ik* q_k⁻¹ u_jk
                conj2 = &conj2 + &(&us(i, k) * &u(j, k)).scale(&(&q[i] * &qinv[k]));
            }
            let tag = format!("{}{}", i + 1, j + 1);
            rels.push((format!("uu*{tag}"), uus));
            rels.push((format!("u*u{tag}"), usu));
            rels.push((format!("u'QūQ⁻¹{tag}"), conj1));
            rels.push((format!("QūQ⁻¹u'{tag}"), conj2));
        }
    }
    rels
}

pub fn wang(q: &[Scalar], bound: usize) -> Presentation {
    let n = q.len();
    let a = wang_alphabet(n);
    let p = Presentation::new(&format!("WangAu({n})"), &a, wang_relations(&a, q)).star_closed();
    complete(&p, CompletionOptions::bound(bound)).expect("quadratic relations orient")
}

/// Δ(u_ij) = Σ_k u_ik ⊗ u_kj, ε(u_ij) = δ_ij, κ(u_ij) = u_ji*, κ(u_ij*) = q_i⁻¹u_ji q_j.
pub fn wang_hopf(p: Presentation, q: &[Scalar]) -> HopfData {
    let n = q.len();
    let u = generator_matrix(&p, n, wang_name);
    let du = matrix_coproduct(&u);
    let mut delta = BTreeMap::new();
    let mut eps = BTreeMap::new();
    let mut kappa = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let (g, gs) = (wang_name(i, j), format!("{}*", wang_name(i, j)));
            delta.insert(g.clone(), du[i][j].clone());
            delta.insert(gs.clone(), du[i][j].star());
            let e = Scalar::from_int((i == j) as i64);
            eps.insert(g.clone(), e.clone());
            eps.insert(gs.clone(), e);
            kappa.insert(g, u[j][i].star());
            kappa.insert(gs, u[j][i].scale(&(&q[j] / &q[i]).expect("Q invertible")));
        }
    }
    HopfData::new(p, delta, eps, kappa).expect("data for every generator")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn magic_unitary_small() {
        for n in 1..=4 {
            for c in check_magic_unitary(n) {
                assert!(c.passed, "n={n}: {c}");
            }
        }
    }

    #[test]
    fn qperm_two_orthogonality_is_algebraic() {
        let p = qperm(2);
        assert!(p.reduces_to_zero(&p.word(&["a11", "a12"])));
        assert!(p.reduces_to_zero(&(&(&p.gen("a11") + &p.gen("a12")) - &p.one())));
    }

    #[test]
    fn qperm_one_is_trivial() {
        let p = qperm(1);
        assert!(p.reduces_to_zero(&(&p.gen("a11") - &p.one())));
    }

    #[test]
    fn qperm_four_needs_positivity() {
        let p = qperm(4);
        assert!(!p.reduces_to_zero(&p.word(&["a11", "a12"])));
        let c = qperm_cstar(4);
        assert!(c.presentation.reduces_to_zero(&c.presentation.word(&["a11", "a12"])));
    }

    #[test]
    fn qperm_hopf_axioms() {
        for n in 2..=3 {
            let h = qperm_hopf(qperm_cstar(n).presentation, n);
            let p = h.presentation();
            let sample: Vec<_> = p.alphabet().names().iter().map(|g| (g.clone(), p.gen(g))).collect();
            for v in h.axiom_suite(&sample) {
                assert!(v.passed, "{} {}: {}", v.label, v.axiom, v.residual);
            }
        }
    }

    #[test]
    fn wang_hopf_axioms() {
        let mu = Scalar::mu();
        for q in [vec![Scalar::one()], vec![Scalar::one(), mu.clone()], vec![Scalar::one(), Scalar::one()]] {
            let p = wang(&q, 4);
            let h = wang_hopf(p, &q);
            let p = h.presentation();
            let sample: Vec<_> = p.alphabet().names().iter().map(|g| (g.clone(), p.gen(g))).collect();
            for v in h.axiom_suite(&sample) {
                assert!(v.passed, "Q={:?}: {} {}: {}", q.iter().map(|x| x.to_string()).collect::<Vec<_>>(), v.label, v.axiom, v.residual);
            }
        }
    }
}

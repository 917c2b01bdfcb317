//! Unitary irreducible corepresentations of SU_μ(2) in weight bases.
//!
//! T^{l+1/2} is cut out of T^l ⊠ T^{1/2} as the subcomodule generated by the
//! extreme weight vector, with basis vectors of unit norm. Signs are fixed by
//! requiring a positive leading coefficient in every entry of the first column.

use super::corep::CorepMatrix;
use super::su2::{su2, su2_hopf, t_half};
use super::Check;
use crate::hopf::haar_su2;
use crate::ncalg::{NCPoly, Word};
use crate::scalar::linalg::rank;
use crate::scalar::sqrt::sqrt_positive;
use crate::scalar::{Assignment, Scalar, ScalarError};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IrrepError {
    #[error("generated subcomodule has dimension {found}, expected {expected}")]
    WrongDimension { found: usize, expected: usize },
    #[error("weight space {0} of the generated subcomodule is not one-dimensional")]
    WeightSpace(i32),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// T^0 = [1].
pub fn trivial() -> CorepMatrix {
    CorepMatrix::new("T^0", Some(0), vec![vec![su2().one()]])
}

pub fn fundamental() -> CorepMatrix {
    CorepMatrix::new("T^1/2", Some(1), t_half())
}

pub fn spin_label(twice_l: u32) -> String {
    if twice_l % 2 == 0 {
        format!("{}", twice_l / 2)
    } else {
        format!("{}/2", twice_l)
    }
}

fn sign_at_half(c: &Scalar) -> f64 {
    c.eval_complex(&Assignment::with_mu(0.5)).map(|z| z.re).unwrap_or(0.0)
}

/// T^{l+1/2} from T^l.
pub fn next_irrep(tl: &CorepMatrix) -> Result<CorepMatrix, IrrepError> {
    let p = su2();
    let th = t_half();
    let n = tl.dim();
    let twice_l = (n - 1) as i32;
    let big = 2 * n;
    // coordinate x = 2a + b, twice its weight: (2a − 2l) + (2b − 1)
    let wt = |x: usize| 2 * (x / 2) as i32 - twice_l + 2 * (x % 2) as i32 - 1;
    let w_entry = |x: usize, y: usize| p.mul(&tl.entries[x / 2][y / 2], &th[x % 2][y % 2]);

    let mut coeffs: BTreeMap<Word, Vec<Scalar>> = BTreeMap::new();
    for x in 0..big {
        for (w, c) in w_entry(x, 0).terms() {
            coeffs.entry(w.clone()).or_insert_with(|| vec![Scalar::zero(); big])[x] = c.clone();
        }
    }
    let mut by_weight: BTreeMap<i32, Vec<Vec<Scalar>>> = BTreeMap::new();
    for v in coeffs.into_values() {
        let first = v.iter().position(|c| !c.is_zero()).expect("nonzero coefficient vector");
        let m = wt(first);
        if v.iter().enumerate().any(|(x, c)| !c.is_zero() && wt(x) != m) {
            return Err(IrrepError::WeightSpace(m));
        }
        by_weight.entry(m).or_default().push(v);
    }
    let expected = n + 1;
    if by_weight.len() != expected {
        return Err(IrrepError::WrongDimension { found: by_weight.len(), expected });
    }
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    for (m, vs) in &by_weight {
        if rank(vs)? != 1 {
            return Err(IrrepError::WeightSpace(*m));
        }
        let v = &vs[0];
        let lead = v.iter().find(|c| !c.is_zero()).unwrap().inv()?;
        let v: Vec<Scalar> = v.iter().map(|c| c * &lead).collect();
        let mut norm2 = Scalar::zero();
        for c in &v {
            norm2 = &norm2 + &(&c.star() * c);
        }
        let k = sqrt_positive(&norm2)?.inv()?;
        basis.push(v.iter().map(|c| c * &k).collect());
    }
    let mut cache: BTreeMap<(usize, usize), NCPoly> = BTreeMap::new();
    let mut entry = |basis: &[Vec<Scalar>], i: usize, j: usize| {
        let mut acc = p.zero();
        for (x, cx) in basis[i].iter().enumerate() {
            if cx.is_zero() {
                continue;
            }
            for (y, cy) in basis[j].iter().enumerate() {
                if cy.is_zero() {
                    continue;
                }
                let e = cache.entry((x, y)).or_insert_with(|| w_entry(x, y));
                acc.add_scaled(e, &(&cx.star() * cy));
            }
        }
        acc
    };
    for i in 1..expected {
        let e = entry(&basis, i, 0);
        let (_, c) = e.lead().expect("first column entries are nonzero");
        if sign_at_half(c) < 0.0 {
            basis[i] = basis[i].iter().map(|c| -c).collect();
        }
    }
    let entries: Vec<Vec<NCPoly>> =
        (0..expected).map(|i| (0..expected).map(|j| entry(&basis, i, j)).collect()).collect();
    let tl2 = (twice_l + 1) as u32;
    Ok(CorepMatrix::new(format!("T^{}", spin_label(tl2)), Some(tl2), entries))
}

/// T^0, T^{1/2}, …, T^{l_max}.
pub fn irrep_tower(max_twice_l: u32) -> Result<Vec<CorepMatrix>, IrrepError> {
    let mut out = vec![trivial()];
    if max_twice_l >= 1 {
        out.push(fundamental());
    }
    while (out.len() as u32) <= max_twice_l {
        let next = next_irrep(out.last().unwrap())?;
        out.push(next);
    }
    Ok(out)
}

/// Diagonal d with a_ij = d_i⁻¹ b_ij d_j, if one exists.
pub fn diagonal_similarity(a: &[Vec<NCPoly>], b: &[Vec<NCPoly>]) -> Option<Vec<Scalar>> {
    let n = a.len();
    let ratio = |x: &NCPoly, y: &NCPoly| -> Option<Scalar> {
        let (w, c) = y.lead()?;
        let r = (&x.coeff(w) / c).ok()?;
        (x == &y.scale(&r)).then_some(r)
    };
    // a_i0 = d_i⁻¹ b_i0 d_0 with d_0 = 1
    let mut d = vec![Scalar::one()];
    for i in 1..n {
        d.push(ratio(&b[i][0], &a[i][0])?);
    }
    for i in 0..n {
        for j in 0..n {
            let want = b[i][j].scale(&(&d[j] / &d[i]).ok()?);
            if a[i][j] != want {
                return None;
            }
        }
    }
    Some(d)
}

/// Gram matrix h(x*y) over all entries of the tower, in order (l, i, j).
pub fn gram(tower: &[CorepMatrix]) -> (Vec<(u32, usize, usize)>, Vec<Vec<Scalar>>) {
    let p = su2();
    let mut idx = Vec::new();
    let mut els = Vec::new();
    for t in tower {
        for i in 0..t.dim() {
            for j in 0..t.dim() {
                idx.push((t.twice_l.unwrap_or(0), i, j));
                els.push(t.entries[i][j].clone());
            }
        }
    }
    let stars: Vec<NCPoly> = els.iter().map(|x| x.star()).collect();
    let g = (0..els.len())
        .map(|a| (0..els.len()).map(|b| haar_su2(&p.mul(&stars[a], &els[b]))).collect())
        .collect();
    (idx, g)
}

/// Schur orthogonality h(t^{l'*}_{ip} t^l_{jq}) = δ_{ll'}δ_{pq}F^l_{ij} with F^l diagonal and positive,
/// and the span dimension Σ(2l+1)² via the Gram rank.
pub fn check_schur(tower: &[CorepMatrix]) -> Result<Vec<Check>, IrrepError> {
    let (idx, g) = gram(tower);
    let mut out = Vec::new();
    let mut offdiag_bad = Vec::new();
    for (a, &(la, i, p)) in idx.iter().enumerate() {
        for (b, &(lb, j, q)) in idx.iter().enumerate() {
            let v = &g[a][b];
            if la == lb && p == q && i == j {
                continue;
            }
            if !v.is_zero() {
                offdiag_bad.push(format!(
                    "h(t^{}*_{}{} t^{}_{}{}) = {}",
                    spin_label(la),
                    i,
                    p,
                    spin_label(lb),
                    j,
                    q,
                    v
                ));
            }
        }
    }
    out.push(Check {
        label: "orthogonality off the diagonal".into(),
        passed: offdiag_bad.is_empty(),
        detail: if offdiag_bad.is_empty() { "0".into() } else { offdiag_bad.join("; ") },
    });
    for t in tower {
        let l = t.twice_l.unwrap_or(0);
        let n = t.dim();
        let base = idx.iter().position(|k| k.0 == l).unwrap();
        let at = |i: usize, p: usize| base + i * n + p;
        let mut detail = Vec::new();
        let mut ok = true;
        for i in 0..n {
            let f = &g[at(i, 0)][at(i, 0)];
            let val = sign_at_half(f);
            ok &= val > 0.0;
            for p in 1..n {
                ok &= &g[at(i, p)][at(i, p)] == f;
            }
            detail.push(f.to_string());
        }
        out.push(Check {
            label: format!("F^{} diagonal, positive, independent of p", spin_label(l)),
            passed: ok,
            detail: format!("diag({})", detail.join(", ")),
        });
    }
    let r = rank(&g)?;
    let want: usize = tower.iter().map(|t| t.dim() * t.dim()).sum();
    out.push(Check { label: "span dimension Σ(2l+1)²".into(), passed: r == want, detail: format!("rank {r}, expected {want}") });
    Ok(out)
}

/// CorepMatrix invariants for every member of the tower.
pub fn check_tower(tower: &[CorepMatrix]) -> Vec<Check> {
    tower.iter().flat_map(|t| t.invariants(su2_hopf())).collect()
}

/// T¹ as displayed, rows and columns indexed 1, 0, −1.
pub fn displayed_t1() -> Vec<Vec<NCPoly>> {
    let p = su2();
    let w = |n: &[&str]| p.word(n);
    let q = &Scalar::one() + &Scalar::mu_pow(2);
    let mu = Scalar::mu();
    let rows = vec![
        vec![w(&["α*", "α*"]), w(&["α*", "γ"]).scale(&-&q), w(&["γ", "γ"]).scale(&-&mu)],
        vec![w(&["γ*", "α*"]), &p.one() - &w(&["γ*", "γ"]).scale(&q), w(&["α", "γ"])],
        vec![w(&["γ*", "γ*"]).scale(&-&mu), w(&["γ*", "α"]).scale(&-&q), w(&["α", "α"])],
    ];
    rows.into_iter().map(|r| r.into_iter().map(|x| p.normal_form(&x)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;


    #[test]
    fn low_spins() {
        let t = irrep_tower(1).unwrap();
        assert_eq!(t[0].entries, vec![vec![su2().one()]]);
        assert_eq!(t[1].entries, t_half());
    }

    #[test]
    fn next_of_trivial_is_fundamental() {
        assert_eq!(next_irrep(&trivial()).unwrap().entries, t_half());
    }

    #[test]
    fn spin_one_matches_display_in_reversed_order() {
        let t = irrep_tower(2).unwrap();
        let mut shown = displayed_t1();
        shown.reverse();
        for r in shown.iter_mut() {
            r.reverse();
        }
        let d = diagonal_similarity(&t[2].entries, &shown);
        assert!(d.is_some(), "{}", t[2]);
        assert!(diagonal_similarity(&t[2].entries, &displayed_t1()).is_none());
    }

    #[test]
    fn top_right_is_gamma_star_power() {
        // t^l_{-l,l} = (−μ)^{2l} γ*^{2l}
        let p = su2();
        for t in irrep_tower(4).unwrap().iter().skip(1) {
            let n = t.dim();
            let want = p.normal_form(&NCPoly::monomial(p.alphabet(), &vec!["γ*"; n - 1]).scale(&(-Scalar::mu()).pow(n as i32 - 1)));
            assert_eq!(t.entries[0][n - 1], want);
        }
    }

    #[test]
    fn tower_invariants() {
        let tower = irrep_tower(3).unwrap();
        for c in check_tower(&tower) {
            assert!(c.passed, "{c}");
        }
    }

    #[test]
    fn schur_and_dimension() {
        let tower = irrep_tower(3).unwrap();
        for c in check_schur(&tower).unwrap() {
            assert!(c.passed, "{c}");
        }
    }

    #[test]
    fn schur_half_fixture() {
        // F^{1/2} = diag(h(α*α), h(γ*γ)) = diag(μ²/(1+μ²), 1/(1+μ²))
        let tower = irrep_tower(1).unwrap();
        let (_, g) = gram(&tower);
        let q = &Scalar::one() + &Scalar::mu_pow(2);
        assert_eq!(g[1][1], (&Scalar::mu_pow(2) / &q).unwrap());
        assert_eq!(g[3][3], q.inv().unwrap());
    }
}

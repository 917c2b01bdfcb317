//! The deformed isometry group of A_θ: C(T² ⋊ (Z₂² ⋊ Z₂)) deformed by J̃, computed block by block.

use super::{deformed_product, neg_weight, DeformMatrix, Doubling, GradedGen, GradedMono, RieffelError, Weight};
use crate::qgroups::Check;
use crate::scalar::PhaseExp;
use num_rational::Rational64;
use std::fmt;

pub type Gamma = [u8; 3];

pub fn gammas() -> Vec<Gamma> {
    (0..8u8).map(|k| [(k >> 2) & 1, (k >> 1) & 1, k & 1]).collect()
}

pub fn gamma_label(g: Gamma) -> String {
    format!("{}{}{}", g[0], g[1], g[2])
}

/// Laurent monomial in formal variables, as an exponent vector.
pub type Mono = Vec<i64>;

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// γ∘(z₁, z₂): swap when γ₃ = 1, then conjugate z₁ when γ₁ = 1 and z₂ when γ₂ = 1.
pub fn gamma_act(g: Gamma, z: &[Mono; 2]) -> [Mono; 2] {
    let [mut a, mut b] = if g[2] == 1 { [z[1].clone(), z[0].clone()] } else { z.clone() };
    if g[0] == 1 {
        a = neg_i(&a);
    }
    if g[1] == 1 {
        b = neg_i(&b);
    }
    [a, b]
}

fn neg_i(a: &Mono) -> Mono {
    a.iter().map(|x| -x).collect()
}

/// Z₂² ⋊ Z₂ with the swap acting on the first factor.
pub fn gamma_mul(a: Gamma, b: Gamma) -> Gamma {
    let (b0, b1) = if a[2] == 1 { (b[1], b[0]) } else { (b[0], b[1]) };
    [a[0] ^ b0, a[1] ^ b1, a[2] ^ b[2]]
}

/// Element of T² ⋊ (Z₂² ⋊ Z₂) with monomial coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusElt {
    pub z: [Mono; 2],
    pub g: Gamma,
}

impl TorusElt {
    pub fn mul(&self, o: &TorusElt) -> TorusElt {
        let w = gamma_act(self.g, &o.z);
        TorusElt { z: [mono_mul(&self.z[0], &w[0]), mono_mul(&self.z[1], &w[1])], g: gamma_mul(self.g, o.g) }
    }
}

const NV: usize = 6;

fn var(i: usize, e: i64) -> Mono {
    let mut m = vec![0; NV];
    m[i] = e;
    m
}

/// Weights (s₁, s₂, u₁, u₂) of the two coordinate functions on block γ under
/// f ↦ f(η(−s)·g·η(u)).
pub fn block_weights(g: Gamma) -> (Weight, Weight) {
    // variables: s₁, s₂, u₁, u₂, z₁, z₂
    let left = TorusElt { z: [var(0, -1), var(1, -1)], g: [0, 0, 0] };
    let mid = TorusElt { z: [var(4, 1), var(5, 1)], g };
    let right = TorusElt { z: [var(2, 1), var(3, 1)], g: [0, 0, 0] };
    let p = left.mul(&mid).mul(&right);
    let w = |m: &Mono| -> Weight { m[..4].iter().map(|&x| Rational64::from_integer(x)).collect() };
    debug_assert_eq!(&p.z[0][4..], &[1, 0]);
    debug_assert_eq!(&p.z[1][4..], &[0, 1]);
    (w(&p.z[0]), w(&p.z[1]))
}

/// A_γ and B_γ as block-tagged generators.
pub fn block_gens(g: Gamma) -> [GradedGen; 2] {
    let (a, b) = block_weights(g);
    let mk = |l: &str, w: Weight| GradedGen {
        label: format!("{l}{}", gamma_label(g)),
        left: w[..2].to_vec(),
        right: w[2..].to_vec(),
        block: Some(g),
    };
    [mk("A", a), mk("B", b)]
}

/// m_γ with A_γ ×_J̃ B_γ = e(m_γ θ)·B_γ ×_J̃ A_γ.
pub fn expected_m(g: Gamma) -> i64 {
    match g {
        [0, 0, 0] | [0, 1, 1] | [1, 1, 0] | [1, 0, 1] => 0,
        _ => -2,
    }
}

#[derive(Clone, Debug)]
pub struct BlockEntry {
    pub gamma: Gamma,
    pub a: GradedGen,
    pub b: GradedGen,
    pub ab_phase: PhaseExp,
    pub ba_phase: PhaseExp,
    pub m: Rational64,
    pub expected: i64,
    pub unitary: bool,
}

impl BlockEntry {
    pub fn passed(&self) -> bool {
        self.m == Rational64::from_integer(self.expected) && self.unitary
    }

    pub fn class(&self) -> &'static str {
        if self.m == Rational64::from_integer(0) {
            "C(T²)"
        } else {
            "A_{2θ}"
        }
    }
}

impl fmt::Display for BlockEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} γ={}: A×B = e({}θ)·B×A (expected {}), A×B = {}·AB, B×A = {}·BA, unitary {}, {}",
            if self.passed() { "PASS" } else { "FAIL" },
            gamma_label(self.gamma),
            self.m,
            self.expected,
            self.ab_phase,
            self.ba_phase,
            self.unitary,
            self.class()
        )
    }
}

#[derive(Clone, Debug)]
pub struct BlockTable {
    pub doubling: Doubling,
    pub j: DeformMatrix,
    pub entries: Vec<BlockEntry>,
    pub checks: Vec<Check>,
}

impl BlockTable {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed()) && self.checks.iter().all(|c| c.passed)
    }

    /// (number of commutative blocks, number of A_{2θ} blocks)
    pub fn decomposition(&self) -> (usize, usize) {
        let c = self.entries.iter().filter(|e| e.class() == "C(T²)").count();
        (c, self.entries.len() - c)
    }
}

/// The block table for J = θ/2·[[0, −1], [1, 0]] doubled by `doubling`.
pub fn qiso_atheta_block_table(doubling: Doubling) -> Result<BlockTable, RieffelError> {
    let j = DeformMatrix::torus2().doubled(doubling);
    let mut entries = Vec::new();
    for g in gammas() {
        let [a, b] = block_gens(g);
        let gens = [a.clone(), b.clone()];
        let (ma, mb) = (GradedMono::gen(&gens, 0), GradedMono::gen(&gens, 1));
        let ab = deformed_product(&ma, &mb, &j)?;
        let ba = deformed_product(&mb, &ma, &j)?;
        let ab_phase = j.phase(&a.weight(), &b.weight())?;
        let ba_phase = j.phase(&b.weight(), &a.weight())?;
        debug_assert_eq!(ab.gens, ba.gens);
        let m = Rational64::new((ab_phase.0 - ba_phase.0) as i64, 2);
        let unitary = unitary_under(&a, &j) && unitary_under(&b, &j);
        entries.push(BlockEntry { gamma: g, a, b, ab_phase, ba_phase, m, expected: expected_m(g), unitary });
    }
    let mut checks = Vec::new();
    let all = gammas();
    let mut cross_ok = true;
    for &g in &all {
        for &h in &all {
            if g != h {
                let ga = block_gens(g);
                let ha = block_gens(h);
                let x = GradedMono::gen(&ga, 0);
                let y = GradedMono::gen(&ha, 0);
                cross_ok &= deformed_product(&x, &y, &j)?.coeff.is_zero();
            }
        }
    }
    checks.push(Check {
        label: "products across distinct blocks vanish".into(),
        passed: cross_ok,
        detail: if cross_ok { "0".into() } else { "nonzero cross-block product".into() },
    });
    let integral = entries.iter().all(|e| e.m.is_integer());
    checks.push(Check {
        label: "block phases are integer multiples of θ".into(),
        passed: integral,
        detail: entries.iter().map(|e| e.m.to_string()).collect::<Vec<_>>().join(", "),
    });
    Ok(BlockTable { doubling, j, entries, checks })
}

/// x* ×_J̃ x = x ×_J̃ x* = |x|² = 1 on the block: both phases vanish.
fn unitary_under(g: &GradedGen, j: &DeformMatrix) -> bool {
    let w = g.weight();
    let nw = neg_weight(&w);
    matches!((j.phase(&nw, &w), j.phase(&w, &nw)), (Ok(a), Ok(b)) if a.0 == 0 && b.0 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[(usize, i64)]) -> Mono {
        let mut x = vec![0; NV];
        for &(i, e) in v {
            x[i] += e;
        }
        x
    }

    // variables: z₁, z₂ (0, 1), z′₁, z′₂ (2, 3), z″₁, z″₂ (4, 5)
    fn triple(g: Gamma) -> TorusElt {
        let a = TorusElt { z: [m(&[(0, 1)]), m(&[(1, 1)])], g: [0, 0, 0] };
        let b = TorusElt { z: [m(&[(2, 1)]), m(&[(3, 1)])], g };
        let c = TorusElt { z: [m(&[(4, 1)]), m(&[(5, 1)])], g: [0, 0, 0] };
        a.mul(&b).mul(&c)
    }

    #[test]
    fn group_laws() {
        let p = triple([1, 0, 1]);
        assert_eq!(p.z, [m(&[(0, 1), (2, 1), (5, -1)]), m(&[(1, 1), (3, 1), (4, 1)])]);
        let p = triple([0, 0, 1]);
        assert_eq!(p.z, [m(&[(0, 1), (2, 1), (5, 1)]), m(&[(1, 1), (3, 1), (4, 1)])]);
        let p = triple([0, 0, 0]);
        assert_eq!(p.z, [m(&[(0, 1), (2, 1), (4, 1)]), m(&[(1, 1), (3, 1), (5, 1)])]);
    }

    #[test]
    fn gamma_group_is_associative_with_identity() {
        for a in gammas() {
            assert_eq!(gamma_mul(a, [0, 0, 0]), a);
            for b in gammas() {
                for c in gammas() {
                    assert_eq!(gamma_mul(gamma_mul(a, b), c), gamma_mul(a, gamma_mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn semidirect_product_is_associative() {
        for g in gammas() {
            for h in gammas() {
                let x = TorusElt { z: [m(&[(0, 1)]), m(&[(1, 1)])], g };
                let y = TorusElt { z: [m(&[(2, 1)]), m(&[(3, 1)])], g: h };
                let z = TorusElt { z: [m(&[(4, 1)]), m(&[(5, 1)])], g: [1, 1, 0] };
                assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            }
        }
    }

    #[test]
    fn block_weights_101() {
        let (a, b) = block_weights([1, 0, 1]);
        assert_eq!(a, super::super::weight(&[-1, 0, 0, -1]));
        assert_eq!(b, super::super::weight(&[0, -1, 1, 0]));
    }

    #[test]
    fn table_matches_under_default_doubling() {
        let t = qiso_atheta_block_table(Doubling::MinusJJ).unwrap();
        for e in &t.entries {
            assert!(e.passed(), "{e}");
        }
        assert!(t.passed());
        assert_eq!(t.decomposition(), (4, 4));
        let e000 = &t.entries[0];
        assert_eq!(e000.ab_phase, PhaseExp(0));
        let e001 = &t.entries[1];
        assert_eq!(e001.ab_phase, PhaseExp::theta(-1));
        assert_eq!(e001.ba_phase, PhaseExp::theta(1));
    }

    #[test]
    fn other_doubling_flips_signs() {
        let t = qiso_atheta_block_table(Doubling::JMinusJ).unwrap();
        assert!(!t.passed());
        for e in &t.entries {
            assert_eq!(e.m, Rational64::from_integer(-expected_m(e.gamma)));
        }
    }
}

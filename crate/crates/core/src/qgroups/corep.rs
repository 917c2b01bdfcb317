use super::Check;
use crate::hopf::{HopfData, TensorPoly};
use crate::ncalg::NCPoly;
use crate::scalar::Scalar;
use std::fmt;

/// Square matrix u over a Hopf *-algebra with Δ(u_ij) = Σ_k u_ik ⊗ u_kj.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorepMatrix {
    pub name: String,
    /// 2l for an irreducible of spin l.
    pub twice_l: Option<u32>,
    pub entries: Vec<Vec<NCPoly>>,
}

impl CorepMatrix {
    pub fn new(name: impl Into<String>, twice_l: Option<u32>, entries: Vec<Vec<NCPoly>>) -> Self {
        CorepMatrix { name: name.into(), twice_l, entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &NCPoly {
        &self.entries[i][j]
    }

    /// Comultiplicativity, κ(u_ij) = u_ji*, and Σ_k u_ik κ(u_kj) = δ_ij, entrywise.
    pub fn invariants(&self, hopf: &HopfData) -> Vec<Check> {
        let p = hopf.presentation();
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut rhs = TensorPoly::zero(&[p.alphabet().clone(), p.alphabet().clone()]);
                for k in 0..n {
                    rhs = &rhs + &TensorPoly::pure(&[&self.entries[i][k], &self.entries[k][j]]);
                }
                let r = &hopf.delta(&self.entries[i][j]).normalize(&[p, p]) - &rhs.normalize(&[p, p]);
                out.push(Check::zero(format!("{} Δ({},{})", self.name, i, j), &r, r.is_zero()));
            }
        }
        let kappa: Vec<Vec<NCPoly>> =
            (0..n).map(|i| (0..n).map(|j| p.normal_form(&hopf.antipode(&self.entries[i][j]))).collect()).collect();
        for i in 0..n {
            for j in 0..n {
                let r = p.normal_form(&(&kappa[i][j] - &self.entries[j][i].star()));
                out.push(Check::zero(format!("{} κ({},{})", self.name, i, j), &r, r.is_zero()));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let mut acc = p.constant(if i == j { -Scalar::one() } else { Scalar::zero() });
                for k in 0..n {
                    acc = &acc + &p.mul(&self.entries[i][k], &kappa[k][j]);
                }
                let r = p.normal_form(&acc);
                out.push(Check::zero(format!("{} uκ(u)({},{})", self.name, i, j), &r, r.is_zero()));
            }
        }
        out
    }
}

impl fmt::Display for CorepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:", self.name)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

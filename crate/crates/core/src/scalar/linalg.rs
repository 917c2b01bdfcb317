//! Exact elimination over the scalar field.

use super::{Scalar, ScalarError};

/// Row-echelon reduction in place; returns the pivot columns.
pub fn echelon(m: &mut [Vec<Scalar>]) -> Result<Vec<usize>, ScalarError> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv()?;
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

pub fn rank(m: &[Vec<Scalar>]) -> Result<usize, ScalarError> {
    let mut w = m.to_vec();
    Ok(echelon(&mut w)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrices() {
        let mu = Scalar::mu();
        let one = Scalar::one();
        let m = vec![vec![one.clone(), mu.clone()], vec![mu.clone(), &mu * &mu]];
        assert_eq!(rank(&m).unwrap(), 1);
        let m = vec![vec![one.clone(), mu.clone()], vec![mu.clone(), one.clone()]];
        assert_eq!(rank(&m).unwrap(), 2);
        assert_eq!(rank(&[]).unwrap(), 0);
    }
}

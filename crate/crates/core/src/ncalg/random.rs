use super::{Alphabet, NCPoly, Word};
use crate::scalar::Scalar;
use rand::Rng;
use std::sync::Arc;

/// Random polynomial with at most `max_terms` words of length ≤ `max_degree`
/// and coefficients a/b·μ^k with |a| ≤ 3, 1 ≤ b ≤ 2, |k| ≤ 1.
pub fn random_poly(alpha: &Arc<Alphabet>, max_degree: usize, max_terms: usize, rng: &mut impl Rng) -> NCPoly {
    let mut p = NCPoly::zero(alpha);
    let n = rng.gen_range(1..=max_terms.max(1));
    for _ in 0..n {
        let len = rng.gen_range(0..=max_degree);
        let w: Vec<u16> = (0..len).map(|_| rng.gen_range(0..alpha.len() as u16)).collect();
        let c = Scalar::from_ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2));
        let c = &c * &Scalar::mu_pow(rng.gen_range(-1..=1));
        p.add_term(Word::from_slice(&w), c);
    }
    p
}

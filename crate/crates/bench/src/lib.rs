//! Shared inputs for the benches.

use qiso_core::ncalg::{random_poly, NCPoly};
use qiso_core::qgroups::su2::{su2, su2_alphabet};
use rand::rngs::StdRng;
use rand::SeedableRng;

/// Seeded SU_μ(2) normal forms of degree ≤ `degree`.
pub fn su2_polys(count: usize, degree: usize, seed: u64) -> Vec<NCPoly> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count).map(|_| su2().normal_form(&random_poly(&su2_alphabet(), degree, 3, &mut rng))).collect()
}

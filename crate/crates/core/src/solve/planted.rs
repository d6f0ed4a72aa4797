use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boolmat::{mat_otimes, BoolMatrix, ModRescPair};
use crate::error::{Error, Result};

/// Samples hidden `M` (n×k*, each entry 1 with probability `left_density`)
/// and `R` (m×k*, each entry 0 with probability `right_density`) and returns
/// `C = M ⊗ R` with them. The same seed always yields the same instance.
///
/// `C` has a cover with at most `k_star` bicliques; it may have a smaller one.
pub fn generate_planted(
    n: usize,
    m: usize,
    k_star: usize,
    left_density: f64,
    right_density: f64,
    seed: u64,
) -> Result<(BoolMatrix, ModRescPair)> {
    for (name, d) in [("left_density", left_density), ("right_density", right_density)] {
        if !(0.0..=1.0).contains(&d) {
            return Err(Error::InvalidParameter(alloc::format!("{name} = {d} is not in [0, 1]")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mod_genes = BoolMatrix::zeros(n, k_star);
    for i in 0..n {
        for l in 0..k_star {
            mod_genes.set(i, l, rng.gen_bool(left_density));
        }
    }
    let mut resc_genes = BoolMatrix::zeros(m, k_star);
    for j in 0..m {
        for l in 0..k_star {
            resc_genes.set(j, l, !rng.gen_bool(right_density));
        }
    }
    let c = mat_otimes(&mod_genes, &resc_genes)?;
    Ok((c, ModRescPair::new(mod_genes, resc_genes)?))
}

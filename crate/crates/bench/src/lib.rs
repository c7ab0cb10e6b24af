//! Seeded fixtures shared by the benchmarks.

use coxsigns::{CoxeterSystem, GroupElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` tuples of `arity` random elements, each a random word of length
/// at most twice the number of positive roots.
pub fn random_tuples(sys: &CoxeterSystem, arity: usize, count: usize, seed: u64) -> Vec<Vec<GroupElement>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max = 2 * sys.num_positive();
    (0..count)
        .map(|_| {
            (0..arity)
                .map(|_| {
                    let len = rng.gen_range(0..=max);
                    let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..sys.rank())).collect();
                    sys.element_of(&word).expect("generators in range")
                })
                .collect()
        })
        .collect()
}

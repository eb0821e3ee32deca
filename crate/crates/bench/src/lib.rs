//! Fixtures shared by the benchmarks in `benches/`.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use koszulkt::IntMatrix;

/// A reproducible matrix with entries in `[-bound, bound]`.
pub fn random_matrix(seed: u64, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let mut rng = StdRng::seed_from_u64(seed);
    let data: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
    IntMatrix::from_rows(cols, &data).expect("rows have the declared width")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_reproducible() {
        assert_eq!(random_matrix(7, 4, 5, 9), random_matrix(7, 4, 5, 9));
        assert_ne!(random_matrix(7, 4, 5, 9), random_matrix(8, 4, 5, 9));
    }
}

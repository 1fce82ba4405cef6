//! Seeded random inputs for the representation-recovery suite.

use kostant_core::{DimVec, KostantPartition, Matrix, Raiz, Q};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A random Kostant partition with `1 <= |α| <= max_norm`.
pub fn random_partition<R: Rng>(rng: &mut R, n: u32, max_norm: i64) -> KostantPartition {
    let target = rng.gen_range(1..=max_norm.max(1));
    let mut parts = Vec::new();
    let mut used = 0;
    while used < target {
        let len = rng.gen_range(1..=target - used);
        let begin = rng.gen_range(0..n as i64);
        parts.push(Raiz::new(n, begin, begin + len - 1).unwrap());
        used += len;
    }
    KostantPartition::from_parts(n, parts)
}

/// A random invertible `d × d` matrix with small integer entries.
pub fn random_invertible<R: Rng>(rng: &mut R, d: usize) -> Matrix {
    loop {
        let rows = (0..d)
            .map(|_| (0..d).map(|_| Q::from_int(rng.gen_range(-3..=3))).collect())
            .collect();
        let m = Matrix::from_rows(rows);
        if d == 0 || m.inverse().is_some() {
            return m;
        }
    }
}

/// One basis change per vertex, sized by `dims`.
pub fn random_conjugation<R: Rng>(rng: &mut R, dims: &DimVec) -> Vec<Matrix> {
    dims.entries().iter().map(|&d| random_invertible(rng, d as usize)).collect()
}

/// `trials` (partition, conjugation) pairs drawn from a ChaCha8 stream.
pub fn recovery_inputs(seed: u64, n: u32, max_norm: i64, trials: usize) -> Vec<(KostantPartition, Vec<Matrix>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(n).rotate_left(32));
    (0..trials)
        .map(|_| {
            let a = random_partition(&mut rng, n, max_norm);
            let g = random_conjugation(&mut rng, &a.dim());
            (a, g)
        })
        .collect()
}

#![allow(dead_code)]

use asymgon::io::random_diameters;
use asymgon::DiameterSet;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random instance with `n` diameters, reproducible from `seed`.
pub fn instance(n: usize, seed: u64) -> DiameterSet {
    random_diameters(n, &mut rng(seed))
}

/// Shoelace formula over Cartesian vertices, independent of the library's
/// sine-sum area.
pub fn shoelace(ds: &DiameterSet, sorted: &[usize]) -> f64 {
    let pts: Vec<(f64, f64)> = sorted.iter().map(|&x| ds.point(x)).collect();
    let k = pts.len();
    (0..k)
        .map(|a| {
            let (x0, y0) = pts[a];
            let (x1, y1) = pts[(a + 1) % k];
            x0 * y1 - x1 * y0
        })
        .sum::<f64>()
        / 2.0
}

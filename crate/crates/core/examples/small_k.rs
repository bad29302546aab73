//! Linear-time sweeps for triangles and quadrilaterals on large inputs.
//!
//!     cargo run --release --example small_k -- 100000

use std::time::Instant;

use asymgon::fast::{quadrilateral_sweep, triangle_sweep};
use asymgon::io::random_diameters;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(100_000);
    let ds = random_diameters(n, &mut ChaCha8Rng::seed_from_u64(7));

    let start = Instant::now();
    let tri = triangle_sweep(&ds).unwrap();
    println!(
        "triangle: area {:.12}, vertices {:?}, pointer steps {:?}, {:.2?}",
        tri.solution.area,
        tri.solution.selection.indices(),
        tri.steps,
        start.elapsed()
    );

    let start = Instant::now();
    let quad = quadrilateral_sweep(&ds).unwrap();
    println!(
        "quadrilateral: area {:.12}, vertices {:?}, pointer steps {:?}, {:.2?}",
        quad.solution.area,
        quad.solution.selection.indices(),
        quad.steps,
        start.elapsed()
    );
}

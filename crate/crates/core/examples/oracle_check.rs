//! How much area the no-diameter condition costs on random instances.
//!
//!     cargo run --release --example oracle_check

use asymgon::io::random_diameters;
use asymgon::oracle::oracle_solve;
use asymgon::solve;
use asymgon::SolveOptions;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    println!(
        "{:>3} {:>3} {:>14} {:>14} {:>10}",
        "n", "k", "asymmetric", "unrestricted", "solver ok"
    );
    for n in [5, 7, 9] {
        let ds = random_diameters(n, &mut rng);
        for k in 3..n {
            let asym = oracle_solve(&ds, k, true).unwrap();
            let free = oracle_solve(&ds, k, false).unwrap();
            let fast = solve(&ds, k, &SolveOptions::default()).unwrap();
            let ok = (fast.area - asym.area).abs() < 1e-9;
            println!(
                "{n:>3} {k:>3} {:>14.10} {:>14.10} {ok:>10}",
                asym.area, free.area
            );
        }
    }
}

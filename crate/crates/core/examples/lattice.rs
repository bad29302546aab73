//! Closed-form optima on evenly spaced diameters.
//!
//!     cargo run --example lattice -- 8

use asymgon::lattice::{max_asymmetric_lattice, max_subpolygon_lattice};
use asymgon::rhythm::encode_intervals;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(8);
    println!("{} pulses", 2 * n);
    println!(
        "{:>3}  {:<28} {:>12} {:>12}  bits",
        "k", "gaps", "area", "unrestricted"
    );
    for k in 3..n {
        let iv = max_asymmetric_lattice(n, k).expect("3 <= k < n");
        let free = max_subpolygon_lattice(2 * n, k).expect("k <= 2n");
        println!(
            "{k:>3}  {:<28} {:>12.9} {:>12.9}  {}",
            format!("{:?}", iv.gaps()),
            iv.area(),
            free.area(),
            encode_intervals(&iv)
        );
    }
}

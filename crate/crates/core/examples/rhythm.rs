//! Onset patterns: decode a rhythm, test it for rhythmic oddity, and compare
//! it with the maximum-area asymmetric pattern of the same size.
//!
//!     cargo run --example rhythm -- 1001001000101000

use asymgon::lattice::max_asymmetric_lattice;
use asymgon::rhythm::{decode_rhythm, encode_intervals};

fn main() {
    let bits = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "1001001000101000".into());
    let iv = match decode_rhythm(&bits) {
        Ok(iv) => iv,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let (m, k) = (iv.m(), iv.k());
    println!("{bits}: gaps {:?}, area {:.10}", iv.gaps(), iv.area());
    if m % 2 != 0 {
        println!("odd number of pulses, no antipodal pairs to avoid");
        return;
    }
    println!("rhythmic oddity: {}", iv.is_asymmetric());
    if k >= 3 && k < m / 2 {
        let best = max_asymmetric_lattice(m / 2, k).unwrap();
        println!(
            "largest asymmetric {k}-onset pattern: {} gaps {:?}, area {:.10}",
            encode_intervals(&best),
            best.gaps(),
            best.area()
        );
    }
}

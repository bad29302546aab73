//! Double-wedge DP on a random instance, checked against brute force.
//!
//!     cargo run --release --example random_dp -- 9 42

use std::time::Instant;

use asymgon::dp::{solve_dp_with, DpOptions};
use asymgon::io::generate_instance;
use asymgon::oracle::oracle_solve;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer argument"));
    let n = args.next().unwrap_or(9) as usize;
    let seed = args.next().unwrap_or(42);
    let ds = generate_instance(n, seed, false)
        .unwrap()
        .load()
        .unwrap()
        .diameters;
    println!("n = {n}, seed = {seed}, angles = {:.4?}", ds.angles());
    for k in 3..n {
        let start = Instant::now();
        let out = solve_dp_with(&ds, k, &DpOptions::default()).unwrap();
        let took = start.elapsed();
        let check = if n <= 11 {
            let brute = oracle_solve(&ds, k, true).unwrap().area;
            format!("oracle {brute:.12}")
        } else {
            "oracle skipped".to_string()
        };
        println!(
            "k={k:<2} area {:.12}  {check}  vertices {:?}  anchors ({}, {}, {}, {})  {took:.2?}",
            out.solution.area,
            out.solution.selection.indices(),
            out.key.i,
            out.key.j,
            out.key.l,
            out.key.t
        );
    }
}

//! Solve an instance and write an SVG drawing.
//!
//!     cargo run --example render_svg -- out.svg

use asymgon::io::{generate_instance, SolveRecord};
use asymgon::svg::render_svg;
use asymgon::{solve, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "asymgon.svg".into());
    let ds = generate_instance(9, 3, false)?.load()?.diameters;
    let sol = solve(&ds, 6, &SolveOptions::default())?;
    let record = SolveRecord::new(&ds, &sol);
    std::fs::write(&path, render_svg(&record)?)?;
    println!(
        "area {:.10} with vertices {:?} -> {path}",
        sol.area,
        sol.selection.indices()
    );
    Ok(())
}

//! Maximum-area asymmetric polygons on the endpoints of circle diameters.
//!
//! Given `n` diameters of the unit circle, pick `k < n` of their `2n`
//! endpoints so that the convex polygon they span has maximum area and
//! contains no diameter, i.e. no two chosen endpoints are antipodal. On the
//! evenly spaced lattice this is the "rhythmic oddity" property of a rhythm
//! with `k` onsets in `2n` pulses.
//!
//! - [`lattice`]: closed-form interval vectors for evenly spaced diameters.
//! - [`dp`]: double-wedge dynamic program for arbitrary diameters.
//! - [`fast`]: linear sweeps for `k = 3` and `k = 4`.
//! - [`oracle`]: exhaustive enumeration for small instances.
//! - [`rhythm`]: onset bit strings and interval vectors.
//! - [`io`], [`svg`]: instance/result files and drawings.

pub mod dp;
pub mod error;
pub mod fast;
pub mod geometry;
pub mod io;
pub mod lattice;
pub mod oracle;
pub mod rhythm;
pub mod solve;
pub mod svg;

pub use dp::{solve_dp, DoubleWedgeKey};
pub use error::{Error, Result};
pub use fast::{solve_quadrilateral, solve_triangle};
pub use geometry::{
    antipode, is_asymmetric, polygon_area, triangle_area_with_center, DiameterSet, Solution,
    SolverKind, VertexSelection,
};
pub use lattice::{solve_lattice, IntervalVector};
pub use oracle::oracle_solve;
pub use rhythm::{decode_rhythm, encode_rhythm};
pub use solve::{solve, SolveOptions, SolverChoice};

//! Linear-time sweeps for the largest triangle and the largest asymmetric
//! quadrilateral.
//!
//! Pointers are kept as unwrapped indices: index `x >= 2n` denotes endpoint
//! `x mod 2n` one lap further around, so arcs measured from the current
//! vertex are plain differences of unwrapped angles and every pointer only
//! ever increases.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{DiameterSet, Solution, SolverKind, VertexSelection, TAU};

const THIRD: f64 = 2.0 * PI / 3.0;
const TWO_THIRDS: f64 = 4.0 * PI / 3.0;
/// Slack on the arc thresholds so that arcs of exactly `2π/3` or `4π/3`
/// survive rounding.
const ARC_EPS: f64 = 1e-12;

/// Moves forward from `start` to the first index where `pred` holds.
///
/// Gives up after two full laps of the circle, which only happens for a
/// predicate that is not monotone along the sweep.
pub fn advance_pointer(
    ds: &DiameterSet,
    start: usize,
    mut pred: impl FnMut(usize) -> bool,
) -> Result<usize> {
    let limit = start + 2 * ds.endpoints();
    let mut x = start;
    while !pred(x) {
        x += 1;
        if x > limit {
            return Err(Error::SweepExhausted { start });
        }
    }
    Ok(x)
}

/// Threshold pointers of one critical vertex `p_i`, as unwrapped indices
/// (`x mod 2n` is the endpoint):
///
/// - `j`: last endpoint with `arc(i, j) <= 2π/3`
/// - `k`: first endpoint with `arc(i, k) >= 2π/3`
/// - `l`: last endpoint with `arc(i, l) <= 4π/3`
/// - `m`: first endpoint with `arc(i, m) >= 4π/3`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriticalPointers {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub m: usize,
}

#[derive(Debug, Clone)]
pub struct TriangleSweep {
    pub solution: Solution,
    pub pointers: Vec<CriticalPointers>,
    /// Forward steps taken by each of the four pointers after the first vertex.
    pub steps: [usize; 4],
}

fn arc_from(ds: &DiameterSet, i: usize, x: usize) -> f64 {
    ds.theta_unwrapped(x) - ds.theta_unwrapped(i)
}

/// Area of a polygon given by increasing unwrapped indices spanning less
/// than one lap.
fn area_of(ds: &DiameterSet, unwrapped: &[usize]) -> f64 {
    let th = |x: usize| ds.theta_unwrapped(x);
    let k = unwrapped.len();
    let mut sum = (th(unwrapped[0]) + TAU - th(unwrapped[k - 1])).sin();
    for w in 1..k {
        sum += (th(unwrapped[w]) - th(unwrapped[w - 1])).sin();
    }
    0.5 * sum
}

/// Largest triangle with vertices among the endpoints.
pub fn solve_triangle(ds: &DiameterSet) -> Result<Solution> {
    Ok(triangle_sweep(ds)?.solution)
}

/// The triangle sweep with its per-vertex pointers exposed.
pub fn triangle_sweep(ds: &DiameterSet) -> Result<TriangleSweep> {
    if ds.n() < 3 {
        return Err(Error::KOutOfRange {
            k: 3,
            n: ds.n(),
            lo: 3,
        });
    }
    let total = ds.endpoints();
    let (mut pj, mut pk, mut pl, mut pm) = (0, 0, 0, 0);
    let mut first = [0usize; 4];
    let mut pointers = Vec::with_capacity(total);
    let mut best: Option<(f64, [usize; 3])> = None;

    for i in 0..total {
        let le = |x: usize, t: f64| arc_from(ds, i, x) <= t + ARC_EPS;
        let ge = |x: usize, t: f64| arc_from(ds, i, x) >= t - ARC_EPS;
        pj = advance_pointer(ds, pj.max(i), |x| !le(x + 1, THIRD))?;
        pk = advance_pointer(ds, pk.max(i), |x| ge(x, THIRD))?;
        pl = advance_pointer(ds, pl.max(i), |x| !le(x + 1, TWO_THIRDS))?;
        pm = advance_pointer(ds, pm.max(i), |x| ge(x, TWO_THIRDS))?;
        if i == 0 {
            first = [pj, pk, pl, pm];
        }
        pointers.push(CriticalPointers {
            i,
            j: pj,
            k: pk,
            l: pl,
            m: pm,
        });

        // Both neighbours within 2π/3, pushed as far out as allowed.
        if pj > i && pm < i + total && pj < pm {
            consider(&mut best, area_of(ds, &[i, pj, pm]), [i, pj, pm]);
        }
        // Both neighbours at least 2π/3 away, pulled as close as allowed.
        if pk > i && pl < i + total && pk < pl {
            consider(&mut best, area_of(ds, &[i, pk, pl]), [i, pk, pl]);
        }
    }
    let (_, tri) = best.ok_or(Error::Infeasible(3))?;
    let selection = VertexSelection::new(tri.iter().map(|&x| x % total).collect())?;
    let last = [pj, pk, pl, pm];
    let steps = [0, 1, 2, 3].map(|w| last[w] - first[w]);
    Ok(TriangleSweep {
        solution: Solution::new(ds, selection, SolverKind::Triangle),
        pointers,
        steps,
    })
}

fn consider<const K: usize>(best: &mut Option<(f64, [usize; K])>, area: f64, verts: [usize; K]) {
    if best.is_none_or(|(b, _)| area > b) {
        *best = Some((area, verts));
    }
}

#[derive(Debug, Clone)]
pub struct QuadSweep {
    pub solution: Solution,
    /// Forward steps of the two farthest-point pointers after the first vertex.
    pub steps: [usize; 2],
}

/// Largest asymmetric quadrilateral.
pub fn solve_quadrilateral(ds: &DiameterSet) -> Result<Solution> {
    Ok(quadrilateral_sweep(ds)?.solution)
}

/// For every endpoint `x` the diagonal runs from `x` to the antipode of its
/// successor. Each side of the diagonal keeps a pointer to the endpoint
/// closest to the side's arc midpoint, i.e. farthest from the diagonal; the
/// midpoints only move forward as `x` does. When the two farthest points are
/// ends of one diameter, the runner-up on either side is a neighbour of its
/// side's farthest point.
pub fn quadrilateral_sweep(ds: &DiameterSet) -> Result<QuadSweep> {
    let n = ds.n();
    if n < 4 {
        return Err(Error::KOutOfRange { k: 4, n, lo: 4 });
    }
    let total = ds.endpoints();
    let th = |x: usize| ds.theta_unwrapped(x);
    let (mut py, mut pz) = (0usize, 0usize);
    let mut first = [0usize; 2];
    let mut best: Option<(f64, [usize; 4])> = None;

    for x in 0..total {
        let opposite = x + n + 1;
        let (y_lo, y_hi) = (x + 2, x + n - 1);
        let (z_lo, z_hi) = (x + n + 2, x + 2 * n - 1);
        let mid_y = 0.5 * (th(x) + th(opposite));
        let mid_z = 0.5 * (th(opposite) + th(x + total));

        py = farthest(ds, py.max(y_lo), y_hi, mid_y)?;
        pz = farthest(ds, pz.max(z_lo), z_hi, mid_z)?;
        if x == 0 {
            first = [py, pz];
        }

        let ys = neighbourhood(py, y_lo, y_hi);
        let zs = neighbourhood(pz, z_lo, z_hi);
        for &y in ys.iter().flatten() {
            for &z in zs.iter().flatten() {
                if z - y == n {
                    continue;
                }
                let verts = [x, y, opposite, z];
                consider(&mut best, area_of(ds, &verts), verts);
            }
        }
    }
    let (_, quad) = best.ok_or(Error::Infeasible(4))?;
    let selection = VertexSelection::new(quad.iter().map(|&x| x % total).collect())?;
    let steps = [py - first[0], pz - first[1]];
    Ok(QuadSweep {
        solution: Solution::new(ds, selection, SolverKind::Quad),
        steps,
    })
}

/// Advances from `start` while the next endpoint (up to `hi`) is strictly
/// closer to the angle `mid`.
fn farthest(ds: &DiameterSet, start: usize, hi: usize, mid: f64) -> Result<usize> {
    let dist = |x: usize| (ds.theta_unwrapped(x) - mid).abs();
    advance_pointer(ds, start, |p| p >= hi || dist(p + 1) >= dist(p))
}

fn neighbourhood(p: usize, lo: usize, hi: usize) -> [Option<usize>; 3] {
    [Some(p), (p > lo).then(|| p - 1), (p < hi).then(|| p + 1)]
}

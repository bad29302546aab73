//! Diameter endpoints on the unit circle and the area formulas built on them.
//!
//! A set of `n` diameters is stored as its `n` angles in `[0, π)`, sorted.
//! The `2n` endpoints are indexed so that endpoint `x < n` sits at
//! `angles[x]` and endpoint `x >= n` sits at `angles[x - n] + π`. Angles are
//! then strictly increasing in the index, and the antipode of `x` is always
//! `(x + n) mod 2n`.
//!
//! All traversal in this crate walks in increasing-angle (counterclockwise)
//! order. A clockwise walk is the mirror image and yields the same areas.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Minimum angular separation between two distinct diameters, in radians.
pub const ANGLE_EPS: f64 = 1e-9;

pub const TAU: f64 = 2.0 * PI;

#[derive(Debug, Clone, PartialEq)]
pub struct DiameterSet {
    angles: Vec<f64>,
}

impl DiameterSet {
    /// Builds a set from sorted angles in `[0, π)`.
    pub fn new(angles: Vec<f64>) -> Result<Self> {
        let n = angles.len();
        if n < 2 {
            return Err(Error::InvalidAngles(format!(
                "need at least 2 diameters, got {n}"
            )));
        }
        for (idx, &a) in angles.iter().enumerate() {
            if !a.is_finite() || !(0.0..PI).contains(&a) {
                return Err(Error::InvalidAngles(format!(
                    "angle #{idx} = {a} is not in [0, pi)"
                )));
            }
        }
        for (idx, w) in angles.windows(2).enumerate() {
            if w[1] - w[0] <= ANGLE_EPS {
                return Err(Error::InvalidAngles(format!(
                    "angles #{idx} and #{} are not strictly increasing by more than {ANGLE_EPS}",
                    idx + 1
                )));
            }
        }
        // The last diameter must also stay clear of the first one's antipode.
        if angles[0] + PI - angles[n - 1] <= ANGLE_EPS {
            return Err(Error::InvalidAngles(
                "first and last diameters nearly coincide".to_string(),
            ));
        }
        Ok(Self { angles })
    }

    /// Accepts angles in any order and range, reducing each modulo π first.
    ///
    /// Returns the set together with the number of angles that had to be
    /// reduced.
    pub fn from_unnormalized(raw: &[f64]) -> Result<(Self, usize)> {
        let mut reduced = 0;
        let mut angles = Vec::with_capacity(raw.len());
        for &a in raw {
            if !a.is_finite() {
                return Err(Error::InvalidAngles(format!("angle {a} is not finite")));
            }
            let mut r = a.rem_euclid(PI);
            if r >= PI {
                r = 0.0;
            }
            if r != a {
                reduced += 1;
            }
            angles.push(r);
        }
        angles.sort_by(f64::total_cmp);
        Ok((Self::new(angles)?, reduced))
    }

    /// `n` diameters at angles `iπ/n`.
    pub fn evenly_spaced(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| i as f64 * PI / n as f64).collect())
    }

    /// Number of diameters.
    pub fn n(&self) -> usize {
        self.angles.len()
    }

    /// Number of endpoints, `2n`.
    pub fn endpoints(&self) -> usize {
        2 * self.angles.len()
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    /// Angle of endpoint `x` in `[0, 2π)`. Panics if `x >= 2n`.
    pub fn theta(&self, x: usize) -> f64 {
        let n = self.n();
        if x < n {
            self.angles[x]
        } else {
            self.angles[x - n] + PI
        }
    }

    /// Angle of an unwrapped index: `x` may run past `2n`, each lap adding 2π.
    pub fn theta_unwrapped(&self, x: usize) -> f64 {
        let m = self.endpoints();
        self.theta(x % m) + TAU * (x / m) as f64
    }

    /// Counterclockwise arc from endpoint `a` to endpoint `b`, in `[0, 2π)`.
    pub fn ccw_arc(&self, a: usize, b: usize) -> f64 {
        let d = self.theta(b) - self.theta(a);
        if d < 0.0 {
            d + TAU
        } else {
            d
        }
    }

    /// Cartesian position of endpoint `x` on the unit circle.
    pub fn point(&self, x: usize) -> (f64, f64) {
        let t = self.theta(x);
        (t.cos(), t.sin())
    }

    /// True when the diameters are evenly spaced (all endpoint gaps equal
    /// `π/n` within `tol`), possibly rotated.
    pub fn is_evenly_spaced(&self, tol: f64) -> bool {
        let step = PI / self.n() as f64;
        let m = self.endpoints();
        (0..m).all(|x| (self.ccw_arc(x, (x + 1) % m) - step).abs() <= tol)
    }

    /// Reflects every diameter across the horizontal axis (`θ -> -θ`).
    pub fn mirrored(&self) -> Self {
        let (ds, _) = Self::from_unnormalized(&self.angles.iter().map(|a| -a).collect::<Vec<_>>())
            .expect("mirror of a valid set is valid");
        ds
    }

    pub fn check_index(&self, x: usize) -> Result<()> {
        if x < self.endpoints() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                len: self.endpoints(),
            })
        }
    }
}

/// Antipode of endpoint `x` among the `2n` endpoints of `n` diameters.
pub fn antipode(x: usize, n: usize) -> Result<usize> {
    if x >= 2 * n {
        return Err(Error::IndexOutOfRange {
            index: x,
            len: 2 * n,
        });
    }
    Ok((x + n) % (2 * n))
}

/// A candidate polygon: `k >= 3` distinct endpoint indices in increasing
/// (counterclockwise) order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexSelection {
    indices: Vec<usize>,
}

impl VertexSelection {
    /// Sorts the indices; rejects fewer than 3 or any duplicates.
    pub fn new(mut indices: Vec<usize>) -> Result<Self> {
        if indices.len() < 3 {
            return Err(Error::TooFewVertices(indices.len()));
        }
        indices.sort_unstable();
        if let Some(w) = indices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateIndex(w[0]));
        }
        Ok(Self { indices })
    }

    /// Like [`VertexSelection::new`], and also checks every index against `ds`.
    pub fn for_set(ds: &DiameterSet, indices: Vec<usize>) -> Result<Self> {
        let sel = Self::new(indices)?;
        for &x in &sel.indices {
            ds.check_index(x)?;
        }
        Ok(sel)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Shifts every index by `steps` positions around `m` endpoints.
    pub fn rotated(&self, steps: usize, m: usize) -> Self {
        let mut indices: Vec<usize> = self.indices.iter().map(|&x| (x + steps) % m).collect();
        indices.sort_unstable();
        Self { indices }
    }
}

impl TryFrom<Vec<usize>> for VertexSelection {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<VertexSelection> for Vec<usize> {
    fn from(s: VertexSelection) -> Self {
        s.indices
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverKind {
    Lattice,
    Dp,
    Triangle,
    Quad,
    Oracle,
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SolverKind::Lattice => "lattice",
            SolverKind::Dp => "dp",
            SolverKind::Triangle => "triangle",
            SolverKind::Quad => "quad",
            SolverKind::Oracle => "oracle",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub selection: VertexSelection,
    /// Area in unit-circle units.
    pub area: f64,
    pub solver: SolverKind,
}

impl Solution {
    /// Builds a solution, computing its area from the selection.
    pub fn new(ds: &DiameterSet, selection: VertexSelection, solver: SolverKind) -> Self {
        let area = polygon_area_unchecked(ds, selection.indices());
        Self {
            selection,
            area,
            solver,
        }
    }
}

/// Area of the convex polygon on the selected endpoints:
/// half the sum of `sin` of the consecutive angular gaps.
pub fn polygon_area(ds: &DiameterSet, sel: &VertexSelection) -> Result<f64> {
    for &x in sel.indices() {
        ds.check_index(x)?;
    }
    Ok(polygon_area_unchecked(ds, sel.indices()))
}

/// `sorted` must hold at least two increasing, in-range indices.
pub(crate) fn polygon_area_unchecked(ds: &DiameterSet, sorted: &[usize]) -> f64 {
    let k = sorted.len();
    let mut sum = 0.0;
    for w in 0..k {
        let a = sorted[w];
        let b = sorted[(w + 1) % k];
        let mut gap = ds.theta(b) - ds.theta(a);
        if w + 1 == k {
            gap += TAU;
        }
        sum += gap.sin();
    }
    0.5 * sum
}

/// Area of triangle `O a b` where `b` follows `a` counterclockwise by less
/// than a half circle.
pub fn triangle_area_with_center(ds: &DiameterSet, a: usize, b: usize) -> Result<f64> {
    ds.check_index(a)?;
    ds.check_index(b)?;
    let arc = ds.ccw_arc(a, b);
    if a == b || arc >= PI {
        return Err(Error::InvalidArc { from: a, to: b });
    }
    Ok(0.5 * arc.sin())
}

/// Signed area of `O a b` for an arbitrary counterclockwise arc.
pub(crate) fn signed_center_triangle(ds: &DiameterSet, a: usize, b: usize) -> f64 {
    0.5 * ds.ccw_arc(a, b).sin()
}

/// True when no two selected endpoints are antipodal.
pub fn is_asymmetric(sel: &VertexSelection, n: usize) -> bool {
    is_asymmetric_indices(sel.indices(), n)
}

pub(crate) fn is_asymmetric_indices(sorted: &[usize], n: usize) -> bool {
    // Sorted input: an antipodal pair (x, x + n) shows up as x < n and x + n present.
    sorted
        .iter()
        .take_while(|&&x| x < n)
        .all(|&x| sorted.binary_search(&(x + n)).is_err())
}

//! Closed-form optima for evenly spaced diameters.
//!
//! On the `m = 2n` point lattice a polygon is identified with its interval
//! vector, the cyclic sequence of gap counts between consecutive vertices.
//! With `m = kq + r`, the best `k`-gon overall uses `r` gaps of `q + 1` and
//! `k - r` gaps of `q`. For odd `k` some ordering of that multiset avoids
//! every antipodal pair; for even `k` none does, and the best asymmetric
//! polygon instead uses one gap of `q - 1`, `r + 1` gaps of `q + 1` and the
//! rest `q`, arranged so that no run of consecutive gaps sums to `n`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{DiameterSet, Solution, SolverKind, VertexSelection};

/// Cyclic gap sequence of a polygon on an `m`-point lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntervalVector {
    gaps: Vec<usize>,
    m: usize,
}

impl IntervalVector {
    pub fn new(gaps: Vec<usize>, m: usize) -> Result<Self> {
        if gaps.len() < 3 {
            return Err(Error::TooFewVertices(gaps.len()));
        }
        if gaps.contains(&0) {
            return Err(Error::IntervalVector("every gap must be at least 1".into()));
        }
        let sum: usize = gaps.iter().sum();
        if sum != m {
            return Err(Error::IntervalVector(format!(
                "gaps sum to {sum}, lattice has {m} points"
            )));
        }
        Ok(Self { gaps, m })
    }

    /// Gaps of a selection on an `m`-point lattice, starting at its first index.
    pub fn from_selection(sel: &VertexSelection, m: usize) -> Result<Self> {
        let idx = sel.indices();
        if let Some(&x) = idx.iter().find(|&&x| x >= m) {
            return Err(Error::IndexOutOfRange { index: x, len: m });
        }
        let k = idx.len();
        let gaps = (0..k)
            .map(|w| {
                if w + 1 < k {
                    idx[w + 1] - idx[w]
                } else {
                    idx[0] + m - idx[w]
                }
            })
            .collect();
        Self::new(gaps, m)
    }

    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    pub fn k(&self) -> usize {
        self.gaps.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Cyclic indexing.
    pub fn gap(&self, i: usize) -> usize {
        self.gaps[i % self.gaps.len()]
    }

    /// Vertex indices obtained by walking the gaps from `start`.
    pub fn to_selection(&self, start: usize) -> VertexSelection {
        let mut pos = start % self.m;
        let mut idx = Vec::with_capacity(self.k());
        for &g in &self.gaps {
            idx.push(pos);
            pos = (pos + g) % self.m;
        }
        VertexSelection::new(idx).expect("gaps >= 1 summing to m give distinct indices")
    }

    /// `½ Σ sin(2π a_i / m)`.
    pub fn area(&self) -> f64 {
        let m = self.m as f64;
        0.5 * self
            .gaps
            .iter()
            .map(|&g| (2.0 * PI * g as f64 / m).sin())
            .sum::<f64>()
    }

    /// No run of consecutive gaps (shorter than the whole cycle) sums to `m/2`.
    pub fn is_asymmetric(&self) -> bool {
        if self.m % 2 == 1 {
            return true;
        }
        let half = self.m / 2;
        let k = self.k();
        (0..k).all(|start| {
            let mut sum = 0;
            for len in 1..k {
                sum += self.gap(start + len - 1);
                if sum == half {
                    return false;
                }
                if sum > half {
                    break;
                }
            }
            true
        })
    }

    /// Multiset of gaps, sorted.
    pub fn sorted_gaps(&self) -> Vec<usize> {
        let mut g = self.gaps.clone();
        g.sort_unstable();
        g
    }
}

fn repeat(out: &mut Vec<usize>, value: usize, count: usize) {
    out.extend(std::iter::repeat_n(value, count));
}

/// Best `k`-gon (not necessarily asymmetric) on an `m`-point lattice:
/// `r` gaps of `q + 1` followed by `k - r` gaps of `q`, where `m = kq + r`.
pub fn max_subpolygon_lattice(m: usize, k: usize) -> Result<IntervalVector> {
    if k < 3 {
        return Err(Error::TooFewVertices(k));
    }
    if k > m {
        return Err(Error::LatticeTooSmall { m, k });
    }
    let (q, r) = (m / k, m % k);
    let mut gaps = Vec::with_capacity(k);
    repeat(&mut gaps, q + 1, r);
    repeat(&mut gaps, q, k - r);
    IntervalVector::new(gaps, m)
}

fn check_range(n: usize, k: usize) -> Result<()> {
    if k < 3 || k >= n {
        return Err(Error::KOutOfRange { k, n, lo: 3 });
    }
    Ok(())
}

/// Best asymmetric `k`-gon for odd `k` on `n` evenly spaced diameters.
pub fn max_asymmetric_lattice_odd(n: usize, k: usize) -> Result<IntervalVector> {
    if k.is_multiple_of(2) {
        return Err(Error::WrongParity(k));
    }
    check_range(n, k)?;
    let m = 2 * n;
    let (q, r) = (m / k, m % k);
    let mut gaps = Vec::with_capacity(k);
    if r % 2 == 0 {
        repeat(&mut gaps, q + 1, r / 2);
        repeat(&mut gaps, q, (k - r - 1) / 2);
        repeat(&mut gaps, q + 1, r / 2);
        repeat(&mut gaps, q, (k - r).div_ceil(2));
    } else {
        repeat(&mut gaps, q, (k - r) / 2);
        repeat(&mut gaps, q + 1, (r - 1) / 2);
        repeat(&mut gaps, q, (k - r) / 2);
        repeat(&mut gaps, q + 1, r.div_ceil(2));
    }
    IntervalVector::new(gaps, m)
}

/// Best asymmetric `k`-gon for even `k` on `n` evenly spaced diameters.
pub fn max_asymmetric_lattice_even(n: usize, k: usize) -> Result<IntervalVector> {
    if k % 2 == 1 {
        return Err(Error::WrongParity(k));
    }
    check_range(n, k)?;
    let m = 2 * n;
    // k and m both even force r even, so r <= k - 2; k < n gives q >= 2.
    let (q, r) = (m / k, m % k);
    let mut gaps = Vec::with_capacity(k);
    gaps.push(q - 1);
    repeat(&mut gaps, q + 1, r / 2);
    repeat(&mut gaps, q, (k - r - 2) / 2);
    repeat(&mut gaps, q + 1, (r + 2) / 2);
    repeat(&mut gaps, q, (k - r - 2) / 2);
    IntervalVector::new(gaps, m)
}

/// Interval vector of the best asymmetric `k`-gon for `n` evenly spaced diameters.
pub fn max_asymmetric_lattice(n: usize, k: usize) -> Result<IntervalVector> {
    if k % 2 == 1 {
        max_asymmetric_lattice_odd(n, k)
    } else {
        max_asymmetric_lattice_even(n, k)
    }
}

/// Constant-time solution for `n` evenly spaced diameters, anchored at endpoint 0.
pub fn solve_lattice(n: usize, k: usize) -> Result<Solution> {
    check_range(n, k)?;
    let ds = DiameterSet::evenly_spaced(n)?;
    solve_lattice_on(&ds, k)
}

/// Lattice solution on an evenly spaced (possibly rotated) instance.
pub fn solve_lattice_on(ds: &DiameterSet, k: usize) -> Result<Solution> {
    check_range(ds.n(), k)?;
    if !ds.is_evenly_spaced(1e-9) {
        return Err(Error::NotEvenlySpaced);
    }
    let iv = max_asymmetric_lattice(ds.n(), k)?;
    Ok(Solution::new(ds, iv.to_selection(0), SolverKind::Lattice))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(g: &[usize], m: usize) -> IntervalVector {
        IntervalVector::new(g.to_vec(), m).unwrap()
    }

    #[test]
    fn unconstrained_optimum_examples() {
        assert_eq!(
            max_subpolygon_lattice(16, 5).unwrap().gaps(),
            &[4, 3, 3, 3, 3]
        );
        assert_eq!(max_subpolygon_lattice(12, 4).unwrap().gaps(), &[3, 3, 3, 3]);
        assert!(max_subpolygon_lattice(16, 2).is_err());
        assert!(max_subpolygon_lattice(4, 5).is_err());
        let a = max_subpolygon_lattice(16, 5).unwrap().area();
        assert!((a - 2.347_759_065).abs() < 1e-7);
    }

    #[test]
    fn odd_constructions() {
        assert_eq!(
            max_asymmetric_lattice_odd(8, 5).unwrap().gaps(),
            &[3, 3, 3, 3, 4]
        );
        assert_eq!(
            max_asymmetric_lattice_odd(7, 5).unwrap().gaps(),
            &[3, 3, 3, 3, 2]
        );
        assert_eq!(max_asymmetric_lattice_odd(4, 3).unwrap().gaps(), &[3, 3, 2]);
        assert_eq!(max_asymmetric_lattice_odd(8, 4), Err(Error::WrongParity(4)));
        assert!(max_asymmetric_lattice_odd(5, 5).is_err());
    }

    #[test]
    fn even_constructions() {
        assert_eq!(
            max_asymmetric_lattice_even(8, 4).unwrap().gaps(),
            &[3, 4, 5, 4]
        );
        assert_eq!(
            max_asymmetric_lattice_even(8, 5),
            Err(Error::WrongParity(5))
        );
        assert!(max_asymmetric_lattice_even(4, 4).is_err());
        assert!(!iv(&[4, 4, 4, 4], 16).is_asymmetric());
    }

    #[test]
    fn window_sum_asymmetry() {
        assert!(iv(&[3, 3, 4, 2, 4], 16).is_asymmetric());
        assert!(!iv(&[4, 4, 4, 4], 16).is_asymmetric());
        assert!(iv(&[3, 3, 3, 3, 4], 16).is_asymmetric());
    }

    #[test]
    fn constructions_sum_and_are_asymmetric() {
        for n in 4..=30 {
            for k in 3..n {
                let v = max_asymmetric_lattice(n, k).unwrap();
                assert_eq!(v.gaps().iter().sum::<usize>(), 2 * n);
                assert!(v.is_asymmetric(), "n={n} k={k} {:?}", v.gaps());
            }
        }
    }

    #[test]
    fn even_result_is_strictly_below_unconstrained_max() {
        for n in 5..=30 {
            for k in (4..n).step_by(2) {
                let asym = max_asymmetric_lattice_even(n, k).unwrap().area();
                let best = max_subpolygon_lattice(2 * n, k).unwrap().area();
                assert!(asym < best, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn solve_lattice_golden() {
        let s = solve_lattice(8, 5).unwrap();
        assert_eq!(s.solver, SolverKind::Lattice);
        assert_eq!(s.selection.indices(), &[0, 3, 6, 9, 12]);
        assert!((s.area - 2.347_759_065).abs() < 1e-7);
        let s = solve_lattice(8, 4).unwrap();
        assert!((s.area - 1.923_879_5).abs() < 1e-7);
        // ⟨3,3,2⟩ on 8 points: (1 + √2) / 2.
        let s = solve_lattice(4, 3).unwrap();
        assert!((s.area - (1.0 + 2f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!(solve_lattice(8, 8).is_err());
        assert!(solve_lattice(8, 2).is_err());
    }

    #[test]
    fn selection_roundtrip() {
        let v = iv(&[3, 3, 4, 2, 4], 16);
        let sel = v.to_selection(0);
        assert_eq!(sel.indices(), &[0, 3, 6, 10, 12]);
        assert_eq!(IntervalVector::from_selection(&sel, 16).unwrap(), v);
    }

    #[test]
    fn solve_on_uneven_instance_is_rejected() {
        let ds = DiameterSet::new(vec![0.0, 0.4, 1.0, 2.0, 2.5]).unwrap();
        assert_eq!(solve_lattice_on(&ds, 3), Err(Error::NotEvenlySpaced));
    }
}

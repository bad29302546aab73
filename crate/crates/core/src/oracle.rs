//! Exhaustive ground truth for small instances.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::geometry::{
    is_asymmetric_indices, polygon_area_unchecked, DiameterSet, Solution, SolverKind,
    VertexSelection,
};

pub const DEFAULT_BUDGET: u128 = 5_000_000;

/// `C(n, k)`, saturating.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Enumerates every `k`-subset of the endpoints and returns the largest,
/// skipping subsets with an antipodal pair when `require_asymmetric` is set.
///
/// Subsets are visited in lexicographic order and only a strictly larger
/// area replaces the incumbent, so ties go to the lexicographically first.
pub fn oracle_solve(ds: &DiameterSet, k: usize, require_asymmetric: bool) -> Result<Solution> {
    oracle_solve_with_budget(ds, k, require_asymmetric, DEFAULT_BUDGET)
}

pub fn oracle_solve_with_budget(
    ds: &DiameterSet,
    k: usize,
    require_asymmetric: bool,
    budget: u128,
) -> Result<Solution> {
    let m = ds.endpoints();
    if k < 3 {
        return Err(Error::TooFewVertices(k));
    }
    if k > m {
        return Err(Error::Infeasible(k));
    }
    let combinations = binomial(m, k);
    if combinations > budget {
        return Err(Error::BudgetExceeded {
            combinations,
            budget,
        });
    }
    let n = ds.n();
    let mut best: Option<(f64, Vec<usize>)> = None;
    for subset in (0..m).combinations(k) {
        if require_asymmetric && !is_asymmetric_indices(&subset, n) {
            continue;
        }
        let area = polygon_area_unchecked(ds, &subset);
        if best.as_ref().is_none_or(|(b, _)| area > *b) {
            best = Some((area, subset));
        }
    }
    let (area, subset) = best.ok_or(Error::Infeasible(k))?;
    Ok(Solution {
        selection: VertexSelection::new(subset)?,
        area,
        solver: SolverKind::Oracle,
    })
}

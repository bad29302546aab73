//! Solver selection.

use std::fmt;
use std::str::FromStr;

use crate::dp::{solve_dp_with, DpOptions};
use crate::error::{Error, Result};
use crate::fast::{solve_quadrilateral, solve_triangle};
use crate::geometry::{DiameterSet, Solution};
use crate::lattice::solve_lattice_on;
use crate::oracle::oracle_solve_with_budget;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolverChoice {
    /// Lattice for evenly spaced input, the linear sweeps for k = 3 and 4,
    /// the DP otherwise.
    #[default]
    Auto,
    Lattice,
    Dp,
    Oracle,
    /// Linear sweep; only k = 3 or k = 4.
    Fast,
}

impl FromStr for SolverChoice {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "auto" => Ok(Self::Auto),
            "lattice" => Ok(Self::Lattice),
            "dp" => Ok(Self::Dp),
            "oracle" => Ok(Self::Oracle),
            "fast" => Ok(Self::Fast),
            other => Err(format!("unknown solver `{other}`")),
        }
    }
}

impl fmt::Display for SolverChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Auto => "auto",
            Self::Lattice => "lattice",
            Self::Dp => "dp",
            Self::Oracle => "oracle",
            Self::Fast => "fast",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub solver: SolverChoice,
    pub threads: usize,
    pub budget: u128,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            solver: SolverChoice::Auto,
            threads: 1,
            budget: crate::oracle::DEFAULT_BUDGET,
        }
    }
}

/// Maximum-area asymmetric `k`-gon with the requested solver, `3 <= k < n`.
pub fn solve(ds: &DiameterSet, k: usize, opts: &SolveOptions) -> Result<Solution> {
    let n = ds.n();
    if k < 3 || k >= n {
        return Err(Error::KOutOfRange { k, n, lo: 3 });
    }
    let dp = || {
        Ok(solve_dp_with(
            ds,
            k,
            &DpOptions {
                threads: opts.threads,
                ..Default::default()
            },
        )?
        .solution)
    };
    match opts.solver {
        SolverChoice::Auto if ds.is_evenly_spaced(1e-9) => solve_lattice_on(ds, k),
        SolverChoice::Auto | SolverChoice::Fast if k == 3 => solve_triangle(ds),
        SolverChoice::Auto | SolverChoice::Fast if k == 4 => solve_quadrilateral(ds),
        SolverChoice::Auto | SolverChoice::Dp => dp(),
        SolverChoice::Fast => Err(Error::UnsupportedSolver {
            solver: "fast".into(),
            k,
        }),
        SolverChoice::Lattice => solve_lattice_on(ds, k),
        SolverChoice::Oracle => oracle_solve_with_budget(ds, k, true, opts.budget),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::SolverKind;

    #[test]
    fn auto_dispatch() {
        let even = DiameterSet::evenly_spaced(8).unwrap();
        let opts = SolveOptions::default();
        assert_eq!(solve(&even, 5, &opts).unwrap().solver, SolverKind::Lattice);
        let ds = DiameterSet::new(vec![0.0, 0.4, 0.9, 1.5, 2.0, 2.6]).unwrap();
        assert_eq!(solve(&ds, 3, &opts).unwrap().solver, SolverKind::Triangle);
        assert_eq!(solve(&ds, 4, &opts).unwrap().solver, SolverKind::Quad);
        assert_eq!(solve(&ds, 5, &opts).unwrap().solver, SolverKind::Dp);
    }

    #[test]
    fn explicit_solver_errors() {
        let ds = DiameterSet::new(vec![0.0, 0.4, 0.9, 1.5, 2.0, 2.6]).unwrap();
        let lattice = SolveOptions {
            solver: SolverChoice::Lattice,
            ..Default::default()
        };
        assert_eq!(solve(&ds, 3, &lattice), Err(Error::NotEvenlySpaced));
        let fast = SolveOptions {
            solver: SolverChoice::Fast,
            ..Default::default()
        };
        assert!(matches!(
            solve(&ds, 5, &fast),
            Err(Error::UnsupportedSolver { .. })
        ));
        assert!(matches!(
            solve(&ds, 6, &SolveOptions::default()),
            Err(Error::KOutOfRange { .. })
        ));
    }

    #[test]
    fn parse_choice() {
        assert_eq!("dp".parse::<SolverChoice>().unwrap(), SolverChoice::Dp);
        assert!("magic".parse::<SolverChoice>().is_err());
    }
}

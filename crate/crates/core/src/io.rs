//! Instance and result files.
//!
//! An instance is JSON, either `{"diameters": [radians, ...]}` or
//! `{"even": n}`. A result is the JSON object printed by `asymgon solve`.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{DiameterSet, Solution, SolverKind, ANGLE_EPS};
use crate::lattice::IntervalVector;
use crate::rhythm::encode_intervals;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum Instance {
    Diameters { diameters: Vec<f64> },
    Even { even: usize },
}

/// A parsed instance plus the number of angles reduced modulo π.
#[derive(Debug, Clone)]
pub struct LoadedInstance {
    pub diameters: DiameterSet,
    pub normalized: usize,
}

impl Instance {
    pub fn parse(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn load(&self) -> Result<LoadedInstance> {
        match self {
            Instance::Even { even } => Ok(LoadedInstance {
                diameters: DiameterSet::evenly_spaced(*even)?,
                normalized: 0,
            }),
            Instance::Diameters { diameters } => {
                let (ds, normalized) = DiameterSet::from_unnormalized(diameters)?;
                Ok(LoadedInstance {
                    diameters: ds,
                    normalized,
                })
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serializes") + "\n"
    }
}

/// Uniform random angles in `[0, π)`, redrawn until every pair of diameters
/// (including the last against the first) is more than `ANGLE_EPS` apart.
pub fn random_diameters<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DiameterSet {
    loop {
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..PI)).collect();
        angles.sort_by(f64::total_cmp);
        if let Ok(ds) = DiameterSet::new(angles) {
            return ds;
        }
    }
}

/// Seeded instance generator; the same `(n, seed, even)` always yields the
/// same instance.
pub fn generate_instance(n: usize, seed: u64, even: bool) -> Result<Instance> {
    if n < 3 {
        return Err(Error::InvalidAngles(format!(
            "need at least 3 diameters, got {n}"
        )));
    }
    let ds = if even {
        DiameterSet::evenly_spaced(n)?
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_diameters(n, &mut rng)
    };
    debug_assert!(ds.angles().windows(2).all(|w| w[1] - w[0] > ANGLE_EPS));
    Ok(Instance::Diameters {
        diameters: ds.angles().to_vec(),
    })
}

/// Rounds to `digits` significant digits.
pub fn round_significant(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .unwrap_or(x)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveRecord {
    pub n: usize,
    pub k: usize,
    pub solver: SolverKind,
    pub area: f64,
    pub vertex_indices: Vec<usize>,
    /// Diameter angles of the instance.
    pub angles: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interval_vector: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bits: Option<String>,
}

impl SolveRecord {
    pub fn new(ds: &DiameterSet, sol: &Solution) -> Self {
        let m = ds.endpoints();
        let (interval_vector, bits) = if ds.is_evenly_spaced(1e-9) {
            match IntervalVector::from_selection(&sol.selection, m) {
                Ok(iv) => (Some(iv.gaps().to_vec()), Some(encode_intervals(&iv))),
                Err(_) => (None, None),
            }
        } else {
            (None, None)
        };
        Self {
            n: ds.n(),
            k: sol.selection.len(),
            solver: sol.solver,
            area: round_significant(sol.area, 12),
            vertex_indices: sol.selection.indices().to_vec(),
            angles: ds.angles().to_vec(),
            interval_vector,
            bits,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes") + "\n"
    }
}

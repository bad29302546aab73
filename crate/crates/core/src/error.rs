use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("endpoint index {index} out of range for {len} endpoints")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("duplicate endpoint index {0}")]
    DuplicateIndex(usize),

    #[error("invalid diameter angles: {0}")]
    InvalidAngles(String),

    #[error("arc from {from} to {to} is degenerate or not shorter than a half circle")]
    InvalidArc { from: usize, to: usize },

    #[error("vertex count k={k} out of range for n={n} diameters (need {lo} <= k < n)")]
    KOutOfRange { k: usize, n: usize, lo: usize },

    #[error("vertex count k={0} has the wrong parity for this construction")]
    WrongParity(usize),

    #[error("lattice size m={m} cannot hold k={k} vertices")]
    LatticeTooSmall { m: usize, k: usize },

    #[error("instance is not evenly spaced; the lattice solver does not apply")]
    NotEvenlySpaced,

    #[error("enumeration of {combinations} subsets exceeds the budget of {budget}")]
    BudgetExceeded { combinations: u128, budget: u128 },

    #[error("no feasible polygon with k={0} vertices")]
    Infeasible(usize),

    #[error("pointer sweep from {start} never met its boundary condition")]
    SweepExhausted { start: usize },

    #[error("invalid rhythm: {0}")]
    Rhythm(String),

    #[error("invalid interval vector: {0}")]
    IntervalVector(String),

    #[error("solver `{solver}` does not handle k={k}")]
    UnsupportedSolver { solver: String, k: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

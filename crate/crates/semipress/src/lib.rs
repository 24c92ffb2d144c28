//! # semipress
//!
//! Topological pressure and measure-theoretic entropy of free semigroup
//! actions by finitely many continuous maps.
//!
//! A free semigroup on `m` generators acts on a compact metric space through
//! maps `f_0, ..., f_{m-1}`. Every finite word `w` over the alphabet
//! `{0, ..., m-1}` names a composite map `f_w` and a Bowen metric `d_w`
//! (the max of the base metric along the word's evaluation orbit). Weighted
//! counts of `(w, eps)`-separated and `(w, eps)`-spanning sets, averaged over
//! all `m^n` words of length `n`, give word-averaged quantities `P_n` and
//! `Q_n` whose exponential growth rate is the topological pressure of the
//! action. On the measure side, word-averaged entropies of partition
//! refinements give the measure-theoretic entropy `h_mu`.
//!
//! The crate is organised around that pipeline:
//!
//! - [`words`]: word enumeration, sampling, indexing, evaluation suffixes.
//! - [`systems`]: state spaces and generator systems (finite tables,
//!   circle/interval maps, torus endomorphisms, full shifts, products, skew
//!   products over a shift base), Bowen metrics, invariant-measure defects.
//! - [`pressure`]: Birkhoff word-sums, separated/spanning optimisation
//!   (exact and greedy), word averages, rate extraction, cylinder-cover
//!   pressure on shifts.
//! - [`entropy`]: partition entropy, conditional entropy, word refinements,
//!   entropy rates, generating-sequence estimates of `h_mu`.
//! - [`affine`]: Haar-measure entropy bounds for affine torus maps through
//!   Monte-Carlo volumes of word dynamical balls.
//! - [`verify`]: identity and inequality checks (skew-product pressure
//!   relation, pressure/entropy property lists, product rules, the partial
//!   variational principle) as pass/fail results with pinned tolerances.

use thiserror::Error;

pub mod affine;
pub mod entropy;
pub mod geometry;
pub mod potential;
pub mod pressure;
pub mod rng;
pub mod systems;
pub mod verify;
pub mod words;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("generator index {index} out of range (system has {count} generators)")]
    GeneratorIndex { index: usize, count: usize },

    #[error("exhaustive enumeration of {needed} words exceeds the budget of {budget}; use montecarlo sampling")]
    WordBudgetExceeded { needed: u128, budget: u64 },

    #[error("empty word is not allowed here")]
    EmptyWord,

    #[error("word index {index} out of range for {count} words")]
    WordIndexOutOfRange { index: u64, count: u128 },

    #[error("epsilon must be positive (got {0})")]
    InvalidEpsilon(f64),

    #[error("exact mode supports at most {limit} candidates (got {count})")]
    ExactModeTooLarge { count: usize, limit: usize },

    #[error("candidate set does not span the universe at the requested epsilon")]
    CandidatesNotSpanning,

    #[error("unsupported preimage representation: {0}")]
    UnsupportedPreimage(String),

    #[error("unsupported set for this measure/space: {0}")]
    UnsupportedSet(String),

    #[error("measure is not invariant: defect {defect} exceeds tolerance {tolerance}")]
    NonInvariantMeasure { defect: f64, tolerance: f64 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid system: {0}")]
    InvalidSystem(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("point does not belong to the system's space: {0}")]
    PointMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Canonical float formatting for CSV and manifests.
///
/// Fixed-width scientific notation keeps outputs byte-identical across runs
/// and thread counts.
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else {
        format!("{x:.12e}")
    }
}

//! Exact and sampled higher-order moments of complex Wigner matrices.
//!
//! The crate is layered bottom-up:
//!
//! * [`combinat`] — permutations, set partitions and their enumerations;
//! * [`annular`] — non-crossing permutations and pairings on several circles;
//! * [`partitioned`] — partitioned permutations and their tree condition;
//! * [`graph`] — edge-labelled multigraphs, quotients and obstruction sets;
//! * [`poly`] — polynomials in the entry cumulants `b2, b4, ...`;
//! * [`formulas`] — the pseudo-cumulant formula, a brute-force oracle,
//!   finite-`N` expansions and free cumulants;
//! * [`montecarlo`] — a seeded Wigner sampler and cumulant estimators.
//!
//! Elements are 0-based in the programmatic API. Text forms (parsing and
//! `Display`) use the usual 1-based mathematical notation, e.g. `(1,3)(2,4)`
//! and `{1,2}{3,4}`.

pub mod annular;
pub mod combinat;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod montecarlo;
pub mod partitioned;
pub mod poly;

pub use error::{Error, Result};

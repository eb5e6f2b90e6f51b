//! Exact computations with p-subgroup complexes of finite permutation groups.
//!
//! The crate is layered bottom-up: [`group`] enumerates permutation groups and
//! provides the usual subgroup operators, [`catalog`] builds concrete groups of
//! Lie type from a small textual grammar, [`poset`] constructs the Quillen,
//! Brown and Bouc posets, [`complex`] computes integral homology of simplicial
//! complexes, and [`lie`] ties them together into verifiers for the wedge
//! decomposition and Euler characteristic formulas.

pub mod catalog;
pub mod complex;
mod error;
pub mod group;
pub mod lie;
pub mod poset;

pub use error::{Error, Result};

/// Capacity knobs. Exceeding one is a clean error, never a crash.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Limits {
    pub elements: usize,
    pub poset: usize,
    pub simplices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { elements: 2_000_000, poset: 200_000, simplices: 500_000 }
    }
}

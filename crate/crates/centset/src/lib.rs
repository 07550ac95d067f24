//! Finite-group computations over dense Cayley tables.
//!
//! The crate builds small finite groups (presented families, permutation
//! closures, matrix groups over GF(q)), computes their element-centralizer
//! families, derived subgroups, Frobenius decompositions and isoclinism
//! certificates, and ships a claims registry that re-checks a catalogue of
//! CG-group statements (`|Cent(G)| = |G'| + 2`) with Confirmed/Refuted
//! bookkeeping.
//!
//! Everything is exact integer arithmetic; there is no floating point and no
//! randomness, so identical inputs always produce byte-identical reports.

pub mod analysis;
pub mod catalog;
pub mod claims;
pub mod clique;
pub mod error;
pub mod families;
pub mod frobenius;
pub mod gf;
pub mod group;
pub mod io;
pub mod isoclinism;

pub use error::Error;
pub use group::{ActionSpec, CayleyGroup, ElementId, PermGenSpec, SubgroupSet};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Default ceiling on constructed group orders (PGL(2,9) = 720 and
/// GL(2,7) = 2016 both fit).
pub const DEFAULT_ORDER_CAP: usize = 2048;
/// Default node budget for backtracking searches (isomorphism, isoclinism,
/// max non-commuting clique).
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;
/// Default order cap for computations that need a full subgroup lattice.
pub const DEFAULT_LATTICE_CAP: usize = 200;

/// Caps and budgets shared by the library, the CLI and the claims harness.
#[derive(Debug, Clone, Copy)]
pub struct Config {
    pub order_cap: usize,
    pub search_budget: u64,
    pub lattice_cap: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            order_cap: DEFAULT_ORDER_CAP,
            search_budget: DEFAULT_SEARCH_BUDGET,
            lattice_cap: DEFAULT_LATTICE_CAP,
        }
    }
}

impl Config {
    /// Default config with `CENTSET_ORDER_CAP` from the environment applied.
    pub fn from_env() -> Self {
        let mut cfg = Config::default();
        if let Ok(v) = std::env::var("CENTSET_ORDER_CAP") {
            if let Ok(cap) = v.trim().parse::<usize>() {
                if cap >= 1 {
                    cfg.order_cap = cap;
                }
            }
        }
        cfg
    }
}

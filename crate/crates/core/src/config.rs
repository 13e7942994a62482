//! Resource caps shared by the expensive operations.

use crate::signvec::MAX_ELEMENTS;

/// Environment variables read by [`Limits::from_env`].
pub const ENV_MAX_ELEMENTS: &str = "TOPE_COMMITTEE_MAX_ELEMENTS";
pub const ENV_MAX_COVECTORS: &str = "TOPE_COMMITTEE_MAX_COVECTORS";
pub const ENV_MAX_TOPES: &str = "TOPE_COMMITTEE_MAX_TOPES";
pub const ENV_SEARCH_NODES: &str = "TOPE_COMMITTEE_SEARCH_NODES";
pub const ENV_MAX_SUBSET_MEMBERS: &str = "TOPE_COMMITTEE_MAX_SUBSET_MEMBERS";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest accepted ground set.
    pub max_elements: usize,
    /// Largest covector set produced by compose-closure.
    pub max_covectors: usize,
    /// Largest tope set accepted by committee enumeration.
    pub max_topes: usize,
    /// Node budget for backtracking searches.
    pub search_nodes: u64,
    /// Largest set whose subsets are scanned exhaustively.
    pub max_subset_members: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: MAX_ELEMENTS,
            max_covectors: 200_000,
            max_topes: 4096,
            search_nodes: 50_000_000,
            max_subset_members: 24,
        }
    }
}

impl Limits {
    /// Defaults overridden by any of the `TOPE_COMMITTEE_*` variables that parse as integers.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        let read = |name: &str| std::env::var(name).ok().and_then(|v| v.trim().parse::<u64>().ok());
        if let Some(v) = read(ENV_MAX_ELEMENTS) {
            limits.max_elements = (v as usize).min(MAX_ELEMENTS);
        }
        if let Some(v) = read(ENV_MAX_COVECTORS) {
            limits.max_covectors = v as usize;
        }
        if let Some(v) = read(ENV_MAX_TOPES) {
            limits.max_topes = v as usize;
        }
        if let Some(v) = read(ENV_SEARCH_NODES) {
            limits.search_nodes = v;
        }
        if let Some(v) = read(ENV_MAX_SUBSET_MEMBERS) {
            limits.max_subset_members = v as usize;
        }
        limits
    }
}

pub mod classify;
pub mod cli;
pub mod committees;
pub mod config;
pub mod error;
pub mod format;
pub mod graph;
pub mod graphs;
pub mod linalg;
pub mod matroid;
pub mod signvec;
pub mod topes;

pub use config::Limits;
pub use error::{Error, Result};
pub use matroid::{OrientedMatroid, Realization, SignSet, ValidationReport};
pub use signvec::{sv, ElementSet, Sign, SignVector};

//! Exact set-family machinery: families over `[n]`, shifting, closed-form
//! bounds for cross-intersecting and union problems, extremal constructions,
//! and exhaustive search oracles that recompute the optima.

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod family;
pub mod format;
pub mod iso;
pub mod search;
pub mod shifting;

pub use error::{Error, Result};
pub use family::{are_cross_intersecting, k_subsets, Family, Restriction, Subset};
pub use iso::{are_isomorphic, IsoCertificate};

//! Exact computation of commensurability invariants of hyperbolic 2-bridge
//! knot complements.

pub mod census;
pub mod dihedral;
pub mod error;
pub mod exact;
pub mod field;
pub mod knot;
pub mod prep;
pub mod report;
pub mod verdict;

pub use error::{Contradiction, ContradictionKind, Error, Result};

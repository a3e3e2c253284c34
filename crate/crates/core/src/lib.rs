//! Finite hypergroups: multivalued operations, their constructions, reflets and simplicity.
//!
//! Every carrier is finite and indexed `0..n`; subsets of a carrier are [`Subset`] bit masks,
//! so multistructures have at most 64 elements.

pub mod constructions;
pub mod corpus;
pub mod error;
pub mod format;
pub mod groups;
pub mod iso;
pub mod multistructure;
pub mod partition;
pub mod presentations;
pub mod simplicity;
pub mod subset;

pub use error::{Error, Result};
pub use groups::{GroupTable, Subgroup};
pub use iso::find_isomorphism;
pub use multistructure::{AxiomReport, Hypergroup, Mapping, Multistructure};
pub use partition::EquivalenceRelation;
pub use subset::Subset;

//! Enhanced power graphs of finite groups.
//!
//! Groups are explicit multiplication tables ([`group`]); their cyclic
//! subgroup structure ([`lattice`]) determines the enhanced power graph
//! ([`epg`]), whose properties are decided by [`analysis`]. The [`verify`]
//! module checks structural theorems about these graphs over rosters of
//! concrete groups.

pub mod analysis;
pub mod arith;
pub mod epg;
pub mod error;
pub mod graph;
pub mod group;
pub mod lattice;
pub mod spec;
pub mod verify;

pub use analysis::{Property, PropertyReport};
pub use epg::EpgBundle;
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use group::{AbelianShape, FiniteGroup, Limits, Validation};
pub use lattice::CyclicLattice;
pub use spec::{Family, GroupSpec};
pub use verify::{TheoremCheck, TheoremId, TheoremReport};

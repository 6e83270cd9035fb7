//! Exact analysis of smooth toric Fano varieties through their Fano
//! polytopes.
//!
//! The crate is layered bottom-up:
//!
//! * [`lattice`]: integer linear algebra (Smith/Hermite forms, quotients);
//! * [`polytope`]: vertex sets, facets, smooth Fano validation, normal form;
//! * [`fan`]: the face fan, point location and star quotients;
//! * [`mori`]: primitive collections and relations, curve classes;
//! * [`conjectures`]: Picard-rank bounds and the per-polytope report;
//! * [`shell`]: text format, JSON reports, enumeration, batch runs.

pub mod conjectures;
pub mod error;
pub mod fan;
pub mod lattice;
pub mod mori;
pub mod polytope;
pub mod shell;

pub use conjectures::{analyze, AnalysisReport, BoundCheck, BoundKind};
pub use error::{Error, Result};
pub use fan::Fan;
pub use lattice::{IntMatrix, LatticeVector};
pub use polytope::{free_sum, hexagon, simplex, FanoPolytope};

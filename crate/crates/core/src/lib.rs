//! Ambient-isotopy invariants of oriented classical and virtual links
//! computed from finite racks.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! - [`rack`]: finite racks as operation tables, axiom checking, rack rank;
//! - [`cohomology`]: rack cochains over `Z_m`, coboundaries and a solver for
//!   N-reduced 2-cocycles;
//! - [`link`]: signed Gauss diagrams, writhes, arcs and framing adjustment;
//! - [`coloring`]: exact enumeration of rack colorings and Boltzmann weights;
//! - [`invariants`]: the integer and polynomial rack counting invariants and
//!   the cocycle-enhanced invariant.
//!
//! Elements of a rack are addressed with 1-based [`Element`]s, matching the
//! usual way rack matrices are printed.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cohomology;
pub mod coloring;
pub mod invariants;
pub mod link;
mod modular;
pub mod perm;
pub mod rack;

pub use cohomology::{Cochain1, Cochain2, Cochain3, CocycleSpace};
pub use coloring::{Coloring, ColoringError};
pub use invariants::{PhiPolynomial, QPolynomial, WritheVector};
pub use link::{ArcIndexing, GaussDiagram, Role, Visit};
pub use perm::Permutation;
pub use rack::{Element, RackError, RackProfile, RackTable};

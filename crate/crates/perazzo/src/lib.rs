//! Exact verification of the algebraic and combinatorial structures attached
//! to 9-nodal and 10-nodal cubic threefolds: the Perazzo torsor chart and its
//! double-three, the nine-plane incidence configuration, the Picard lattice
//! as a module over the wreath group, the `H^1` classification of its
//! subgroup cohomology, and the Segre/Grassmannian quotient censuses.
//!
//! Everything is computed in exact arithmetic (big rationals, prime fields,
//! integer lattices); no floats anywhere.

pub mod brauer;
pub mod cli;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod lattice;
pub mod report;
pub mod segre;
pub mod suites;
pub mod torsor;
pub mod wreath;

pub use error::Error;

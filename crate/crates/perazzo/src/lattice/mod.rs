//! Integer lattices with wreath-group action, their standard instances, and
//! their low-degree group cohomology.

pub mod cohomology;
pub mod exactseq;
pub mod module;
pub mod standard;

pub use cohomology::{h0, h1, h1_cyclic, h1_with_generators, h2_cyclic, FixedLattice};
pub use exactseq::{ExactnessReport, ShortExactSequence};
pub use module::{FinAbGroup, ZGModule};
pub use standard::{standard_module, DivisorExpr, STANDARD_MODULE_NAMES};
